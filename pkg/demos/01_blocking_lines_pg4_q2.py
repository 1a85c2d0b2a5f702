"""
Lines blocking planes in PG(4,2)
================================

Build the smallest known s-fold blocking sets of lines w.r.t. planes for
s = 1..7, check each one, and compare with the double-count lower bound.
"""

from genblock.bounds import double_count_bound, extend_periodic_table
from genblock.constructions import build
from genblock.systems import multiset_sum, verify

# one builder per s; s=5 is the union of the s=1 and s=4 sets
recipes = {1: "eisfeld", 2: "q-fold", 3: "qp1-fold", 4: "q2-fold", 6: "q2q-fold", 7: "all-lines"}

sizes = {}
for s in range(1, 8):
    if s == 5:
        ms = multiset_sum(build("eisfeld", 2).multiset, build("q2-fold", 2).multiset)
        how = "eisfeld + q2-fold"
    else:
        ms = build(recipes[s], 2).multiset
        how = recipes[s]
    rep = verify(ms, 2, "blocking", s)
    lb = double_count_bound(2, 5, 2, s).value
    sizes[s] = ms.n
    tight = "tight" if ms.n == lb else ""
    print(f"s={s}  {how:18s} n={ms.n:4d}  min plane count={rep.min_count}  lower bound {lb:4d} {tight}")

# %%
# Adding all 155 lines raises s by 7, and the values repeat with period 7.
table = extend_periodic_table(2, sizes, max_s=21)
for s in range(8, 22):
    print(f"b({s}) = {table[s]}   [{table.justification[s]}]")
