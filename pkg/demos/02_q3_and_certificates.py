"""
The same problem over GF(3), and the bundled certificates
==========================================================

The builders work for any small q.  Sporadic sets that no builder
produces ship as certificate files and are checked the same way.
"""

from genblock import appendix
from genblock.constructions import build
from genblock.systems import complement, verify

for name, s in [("eisfeld", 1), ("q-fold", 3), ("qp1-fold", 4), ("q2-fold", 9), ("q2q-fold", 12)]:
    ms = build(name, 3).multiset
    print(f"q=3 {name:9s} s={s:2d} n={ms.n:5d} {verify(ms, 2, 'blocking', s).summary()}")

# %%
# every certificate states its parameters in a comment line
for e in appendix.CORPUS:
    ms = appendix.load(e.name)
    rep = verify(ms, 2, "blocking", e.s)
    print(f"{e.name:12s} q={e.q} s={e.s:2d} n={ms.n:5d} max mult={ms.max_multiplicity}  {'ok' if rep else 'FAILED'}")

# %%
# Removing a set of multiplicity 1 from all lines gives a set with few lines per plane.
ms = build("qp1-fold", 2).multiset  # 75 lines, every plane holds >= 3
rest = complement(ms, 1)
print(f"complement: {rest.n} lines, at most {verify(rest, 2, 'system', 4).max_count} in any plane")
