"""
Unions of flag classes
======================

Fix a chain point < line < plane < solid.  Lines and planes fall into ten
classes each by how they meet the chain, and every plane of a class holds
the same number of lines from each line class.  Taking whole classes turns
the blocking condition into a ten-variable integer program.
"""

import numpy as np

from genblock.constructions import flag_orbit_search
from genblock.flags import classify_flag
from genblock.gf import make_field

F = make_field(2)
cl = classify_flag(F)
print("line class sizes ", cl.line_class_sizes)
print("plane class sizes", cl.plane_class_sizes)
print(np.array(cl.beta))
print("size mismatches against the usual closed forms:", cl.discrepancies())

# %%
for s in range(1, 9):
    res = flag_orbit_search(F, s)
    print(f"s={s}: {res.cardinality:4d} lines, alpha={res.alpha}")
