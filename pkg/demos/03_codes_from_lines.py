"""
Additive codes from sets of lines
=================================

Writing the lines of a set as column blocks gives a code over GF(2); its
generalized Hamming weights are n minus the largest number of lines inside
a subspace of the matching codimension.
"""

from genblock.codes import check_ghw_identity, expand, weight_hierarchy
from genblock.constructions import build, max_partial_spread_pg4
from genblock.gf import make_field
from genblock.systems import SpaceMultiset

F = make_field(2)

spread = max_partial_spread_pg4(F)
code = expand(spread)
print("9 pairwise disjoint lines: G is", code.G.shape, "hierarchy", weight_hierarchy(code))
for f in (1, 2):
    print(" ", f, check_ghw_identity(spread, f))

# %%
# points of the Fano plane give the [7,3] simplex code
print("simplex hierarchy", weight_hierarchy(expand(SpaceMultiset.all_spaces(F, 3, 1))))

# %%
for name in ("eisfeld", "q-fold", "partial-spread"):
    ms = build(name, 2).multiset
    print(name, [check_ghw_identity(ms, f).ghw for f in (1, 2)])
