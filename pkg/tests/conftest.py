import itertools

import numpy as np
import pytest
from hypothesis import settings

from genblock.gf import make_field

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


def span_set(F, rows, r=None):
    """All vectors (as tuples) in the GF(q)-span of ``rows``; a slow oracle for small cases."""
    rows = [np.asarray(x) for x in rows]
    if r is None:
        r = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(F.q), repeat=len(rows)):
        v = np.zeros(r, dtype=np.int64)
        for c, row in zip(coeffs, rows):
            v = F.add_table[v, F.mul_table[c, row]]
        out.add(tuple(int(x) for x in v))
    return frozenset(out)


def naive_counts(ms, f):
    """Entries of ``ms`` inside every codim-f space, by comparing spans vector by vector."""
    from genblock.geometry import enumerate_subspaces

    F = ms.F
    spaces = {i: span_set(F, ms.space(i).matrix) for i in ms.entries}
    out = []
    for W in enumerate_subspaces(F, ms.r, ms.r - f):
        w = span_set(F, W.matrix)
        out.append(sum(m for i, m in ms.entries.items() if spaces[i] <= w))
    return np.array(out)
