import itertools

import numpy as np
import pytest

from genblock.errors import CapabilityError, DomainError
from genblock.flags import classify_flag
from genblock.geometry import contained_indices, gbin, meet_join_dims, point_count, subspace_array
from genblock.gf import make_field
from genblock.spreads import find_disjoint_line_spreads, regular_spread, spread_subspaces


def covers_points_once(F, r, lines):
    pts = contained_indices(F, r, 1, np.array([L.matrix for L in lines]))
    flat = pts.ravel()
    return len(flat) == len(set(flat.tolist())) == point_count(r, F.q)


@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (2, 3), (5, 2)])
def test_regular_spread_partitions_points(q, n):
    F = make_field(q)
    S = regular_spread(F, n)
    assert len(S) == (q ** (2 * n) - 1) // (q**2 - 1)
    assert covers_points_once(F, 2 * n, S)


@pytest.mark.parametrize("q", [2, 3])
def test_disjoint_spreads(q):
    F = make_field(q)
    spreads = find_disjoint_line_spreads(F, q + 1)
    assert all(len(sp) == q**2 + 1 for sp in spreads)
    for sp in spreads:
        assert covers_points_once(F, 4, spread_subspaces(F, sp))
    for a, b in itertools.combinations(spreads, 2):
        assert not set(a) & set(b)
    # deterministic
    assert spreads == find_disjoint_line_spreads(F, q + 1)


def test_spread_guards(F2):
    with pytest.raises(DomainError):
        find_disjoint_line_spreads(F2, 4)
    with pytest.raises(CapabilityError):
        find_disjoint_line_spreads(make_field(5), 2)


# intersection numbers beta[j][i] as tabulated, as functions of q
def tabulated_beta(q):
    rows = [
        (1, q, q * q, 0, 0, 0, 0, 0, 0, 0),
        (1, 0, 0, q, q * q, 0, 0, 0, 0, 0),
        (0, 1, 0, q, 0, q * q, 0, 0, 0, 0),
        (0, 0, 1, 0, q, q * q, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0, q, q * q, 0, 0),
        (0, 1, 0, 0, 0, 0, q, 0, q * q, 0),
        (0, 0, 1, 0, 0, 0, 0, q, q * q, 0),
        (0, 0, 0, 1, 0, 0, q, 0, 0, q * q),
        (0, 0, 0, 0, 1, 0, 0, q, 0, q * q),
        (0, 0, 0, 0, 0, 1, 0, 0, q, q * q),
    ]
    return np.array(rows)


@pytest.mark.parametrize("q", [2, 3])
def test_flag_classes(q):
    cl = classify_flag(make_field(q))
    assert sum(cl.line_class_sizes) == gbin(5, 2, q)
    assert sum(cl.plane_class_sizes) == gbin(5, 3, q)
    assert len(cl.line_classes) == len(cl.plane_classes) == 10
    assert (cl.beta.sum(axis=1) == q * q + q + 1).all()
    assert (cl.beta == tabulated_beta(q)).all()
    assert cl.line_signatures[0] == (0, 1, 1, 1)
    assert cl.plane_signatures[-1] == (-1, -1, 0, 1)


@pytest.mark.parametrize("q", [2, 3])
def test_flag_class_size_discrepancy_reported(q):
    cl = classify_flag(make_field(q))
    # the tabulated size q^3 for line class 4 cannot be right: the other
    # nine sizes already leave only q^2 lines
    assert cl.discrepancies() == [("line", 4, q**2, q**3)]
    assert cl.line_class_sizes[3] == q**2


def test_line_class_members_match_signature(F2):
    cl = classify_flag(F2)
    mats, _ = subspace_array(F2, 5, 2)
    from genblock.geometry import Subspace
    from genblock.flags import signature

    for sig, members in zip(cl.line_signatures, cl.line_classes):
        for i in members[:3]:
            assert signature(Subspace(F2, 5, mats[i]), cl.chamber) == sig
    # class 3: lines in pi_2 meeting pi_1 exactly in pi_0
    for i in cl.line_classes[2]:
        L = Subspace(F2, 5, mats[i])
        assert meet_join_dims(L, cl.chamber[2])[0] == 2
        assert meet_join_dims(L, cl.chamber[1])[0] == 1
