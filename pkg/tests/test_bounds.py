from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from genblock.bounds import (
    DoubleCountCoeffs,
    additive_griesmer,
    anticode_bound,
    counting_bound,
    double_count_bound,
    duality_transfer,
    extend_periodic_table,
    ghw_griesmer,
    griesmer,
    griesmer_decompose,
    griesmer_system_bound,
    line_system_bound_pg,
    workhorse_applies,
)
from genblock.constructions import build
from genblock.errors import DimensionError, DomainError
from genblock.geometry import coordinate_subspace, gbin, subspace_array
from genblock.gf import make_field
from genblock.linalg import rank

Q2_BASE = {1: 27, 2: 52, 3: 75, 4: 92, 5: 119, 6: 138, 7: 155}


def test_counting_bound():
    rep = counting_bound(2, 5, 2, 2, 1)
    assert rep.exact == Fraction(155, 7) and rep.value == 23
    assert counting_bound(2, 5, 2, 2, 1, "upper").value == 22
    # at s = [3]_q the bound is met by all lines
    for q in (2, 3):
        assert counting_bound(q, 5, 2, 2, q * q + q + 1).value == gbin(5, 2, q)
    with pytest.raises(DimensionError):
        counting_bound(2, 4, 2, 3, 1)
    with pytest.raises(DomainError):
        counting_bound(2, 5, 2, 2, 1, "sideways")


@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 40), st.integers(0, 40))
def test_double_count_closed_form_pg4(q, s, m):
    # the general coefficients collapse to (q^4+q^2+q+1)s - q(q+1)m in PG(4,q)
    rep = double_count_bound(q, 5, 2, s, mult_L=m)
    assert rep.exact == (q**4 + q**2 + q + 1) * s - q * (q + 1) * m


@pytest.mark.parametrize("q", [2, 3])
def test_double_count_tables(q):
    per = {2: 23, 3: 94}[q]
    for s in range(1, 14):
        assert double_count_bound(q, 5, 2, s).value == per * s


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("r", range(5, 9))
def test_coefficient_identity(q, r):
    for f in range(2, r - 2):
        c = DoubleCountCoeffs(q, r, f)
        assert c.beta31 + c.t * c.beta32 == c.beta21
        assert isinstance(c.t, Fraction)


def brute_coefficients(q, r, f):
    """Count codim-f spaces against a fixed line L and lines M by enumeration."""
    F = make_field(q)
    W = subspace_array(F, r, r - f)[0]
    L = coordinate_subspace(F, r, [0, 1])
    M_point = coordinate_subspace(F, r, [0, 2])  # meets L in a point
    M_skew = coordinate_subspace(F, r, [2, 3])  # disjoint from L

    def inside(U, Wm):
        return rank(np.vstack([Wm, U.matrix]), F) == len(Wm)

    def meets(U, Wm):
        return len(Wm) + U.k - rank(np.vstack([Wm, U.matrix]), F)

    through_L = [w for w in W if inside(L, w)]
    missing_L = [w for w in W if meets(L, w) == 0]
    return dict(
        alpha1=len(through_L),
        alpha2=len(missing_L),
        beta11=len(through_L),
        beta21=sum(inside(M_point, w) for w in through_L),
        beta31=sum(inside(M_skew, w) for w in through_L),
        beta32=sum(inside(M_skew, w) for w in missing_L),
    )


@pytest.mark.parametrize("q,r,f", [(2, 5, 2), (3, 5, 2), (2, 6, 2), (2, 6, 3)])
def test_coefficients_count_what_they_claim(q, r, f):
    c = DoubleCountCoeffs(q, r, f).as_dict()
    c.pop("t")
    assert c == brute_coefficients(q, r, f)


@given(st.sampled_from([2, 3]), st.integers(4, 7), st.integers(0, 20), st.integers(0, 5))
def test_line_system_closed_form(q, n, s, m):
    assert line_system_bound_pg(q, n, s, m).exact == double_count_bound(q, n + 1, n - 2, s, m).exact


def test_double_count_edge_cases():
    # codim-f spaces are lines
    assert double_count_bound(2, 4, 2, 3).exact == 3 * 35
    with pytest.raises(DimensionError):
        double_count_bound(2, 3, 2, 1)
    with pytest.raises(DomainError):
        double_count_bound(2, 5, 1, 1)


def test_tightness_against_constructions():
    for q, name, s in [(2, "q2-fold", 4), (2, "q2q-fold", 6), (3, "q2-fold", 9), (3, "q2q-fold", 12)]:
        assert build(name, q).multiset.n == double_count_bound(q, 5, 2, s).value


def test_griesmer_family():
    assert griesmer(2, 5, 8) == 16
    assert griesmer(2, 3, 4) == 7
    assert ghw_griesmer(2, 5, 2, 12) == 16
    assert ghw_griesmer(2, 5, 5, 9) == 9
    assert additive_griesmer(2, 2, 4, 5) == 7
    assert anticode_bound(2, 5, 2, 2).value == 10
    assert griesmer_decompose(2, 3, 4) == (1, (0, 0), 7)
    assert griesmer_decompose(2, 3, 3) == (1, (1, 0), 6)
    with pytest.raises(DomainError):
        griesmer(2, 0, 1)
    with pytest.raises(DimensionError):
        anticode_bound(2, 3, 2, 1)


@given(st.sampled_from([2, 3, 4]), st.integers(1, 6), st.integers(1, 200))
def test_griesmer_monotone_and_additive_h1(q, k, d):
    assert griesmer(q, k, d) <= griesmer(q, k, d + 1)
    assert additive_griesmer(q, 1, k, d) == griesmer(q, k, d)
    assert ghw_griesmer(q, k, 1, d) == griesmer(q, k, d)


@given(st.sampled_from([2, 3, 5]), st.integers(1, 6), st.integers(1, 500))
def test_griesmer_decompose_recomposes(q, k, d):
    sigma, eps, n = griesmer_decompose(q, k, d)
    assert all(0 <= e < q for e in eps) and len(eps) == k - 1
    assert d == sigma * q ** (k - 1) - sum(e * q**i for i, e in enumerate(eps))
    assert n == griesmer(q, k, d)


def test_griesmer_system_bound():
    # one line per plane of PG(3,2): a spread; two points per line of PG(2,2): a hyperoval
    assert griesmer_system_bound(2, 4, 2, 1) == 5
    assert griesmer_system_bound(2, 3, 1, 2) == 4


def test_periodic_table():
    t = extend_periodic_table(2, Q2_BASE, max_s=28)
    for s in range(1, 29):
        k, s0 = divmod(s - 1, 7)
        assert t[s] == Q2_BASE[s0 + 1] + 155 * k
    assert t[11] == 92 + 155 and t[25] == 92 + 3 * 155
    assert {s for s in range(1, 8) if t.justification[s] != "base"} == {1, 2, 3, 5}
    assert t.justification[11] == "workhorse"
    assert t.justification[8] == "ad-hoc/ILP"
    assert workhorse_applies(2, 4, 92)
    with pytest.raises(DomainError):
        extend_periodic_table(2, {1: 27})
    assert extend_periodic_table(2, Q2_BASE, check=False, max_s=7) == Q2_BASE


def test_duality_transfer():
    assert duality_transfer(2, 1, 75) == 80
    assert duality_transfer(2, 1, 52) == 103
    assert duality_transfer(2, 1, 27) == 128
    with pytest.raises(DomainError):
        duality_transfer(2, 1, 156)
    with pytest.raises(DomainError):
        duality_transfer(2, 0, 1)
