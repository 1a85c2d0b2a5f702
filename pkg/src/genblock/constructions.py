"""Builders for multisets of lines (and other subspaces) with blocking or packing properties.

All anchors (the point P, line L, plane E, solid S, chains of subspaces)
are coordinate subspaces spanned by the first unit vectors, so every
builder is deterministic.  Builders only *claim* a property; callers
check it with :func:`genblock.systems.verify`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CapabilityError, DomainError
from .flags import classify_flag
from .geometry import (
    coordinate_subspace,
    contained_indices,
    gbin,
    meet_join_dims,
    point_count,
    subspace_array,
)
from .gf import make_field
from .spreads import find_disjoint_line_spreads, regular_spread
from .systems import SpaceMultiset, verify

# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _lines_inside(F, r, mats):
    """Line indices inside each subspace of an ``(N, k, r)`` stack."""
    return contained_indices(F, r, 2, np.asarray(mats, dtype=F.dtype))


def _meet_dims(F, r, k, S):
    """Vector dimension of ``U ∩ S`` for every ``k``-dim ``U``, in canonical order."""
    mats, _ = subspace_array(F, r, k)
    from .geometry import Subspace

    return np.array([meet_join_dims(Subspace(F, r, m), S)[0] for m in mats])


def _lift(F, quotient_mats):
    """Subspaces ``<e1, 0|M>`` of GF(q)^(c+1) for each ``M`` of GF(q)^c."""
    N, k, c = quotient_mats.shape
    out = np.zeros((N, k + 1, c + 1), dtype=F.dtype)
    out[:, 0, 0] = 1
    out[:, 1:, 1:] = quotient_mats
    return out


def _lines_through_e1(F, r):
    mats, _ = subspace_array(F, r, 2)
    # RREF lines containing e1 are exactly those with first row e1
    first = mats[:, 0, :]
    e1 = np.zeros(r, dtype=F.dtype)
    e1[0] = 1
    return np.flatnonzero((first == e1).all(axis=1))


def _counts_from(F, r, *parts):
    """Dense count vector from ``(indices, multiplicity)`` pairs."""
    vec = np.zeros(gbin(r, 2, F.q), dtype=np.int64)
    for ids, m in parts:
        np.add.at(vec, np.asarray(ids, dtype=np.int64).ravel(), m)
    return vec


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def subspace_blocking(F, r, h, f):
    """All (h-1)-spaces inside the coordinate (h+f-1)-space: a 1-fold blocking set."""
    if h + f > r:
        raise DomainError("need h + f <= r")
    S = coordinate_subspace(F, r, range(h + f))
    ids = contained_indices(F, r, h, S.matrix[None])
    return SpaceMultiset(F, r, h, {int(i): 1 for i in ids[0]})


def eisfeld(F, l=3):
    """Blocking set of lines w.r.t. (l-1)-spaces in PG(2l-2, q).

    Lines through P = <e1> inside the solid-like space <e1..e_{l+1}>, plus
    the lines avoiding P in the planes through P that lift a line spread
    of the quotient geometry.
    """
    if l < 3:
        raise DomainError("need l >= 3")
    r = 2 * l - 1
    q = F.q
    spread = regular_spread(F, l - 1)
    planes = _lift(F, np.array([L.matrix for L in spread]))
    in_planes = _lines_inside(F, r, planes).ravel()
    through_P = set(_lines_through_e1(F, r).tolist())
    avoid_P = [i for i in in_planes if int(i) not in through_P]
    U = coordinate_subspace(F, r, range(l + 1))
    in_U = _lines_inside(F, r, U.matrix[None]).ravel()
    star = [i for i in in_U if int(i) in through_P]
    ms = SpaceMultiset.from_counts(F, r, 2, _counts_from(F, r, (avoid_P, 1), (star, 1)))
    assert ms.n == (q ** (2 * l) - q**2) // (q**2 - 1) + point_count(l, q)
    return ms


def _lifted_spread_lines(F, spreads):
    """Lines avoiding P = <e1> in the planes <P, l> for l in the given quotient spreads."""
    qmats, _ = subspace_array(F, 4, 2)
    through_P = set(_lines_through_e1(F, 5).tolist())
    out = []
    for sp in spreads:
        planes = _lift(F, qmats[sp])
        for row in _lines_inside(F, 5, planes):
            out.append([int(i) for i in row if int(i) not in through_P])
    return out, through_P


def q_fold(F):
    """q-fold blocking set of lines w.r.t. planes in PG(4, q), all multiplicities 1."""
    q = F.q
    spreads = find_disjoint_line_spreads(F, q)
    per_plane, through_P = _lifted_spread_lines(F, spreads)
    avoid = [i for row in per_plane for i in row]
    # L: first line (canonical order) of the first lifted plane not through P
    L = min(per_plane[0])
    qmats, _ = subspace_array(F, 4, 2)
    first_plane = _lift(F, qmats[spreads[0][:1]])
    in_PL = set(int(i) for i in _lines_inside(F, 5, first_plane)[0])
    assert L in in_PL
    star = [i for i in sorted(through_P) if i not in in_PL]
    ms = SpaceMultiset.from_counts(F, 5, 2, _counts_from(F, 5, (avoid, 1), (star, 1)))
    assert ms.n == q**2 * (q + 1) + q**3 * (q**2 + 1)
    return ms


def qp1_fold(F):
    """(q+1)-fold blocking set of lines w.r.t. planes in PG(4, q), all multiplicities 1."""
    q = F.q
    spreads = find_disjoint_line_spreads(F, q + 1)
    per_plane, through_P = _lifted_spread_lines(F, spreads)
    avoid = [i for row in per_plane for i in row]
    ms = SpaceMultiset.from_counts(F, 5, 2, _counts_from(F, 5, (avoid, 1), (sorted(through_P), 1)))
    assert ms.n == point_count(4, q) + (q + 1) * q**2 * (q**2 + 1)
    return ms


def q2_fold(F):
    """q^2 copies of the lines of the plane E = <e1,e2,e3> plus every line disjoint from E."""
    return q2_fold_general(F, 4)


def q2q_fold(F):
    """(q^2+q)-fold blocking set of lines w.r.t. planes in PG(4, q).

    With L = <e1,e2> and S = <e1..e4>: L taken q^2+q times, q copies of each
    line of S meeting L in a point, and one copy of each line meeting S in a
    point and missing L.
    """
    q, r = F.q, 5
    L = coordinate_subspace(F, r, range(2))
    S = coordinate_subspace(F, r, range(4))
    mL = _meet_dims(F, r, 2, L)
    mS = _meet_dims(F, r, 2, S)
    iL = np.flatnonzero(mL == 2)
    L1 = np.flatnonzero((mL == 1) & (mS == 2))
    L2 = np.flatnonzero((mL == 0) & (mS == 1))
    ms = SpaceMultiset.from_counts(F, r, 2, _counts_from(F, r, (iL, q**2 + q), (L1, q), (L2, 1)))
    assert ms.n == q**6 + q**5 + q**4 + 2 * q**3 + 2 * q**2 + q
    return ms


def q2_fold_general(F, r):
    """q^2-fold blocking set of lines w.r.t. planes in PG(r, q) (``r`` projective, ``r >= 4``).

    q^2 copies of every line of the (r-2)-space S = <e1..e_{r-1}> plus all
    lines disjoint from S.
    """
    if r < 4:
        raise DomainError("need r >= 4")
    q, v = F.q, r + 1
    S = coordinate_subspace(F, v, range(r - 1))
    mS = _meet_dims(F, v, 2, S)
    inside, disjoint = np.flatnonzero(mS == 2), np.flatnonzero(mS == 0)
    ms = SpaceMultiset.from_counts(F, v, 2, _counts_from(F, v, (inside, q**2), (disjoint, 1)))
    assert ms.n == q ** (2 * (r - 1)) + q**2 * gbin(r - 1, 2, q)
    return ms


@dataclass
class SolomonStifflerParams:
    sigma: int
    epsilon: dict  # i -> eps_i for h+f <= i <= r-1 (vector dimension of S_i)
    chain: list | None = None  # optional {i: Subspace}; default coordinate chain

    def __post_init__(self):
        if self.sigma < 1:
            raise DomainError("sigma must be >= 1")
        if any(e < 0 for e in self.epsilon.values()):
            raise DomainError("epsilon values must be >= 0")


def solomon_stiffler(F, r, h, f, params):
    """sigma copies of every (h-1)-space minus eps_i copies of the (h-1)-spaces of S_i.

    Returns ``(multiset, s)`` where ``s`` is the guaranteed maximum number of
    elements in a codimension-``f`` space.
    """
    q = F.q
    counts = np.full(gbin(r, h, q), params.sigma, dtype=np.int64)
    s = params.sigma * gbin(r - f, h, q)
    for i, eps in sorted(params.epsilon.items()):
        if not h + f <= i <= r - 1:
            raise DomainError(f"chain index {i} outside {h + f}..{r - 1}")
        if not eps:
            continue
        S = params.chain[i] if params.chain else coordinate_subspace(F, r, range(i))
        ids = contained_indices(F, r, h, S.matrix[None])[0]
        counts[ids] -= eps
        s -= eps * gbin(i - f, h, q)
    if (counts < 0).any():
        raise DomainError("sigma too small: negative multiplicity")
    return SpaceMultiset.from_counts(F, r, h, counts), s


@dataclass
class SubspaceCodeParams:
    r: int
    h: int
    delta: int

    def __post_init__(self):
        if not 1 <= self.delta <= self.h:
            raise DomainError("need 1 <= delta <= h")
        if self.r < 2 * self.h:
            raise DomainError("need r >= 2h")


def gabidulin_matrices(F, h, n, delta):
    """All ``h x n`` matrices of the Gabidulin code of minimum rank distance ``delta``.

    Codewords are evaluations of linearized polynomials
    ``sum_{j<h-delta+1} a_j x^(q^j)`` over GF(q^n) at ``1, x, ..., x^(h-1)``,
    written in the polynomial basis of GF(q^n) over GF(q).
    """
    if F.e != 1:
        raise CapabilityError("Gabidulin codes need a prime base field")
    if h > n:
        raise DomainError("need h <= n")
    E = make_field(F.p, n) if n > 1 else F
    q = F.q
    k = h - delta + 1
    points = [q**i for i in range(h)]  # x^i as an element of GF(q^n)
    # frob[j][g] = g^(q^j)
    frob = [[E.pow(g, q**j) for g in points] for j in range(k)]
    mats = np.zeros((E.q**k, h, n), dtype=F.dtype)
    for t, coeffs in enumerate(itertools.product(range(E.q), repeat=k)):
        for i in range(h):
            val = 0
            for j, a in enumerate(coeffs):
                val = E.add(val, E.mul(a, frob[j][i]))
            mats[t, i] = E.coefficients(val)
    return mats


def lmrd_lift(F, params):
    """Lifted Gabidulin code ``{[I_h | M]}`` as a set of (h-1)-spaces of PG(r-1, q).

    Returns ``(multiset, special)`` with ``special = <e_{h+1}..e_r>``, which
    meets no element.
    """
    r, h, delta = params.r, params.h, params.delta
    n = r - h
    if h > 3 or n > 3:
        raise CapabilityError("lifting supported for h <= 3 and r - h <= 3")
    M = gabidulin_matrices(F, h, n, delta)
    mats = np.zeros((len(M), h, r), dtype=F.dtype)
    mats[:, :, :h] = np.eye(h, dtype=F.dtype)
    mats[:, :, h:] = M
    ms = SpaceMultiset.from_matrices(F, mats)
    assert ms.n == ms.support_size == F.q ** (n * (h - delta + 1))
    return ms, coordinate_subspace(F, r, range(h, r))


def max_partial_spread_pg4(F):
    """q^3 + 1 pairwise disjoint lines of PG(4, q): lifted MRD lines plus a line of the special plane."""
    ms, special = lmrd_lift(F, SubspaceCodeParams(5, 2, 2))
    extra = int(_lines_inside(F, 5, special.matrix[None])[0, 0])
    out = ms + SpaceMultiset(F, 5, 2, {extra: 1})
    assert out.n == F.q**3 + 1 and out.max_multiplicity == 1
    return out


@dataclass
class FlagOrbitResult:
    alpha: tuple
    cardinality: int
    multiset: SpaceMultiset
    classification: object = field(repr=False)


def _min_alpha(beta, sizes, s):
    """Minimise sizes·alpha subject to beta·alpha >= s, 0 <= alpha_i <= s (exhaustive DFS)."""
    v, u = beta.shape
    # suffix_max[i, j]: most coverage classes i.. can still give plane class j
    suffix_max = np.zeros((u + 1, v), dtype=np.int64)
    for i in range(u - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + s * beta[:, i]
    ratio = np.where(beta > 0, sizes[None, :] / np.maximum(beta, 1), np.inf)
    # cheapest cost per unit of coverage of class j among classes i..
    suffix_rate = np.full((u + 1, v), np.inf)
    for i in range(u - 1, -1, -1):
        suffix_rate[i] = np.minimum(suffix_rate[i + 1], ratio[:, i])

    # all classes a times is always feasible; +1 lets an equal-cost optimum replace it
    a = -(-s // int(beta.sum(axis=1).min())) if s else 0
    best = [a * int(sizes.sum()) + 1, tuple([a] * u)]
    alpha = [0] * u

    # DFS visits alpha in lexicographic order, so ties go to the first optimum found
    def rec(i, cover, cost):
        deficit = np.maximum(s - cover, 0)
        if not deficit.any():
            if cost < best[0]:
                best[0], best[1] = cost, tuple(alpha)
            return
        if i == u or (cover + suffix_max[i] < s).any():
            return
        need = max(d * r for d, r in zip(deficit, suffix_rate[i]) if d)
        if cost + np.ceil(need - 1e-9) >= best[0]:
            return
        for val in range(s + 1):
            alpha[i] = val
            rec(i + 1, cover + val * beta[:, i], cost + val * int(sizes[i]))
        alpha[i] = 0

    rec(0, np.zeros(v, dtype=np.int64), 0)
    if best[0] == a * int(sizes.sum()) + 1:
        best[0] -= 1
    return best[1], best[0]


def flag_orbit_search(F, s):
    """Cheapest union of flag line classes that blocks every plane ``s`` times."""
    cl = classify_flag(F)
    sizes = np.array(cl.line_class_sizes, dtype=np.int64)
    # branching on the large classes first prunes far better
    perm = np.argsort(-sizes, kind="stable")
    a, cost = _min_alpha(cl.beta[:, perm], sizes[perm], s)
    alpha = [0] * len(sizes)
    for k, i in enumerate(perm):
        alpha[i] = int(a[k])
    alpha = tuple(alpha)
    counts = np.zeros(gbin(5, 2, F.q), dtype=np.int64)
    for a, members in zip(alpha, cl.line_classes):
        counts[members] += a
    ms = SpaceMultiset.from_counts(F, 5, 2, counts)
    assert ms.n == cost
    return FlagOrbitResult(alpha, cost, ms, cl)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass
class Construction:
    name: str
    multiset: SpaceMultiset
    mode: str
    f: int
    s: int

    def verify(self):
        return verify(self.multiset, self.f, self.mode, self.s)


def all_lines(F, r=5, multiplicity=1):
    return SpaceMultiset.all_spaces(F, r, 2, multiplicity)


def build(name, q, **kw):
    """Build a named construction with its claimed ``(mode, f, s)``.

    Names: ``subspace-blocking``, ``eisfeld``, ``q-fold``, ``qp1-fold``,
    ``q2-fold``, ``q2q-fold``, ``q2-fold-general``, ``all-lines``,
    ``solomon-stiffler``, ``lmrd``, ``partial-spread``, ``flag-orbit``.
    """
    from .gf import field_of_order

    F = field_of_order(q)
    if name == "subspace-blocking":
        r, h, f = kw.get("r", 5), kw.get("h", 2), kw.get("f", 2)
        return Construction(name, subspace_blocking(F, r, h, f), "blocking", f, 1)
    if name == "eisfeld":
        l = kw.get("l", 3)
        return Construction(name, eisfeld(F, l), "blocking", l - 1, 1)
    if name == "q-fold":
        return Construction(name, q_fold(F), "blocking", 2, q)
    if name == "qp1-fold":
        return Construction(name, qp1_fold(F), "blocking", 2, q + 1)
    if name == "q2-fold":
        return Construction(name, q2_fold(F), "blocking", 2, q**2)
    if name == "q2q-fold":
        return Construction(name, q2q_fold(F), "blocking", 2, q**2 + q)
    if name == "q2-fold-general":
        r = kw.get("r", 5)
        return Construction(name, q2_fold_general(F, r), "blocking", r - 2, q**2)
    if name == "all-lines":
        r, m = kw.get("r", 5), kw.get("m", 1)
        return Construction(name, all_lines(F, r, m), "system", 2, m * point_count(3, q))
    if name == "solomon-stiffler":
        r, h, f = kw.get("r", 5), kw.get("h", 2), kw.get("f", 2)
        params = SolomonStifflerParams(kw.get("sigma", 1), kw.get("epsilon", {r - 1: 1}))
        ms, s = solomon_stiffler(F, r, h, f, params)
        return Construction(name, ms, "system", f, s)
    if name == "lmrd":
        params = SubspaceCodeParams(kw.get("r", 6), kw.get("h", 3), kw.get("delta", 2))
        ms, _ = lmrd_lift(F, params)
        return Construction(name, ms, "system", params.r - params.h - params.delta + 1, 1)
    if name == "partial-spread":
        return Construction(name, max_partial_spread_pg4(F), "system", 2, 1)
    if name == "flag-orbit":
        s = kw["s"]
        return Construction(name, flag_orbit_search(F, s).multiset, "blocking", 2, s)
    raise DomainError(f"unknown construction {name!r}")


CONSTRUCTION_NAMES = (
    "subspace-blocking",
    "eisfeld",
    "q-fold",
    "qp1-fold",
    "q2-fold",
    "q2q-fold",
    "q2-fold-general",
    "all-lines",
    "solomon-stiffler",
    "lmrd",
    "partial-spread",
    "flag-orbit",
)
