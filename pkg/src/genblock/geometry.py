"""Subspaces of PG(r-1, q): counting, canonical forms, enumeration, incidence.

Dimensions passed to functions in this module are *vector* dimensions
unless stated otherwise: a line of PG(r-1, q) has ``k = 2``, a plane
``k = 3``.  Every subspace is stored through its reduced row echelon
generator matrix, and lists of subspaces are ordered by the row-major
digit string of that matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from ._limits import DEFAULT_ENUM_LIMIT, DEFAULT_INDEX_LIMIT, limit
from .errors import DimensionError, DomainError, LimitError
from .gf import Field
from .linalg import rank, rref

# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


def gbin(a, b, q):
    """Gaussian binomial coefficient: number of ``b``-dim subspaces of GF(q)^a."""
    if b < 0 or b > a:
        raise DomainError(f"gbin needs 0 <= b <= a, got a={a}, b={b}")
    num = den = 1
    for j in range(b):
        num *= q ** (a - j) - 1
        den *= q ** (b - j) - 1
    return num // den


def point_count(i, q):
    """``[i]_q = (q^i - 1)/(q - 1)``, with ``[0]_q = 0``."""
    if i < 0:
        raise DomainError("point_count needs i >= 0")
    return (q**i - 1) // (q - 1)


def disjoint_count(n, m, j, q):
    """Number of projective ``j``-spaces disjoint from a fixed ``m``-space in PG(n, q)."""
    if j + 1 > n - m:
        return 0
    return q ** ((m + 1) * (j + 1)) * gbin(n - m, j + 1, q)


# ---------------------------------------------------------------------------
# keys
# ---------------------------------------------------------------------------


def _key_weights(q, k, r):
    if k * r and q ** (k * r) >= 2**63:
        raise LimitError(f"subspace keys for q={q}, k={k}, r={r} overflow 64 bits")
    return (q ** np.arange(k * r - 1, -1, -1, dtype=np.int64)).astype(np.int64)


def matrix_keys(mats, q):
    """Row-major base-``q`` integer keys for an ``(N, k, r)`` stack of matrices."""
    mats = np.asarray(mats)
    N, k, r = mats.shape
    w = _key_weights(q, k, r)
    return mats.reshape(N, k * r).astype(np.int64) @ w


# ---------------------------------------------------------------------------
# Subspace
# ---------------------------------------------------------------------------

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace given by its canonical (RREF) generator matrix.

    Build instances through :func:`canonical_form`; the constructor assumes
    ``matrix`` is already reduced.
    """

    F: Field
    r: int
    matrix: np.ndarray

    @property
    def k(self):
        return self.matrix.shape[0]

    @property
    def projective_dim(self):
        return self.k - 1

    @cached_property
    def key(self):
        x = 0
        for v in self.matrix.ravel():
            x = x * self.F.q + int(v)
        return x

    @property
    def rows(self):
        return tuple(tuple(int(v) for v in row) for row in self.matrix)

    @property
    def digits(self):
        """``'01001/00010'`` style text (one character per field element)."""
        return "/".join("".join(_DIGITS[v] for v in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.F.q == other.F.q
            and self.r == other.r
            and self.k == other.k
            and self.key == other.key
        )

    def __hash__(self):
        return hash((self.F.q, self.r, self.k, self.key))

    def __lt__(self, other):
        return (self.k, self.key) < (other.k, other.key)

    def __repr__(self):
        return f"Subspace({self.digits or '<0>'})"


def canonical_form(M, F, r=None, k=None):
    """Canonical :class:`Subspace` for the row space of ``M``.

    ``k`` asserts the expected dimension; a rank deficit raises
    :class:`DimensionError`.
    """
    A = np.asarray(M)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, r or 0), dtype=int)
    if r is None:
        r = A.shape[1]
    elif A.shape[1] != r:
        raise DimensionError(f"matrix has {A.shape[1]} columns, ambient is {r}")
    if A.size and (A.min() < 0 or A.max() >= F.q):
        raise DomainError(f"matrix entries must lie in 0..{F.q - 1}")
    R, _ = rref(A.astype(F.dtype), F) if A.shape[0] else (A.astype(F.dtype), [])
    if k is not None and R.shape[0] != k:
        raise DimensionError(f"expected dimension {k}, got rank {R.shape[0]}")
    R = np.ascontiguousarray(R, dtype=F.dtype)
    R.setflags(write=False)
    return Subspace(F, r, R)


def span(F, r, *parts):
    """Sum of subspaces / vectors, as a canonical subspace of GF(q)^r."""
    rows = []
    for x in parts:
        rows.extend(np.atleast_2d(x.matrix if isinstance(x, Subspace) else x))
    if not rows:
        return canonical_form(np.zeros((0, r), dtype=int), F, r)
    return canonical_form(np.array(rows), F, r)


def coordinate_subspace(F, r, coords):
    """Span of the unit vectors ``e_i`` for ``i`` in ``coords`` (0-based)."""
    M = np.zeros((len(coords), r), dtype=int)
    for row, c in enumerate(coords):
        M[row, c] = 1
    return canonical_form(M, F, r)


def _check_same(U, V):
    if U.F.q != V.F.q or U.r != V.r:
        raise DomainError("subspaces live in different ambient spaces")


def contains(U, V):
    """True iff ``U`` is a subspace of ``V``."""
    _check_same(U, V)
    if U.k > V.k:
        return False
    if U.k == 0:
        return True
    return rank(np.vstack([V.matrix, U.matrix]), V.F) == V.k


def meet_join_dims(U, V):
    """Vector dimensions ``(dim U∩V, dim U+V)``."""
    _check_same(U, V)
    if U.k == 0 or V.k == 0:
        join = max(U.k, V.k)
    else:
        join = rank(np.vstack([U.matrix, V.matrix]), U.F)
    return U.k + V.k - join, join


def subspace_distance(U, V):
    meet, _ = meet_join_dims(U, V)
    return U.k + V.k - 2 * meet


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _rref_shapes(F, r, k):
    q = F.q
    blocks = []
    for piv in itertools.combinations(range(r), k):
        pivset = set(piv)
        free = [(i, j) for i, c in enumerate(piv) for j in range(c + 1, r) if j not in pivset]
        n = q ** len(free)
        mats = np.zeros((n, k, r), dtype=F.dtype)
        for i, c in enumerate(piv):
            mats[:, i, c] = 1
        if free:
            vals = np.array(list(itertools.product(range(q), repeat=len(free))), dtype=F.dtype)
            rows_, cols_ = zip(*free)
            mats[:, list(rows_), list(cols_)] = vals
        blocks.append(mats)
    return np.concatenate(blocks) if blocks else np.zeros((0, k, r), dtype=F.dtype)


@lru_cache(maxsize=64)
def subspace_array(F, r, k):
    """All ``k``-dim subspaces of GF(q)^r as ``(mats, keys)``, sorted by key.

    ``mats`` has shape ``(gbin(r,k,q), k, r)``.  Results are cached and
    read-only.
    """
    if not 0 <= k <= r:
        raise DomainError(f"need 0 <= k <= r, got k={k}, r={r}")
    count = gbin(r, k, F.q)
    if count > limit(DEFAULT_ENUM_LIMIT):
        raise LimitError(f"{count} subspaces of dimension {k} in GF({F.q})^{r} exceed the guard")
    if k == 0:
        mats = np.zeros((1, 0, r), dtype=F.dtype)
        keys = np.zeros(1, dtype=np.int64)
    else:
        mats = _rref_shapes(F, r, k)
        keys = matrix_keys(mats, F.q)
        order = np.argsort(keys, kind="stable")
        mats, keys = mats[order], keys[order]
    assert len(keys) == count
    mats.setflags(write=False)
    keys.setflags(write=False)
    return mats, keys


def enumerate_subspaces(F, r, k):
    """All ``k``-dim subspaces of GF(q)^r in canonical order."""
    mats, _ = subspace_array(F, r, k)
    out = []
    for M in mats:
        M = M.copy()
        M.setflags(write=False)
        out.append(Subspace(F, r, M))
    return out


def lookup(keys, query_keys):
    """Positions of ``query_keys`` in the sorted array ``keys``; ``-1`` where absent."""
    query_keys = np.asarray(query_keys, dtype=np.int64)
    pos = np.searchsorted(keys, query_keys)
    pos = np.minimum(pos, len(keys) - 1)
    found = keys[pos] == query_keys
    return np.where(found, pos, -1)


def subspace_images(F, T, B):
    """Row spaces of ``T[t] @ B[c]`` for all pairs, shape ``(len(B), len(T), k, r)``.

    When both ``T`` and ``B`` are in RREF the products are in RREF too, so
    their keys can be looked up without further reduction.
    """
    nb, kb, r = B.shape
    nt, k, _ = T.shape
    out = np.zeros((nb, nt, k, r), dtype=F.dtype)
    for j in range(kb):
        out = F.add_table[out, F.mul_table[T[None, :, :, j, None], B[:, None, None, j, :]]]
    return out


# ---------------------------------------------------------------------------
# incidence index
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GeometryIndex:
    """(h-1)-spaces, codimension-f spaces, and which of the former lie in each of the latter."""

    F: Field
    r: int
    h: int
    f: int
    H: np.ndarray
    H_keys: np.ndarray
    C: np.ndarray
    C_keys: np.ndarray
    contain: np.ndarray

    @property
    def n_H(self):
        return len(self.H_keys)

    @property
    def n_C(self):
        return len(self.C_keys)

    def space(self, i):
        """The ``i``-th (h-1)-space as a :class:`Subspace`."""
        return Subspace(self.F, self.r, self.H[i])

    def codim_space(self, j):
        return Subspace(self.F, self.r, self.C[j])

    def index_of(self, U):
        if U.k != self.h or U.r != self.r:
            raise DimensionError(f"expected a {self.h}-dim subspace of GF(q)^{self.r}")
        i = int(lookup(self.H_keys, [U.key])[0])
        if i < 0:
            raise DomainError(f"{U!r} is not canonical")
        return i

    def codim_index_of(self, U):
        if U.k != self.r - self.f or U.r != self.r:
            raise DimensionError(f"expected a {self.r - self.f}-dim subspace of GF(q)^{self.r}")
        return int(lookup(self.C_keys, [U.key])[0])

    @cached_property
    def incidence_counts(self):
        """How many codim-f spaces contain each (h-1)-space."""
        return np.bincount(self.contain.ravel(), minlength=self.n_H)


def contained_indices(F, r, h, containers):
    """For each container matrix (RREF, shape ``(N, c, r)``), indices of the
    ``h``-dim subspaces of GF(q)^r inside it, sorted per row."""
    H_mats, H_keys = subspace_array(F, r, h)
    c = containers.shape[1]
    T, _ = subspace_array(F, c, h)
    out = np.empty((len(containers), len(T)), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, len(T) * h * r))
    for start in range(0, len(containers), chunk):
        B = containers[start : start + chunk]
        imgs = subspace_images(F, T, B)
        keys = matrix_keys(imgs.reshape(-1, h, r), F.q)
        idx = lookup(H_keys, keys).reshape(len(B), len(T))
        out[start : start + chunk] = idx
    assert (out >= 0).all()
    out.sort(axis=1)
    return out


@lru_cache(maxsize=32)
def build_index(F, r, h, f):
    """Materialise the (h-1)-spaces, the codimension-``f`` spaces and their incidence."""
    if h < 1 or f < 0 or h + f > r:
        raise DomainError(f"need h >= 1 and h + f <= r, got r={r}, h={h}, f={f}")
    nH, nC = gbin(r, h, F.q), gbin(r, f, F.q)
    if nH * nC > limit(DEFAULT_INDEX_LIMIT):
        raise LimitError(f"index of size {nH} x {nC} exceeds the guard")
    H, H_keys = subspace_array(F, r, h)
    C, C_keys = subspace_array(F, r, r - f)
    contain = contained_indices(F, r, h, C)
    contain.setflags(write=False)
    return GeometryIndex(F, r, h, f, H, H_keys, C, C_keys, contain)
