"""Codes from multisets of subspaces: subfield generator matrices and brute-force weights."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._limits import limit
from .errors import DomainError, LimitError
from .geometry import gbin, subspace_array
from .linalg import matmul

MESSAGE_LIMIT = 2**20
SUBCODE_LIMIT = 10**6


@dataclass(frozen=True, eq=False)
class ExpandedCode:
    """Subfield generator matrix ``G`` (``r x n*h`` over GF(q)), one ``h``-column block per entry."""

    F: object
    r: int
    h: int
    G: np.ndarray
    entries: tuple  # source entry index (canonical order) of every block

    @property
    def n(self):
        return len(self.entries)

    def block(self, j):
        return self.G[:, j * self.h : (j + 1) * self.h]

    def block_ranks(self):
        from .linalg import rank

        return [rank(self.block(j).T, self.F) for j in range(self.n)]


def expand(ms):
    """Stack the generator rows of every entry (with repetition) as column blocks."""
    F, r, h = ms.F, ms.r, ms.h
    mats, _ = subspace_array(F, r, h)
    order = [i for i, m in ms.entries.items() for _ in range(m)]
    G = np.zeros((r, len(order) * h), dtype=F.dtype)
    for j, i in enumerate(order):
        G[:, j * h : (j + 1) * h] = mats[i].T
    G.setflags(write=False)
    return ExpandedCode(F, r, h, G, tuple(order))


def _block_support(code, words):
    """Boolean ``(N, n)``: which blocks of each codeword are nonzero."""
    N = words.shape[0]
    return words.reshape(N, code.n, code.h).any(axis=2)


def _messages(F, r):
    """All nonzero vectors of GF(q)^r, in chunks."""
    it = itertools.product(range(F.q), repeat=r)
    next(it)  # skip zero
    while True:
        chunk = np.array(list(itertools.islice(it, 4096)), dtype=F.dtype)
        if not len(chunk):
            return
        yield chunk


def min_distance(code):
    """Smallest number of nonzero blocks in ``vG`` over all nonzero messages ``v``."""
    F, r = code.F, code.r
    if F.q**r > limit(MESSAGE_LIMIT):
        raise LimitError(f"{F.q}^{r} messages exceed the brute-force guard")
    if code.n == 0:
        return 0
    best = code.n
    for chunk in _messages(F, r):
        w = _block_support(code, matmul(chunk, code.G, F)).sum(axis=1)
        best = min(best, int(w.min()))
    return best


def ghw(code, f):
    """f-th generalized Hamming weight: smallest block support of an f-dim subcode.

    Subcodes are images of f-dim message subspaces; the support of a subcode
    is the union of the supports of the images of a basis.
    """
    F, r = code.F, code.r
    if not 1 <= f <= r:
        raise DomainError(f"need 1 <= f <= r = {r}")
    count = gbin(r, f, F.q)
    if count > limit(SUBCODE_LIMIT):
        raise LimitError(f"{count} subcodes exceed the brute-force guard")
    if code.n == 0:
        return 0
    mats, _ = subspace_array(F, r, f)
    best = code.n
    for start in range(0, count, 1024):
        V = mats[start : start + 1024]
        N = V.shape[0]
        words = matmul(V.reshape(N * f, r), code.G, F)
        supp = _block_support(code, words).reshape(N, f, code.n).any(axis=1)
        best = min(best, int(supp.sum(axis=1).min()))
    return best


def weight_hierarchy(code):
    return [ghw(code, f) for f in range(1, code.r + 1)]


class IdentityCheck(NamedTuple):
    holds: bool
    ghw: int
    geometric: int  # n - (largest number of entries in a codim-f space)


def check_ghw_identity(ms, f):
    """Compare ``d_f`` of the expanded code with ``n - max count`` over codim-f spaces."""
    from .systems import verify

    d_f = ghw(expand(ms), f)
    if ms.h + f > ms.r:
        max_count = 0
    else:
        max_count = verify(ms, f, "system", ms.n).max_count
    geo = ms.n - max_count
    return IdentityCheck(d_f == geo, d_f, geo)
