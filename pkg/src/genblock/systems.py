"""Multisets of (h-1)-spaces, their verification, and certificate text I/O."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from ._limits import DEFAULT_ENUM_LIMIT, limit
from .errors import DimensionError, DomainError, LimitError, ParseError
from .geometry import (
    _DIGITS,
    Subspace,
    build_index,
    canonical_form,
    contained_indices,
    gbin,
    lookup,
    subspace_array,
)
from .gf import field_of_order


class SpaceMultiset:
    """Multiset of ``h``-dim subspaces of GF(q)^r.

    Entries are keyed by the position of the subspace in
    ``subspace_array(F, r, h)`` (canonical order).
    """

    __slots__ = ("F", "r", "h", "_entries", "_n")

    def __init__(self, F, r, h, entries=None):
        self.F, self.r, self.h = F, r, h
        clean = {}
        total = gbin(r, h, F.q)
        for i, m in (entries or {}).items():
            i, m = int(i), int(m)
            if m < 0:
                raise DomainError(f"negative multiplicity {m} for entry {i}")
            if not 0 <= i < total:
                raise DomainError(f"entry index {i} out of range")
            if m:
                clean[i] = clean.get(i, 0) + m
        self._entries = MappingProxyType(dict(sorted(clean.items())))
        self._n = sum(clean.values())

    # construction ---------------------------------------------------------
    @classmethod
    def from_counts(cls, F, r, h, counts):
        counts = np.asarray(counts)
        nz = np.flatnonzero(counts)
        return cls(F, r, h, {int(i): int(counts[i]) for i in nz})

    @classmethod
    def from_subspaces(cls, F, r, h, subspaces, multiplicity=1):
        _, keys = subspace_array(F, r, h)
        entries = {}
        for U in subspaces:
            if U.k != h or U.r != r:
                raise DimensionError(f"{U!r} is not a {h}-dim subspace of GF(q)^{r}")
            i = int(lookup(keys, [U.key])[0])
            entries[i] = entries.get(i, 0) + multiplicity
        return cls(F, r, h, entries)

    @classmethod
    def from_matrices(cls, F, mats, multiplicity=1):
        """From an ``(N, h, r)`` stack of RREF matrices."""
        _, h, r = mats.shape
        _, keys = subspace_array(F, r, h)
        from .geometry import matrix_keys

        idx = lookup(keys, matrix_keys(mats, F.q))
        if (idx < 0).any():
            raise DomainError("matrices are not all canonical")
        counts = np.bincount(idx, minlength=len(keys)) * multiplicity
        return cls.from_counts(F, r, h, counts)

    @classmethod
    def all_spaces(cls, F, r, h, multiplicity=1):
        count = gbin(r, h, F.q)
        if count > limit(DEFAULT_ENUM_LIMIT):
            raise LimitError(f"{count} subspaces exceed the guard")
        return cls.from_counts(F, r, h, np.full(count, multiplicity))

    # views ----------------------------------------------------------------
    @property
    def entries(self):
        return self._entries

    @property
    def n(self):
        return self._n

    def __len__(self):
        return self._n

    @property
    def max_multiplicity(self):
        return max(self._entries.values(), default=0)

    @property
    def support_size(self):
        return len(self._entries)

    def counts(self):
        vec = np.zeros(gbin(self.r, self.h, self.F.q), dtype=np.int64)
        for i, m in self._entries.items():
            vec[i] = m
        return vec

    def multiplicity(self, U):
        _, keys = subspace_array(self.F, self.r, self.h)
        i = int(lookup(keys, [U.key])[0])
        return self._entries.get(i, 0)

    def space(self, i):
        mats, _ = subspace_array(self.F, self.r, self.h)
        return Subspace(self.F, self.r, mats[i])

    def items(self):
        """``(Subspace, multiplicity)`` pairs in canonical order."""
        for i, m in self._entries.items():
            yield self.space(i), m

    def __iter__(self):
        for U, m in self.items():
            for _ in range(m):
                yield U

    def _compatible(self, other):
        return self.F.q == other.F.q and self.r == other.r and self.h == other.h

    def __eq__(self, other):
        if not isinstance(other, SpaceMultiset):
            return NotImplemented
        return self._compatible(other) and dict(self._entries) == dict(other._entries)

    def __add__(self, other):
        return multiset_sum(self, other)

    def scaled(self, k):
        return SpaceMultiset(self.F, self.r, self.h, {i: k * m for i, m in self._entries.items()})

    def __repr__(self):
        return (
            f"SpaceMultiset(q={self.F.q}, r={self.r}, h={self.h}, n={self.n}, "
            f"support={self.support_size}, max_mult={self.max_multiplicity})"
        )


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    mode: str
    f: int
    s: int
    n: int
    min_count: int
    max_count: int
    argmin: Subspace
    argmax: Subspace
    max_multiplicity: int
    mu: int | None = None
    counts: np.ndarray = field(default=None, repr=False)

    @property
    def ok(self):
        if self.mode == "blocking":
            return self.min_count >= self.s
        return self.max_count <= self.s

    def __bool__(self):
        return self.ok

    def summary(self):
        line = (
            f"mode={self.mode} f={self.f} s={self.s} n={self.n} "
            f"min_count={self.min_count} max_count={self.max_count} "
            f"max_mult={self.max_multiplicity}"
        )
        if self.mu is not None:
            line += f" mu={self.mu}"
        return line + (" OK" if self.ok else " FAILED")


def codim_counts(ms, f):
    """Number of entries (with multiplicity) inside every codimension-``f`` space."""
    idx = build_index(ms.F, ms.r, ms.h, f)
    return ms.counts()[idx.contain].sum(axis=1), idx


def point_multiplicity(ms, f):
    """Largest number of entries through a single ``f``-dim subspace (the parameter mu)."""
    if f == 0:
        return ms.n
    if f > ms.h or ms.n == 0:
        return 0
    mats, _ = subspace_array(ms.F, ms.r, ms.h)
    ids = np.fromiter(ms.entries.keys(), dtype=np.int64)
    mult = np.fromiter(ms.entries.values(), dtype=np.int64)
    inside = contained_indices(ms.F, ms.r, f, mats[ids])
    weights = np.repeat(mult, inside.shape[1])
    return int(np.bincount(inside.ravel(), weights=weights).max())


def verify(ms, f, mode, s, mu=False):
    """Check ``ms`` as an ``s``-fold blocking set (``mode='blocking'``) or as a
    projective system with at most ``s`` entries per codim-``f`` space
    (``mode='system'``)."""
    if mode not in ("blocking", "system"):
        raise DomainError(f"mode must be 'blocking' or 'system', not {mode!r}")
    if ms.h + f > ms.r:
        raise DomainError(f"h + f = {ms.h + f} exceeds r = {ms.r}")
    counts, idx = codim_counts(ms, f)
    jmin, jmax = int(np.argmin(counts)), int(np.argmax(counts))
    return VerifyReport(
        mode=mode,
        f=f,
        s=s,
        n=ms.n,
        min_count=int(counts[jmin]),
        max_count=int(counts[jmax]),
        argmin=idx.codim_space(jmin),
        argmax=idx.codim_space(jmax),
        max_multiplicity=ms.max_multiplicity,
        mu=point_multiplicity(ms, f) if mu else None,
        counts=counts,
    )


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------


def complement(ms, lam):
    """``lam`` copies of every (h-1)-space minus ``ms``."""
    if ms.max_multiplicity > lam:
        raise DomainError(f"multiplicity {ms.max_multiplicity} exceeds lambda={lam}")
    return SpaceMultiset.from_counts(ms.F, ms.r, ms.h, lam - ms.counts())


def multiset_sum(a, b):
    if not a._compatible(b):
        raise DomainError("cannot add multisets from different geometries")
    entries = dict(a.entries)
    for i, m in b.entries.items():
        entries[i] = entries.get(i, 0) + m
    return SpaceMultiset(a.F, a.r, a.h, entries)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

_HEADER = re.compile(r"^q=(\d+) r=(\d+) h=(\d+)$")


def parse_certificate(text):
    """Parse certificate text into a :class:`SpaceMultiset`.

    Format: a header ``q=<q> r=<r> h=<h>`` followed by one entry per line,
    ``row1/row2/.../rowh`` with each row ``r`` characters long.  Repeated
    lines encode multiplicity, ``#`` starts a comment.
    """
    header = None
    F = None
    entries = {}
    keys = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(f"expected header 'q=<q> r=<r> h=<h>', got {line!r}", lineno)
            q, r, h = map(int, m.groups())
            try:
                F = field_of_order(q)
            except Exception as exc:
                raise ParseError(str(exc), lineno) from None
            if q > len(_DIGITS):
                raise ParseError(f"q={q} has no single-character digit encoding", lineno)
            if not 1 <= h <= r:
                raise ParseError(f"need 1 <= h <= r, got r={r}, h={h}", lineno)
            header = (q, r, h)
            _, keys = subspace_array(F, r, h)
            continue
        q, r, h = header
        rows = line.split("/")
        if len(rows) != h:
            raise ParseError(f"expected {h} rows, got {len(rows)}", lineno)
        M = np.zeros((h, r), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != r:
                raise ParseError(f"row {row!r} has length {len(row)}, expected {r}", lineno)
            for j, ch in enumerate(row):
                v = _DIGITS.find(ch.lower())
                if v < 0 or v >= q:
                    raise ParseError(f"bad digit {ch!r} for GF({q})", lineno)
                M[i, j] = v
        try:
            U = canonical_form(M, F, r, k=h)
        except DimensionError:
            raise ParseError(f"malformed subspace {line!r}: rank < {h}", lineno) from None
        i = int(lookup(keys, [U.key])[0])
        entries[i] = entries.get(i, 0) + 1
    if header is None:
        raise ParseError("missing header")
    q, r, h = header
    return SpaceMultiset(F, r, h, entries)


def emit_certificate(ms, comment=None):
    """Certificate text for ``ms``; entries in canonical order, repeated per multiplicity."""
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"q={ms.F.q} r={ms.r} h={ms.h}")
    for U, m in ms.items():
        lines.extend([U.digits] * m)
    return "\n".join(lines) + "\n"


def read_certificate(path):
    with open(path, encoding="utf-8") as fh:
        return parse_certificate(fh.read())


def write_certificate(ms, path, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_certificate(ms, comment))
