"""Line spreads: the regular spread from field reduction and disjoint spread search."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import CapabilityError, ConstructionUnavailable, DomainError
from .geometry import canonical_form, contained_indices, lookup, subspace_array
from .gf import make_field


def quadratic_extension(F):
    """GF(q^2) whose element ``a0 + a1*p`` is the pair ``(a0, a1)`` over GF(q)."""
    if F.e != 1:
        raise CapabilityError("field reduction is only implemented over prime fields")
    return make_field(F.p, 2)


def regular_spread(F, n):
    """The regular line spread of PG(2n-1, q), as canonical 2-dim subspaces.

    Each point ``w`` of PG(n-1, q^2) gives the GF(q)-span of ``w`` and
    ``x*w`` where ``x`` is the generator of GF(q^2) over GF(q).
    """
    E = quadratic_extension(F)
    x = F.p  # encoding of the polynomial "x"
    lines = []
    for lead in range(n):
        for tail in itertools.product(range(E.q), repeat=n - lead - 1):
            w = [0] * lead + [1] + list(tail)
            xw = [E.mul(x, a) for a in w]
            rows = [
                [c for a in w for c in E.coefficients(a)],
                [c for a in xw for c in E.coefficients(a)],
            ]
            lines.append(canonical_form(np.array(rows), F, 2 * n, k=2))
    return sorted(lines)


def _line_point_masks(F, r=4):
    lines, line_keys = subspace_array(F, r, 2)
    pts = contained_indices(F, r, 1, lines)
    masks = [sum(1 << int(p) for p in row) for row in pts]
    return line_keys, masks, pts


def _spreads_from(avail, masks, pts, npoints, through):
    """Yield spreads built from the ``avail`` line indices (DFS, deterministic)."""
    full = (1 << npoints) - 1
    avail_set = set(avail)
    cand = {p: [l for l in through[p] if l in avail_set] for p in range(npoints)}
    chosen = []

    def rec(covered):
        if covered == full:
            yield list(chosen)
            return
        # smallest uncovered point
        p = (~covered & (covered + 1)).bit_length() - 1
        for l in cand[p]:
            if masks[l] & covered:
                continue
            chosen.append(l)
            yield from rec(covered | masks[l])
            chosen.pop()

    yield from rec(0)


def find_disjoint_line_spreads(F, count, first=None):
    """``count`` pairwise line-disjoint spreads of PG(3, q), each a sorted list of line indices
    into ``subspace_array(F, 4, 2)``.

    The first spread is the regular one; the others come from a deterministic
    backtracking search (smallest uncovered point first, lines in canonical
    order).
    """
    q = F.q
    if q not in (2, 3):
        raise CapabilityError("disjoint spread search is supported for q in {2, 3}")
    if not 1 <= count <= q + 1:
        raise DomainError(f"need 1 <= count <= q+1, got {count}")
    line_keys, masks, pts = _line_point_masks(F)
    npoints = (q**4 - 1) // (q - 1)
    through = [[] for _ in range(npoints)]
    for l, row in enumerate(pts):
        for p in row:
            through[int(p)].append(l)
    if first is None:
        first = sorted(int(i) for i in lookup(line_keys, [L.key for L in regular_spread(F, 2)]))
    spreads = [first]

    def extend():
        if len(spreads) == count:
            return True
        used = set().union(*spreads)
        avail = [l for l in range(len(masks)) if l not in used]
        for sp in _spreads_from(avail, masks, pts, npoints, through):
            spreads.append(sorted(sp))
            if extend():
                return True
            spreads.pop()
        return False

    if not extend():
        raise ConstructionUnavailable(f"no {count} disjoint spreads found in PG(3,{q})")
    return spreads


def spread_subspaces(F, spread):
    """Turn a list of line indices into :class:`Subspace` objects."""
    from .geometry import Subspace

    mats, _ = subspace_array(F, 4, 2)
    return [Subspace(F, 4, mats[i]) for i in spread]
