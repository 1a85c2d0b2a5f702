"""Line and plane classes of PG(4, q) relative to a maximal flag (chamber)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GeometryError
from .geometry import (
    Subspace,
    build_index,
    coordinate_subspace,
    gbin,
    meet_join_dims,
)

# Class sizes as usually tabulated, as exponents of q, in class order.  The
# line column sums to more than gbin(5, 2, q); enumeration is authoritative.
TABULATED_LINE_EXPONENTS = (0, 1, 2, 3, 3, 4, 3, 4, 5, 6)
TABULATED_PLANE_EXPONENTS = (0, 1, 2, 3, 2, 3, 4, 4, 5, 6)


def standard_chamber(F, r=5):
    """``<e1> < <e1,e2> < ... < <e1..e_{r-1}>``."""
    return [coordinate_subspace(F, r, range(i + 1)) for i in range(r - 1)]


def signature(X, chamber):
    """Projective dimensions of ``X`` meet each chamber member (-1 = empty)."""
    return tuple(meet_join_dims(X, S)[0] - 1 for S in chamber)


def _class_order(sigs):
    # descending in (dim∩π3, dim∩π2, dim∩π1, dim∩π0)
    return sorted(set(sigs), key=lambda s: tuple(reversed(s)), reverse=True)


@dataclass
class FlagClassification:
    F: object
    chamber: list
    line_signatures: list
    line_classes: list
    plane_signatures: list
    plane_classes: list
    beta: np.ndarray  # beta[j, i]: lines of class i inside a plane of class j

    @property
    def line_class_sizes(self):
        return [len(c) for c in self.line_classes]

    @property
    def plane_class_sizes(self):
        return [len(c) for c in self.plane_classes]

    def discrepancies(self):
        """Classes whose enumerated size differs from the tabulated q-power.

        Returns a list of ``(kind, class_number, enumerated, tabulated)`` with
        1-based class numbers.
        """
        q = self.F.q
        out = []
        for kind, sizes, exps in (
            ("line", self.line_class_sizes, TABULATED_LINE_EXPONENTS),
            ("plane", self.plane_class_sizes, TABULATED_PLANE_EXPONENTS),
        ):
            if len(sizes) != len(exps):
                out.append((kind, None, len(sizes), len(exps)))
                continue
            for i, (got, e) in enumerate(zip(sizes, exps)):
                if got != q**e:
                    out.append((kind, i + 1, got, q**e))
        return out


def classify_flag(F, chamber=None):
    """Partition lines and planes of PG(4, q) by their intersection pattern with a chamber.

    ``beta`` is computed from every plane of each class and checked to be
    constant inside the class.
    """
    r = 5
    chamber = list(chamber) if chamber is not None else standard_chamber(F, r)
    idx = build_index(F, r, 2, 2)
    lines = [Subspace(F, r, m) for m in idx.H]
    planes = [Subspace(F, r, m) for m in idx.C]
    lsig = [signature(L, chamber) for L in lines]
    psig = [signature(P, chamber) for P in planes]
    lorder, porder = _class_order(lsig), _class_order(psig)
    lpos = {s: i for i, s in enumerate(lorder)}
    ppos = {s: j for j, s in enumerate(porder)}
    line_class_of = np.array([lpos[s] for s in lsig])
    plane_class_of = np.array([ppos[s] for s in psig])
    line_classes = [np.flatnonzero(line_class_of == i) for i in range(len(lorder))]
    plane_classes = [np.flatnonzero(plane_class_of == j) for j in range(len(porder))]

    u, v = len(lorder), len(porder)
    beta = np.zeros((v, u), dtype=np.int64)
    for j, members in enumerate(plane_classes):
        rows = np.array(
            [np.bincount(line_class_of[idx.contain[c]], minlength=u) for c in members]
        )
        if not (rows == rows[0]).all():
            raise GeometryError(f"intersection numbers not constant on plane class {j + 1}")
        beta[j] = rows[0]

    q = F.q
    assert sum(len(c) for c in line_classes) == gbin(5, 2, q)
    assert sum(len(c) for c in plane_classes) == gbin(5, 3, q)
    return FlagClassification(
        F=F,
        chamber=chamber,
        line_signatures=lorder,
        line_classes=line_classes,
        plane_signatures=porder,
        plane_classes=plane_classes,
        beta=beta,
    )
