"""Known values for lines vs planes in PG(4, q), q in {2, 3}, with their provenance.

Upper bounds on ``b`` come from explicit multisets (builders, sums of
builders, or bundled certificates), which can all be re-verified.  Lower
bounds come from the counting and double-counting bounds where those
suffice; the remaining cells are tagged with the argument they need.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import appendix
from .bounds import (
    counting_bound,
    double_count_bound,
    duality_transfer,
    extend_periodic_table,
)
from .constructions import build
from .errors import CapabilityError
from .geometry import gbin, point_count
from .systems import multiset_sum, verify

# s -> recipe for an s-fold blocking set of lines w.r.t. planes.
# ("build", name) | ("sum", name, name) | ("cert", corpus name)
UPPER_RECIPES = {
    2: {
        1: ("build", "eisfeld"),
        2: ("build", "q-fold"),
        3: ("build", "qp1-fold"),
        4: ("build", "q2-fold"),
        5: ("sum", "eisfeld", "q2-fold"),
        6: ("build", "q2q-fold"),
        7: ("build", "all-lines"),
    },
    3: {
        1: ("build", "eisfeld"),
        2: ("sum", "eisfeld", "eisfeld"),
        3: ("build", "q-fold"),
        4: ("build", "qp1-fold"),
        5: ("cert", "b3_n502_m3"),
        6: ("cert", "b3_n600_m6"),
        7: ("cert", "b3_n690_m4"),
        8: ("cert", "b3_n784_m4"),
        9: ("build", "q2-fold"),
        10: ("sum", "eisfeld", "q2-fold"),
        11: ("cert", "b3_n1050_m9"),
        12: ("build", "q2q-fold"),
        13: ("build", "all-lines"),
    },
}

# lower bounds that rest on arguments outside the counting bounds
EXTERNAL_LOWER = {
    (2, 1): (27, "characterization of 1-fold blocking sets"),
    (3, 1): (103, "characterization of 1-fold blocking sets"),
    (2, 2): (52, "ILP (external solver)"),
    (2, 3): (75, "ILP (external solver)"),
    (2, 5): (119, "ILP (external solver)"),
}


@dataclass
class Row:
    s: int
    lower: int
    upper: int
    lower_source: str
    upper_source: str
    verified: bool | None = None

    @property
    def exact(self):
        return self.lower == self.upper

    def value_text(self):
        return str(self.upper) if self.exact else f"{self.lower}-{self.upper}"


def _recipe_name(recipe):
    kind = recipe[0]
    if kind == "build":
        return f"construction {recipe[1]}"
    if kind == "sum":
        return f"sum {recipe[1]} + {recipe[2]}"
    return f"certificate {recipe[1]}"


def realize(q, s):
    """The multiset behind the upper bound of cell ``s``."""
    recipe = UPPER_RECIPES[q][s]
    if recipe[0] == "build":
        return build(recipe[1], q).multiset
    if recipe[0] == "sum":
        return multiset_sum(build(recipe[1], q).multiset, build(recipe[2], q).multiset)
    return appendix.load(recipe[1])


def _upper_size(q, s):
    recipe = UPPER_RECIPES[q][s]
    if recipe[0] == "cert":
        return appendix.entry(recipe[1]).n
    return realize(q, s).n


def base_rows(q, check=False):
    """Rows for ``1 <= s <= [3]_q``; with ``check`` every upper multiset is verified."""
    if q not in UPPER_RECIPES:
        raise CapabilityError("tables are available for q in {2, 3}")
    lines = gbin(5, 2, q)
    rows = []
    for s in range(1, point_count(3, q) + 1):
        upper = _upper_size(q, s)
        if (q, s) in EXTERNAL_LOWER:
            lower, lsrc = EXTERNAL_LOWER[(q, s)]
        elif s == point_count(3, q):
            lower, lsrc = counting_bound(q, 5, 2, 2, s).value, "counting bound"
        else:
            # either some line is missing (double count) or all lines are present
            lower = min(double_count_bound(q, 5, 2, s).value, lines)
            lsrc = "double-count bound"
        verified = None
        if check:
            ms = realize(q, s)
            verified = ms.n == upper and verify(ms, 2, "blocking", s).ok
        rows.append(Row(s, lower, upper, lsrc, _recipe_name(UPPER_RECIPES[q][s]), verified))
    return rows


def b_rows(q, max_s=None, check=False):
    """Rows up to ``max_s``; beyond one period only exact base cells are extended."""
    base = base_rows(q, check)
    period = point_count(3, q)
    max_s = period if max_s is None else max_s
    rows = list(base[: min(max_s, period)])
    if max_s <= period:
        return rows
    exact = {r.s: r.upper for r in base if r.exact}
    full = {s: exact.get(s, 0) for s in range(1, period + 1)}
    ext = extend_periodic_table(q, full, check=True, max_s=max_s)
    for s in range(period + 1, max_s + 1):
        s0 = (s - 1) % period + 1
        if s0 not in exact:
            continue
        t = (s - 1) // period
        tag = ext.justification[s]
        rows.append(
            Row(s, ext[s], ext[s], f"periodic from s={s0} ({tag})", f"cell s={s0} + {t} x all-lines")
        )
    return rows


def n_rows(q, check=False):
    """Lower bounds on projective systems of multiplicity 1 from complements of blocking sets.

    The complement of an s-fold blocking set with maximum multiplicity 1 is a
    set of lines with at most ``[3]_q - s`` per plane.
    """
    period = point_count(3, q)
    total = gbin(5, 2, q)
    rows = []
    for s_sys in range(1, period):
        s_b = period - s_sys
        cands = []  # (n, source, multiset of the system or None)
        recipe = UPPER_RECIPES[q][s_b]
        if recipe[0] == "build":
            ms = build(recipe[1], q).multiset
            if ms.max_multiplicity <= 1:
                cands.append((total - ms.n, f"complement of construction {recipe[1]}", ms))
        e = appendix.best_known(q, s_b, max_mult=1)
        if e is not None:
            cands.append((duality_transfer(q, 1, e.n), f"complement of certificate {e.name}", None))
        if s_sys == 1:
            cands.append((q**3 + 1, "construction partial-spread", None))
        upper = double_count_bound(q, 5, 2, s_sys, direction="upper").value
        if not cands:
            rows.append(Row(s_sys, 0, upper, "none bundled", "double-count bound"))
            continue
        n, src, ms = max(cands, key=lambda c: c[0])
        verified = None
        if check:
            from .systems import complement

            if src.startswith("construction partial-spread"):
                system = build("partial-spread", q).multiset
            else:
                ms = ms if ms is not None else appendix.load(src.split()[-1])
                system = complement(ms, 1)
            verified = system.n == n and verify(system, 2, "system", s_sys).ok
        rows.append(Row(s_sys, n, upper, src, "double-count bound", verified))
    return rows
