"""Integer programs for blocking sets and projective systems: LP text, solutions, tiny solver."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, IncompleteSearchError, InfeasibleError, ParseError
from .geometry import build_index
from .systems import SpaceMultiset

LINE_WIDTH = 255  # LP readers cap line length; long rows continue on indented lines


@dataclass(eq=False)
class IlpModel:
    """``min/max sum x_i`` with one row per codim-f space and ``0 <= x_i <= m``.

    ``problem='b'`` asks for a blocking set (rows ``>= s``, minimise),
    ``problem='n'`` for a projective system (rows ``<= s``, maximise).
    """

    F: object
    r: int
    h: int
    f: int
    s: int
    problem: str = "b"
    m: int | None = None
    fixings: dict = field(default_factory=dict)
    cardinality: int | None = None

    def __post_init__(self):
        if self.problem not in ("b", "n"):
            raise DomainError("problem must be 'b' or 'n'")
        if self.m is None:
            self.m = self.s
        if self.m < 0 or self.s < 0:
            raise DomainError("s and m must be >= 0")
        self.index = build_index(self.F, self.r, self.h, self.f)
        n = self.index.n_H
        self.fixings = {int(i): int(v) for i, v in self.fixings.items()}
        for i, v in self.fixings.items():
            if not 0 <= i < n:
                raise DomainError(f"fixing refers to x{i}, but there are {n} variables")
            if not 0 <= v <= self.m:
                raise DomainError(f"fixing x{i} = {v} outside 0..{self.m}")

    @property
    def direction(self):
        return "min" if self.problem == "b" else "max"

    @property
    def sense(self):
        return ">=" if self.problem == "b" else "<="

    @property
    def n_vars(self):
        return self.index.n_H

    @property
    def n_constraints(self):
        return self.index.n_C

    def names(self):
        return [f"x{i}" for i in range(self.n_vars)]

    def incidence(self):
        """Dense 0/1 matrix, row j = variables of constraint j."""
        A = np.zeros((self.n_constraints, self.n_vars), dtype=np.int64)
        rows = np.repeat(np.arange(self.n_constraints), self.index.contain.shape[1])
        A[rows, self.index.contain.ravel()] = 1
        return A

    def upper_bounds(self):
        ub = np.full(self.n_vars, self.m, dtype=np.int64)
        lb = np.zeros(self.n_vars, dtype=np.int64)
        for i, v in self.fixings.items():
            lb[i] = ub[i] = v
        return lb, ub


def _wrap(head, terms, tail=""):
    """Lay out ``head term term ... tail`` over lines of at most LINE_WIDTH characters."""
    lines, cur = [], head
    for t in terms:
        piece = t if cur.endswith(": ") or cur == head and head.endswith(" ") else " " + t
        if len(cur) + len(piece) > LINE_WIDTH and cur.strip():
            lines.append(cur)
            cur = "  " + t
        else:
            cur += piece
    if tail:
        if len(cur) + len(tail) + 1 > LINE_WIDTH:
            lines.append(cur)
            cur = "  " + tail.lstrip()
        else:
            cur += " " + tail
    lines.append(cur)
    return lines


def _sum_terms(ids):
    ids = list(ids)
    return [f"x{ids[0]}"] + [f"+ x{i}" for i in ids[1:]]


def lp_text(model):
    """LP-format text of ``model``; deterministic, ascending variable order."""
    n = model.n_vars
    out = ["Minimize" if model.direction == "min" else "Maximize"]
    out += _wrap(" obj: ", _sum_terms(range(n)))
    out.append("Subject To")
    for j, row in enumerate(model.index.contain):
        out += _wrap(f" c{j}: ", _sum_terms(sorted(int(i) for i in row)), f"{model.sense} {model.s}")
    if model.cardinality is not None:
        out += _wrap(" card: ", _sum_terms(range(n)), f"= {model.cardinality}")
    out.append("Bounds")
    for i in range(n):
        if i in model.fixings:
            out.append(f" x{i} = {model.fixings[i]}")
        else:
            out.append(f" 0 <= x{i} <= {model.m}")
    out.append("General")
    out += _wrap(" ", [f"x{i}" for i in range(n)])
    out.append("End")
    return "\n".join(out) + "\n"


def emit_model(F, r, h, f, s, problem="b", m=None, fixings=None, cardinality=None):
    """Build the model and its LP text; returns ``(model, text)``."""
    model = IlpModel(F, r, h, f, s, problem, m, dict(fixings or {}), cardinality)
    return model, lp_text(model)


# ---------------------------------------------------------------------------
# solutions
# ---------------------------------------------------------------------------


@dataclass
class Solution:
    values: dict  # variable name -> int, nonzero entries only

    @property
    def objective(self):
        return sum(self.values.values())

    def vector(self, n):
        x = np.zeros(n, dtype=np.int64)
        for name, v in self.values.items():
            x[int(name[1:])] = v
        return x


_NAME = re.compile(r"^x(\d+)$")


def parse_solution(text, model=None):
    """Parse ``<name> <value>`` lines; ``#`` starts a comment, missing variables are 0.

    Values must be integers (``3`` or ``3.0``).  With a ``model``, names must
    belong to it and values must respect its bounds.
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<name> <value>', got {line!r}", lineno)
        name, val = parts
        m = _NAME.match(name)
        if not m:
            raise ParseError(f"unknown variable {name!r}", lineno)
        if model is not None and int(m.group(1)) >= model.n_vars:
            raise ParseError(f"unknown variable {name!r}: model has {model.n_vars}", lineno)
        try:
            num = float(val)
        except ValueError:
            raise ParseError(f"value {val!r} is not a number", lineno) from None
        if not num.is_integer():
            raise ParseError(f"value {val!r} of {name} is not an integer", lineno)
        name = f"x{int(m.group(1))}"
        if name in values:
            raise ParseError(f"duplicate variable {name}", lineno)
        if int(num):
            values[name] = int(num)
    sol = Solution(dict(sorted(values.items(), key=lambda kv: int(kv[0][1:]))))
    if model is not None:
        lb, ub = model.upper_bounds()
        x = sol.vector(model.n_vars)
        bad = np.flatnonzero((x < lb) | (x > ub))
        if bad.size:
            i = int(bad[0])
            raise ParseError(f"x{i} = {x[i]} outside bounds {lb[i]}..{ub[i]}")
    return sol


def emit_solution(sol):
    return "".join(f"{k} {v}\n" for k, v in sol.values.items())


def solution_to_multiset(sol, F, r, h):
    entries = {}
    for name, v in sol.values.items():
        if v < 0:
            raise DomainError(f"negative value {v} for {name}")
        entries[int(name[1:])] = v
    return SpaceMultiset(F, r, h, entries)


# ---------------------------------------------------------------------------
# tiny exact solver
# ---------------------------------------------------------------------------


def solve_tiny(model, node_limit=2_000_000):
    """Exact optimum by depth-first branch and bound.

    Variables are branched in ascending index order, values from high to
    low.  Raises :class:`InfeasibleError` when no solution exists and
    :class:`IncompleteSearchError` when ``node_limit`` is hit first.
    """
    A = model.incidence()
    n = model.n_vars
    lb, ub = model.upper_bounds()
    s = model.s
    card = model.cardinality
    minimize = model.direction == "min"
    cols = [np.flatnonzero(A[:, i]) for i in range(n)]
    deg = A.sum(axis=0)
    # remaining capacity per row from variables i.. (for feasibility of >= rows)
    suffix_cap = np.zeros((n + 1, A.shape[0]), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + A[:, i] * ub[i]
    suffix_ub = np.concatenate([np.cumsum(ub[::-1])[::-1], [0]])
    suffix_lb = np.concatenate([np.cumsum(lb[::-1])[::-1], [0]])
    suffix_maxdeg = np.concatenate([np.maximum.accumulate(deg[::-1])[::-1], [0]])
    pos_deg = np.where(deg > 0, deg, np.iinfo(np.int64).max)
    suffix_mindeg = np.concatenate([np.minimum.accumulate(pos_deg[::-1])[::-1], [np.iinfo(np.int64).max]])
    free = (deg == 0).astype(np.int64) * ub
    suffix_free = np.concatenate([np.cumsum(free[::-1])[::-1], [0]])

    x = np.zeros(n, dtype=np.int64)
    load = np.zeros(A.shape[0], dtype=np.int64)
    best = [None, None]
    nodes = [0]

    def better(val):
        if best[0] is None:
            return True
        return val < best[0] if minimize else val > best[0]

    def bound_ok(i, total):
        """Whether the subtree at variable i can still beat the incumbent."""
        if card is not None:
            if total + suffix_lb[i] > card or total + suffix_ub[i] < card:
                return False
        if minimize:
            deficit = np.maximum(s - load, 0)
            if (deficit > suffix_cap[i]).any():
                return False
            need = 0
            if deficit.any():
                need = max(int(deficit.max()), -(-int(deficit.sum()) // max(int(suffix_maxdeg[i]), 1)))
            need = max(need, int(suffix_lb[i]))
            if card is not None:
                need = card - total
            return best[0] is None or total + need < best[0]
        slack = s - load
        if (slack < 0).any():
            return False
        most = int(suffix_ub[i])
        if suffix_mindeg[i] < np.iinfo(np.int64).max:
            most = min(most, int(slack.sum()) // int(suffix_mindeg[i]) + int(suffix_free[i]))
        if card is not None:
            most = card - total
        return best[0] is None or total + most > best[0]

    def rec(i, total):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise IncompleteSearchError(f"node limit {node_limit} reached")
        if i == n:
            feasible = (load >= s).all() if minimize else (load <= s).all()
            if feasible and (card is None or total == card) and better(total):
                best[0], best[1] = total, x.copy()
            return
        if not bound_ok(i, total):
            return
        for v in range(ub[i], lb[i] - 1, -1):
            x[i] = v
            load[cols[i]] += v
            if minimize or (load[cols[i]] <= s).all():
                rec(i + 1, total + v)
            load[cols[i]] -= v
        x[i] = 0

    rec(0, 0)
    if best[0] is None:
        raise InfeasibleError("model has no feasible solution")
    values = {f"x{i}": int(v) for i, v in enumerate(best[1]) if v}
    return best[0], Solution(values)
