import itertools

import numpy as np
import pytest

from genblock.errors import DomainError, IncompleteSearchError, InfeasibleError, ParseError
from genblock.geometry import build_index
from genblock.gf import make_field
from genblock.ilp import (
    LINE_WIDTH,
    IlpModel,
    emit_model,
    emit_solution,
    parse_solution,
    solution_to_multiset,
    solve_tiny,
)
from genblock.systems import verify


def brute_optimum(model):
    """Optimum over every integer vector within the bounds (oracle, <= 15 variables)."""
    A = model.incidence()
    lb, ub = model.upper_bounds()
    X = np.array(list(itertools.product(*[range(a, b + 1) for a, b in zip(lb, ub)])))
    load = X @ A.T
    ok = (load >= model.s).all(axis=1) if model.problem == "b" else (load <= model.s).all(axis=1)
    tot = X.sum(axis=1)
    if model.cardinality is not None:
        ok &= tot == model.cardinality
    if not ok.any():
        return None
    return int(tot[ok].min() if model.problem == "b" else tot[ok].max())


SMALL = [
    # (q, r, h, f, s, problem, m)
    (2, 3, 1, 1, 1, "b", None),
    (2, 3, 1, 1, 2, "b", None),
    (2, 3, 1, 1, 1, "n", None),
    (2, 3, 1, 1, 2, "n", 1),
    (2, 3, 1, 1, 2, "n", 2),
    (2, 4, 1, 2, 1, "b", 1),
    (2, 4, 1, 1, 1, "b", 1),
    (2, 4, 1, 1, 2, "n", 1),
    (2, 4, 1, 1, 3, "b", 1),
    (3, 3, 1, 1, 1, "b", 1),
]


@pytest.mark.parametrize("q,r,h,f,s,problem,m", SMALL)
def test_solve_tiny_matches_exhaustive(q, r, h, f, s, problem, m):
    F = make_field(q)
    model = IlpModel(F, r, h, f, s, problem, m)
    assert model.n_vars <= 15
    opt, sol = solve_tiny(model)
    assert opt == brute_optimum(model) == sol.objective
    ms = solution_to_multiset(sol, F, r, h)
    mode = "blocking" if problem == "b" else "system"
    assert verify(ms, f, mode, s).ok


def test_classic_optima(F2):
    assert solve_tiny(IlpModel(F2, 3, 1, 1, 1))[0] == 3
    assert solve_tiny(IlpModel(F2, 4, 1, 2, 1))[0] == 7


def test_cardinality_and_fixings(F2):
    model = IlpModel(F2, 3, 1, 1, 1, fixings={0: 0, 1: 0}, cardinality=4)
    opt, sol = solve_tiny(model)
    assert opt == 4 == brute_optimum(model)
    assert "x0" not in sol.values and "x1" not in sol.values


def test_infeasible_and_node_cap(F2):
    with pytest.raises(InfeasibleError):
        solve_tiny(IlpModel(F2, 3, 1, 1, 4, m=1))
    with pytest.raises(IncompleteSearchError):
        solve_tiny(IlpModel(F2, 5, 2, 2, 2), node_limit=50)


def test_model_validation(F2):
    with pytest.raises(DomainError):
        IlpModel(F2, 3, 1, 1, 1, problem="x")
    with pytest.raises(DomainError):
        IlpModel(F2, 3, 1, 1, 1, fixings={7: 0})
    with pytest.raises(DomainError):
        IlpModel(F2, 3, 1, 1, 1, fixings={0: 2})


def test_constraints_follow_index(F2):
    model = IlpModel(F2, 5, 2, 2, 1)
    idx = build_index(F2, 5, 2, 2)
    A = model.incidence()
    for j in range(idx.n_C):
        assert set(np.flatnonzero(A[j]).tolist()) == set(idx.contain[j].tolist())


def test_lp_layout_fano(F2):
    _, text = emit_model(F2, 3, 1, 1, 1)
    lines = text.splitlines()
    assert lines[0] == "Minimize"
    assert lines[1] == " obj: x0 + x1 + x2 + x3 + x4 + x5 + x6"
    assert lines[2] == "Subject To"
    cons = [l for l in lines if l.startswith(" c")]
    assert len(cons) == 7 and all(l.endswith(">= 1") and l.count("x") == 3 for l in cons)
    assert " 0 <= x0 <= 1" in lines
    assert lines[-3:] == ["General", " x0 x1 x2 x3 x4 x5 x6", "End"]
    assert text.endswith("End\n")


def test_lp_stable_and_wrapped(F2):
    model, text = emit_model(F2, 5, 2, 2, 1)
    assert model.n_vars == model.n_constraints == 155
    assert emit_model(F2, 5, 2, 2, 1)[1] == text
    assert max(len(l) for l in text.splitlines()) <= LINE_WIDTH
    # every variable appears in the objective once, across continuation lines
    obj = text.split("Subject To")[0]
    assert sorted(int(t[1:]) for t in obj.split() if t.startswith("x")) == list(range(155))


def test_lp_system_fixing_cardinality(F2):
    _, text = emit_model(F2, 6, 2, 3, 4, problem="n", m=2, fixings={5: 0}, cardinality=100)
    assert text.startswith("Maximize\n")
    assert " x5 = 0" in text.splitlines()
    assert "<= 4" in text and "= 100" in text


def test_parse_solution_cases(F2):
    model = IlpModel(F2, 3, 1, 1, 2)
    sol = parse_solution("x0 1\nx3 2\n", model)
    assert sol.values == {"x0": 1, "x3": 2} and sol.objective == 3
    assert parse_solution("").values == {}
    assert parse_solution("# comment\nx2 1.0  # tail\nx4 0\n").values == {"x2": 1}
    for bad in ["x0 1.5", "x0", "y1 1", "x0 1\nx0 1", "x0 abc", "x9 1", "x0 3"]:
        with pytest.raises(ParseError):
            parse_solution(bad, model)


def test_solution_round_trip(F2):
    model = IlpModel(F2, 4, 1, 2, 1, m=1)
    opt, sol = solve_tiny(model)
    back = parse_solution(emit_solution(sol), model)
    assert back == sol
    ms = solution_to_multiset(back, F2, 4, 1)
    assert ms.n == opt and verify(ms, 2, "blocking", 1).ok
    with pytest.raises(DomainError):
        solution_to_multiset(type(sol)({"x0": -1}), F2, 4, 1)
