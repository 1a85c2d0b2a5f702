"""
Integer programs: emit, solve, check
====================================

Models are written as LP text for an external MILP solver.  Tiny ones are
solved in-process; any solution is turned back into a multiset and verified.
"""

import tempfile
from pathlib import Path

from genblock.gf import make_field
from genblock.ilp import emit_model, emit_solution, parse_solution, solution_to_multiset, solve_tiny
from genblock.systems import verify

F = make_field(2)

# points of PG(3,2) blocking every line: the answer is a plane
model, text = emit_model(F, 4, 1, 2, 1)
print(text.splitlines()[:4])
opt, sol = solve_tiny(model)
print("optimum", opt, sol.values)

back = parse_solution(emit_solution(sol), model)
ms = solution_to_multiset(back, F, 4, 1)
print(verify(ms, 2, "blocking", 1).summary())

# %%
# the line model in PG(4,2) is too large for the tiny solver; write it out instead
out = Path(tempfile.mkdtemp()) / "b_2_5_2_2_s2.lp"
model, text = emit_model(F, 5, 2, 2, 2)
out.write_text(text)
print(f"wrote {out}: {model.n_vars} variables, {model.n_constraints} rows, {len(text)} bytes")
