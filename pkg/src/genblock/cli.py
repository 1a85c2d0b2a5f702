"""``gb``: command-line access to enumeration, builders, verification, bounds, ILP models and codes.

Exit codes: 0 success, 1 verification failed (or infeasible), 2 usage or
input error, 3 capability limit.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds, codes, constructions, ilp, tables
from .errors import (
    CapabilityError,
    GeometryError,
    IncompleteSearchError,
    InfeasibleError,
)
from .flags import classify_flag
from .geometry import gbin
from .gf import field_of_order
from .systems import SpaceMultiset, emit_certificate, read_certificate, verify

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _write(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_enum(a):
    F = field_of_order(a.q)
    if a.count:
        print(gbin(a.r, a.h, a.q))
        return EXIT_OK
    ms = SpaceMultiset.all_spaces(F, a.r, a.h)
    _write(emit_certificate(ms, f"all {ms.n} subspaces of dimension {a.h} in GF({a.q})^{a.r}"), a.output)
    return EXIT_OK


def cmd_construct(a):
    kw = {k: v for k, v in dict(r=a.r, h=a.h, f=a.f, s=a.s, l=a.l, sigma=a.sigma, delta=a.delta).items() if v is not None}
    if a.name == "all-lines" and a.max_mult:
        kw["m"] = a.max_mult
    if a.name == "solomon-stiffler" and a.epsilon:
        kw["epsilon"] = {int(k): int(v) for k, v in (p.split(":") for p in a.epsilon.split(","))}
    if a.name == "flag-orbit" and a.s is None:
        print("flag-orbit needs --s", file=sys.stderr)
        return EXIT_USAGE
    c = constructions.build(a.name, a.q, **kw)
    rep = c.verify()
    comment = f"{a.name} q={a.q}: claimed mode={c.mode} f={c.f} s={c.s}\n{rep.summary()}"
    _write(emit_certificate(c.multiset, comment), a.output)
    if a.output:
        print(rep.summary())
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_verify(a):
    ms = read_certificate(a.certificate)
    rep = verify(ms, a.f, a.mode, a.s, mu=a.mu)
    ok = rep.ok
    print(rep.summary())
    if a.max_mult is not None and rep.max_multiplicity > a.max_mult:
        print(f"max multiplicity {rep.max_multiplicity} exceeds {a.max_mult}")
        ok = False
    if a.n is not None and rep.n != a.n:
        print(f"cardinality {rep.n} differs from expected {a.n}")
        ok = False
    if not ok:
        worst = rep.argmin if a.mode == "blocking" else rep.argmax
        print(f"witness: {worst.digits}")
    return EXIT_OK if ok else EXIT_FAILED


def _need(a, *names):
    missing = [n for n in names if getattr(a, n) is None]
    if missing:
        raise _Usage("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


class _Usage(Exception):
    pass


def cmd_bound(a):
    name = a.name
    if name == "counting":
        _need(a, "q", "r", "h", "f", "s")
        rep = bounds.counting_bound(a.q, a.r, a.h, a.f, a.s, a.direction or "lower")
    elif name == "double-count":
        _need(a, "q", "r", "f", "s")
        rep = bounds.double_count_bound(a.q, a.r, a.f, a.s, a.mult or 0, a.direction or "lower")
    elif name == "line-system-pg":
        _need(a, "q", "n", "s")
        rep = bounds.line_system_bound_pg(a.q, a.n, a.s, a.mult or 0)
    elif name == "anticode":
        _need(a, "q", "v", "k", "delta")
        rep = bounds.anticode_bound(a.q, a.v, a.k, a.delta)
    elif name == "griesmer":
        _need(a, "q", "k", "d")
        print(f"griesmer(q={a.q} k={a.k} d={a.d}) = {bounds.griesmer(a.q, a.k, a.d)}")
        return EXIT_OK
    elif name == "griesmer-decompose":
        _need(a, "q", "k", "d")
        sigma, eps, n = bounds.griesmer_decompose(a.q, a.k, a.d)
        print(f"sigma={sigma} eps={','.join(map(str, eps))} n={n}")
        return EXIT_OK
    elif name == "additive-griesmer":
        _need(a, "q", "h", "r", "d")
        print(f"additive_griesmer(q={a.q} h={a.h} r={a.r} d={a.d}) = {bounds.additive_griesmer(a.q, a.h, a.r, a.d)}")
        return EXIT_OK
    elif name == "ghw-griesmer":
        _need(a, "q", "k", "f", "d")
        print(f"ghw_griesmer(q={a.q} k={a.k} f={a.f} d_f={a.d}) = {bounds.ghw_griesmer(a.q, a.k, a.f, a.d)}")
        return EXIT_OK
    elif name == "duality":
        _need(a, "q", "b")
        print(f"n = {bounds.duality_transfer(a.q, a.max_mult or 1, a.b)}")
        return EXIT_OK
    else:
        raise _Usage(f"unknown bound {name!r}")
    print(rep.summary())
    if a.verbose:
        for k, v in rep.trace.items():
            print(f"  {k} = {v}")
    return EXIT_OK


def cmd_table(a):
    if a.kind == "b":
        rows = tables.b_rows(a.q, a.max_s, check=a.check)
        print("s\tb\tlower bound\tupper bound")
    else:
        rows = tables.n_rows(a.q, check=a.check)
        print("s\tn\tlower bound\tupper bound")
    failed = False
    for r in rows:
        line = f"{r.s}\t{r.value_text()}\t{r.lower_source}\t{r.upper_source}"
        if r.verified is not None:
            line += "\tverified" if r.verified else "\tFAILED"
            failed |= not r.verified
        print(line)
    return EXIT_FAILED if failed else EXIT_OK


def _fixings(a, F):
    if not a.fix:
        return {}
    ms = read_certificate(a.fix)
    if ms.F.q != F.q or ms.r != a.r or ms.h != a.h:
        raise _Usage("fix certificate does not match --q/--r/--h")
    return {i: a.fix_value for i in ms.entries}


def cmd_ilp_emit(a):
    F = field_of_order(a.q)
    model, text = ilp.emit_model(
        F, a.r, a.h, a.f, a.s, a.problem, a.max_mult, _fixings(a, F), a.cardinality
    )
    _write(text, a.output)
    if a.output:
        print(f"{model.n_vars} variables, {model.n_constraints} constraints")
    return EXIT_OK


def cmd_ilp_solve(a):
    F = field_of_order(a.q)
    model, _ = ilp.emit_model(F, a.r, a.h, a.f, a.s, a.problem, a.max_mult, _fixings(a, F), a.cardinality)
    opt, sol = ilp.solve_tiny(model, node_limit=a.node_limit)
    print(f"optimum {opt}")
    _write(ilp.emit_solution(sol), a.output)
    return EXIT_OK


def cmd_ilp_check(a):
    F = field_of_order(a.q)
    model, _ = ilp.emit_model(F, a.r, a.h, a.f, a.s, a.problem, a.max_mult)
    with open(a.solution, encoding="utf-8") as fh:
        sol = ilp.parse_solution(fh.read(), model)
    ms = ilp.solution_to_multiset(sol, F, a.r, a.h)
    mode = "blocking" if a.problem == "b" else "system"
    rep = verify(ms, a.f, mode, a.s)
    print(f"objective {sol.objective}")
    print(rep.summary())
    if a.output:
        _write(emit_certificate(ms, rep.summary()), a.output)
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_code(a):
    ms = read_certificate(a.certificate)
    code = codes.expand(ms)
    if a.what == "mindist":
        print(f"n={code.n} d={codes.min_distance(code)}")
        return EXIT_OK
    fs = [a.f] if a.f is not None else range(1, ms.r + 1)
    ok = True
    for f in fs:
        if a.check_identity:
            chk = codes.check_ghw_identity(ms, f)
            print(f"d_{f}={chk.ghw} n-max_count={chk.geometric} {'OK' if chk.holds else 'MISMATCH'}")
            ok &= chk.holds
        else:
            print(f"d_{f}={codes.ghw(code, f)}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_flag_classes(a):
    F = field_of_order(a.q)
    cl = classify_flag(F)
    print("line classes (signature: size)")
    for i, (sig, size) in enumerate(zip(cl.line_signatures, cl.line_class_sizes), 1):
        print(f"  {i}\t{sig}\t{size}")
    print("plane classes (signature: size)")
    for j, (sig, size) in enumerate(zip(cl.plane_signatures, cl.plane_class_sizes), 1):
        print(f"  {j}\t{sig}\t{size}")
    print("beta[plane class, line class]")
    for j, row in enumerate(cl.beta, 1):
        print(f"  {j}\t" + " ".join(f"{v:3d}" for v in row))
    for kind, i, got, tab in cl.discrepancies():
        print(f"discrepancy: {kind} class {i} has {got} members, tabulated {tab}")
    if a.s is not None:
        res = constructions.flag_orbit_search(F, a.s)
        print(f"flag search s={a.s}: alpha={','.join(map(str, res.alpha))} cardinality={res.cardinality}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _geom(p, need=("q", "r", "h", "f", "s")):
    for name in ("q", "r", "h", "f", "s"):
        p.add_argument(f"--{name}", type=int, required=name in need)


def build_parser():
    p = argparse.ArgumentParser(prog="gb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enum", help="list all subspaces of a given dimension")
    _geom(e, ("q", "r", "h"))
    e.add_argument("--count", action="store_true", help="print only the number")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_enum)

    c = sub.add_parser("construct", help="build a named multiset and print its certificate")
    c.add_argument("name", choices=constructions.CONSTRUCTION_NAMES)
    _geom(c, ("q",))
    c.add_argument("--l", type=int)
    c.add_argument("--sigma", type=int)
    c.add_argument("--epsilon", help="comma list i:eps, e.g. 4:1")
    c.add_argument("--delta", type=int)
    c.add_argument("--max-mult", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a certificate")
    v.add_argument("certificate")
    v.add_argument("--mode", choices=("blocking", "system"), required=True)
    v.add_argument("--f", type=int, required=True)
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--max-mult", type=int)
    v.add_argument("--n", type=int, help="expected cardinality")
    v.add_argument("--mu", action="store_true", help="also report the point multiplicity")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="evaluate a closed-form bound")
    b.add_argument(
        "name",
        choices=(
            "counting",
            "double-count",
            "line-system-pg",
            "anticode",
            "griesmer",
            "griesmer-decompose",
            "additive-griesmer",
            "ghw-griesmer",
            "duality",
        ),
    )
    _geom(b, ())
    for name in ("mult", "n", "v", "k", "d", "delta", "b", "max-mult"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--direction", choices=("lower", "upper"))
    b.add_argument("--verbose", action="store_true")
    b.set_defaults(func=cmd_bound)

    t = sub.add_parser("table", help="known values with provenance (lines vs planes in PG(4,q))")
    t.add_argument("kind", choices=("b", "n"))
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--max-s", type=int)
    t.add_argument("--check", action="store_true", help="re-verify every multiset")
    t.set_defaults(func=cmd_table)

    i = sub.add_parser("ilp", help="integer programming models")
    isub = i.add_subparsers(dest="ilp_command", required=True)
    for name, func, help_ in (
        ("emit", cmd_ilp_emit, "write the model in LP format"),
        ("solve", cmd_ilp_solve, "solve a tiny model by branch and bound"),
        ("check", cmd_ilp_check, "verify a solver's solution file"),
    ):
        ip = isub.add_parser(name, help=help_)
        _geom(ip)
        ip.add_argument("--problem", choices=("b", "n"), default="b")
        ip.add_argument("--max-mult", type=int)
        ip.add_argument("-o", "--output")
        if name == "check":
            ip.add_argument("solution")
        else:
            ip.add_argument("--fix", help="certificate whose entries are fixed")
            ip.add_argument("--fix-value", type=int, default=0)
            ip.add_argument("--cardinality", type=int)
        if name == "solve":
            ip.add_argument("--node-limit", type=int, default=2_000_000)
        ip.set_defaults(func=func)

    cd = sub.add_parser("code", help="weights of the code of a certificate")
    cd.add_argument("what", choices=("ghw", "mindist"))
    cd.add_argument("certificate")
    cd.add_argument("--f", type=int)
    cd.add_argument("--check-identity", action="store_true")
    cd.set_defaults(func=cmd_code)

    fl = sub.add_parser("flag-classes", help="line and plane classes w.r.t. a maximal flag")
    fl.add_argument("--q", type=int, required=True)
    fl.add_argument("--s", type=int, help="also run the class-union search for this s")
    fl.set_defaults(func=cmd_flag_classes)
    return p


def run(argv=None):
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return a.func(a)
    except _Usage as exc:
        print(f"gb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapabilityError, IncompleteSearchError) as exc:
        print(f"gb: capability limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InfeasibleError as exc:
        print(f"gb: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (GeometryError, ValueError, OSError) as exc:
        print(f"gb: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
