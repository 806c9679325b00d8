"""Command-line front end: ``twocubes <subcommand> ...``.

Exit status is 0 on success, 1 when a check or computation fails, and 2 for
bad flags or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as cat
from . import count, curve, orbits, selftest
from .forms import format_form

MAX_ORBIT_STEPS = 6


class UsageError(Exception):
    pass


class Failure(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _write(obj, out):
    """Write JSON to a file, or to stdout when out is None."""
    text = _dump(obj) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _read_solution(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    if isinstance(obj, dict) and "solution" in obj:
        obj = obj["solution"]
    try:
        return curve.solution_from_json(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{path} is not a solution record: {exc}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _coord_text(c) -> str:
    return f"({c.m},{c.n},{c.t})"


def _emit_solution(args, s):
    """Solution output: the record to --out or stdout, a summary line otherwise."""
    rec = curve.solution_to_json(s)
    if args.out is not None:
        _write(rec, args.out)
        _summary(args, s)
    else:
        _write(rec, None)


def _summary(args, s, coords=None):
    degree = s.degree
    if args.format == "json":
        obj = {"degree": degree}
        if coords is not None:
            obj.update(m=coords.m, n=coords.n, t=coords.t)
        print(_dump(obj))
    elif degree is None:
        print(f"infinity j={s.j}")
    else:
        print(f"degree={degree}")


def cmd_generate(args):
    c = cat.CanonCoord(args.m, args.n, args.t)
    s = cat.generate(c)
    rec = {"m": c.m, "n": c.n, "t": c.t, "degree": s.degree, "solution": curve.solution_to_json(s)}
    if args.out is None:
        _write(rec, None)
    else:
        _write(rec, args.out)
        _summary(args, s, c)
    return 0


def cmd_verify(args):
    s = _read_solution(args.path)
    problem = curve.diagnose(s)
    if problem is not None:
        if args.format == "json":
            print(_dump({"ok": False, "diagnosis": problem}))
        else:
            print(f"FAIL {problem}")
        return 1
    c = cat.recognize(s)
    if args.format == "json":
        print(_dump({"ok": True, "degree": s.degree, "m": c.m, "n": c.n, "t": c.t}))
    else:
        print(f"OK degree={s.degree} (m,n,t)={_coord_text(c)}")
    return 0


def cmd_add(args):
    _emit_solution(args, curve.add(_read_solution(args.path1), _read_solution(args.path2)))
    return 0


def cmd_neg(args):
    _emit_solution(args, curve.neg(_read_solution(args.path)))
    return 0


def cmd_compose(args):
    try:
        s = cat.compose(_read_solution(args.path1), _read_solution(args.path2))
    except cat.UndefinedComposition as exc:
        raise Failure(str(exc)) from exc
    _emit_solution(args, s)
    return 0


def cmd_recognize(args):
    s = _read_solution(args.path)
    if not curve.verify(s):
        raise Failure(f"not a solution: {curve.diagnose(s)}")
    c = cat.recognize(s)
    if args.format == "json":
        print(_dump({"m": c.m, "n": c.n, "t": c.t}))
    else:
        print(_coord_text(c))
    return 0


def cmd_extract(args):
    s = _read_solution(args.path)
    try:
        st = cat.extract_structure(s)
    except (cat.ShapeViolation, curve.NotApplicable) as exc:
        raise Failure(str(exc)) from exc
    if args.format == "json":
        obj = {k: getattr(st, k).to_json() for k in ("P", "Q", "R")}
        obj.update(shape=st.shape, swapped=st.swapped)
        print(_dump(obj))
    else:
        print(f"shape={st.shape}" + (" swapped" if st.swapped else ""))
        for k in ("P", "Q", "R"):
            print(f"{k} = {format_form(getattr(st, k))}")
    return 0


def cmd_catalog(args):
    if args.dmax < 1 or args.jobs < 1:
        raise UsageError("--dmax and --jobs must be positive")
    records = cat.build_catalog(args.dmax, args.jobs)
    _write(records, args.out)
    if args.out is not None:
        if args.format == "json":
            print(_dump({"records": len(records)}))
        else:
            print(f"records={len(records)}")
    return 0


def cmd_count(args):
    if args.dmax < 1:
        raise UsageError("--dmax must be positive")
    reports = count.count_table(args.dmax, args.catalog)
    if args.format == "json":
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            row = f"{r.d}\t{r.f_formula}"
            if r.f_catalog is not None:
                row += f"\t{r.f_catalog}"
            print(row)
    if not all(r.agrees for r in reports):
        return 1
    return 0


def _point_json(pt):
    if isinstance(pt, orbits.InfinityQ):
        return {"kind": "infinity"}
    return {
        "X": {"num": str(pt.X.numerator), "den": str(pt.X.denominator)},
        "Y": {"num": str(pt.Y.numerator), "den": str(pt.Y.denominator)},
    }


def _print_points(args, points):
    if args.format == "json":
        print(_dump([_point_json(p) for p in points]))
    else:
        for p in points:
            print(p)


def cmd_orbit(args):
    if args.steps < 0:
        raise UsageError("--steps must be non-negative")
    if args.steps > MAX_ORBIT_STEPS and not args.no_cap:
        raise UsageError(f"--steps above {MAX_ORBIT_STEPS} needs --no-cap (heights grow doubly exponentially)")
    try:
        ctx = orbits.OrbitContext(args.A)
        start = ctx.check(orbits.Affine(args.x0, args.y0))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        points = orbits.orbit(ctx, start, args.steps)
    except orbits.VieteUndefined as exc:
        raise Failure(f"viete-undefined: {exc}") from exc
    _print_points(args, points)
    return 0


def cmd_specialize(args):
    s = _read_solution(args.path)
    try:
        pt = orbits.specialize(s, args.x0, args.y0)
    except orbits.SpecializationPole as exc:
        raise Failure(f"specialization-pole: {exc}") from exc
    except orbits.NonRationalSpecialization as exc:
        raise Failure(f"non-rational-specialization: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _print_points(args, [pt])
    return 0


def cmd_selftest(args):
    lines = []
    ok, first = selftest.run(lines.append)
    if args.format == "json":
        print(_dump({"ok": ok, "checks": len(lines), "first_failure": first or None}))
    else:
        print("\n".join(lines))
    if not ok:
        print(f"selftest failed: {first}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="twocubes", description="Form solutions of p^3 + q^3 = (x^3 + y^3) r^3.")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("generate", cmd_generate, "solution with canonical coordinates (m, n, t)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", type=int, default=0, choices=(0, 1, 2))
    p.add_argument("--out")

    p = add("verify", cmd_verify, "check a solution file")
    p.add_argument("path")

    for name, fn, help_ in (("add", cmd_add, "group sum"), ("compose", cmd_compose, "substitute the second into the first")):
        p = add(name, fn, help_)
        p.add_argument("path1")
        p.add_argument("path2")
        p.add_argument("--out")

    p = add("neg", cmd_neg, "group inverse")
    p.add_argument("path")
    p.add_argument("--out")

    p = add("recognize", cmd_recognize, "canonical coordinates of a solution")
    p.add_argument("path")

    p = add("extract", cmd_extract, "P, Q, R in x^3, y^3")
    p.add_argument("path")

    p = add("catalog", cmd_catalog, "every finite solution up to a degree")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)

    p = add("count", cmd_count, "table of f(d)")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--catalog", help="catalog file to cross-check class counts")

    p = add("orbit", cmd_orbit, "Viete iteration on X^3 + Y^3 = A")
    p.add_argument("--A", type=_rational, required=True)
    p.add_argument("--x0", type=_rational, required=True)
    p.add_argument("--y0", type=_rational, required=True)
    p.add_argument("--steps", type=int, default=MAX_ORBIT_STEPS)
    p.add_argument("--no-cap", action="store_true", help=f"allow more than {MAX_ORBIT_STEPS} steps")

    p = add("specialize", cmd_specialize, "evaluate a solution at a rational point")
    p.add_argument("path")
    p.add_argument("--x0", type=_rational, required=True)
    p.add_argument("--y0", type=_rational, required=True)

    add("selftest", cmd_selftest, "reproduce the classical examples")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
