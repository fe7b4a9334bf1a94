"""Command-line front end.

    lgsegre orbit info --n 2
    lgsegre orbit sample --n 2 --samples 3 --seed 1
    lgsegre critical --n 1 --h 1,-1
    lgsegre verify ratmap --n 2 --h 3,-2,-1 --samples 100 --seed 7
    lgsegre verify all --n 2
    lgsegre groebner ideal.json --order grevlex

Output is canonical JSON on stdout.  Exit codes: 0 pass, 1 verification
failure, 2 usage or precondition error, 3 Groebner pair cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checks import CHECKS, _jsonable, emit_report, run_check
from .exact import det
from .liecore import FormSpec, weyl_orbit_points
from .lgfib import critical_points
from .orbit import OrbitSpec, adjoint_point, sample_sl, tensor_point
from .polyideal import DEFAULT_CAP, MonomialOrder, ResourceCapExceeded, load_ideal

__all__ = ["build_parser", "main", "run_command"]

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _common(p: argparse.ArgumentParser, samples: int = 20) -> None:
    p.add_argument("--n", type=int, default=1, help="rank: the orbit lives in sl(n+1)")
    p.add_argument("--h", default=None, help="diagonal of H as comma-separated rationals")
    p.add_argument("--samples", type=int, default=samples)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", choices=("trace", "killing"), default="trace")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="Buchberger pair-reduction limit")
    p.add_argument("--format", choices=("json",), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lgsegre", description="LG models on the minimal orbit of sl(n+1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    orbit = sub.add_parser("orbit", help="describe or sample the orbit")
    orbit.add_argument("action", choices=("info", "sample"))
    _common(orbit, samples=3)

    crit = sub.add_parser("critical", help="critical points, values and Hessians of f_H")
    _common(crit)

    verify = sub.add_parser("verify", help="run a seeded verification check")
    verify.add_argument("check", choices=sorted(CHECKS) + ["all"])
    _common(verify)

    gb = sub.add_parser("groebner", help="reduced Groebner basis of an ideal file")
    gb.add_argument("file", help='JSON {"variables": [...], "generators": [...]}')
    gb.add_argument("--order", choices=("grevlex", "grlex", "lex"), default="grevlex")
    gb.add_argument("--cap", type=int, default=DEFAULT_CAP)
    gb.add_argument("--format", choices=("json",), default="json")
    return parser


def _dump(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2)


def _form(args) -> FormSpec:
    return FormSpec.killing(args.n) if args.scale == "killing" else FormSpec.trace()


def _orbit(args) -> tuple[int, str]:
    spec = OrbitSpec(args.n, args.h)
    if args.action == "info":
        return EXIT_PASS, _dump({
            "n": spec.n,
            "H0": list(spec.H0.diagonal()),
            "H": list(spec.lambdas),
            "regular": spec.is_regular,
            "complex_dimension": 2 * spec.n,
            "critical_point_count": len(weyl_orbit_points(spec.H0)),
        })
    out = []
    for i in range(args.samples):
        g = sample_sl(spec.n, (args.seed, i))
        tp = tensor_point(g)
        out.append({"index": i, "g": g, "A": adjoint_point(g, spec), "v": list(tp.v), "eps": list(tp.eps)})
    return EXIT_PASS, _dump({"n": spec.n, "seed": args.seed, "samples": out})


def _critical(args) -> tuple[int, str]:
    spec = OrbitSpec(args.n, args.h)
    data = critical_points(spec, _form(args))
    points = [{
        "j": d.j,
        "point": d.point,
        "f_value": d.f_value,
        "r_value": d.r_value,
        "hessian": d.hessian,
        "hessian_det": det(d.hessian),
        "nondegenerate": d.nondegenerate,
    } for d in data]
    return EXIT_PASS, _dump({
        "n": spec.n,
        "H": list(spec.lambdas),
        "scale": args.scale,
        "f_values": [d.f_value for d in data],
        "critical_points": points,
    })


def _verify(args) -> tuple[int, str]:
    if args.samples < 1:
        raise ValueError("--samples must be positive")
    kw = {"form": _form(args), "cap": args.cap}
    if args.h is not None:
        kw["H"] = args.h
    report = run_check(args.check, args.n, args.seed, args.samples, **kw)
    return (EXIT_PASS if report.passed else EXIT_FAIL), emit_report(report)


def _groebner(args) -> tuple[int, str]:
    ideal = load_ideal(Path(args.file).read_text())
    order = MonomialOrder(args.order, ideal.gens)
    basis = ideal.groebner(order, args.cap)
    return EXIT_PASS, _dump({
        "variables": list(ideal.gens),
        "order": args.order,
        "basis": [g.to_str(order) for g in basis],
    })


_HANDLERS = {"orbit": _orbit, "critical": _critical, "verify": _verify, "groebner": _groebner}


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run one invocation; returns (exit code, stdout text)."""
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 1) < 1:
            raise ValueError("--n must be at least 1")
        return _HANDLERS[args.command](args)
    except ResourceCapExceeded as exc:
        return EXIT_CAP, _dump({"error": "resource-cap", "message": str(exc)})
    except (_UsageError, ValueError, KeyError, OSError) as exc:
        return EXIT_USAGE, _dump({"error": "usage", "message": str(exc)})


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        # argparse prints help itself; keep its exit status
        build_parser().parse_args(argv)
    code, text = run_command(argv)
    print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
