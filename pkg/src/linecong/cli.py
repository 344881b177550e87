"""Command line entry point.

Exit codes: 0 success (all symbolic checks pass), 1 a symbolic check
failed, 2 usage or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra.ring import DEFAULT_CHARACTERISTIC, GenericityError, ResourceError, UsageError
from .textio import format_ideal, format_polynomial, read_ideal


def _read(path: str, char: int):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return read_ideal(text, char)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------ verify
def cmd_verify(args) -> int:
    from .report import run_certificates, write_report

    only = [s for s in args.only.split(",") if s] if args.only else None

    def progress(c):
        line = f"{c.status.upper():8s} {c.id} ({c.runtime_ms} ms)"
        if c.diagnostics and c.status == "fail":
            line += f"  {c.diagnostics}"
        print(line, flush=True)

    report = run_certificates(only, args.seed, args.char, progress=None if args.quiet else progress)
    j, m = write_report(report, args.out, timings=args.timings)
    if not args.quiet:
        print(f"wrote {j} and {m}")
    return report.exit_code()


# ------------------------------------------------------------------- ideal
def cmd_ideal(args) -> int:
    I = _read(args.input, args.char)
    if args.action == "show":
        _emit(format_ideal(I), args.out)
    elif args.action == "gb":
        _emit(format_ideal(I.with_gens(I.gb()), "reduced Gröbner basis (grevlex)"), args.out)
    else:
        hp = I.hilbert_polynomial()
        data = {"ring": list(I.ring.variables), "characteristic": I.ring.p,
                "generators": len(I.gens), "gb_size": len(I.gb()),
                "dimension": I.dimension(), "degree": I.degree(), "hilbert_polynomial": str(hp)}
        _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", args.out)
    return 0


# -------------------------------------------------------------- congruence
def _coefficients(args):
    from .congruence import MongeAmpereCoefficients

    if args.coefficients:
        return MongeAmpereCoefficients.from_list(args.coefficients.split(","))
    return None


def cmd_congruence(args) -> int:
    from .congruence import build_congruence, multidegree

    if args.action == "build":
        spec = build_congruence(args.case, _coefficients(args), seed=args.seed, characteristic=args.char)
        header = f"congruence {spec.case}\n" + "\n".join(spec.provenance)
        if spec.chart_equation is not None:
            header += f"\nchart equation: {format_polynomial(spec.chart_equation)}"
        _emit(format_ideal(spec.plucker_ideal, header), args.out)
    else:
        I = _read(args.input, args.char)
        md = multidegree(I, args.seed).as_tuple()
        _emit(json.dumps({"multidegree": list(md)}) + "\n", args.out)
    return 0


# ------------------------------------------------------------------- focal
def _chart_for_case(case: str, seed: int, char: int):
    from .congruence import (MongeAmpereCoefficients, affine_chart_ring, chart_pullback,
                             ex2_matrix_hyperplane, monge_ampere_equation)
    from .grassmann import fixture_ideal

    if case == "ex1":
        return chart_pullback(fixture_ideal("ex1_H", char).gens[0])
    if case == "ex2":
        return chart_pullback(ex2_matrix_hyperplane(char))
    if case == "monge_ampere":
        return monge_ampere_equation(MongeAmpereCoefficients.random(seed, char), affine_chart_ring(char))
    raise UsageError(f"unknown focal case {case!r}; choose ex1, ex2 or monge_ampere")


def cmd_focal(args) -> int:
    from .focal import IncidenceChart, focal_invariants, focal_locus, normality_certificate

    if args.action == "compute":
        h = _chart_for_case(args.case, args.seed, args.char)
        F = focal_locus(IncidenceChart.from_equation(h))
        if F.degenerate:
            print("degenerate chart: the focal scheme has no visible threefold", file=sys.stderr)
        _emit(format_ideal(F.ideal, f"focal locus of {args.case}\nchart equation: {format_polynomial(h)}"),
              args.out)
        return 0
    I = _read(args.input, args.char)
    if args.action == "invariants":
        r = focal_invariants(I, args.seed)
        data = {"hilbert_polynomial": r.hilbert_polynomial, "degree": r.degree,
                "sectional_genus": r.sectional_genus, "twisted_cubic_match": r.twisted_cubic_match,
                "betti": r.betti.to_json(), "lcm_certificate": r.lcm_certificate}
    else:
        c = normality_certificate(I, args.seed)
        data = {"dim_IX": {str(k): v for k, v in c.dim_IX.items()},
                "dim_IS": {str(k): v for k, v in c.dim_IS.items()},
                "h1_at_2": c.h1_at_2, "verdict": c.verdict}
    _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", args.out)
    return 0


# ------------------------------------------------------------------ parser
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=DEFAULT_CHARACTERISTIC, help="field characteristic")
    common.add_argument("--seed", type=int, default=1, help="master seed")

    parser = argparse.ArgumentParser(prog="linecong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the certificate suite")
    vsub = verify.add_subparsers(dest="target", required=True)
    vp = vsub.add_parser("paper", parents=[common], help="all published claims")
    vp.add_argument("--only", help="comma separated check ids")
    vp.add_argument("--out", default="report", help="output directory for report.json and report.md")
    vp.add_argument("--timings", action="store_true", help="record runtimes in report.json (not byte-stable)")
    vp.add_argument("--quiet", action="store_true")
    vp.set_defaults(func=cmd_verify)

    ideal = sub.add_parser("ideal", help="inspect an ideal file")
    ideal.add_argument("action", choices=["show", "gb", "invariants"])
    ideal.add_argument("--in", dest="input", required=True)
    ideal.add_argument("--out")
    ideal.add_argument("--char", type=int, default=DEFAULT_CHARACTERISTIC)
    ideal.set_defaults(func=cmd_ideal)

    cong = sub.add_parser("congruence", parents=[common], help="build congruences, multidegrees")
    cong.add_argument("action", choices=["build", "multidegree"])
    cong.add_argument("--case", default="ex1",
                      choices=["ex1", "ex2_residual", "ex3_residual", "quadratic", "monge_ampere"])
    cong.add_argument("--coefficients", help="d,a1..a6,b1..b5,c for the quadratic families")
    cong.add_argument("--in", dest="input")
    cong.add_argument("--out")
    cong.set_defaults(func=cmd_congruence)

    focal = sub.add_parser("focal", parents=[common], help="focal loci and their invariants")
    focal.add_argument("action", choices=["compute", "invariants", "normality"])
    focal.add_argument("--case", default="ex1", choices=["ex1", "ex2", "monge_ampere"])
    focal.add_argument("--in", dest="input")
    focal.add_argument("--out")
    focal.set_defaults(func=cmd_focal)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    needs_input = (args.command == "congruence" and args.action == "multidegree") or (
        args.command == "focal" and args.action != "compute")
    if needs_input and not args.input:
        print("error: --in FILE is required for this action", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ResourceError, GenericityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
