"""Command-line front end.

Subcommands map one to one onto library operations; results are JSON on
stdout (or CSV with --format csv), diagnostics go to stderr.  Exit
codes: 0 success, 1 domain errors (reported as structured JSON with an
"error" field), 2 usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import DomainError
from .polar import (
    PolarProblem,
    grace_factorize,
    s_poly,
    solve_polar,
    solve_polar_shifted,
)
from .polynomial import (
    Polynomial,
    poly_from_pairs,
    poly_from_roots,
    poly_to_pairs,
    taylor_shift,
)
from .regions import Region, enclosing_disk, localization_check, polar_zero_bound
from .roots import find_roots, max_modulus
from .svgplot import render_scene
from .verify import SuiteConfig, reproduce_paper_examples, run_property_suite


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi``, ``a-bi``, ``bi`` or ``i`` (no whitespace)."""
    s = text.strip()
    try:
        return complex(float(s), 0.0)
    except ValueError:
        pass
    if not s.endswith("i"):
        raise ValueError(f"cannot parse complex number {text!r}")
    body = s[:-1]
    split = -1
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "eE":
            split = pos
            break
    if split == -1:
        real_part, imag_part = "", body
    else:
        real_part, imag_part = body[:split], body[split:]
    try:
        real = float(real_part) if real_part else 0.0
        if imag_part in ("", "+"):
            imag = 1.0
        elif imag_part == "-":
            imag = -1.0
        else:
            imag = float(imag_part)
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}") from None
    return complex(real, imag)


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _poly_arg(text: str) -> Polynomial:
    try:
        return poly_from_pairs(json.loads(text))
    except (json.JSONDecodeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial JSON: {exc}") from None


def _roots_arg(text: str) -> Polynomial:
    try:
        data = json.loads(text)
        if not isinstance(data, list) or not data:
            raise ValueError("root list must be a non-empty array")
        roots = []
        for item in data:
            if (
                not isinstance(item, (list, tuple))
                or len(item) != 2
                or not all(isinstance(v, (int, float)) for v in item)
            ):
                raise ValueError("each root must be a [re, im] pair")
            roots.append(complex(item[0], item[1]))
        return poly_from_roots(roots)
    except (json.JSONDecodeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad root list JSON: {exc}") from None


def _region_arg(text: str) -> Region:
    try:
        return Region.from_dict(json.loads(text))
    except (json.JSONDecodeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad region JSON: {exc}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _pairs(values) -> list[list[float]]:
    return [[v.real, v.imag] for v in values]


def _require_poly(args, parser: argparse.ArgumentParser) -> Polynomial:
    given = [p for p in (args.P, args.P_roots) if p is not None]
    if len(given) != 1:
        parser.error("exactly one of --P or --P-roots is required")
    return given[0]


def _add_poly_flags(sub: argparse.ArgumentParser):
    sub.add_argument(
        "--P", type=_poly_arg, metavar="JSON",
        help="coefficients as [[re,im],...] in ascending powers",
    )
    sub.add_argument(
        "--P-roots", dest="P_roots", type=_roots_arg, metavar="JSON",
        help="zeros as [[re,im],...]; expanded to a monic polynomial",
    )


def _add_output_flags(sub: argparse.ArgumentParser, svg: bool = False):
    sub.add_argument(
        "--format", choices=("json", "csv"), default="json",
        help="output format (default json)",
    )
    if svg:
        sub.add_argument(
            "--svg", metavar="PATH", help="write an SVG zero plot to PATH"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarpoly",
        description=(
            "Construct polar polynomials, compute their zeros and "
            "certify zero-localization statements."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    solve = subs.add_parser(
        "solve", help="solve d^k/dz^k(R*Q) = (n+1)_k P for the monic Q"
    )
    _add_poly_flags(solve)
    solve.add_argument("--xi", type=_complex_arg, metavar="A+BI")
    solve.add_argument("--k", type=_positive_int)
    solve.add_argument(
        "--R", type=_poly_arg, metavar="JSON",
        help="general monic R (conflicts with --xi/--k)",
    )
    _add_output_flags(solve)
    solve.set_defaults(func=_cmd_solve)

    spoly = subs.add_parser(
        "spoly", help="the binomial coefficient polynomial S(w)"
    )
    spoly.add_argument("--n", type=_positive_int, required=True)
    spoly.add_argument("--k", type=_positive_int, required=True)
    _add_output_flags(spoly)
    spoly.set_defaults(func=_cmd_spoly)

    roots = subs.add_parser("roots", help="all zeros of a polynomial")
    _add_poly_flags(roots)
    roots.add_argument("--tol", type=float, default=1e-12)
    _add_output_flags(roots, svg=True)
    roots.set_defaults(func=_cmd_roots)

    localize = subs.add_parser(
        "localize",
        help="solve, find zeros and certify Z(Q) within xi - K*Z(S)",
    )
    _add_poly_flags(localize)
    localize.add_argument("--xi", type=_complex_arg, required=True)
    localize.add_argument("--k", type=_positive_int, required=True)
    localize.add_argument(
        "--K", type=_region_arg, metavar="JSON",
        help="region JSON; default is the minimum enclosing disk of "
        "the shifted zeros of P",
    )
    localize.add_argument("--tol", type=float, default=1e-6)
    _add_output_flags(localize, svg=True)
    localize.set_defaults(func=_cmd_localize)

    bound = subs.add_parser(
        "bound", help="the crude disk radius |xi| + (|xi|+1)(k+1)"
    )
    bound.add_argument("--xi", type=_complex_arg, required=True)
    bound.add_argument("--k", type=_positive_int, required=True)
    _add_output_flags(bound)
    bound.set_defaults(func=_cmd_bound)

    factorize = subs.add_parser(
        "factorize", help="extract the convolution factor S_R from (P, Q)"
    )
    factorize.add_argument("--P", type=_poly_arg, required=True)
    factorize.add_argument("--Q", type=_poly_arg, required=True)
    factorize.add_argument("--xi", type=_complex_arg, required=True)
    _add_output_flags(factorize)
    factorize.set_defaults(func=_cmd_factorize)

    verify = subs.add_parser(
        "verify", help="run the randomized property suite"
    )
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--cases", type=_positive_int, default=500)
    _add_output_flags(verify)
    verify.set_defaults(func=_cmd_verify)

    golden = subs.add_parser(
        "paper-examples", help="run the built-in golden example suite"
    )
    _add_output_flags(golden)
    golden.set_defaults(func=_cmd_paper_examples)

    return parser


def _cmd_solve(args, parser):
    P = _require_poly(args, parser)
    if args.R is not None:
        if args.xi is not None or args.k is not None:
            parser.error("--R conflicts with --xi/--k")
        Q = solve_polar(PolarProblem(P, args.R))
        k, path = args.R.degree, "general"
    else:
        if args.xi is None or args.k is None:
            parser.error("solve needs either --R or both --xi and --k")
        Q = solve_polar_shifted(P, args.xi, args.k)
        k, path = args.k, "centered"
    payload = {"Q": poly_to_pairs(Q), "n": P.degree, "k": k, "path": path}
    rows = (
        ["index", "re", "im"],
        [[i, c.real, c.imag] for i, c in enumerate(Q.coeffs)],
    )
    return payload, rows, None, 0


def _cmd_spoly(args, parser):
    S = s_poly(args.n, args.k)
    payload = {"S": poly_to_pairs(S), "n": args.n, "k": args.k}
    rows = (
        ["index", "re", "im"],
        [[i, c.real, c.imag] for i, c in enumerate(S.coeffs)],
    )
    return payload, rows, None, 0


def _cmd_roots(args, parser):
    P = _require_poly(args, parser)
    rs = find_roots(P, tol=args.tol)
    payload = {
        "roots": _pairs(rs.roots),
        "max_residual": rs.max_residual,
        "converged": rs.converged,
    }
    rows = (
        ["index", "re", "im"],
        [[i, r.real, r.imag] for i, r in enumerate(rs.roots)],
    )
    scene = render_scene([("zero", rs.roots)])
    return payload, rows, scene, 0


def _cmd_localize(args, parser):
    P = _require_poly(args, parser)
    n, k, xi = P.degree, args.k, args.xi
    Q = solve_polar_shifted(P, xi, k)
    q_roots = find_roots(Q)
    S = s_poly(n, k)
    s_roots = find_roots(S)
    if args.K is not None:
        region = args.K
    else:
        shifted_zeros = find_roots(taylor_shift(P, xi)).roots
        region = enclosing_disk(shifted_zeros)
    report = localization_check(q_roots, xi, region, s_roots, tol=args.tol)
    payload = {
        "n": n,
        "k": k,
        "xi": [xi.real, xi.imag],
        "Q": poly_to_pairs(Q),
        "S": poly_to_pairs(S),
        "K": region.to_dict(),
        "Q_roots": _pairs(q_roots.roots),
        "S_roots": _pairs(s_roots.roots),
        "contained": report.contained,
        "max_violation": report.max_violation,
        "tol": report.tol,
        "witnesses": [w.to_dict() for w in report.witnesses],
        "bound_radius": polar_zero_bound(xi, k),
        "max_zero_modulus": max_modulus(q_roots),
    }
    rows = (
        [
            "zero_re", "zero_im", "beta_re", "beta_im",
            "quotient_re", "quotient_im", "margin",
        ],
        [
            [
                w.zero.real, w.zero.imag, w.beta.real, w.beta.imag,
                w.quotient.real, w.quotient.imag, w.margin,
            ]
            for w in report.witnesses
        ],
    )
    scene = render_scene(
        [("Q zero", q_roots.roots), ("S zero", s_roots.roots)], [region]
    )
    return payload, rows, scene, 0


def _cmd_bound(args, parser):
    radius = polar_zero_bound(args.xi, args.k)
    return {"radius": radius}, (["radius"], [[radius]]), None, 0


def _cmd_factorize(args, parser):
    fact = grace_factorize(args.P, args.Q, args.xi)
    payload = {
        "S_R": poly_to_pairs(fact.s_r),
        "c": [[g.real, g.imag] for g in fact.c.gamma],
        "exact_match_error": fact.exact_match_error,
    }
    rows = (
        ["index", "c_re", "c_im"],
        [[i, g.real, g.imag] for i, g in enumerate(fact.c.gamma)],
    )
    return payload, rows, None, 0


def _report_rows(report):
    header = ["property", "cases", "passes", "failures", "worst"]
    rows = [
        [p.name, p.cases, p.passes, p.failures, p.worst]
        for p in report.properties
    ]
    return header, rows


def _cmd_verify(args, parser):
    report = run_property_suite(SuiteConfig(seed=args.seed, cases=args.cases))
    code = 0 if report.all_passed else 1
    return report.to_dict(), _report_rows(report), None, code


def _cmd_paper_examples(args, parser):
    report = reproduce_paper_examples()
    code = 0 if report.all_passed else 1
    return report.to_dict(), _report_rows(report), None, code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, rows, scene, code = args.func(args, parser)
    except DomainError as exc:
        out = {"error": exc.code, "message": str(exc)}
        out.update(exc.details)
        print(json.dumps(out, sort_keys=True))
        return 1
    if getattr(args, "svg", None) and scene is not None:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(scene)
        print(f"wrote {args.svg}", file=sys.stderr)
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        header, body = rows
        writer.writerow(header)
        writer.writerows(body)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
