"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Sequence

from . import molien, render, schur
from .document import ClassDataParseError, OutputDocument, load_class_data
from .molien import ClassDataError, GammaSpec
from .partitions import Partition, parse_partition
from .series import TruncatedSeries, expand, factored_equal
from .verify import run_suite

log = logging.getLogger("invhilb")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _series_text(coeffs) -> str:
    return ", ".join(str(c) for c in coeffs)


def _parse_gamma(text: str) -> GammaSpec:
    try:
        return GammaSpec.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _parse_partition(text: str) -> Partition:
    try:
        lam = parse_partition(text, sort=False)
    except ValueError:
        try:
            lam = parse_partition(text, sort=True)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        log.warning("partition %s was not weakly decreasing; sorted to %s", text, lam)
    if lam.n == 0:
        raise InputError("partition must be nonempty")
    return lam


def cmd_hilbert(args) -> tuple[OutputDocument, list[str], int]:
    spec = _parse_gamma(args.gamma)
    if max(spec.ns) > molien.MAX_SERIES_N:
        raise InputError(f"component sizes must be <= {molien.MAX_SERIES_N}")
    order = args.order if args.order is not None else sum(n * (n - 1) for n in spec.ns) + 10
    routes = "abc" if args.route == "all" else args.route
    by_route = {r: molien.hilbert_gamma(spec, route=r, jobs=args.jobs) for r in routes}
    series = by_route[routes[0]]
    result = {"series": series, "expansion": expand(series, order)}
    status = None
    code = EXIT_OK
    lines = [f"H(t) = {series}", f"expansion to t^{order}: {_series_text(expand(series, order).coeffs)}"]
    if args.route == "all":
        equal = all(
            factored_equal(series, other) and series.numerator == other.numerator for other in by_route.values()
        )
        result["routes_equal"] = equal
        status = "pass" if equal else "fail"
        code = EXIT_OK if equal else EXIT_FAIL
        lines.append(f"routes a, b, c agree: {status}")
    if args.latex:
        result["latex"] = render.latex_hilbert(spec, series)
        lines.append(result["latex"])
    inputs = {"gamma": list(spec.ns), "order": order, "route": args.route}
    return OutputDocument("hilbert", inputs, result, status), lines, code


def cmd_schur(args) -> tuple[OutputDocument, list[str], int]:
    lam = _parse_partition(args.partition)
    order = args.order if args.order is not None else lam.n * (lam.n - 1) + 10
    closed = schur.schur_q(lam)
    expansion = expand(closed, order)
    result = {"series": closed, "expansion": expansion}
    lines = [f"{{{lam}:t}} = {closed}", f"expansion to t^{order}: {_series_text(expansion.coeffs)}"]
    if lam.n <= 8:
        agrees = schur.schur_q_via_characters(lam, order) == expansion
        result["character_route_agrees"] = agrees
        lines.append(f"character route agrees: {agrees}")
    if args.latex:
        result["latex"] = render.latex_schur(lam, closed)
        lines.append(result["latex"])
    inputs = {"partition": list(lam.parts), "order": order}
    return OutputDocument("schur", inputs, result), lines, EXIT_OK


def cmd_fmaj(args) -> tuple[OutputDocument, list[str], int]:
    if args.n < 1:
        raise InputError("n must be >= 1")
    f = molien.f_maj(args.n, jobs=args.jobs, allow_large=args.allow_large)
    coeffs = f.integer_coeffs()
    result = {"coefficients": coeffs, "value_at_1": sum(coeffs), "degree": f.degree}
    lines = [f"f_{args.n}(t) = {f}", f"f_{args.n}(1) = {sum(coeffs)}", f"degree = {f.degree}"]
    return OutputDocument("fmaj", {"n": args.n}, result), lines, EXIT_OK


def cmd_stats(args) -> tuple[OutputDocument, list[str], int]:
    st = molien.hironaka_stats(args.n, jobs=args.jobs)
    result = {
        "secondary_count": st.secondary_count,
        "max_secondary_degree": st.max_secondary_degree,
        "degree_histogram": list(st.degree_histogram),
    }
    lines = [
        f"secondary invariants: {st.secondary_count}",
        f"highest secondary degree: {st.max_secondary_degree}",
        f"count by degree: {_series_text(st.degree_histogram)}",
    ]
    return OutputDocument("stats", {"n": args.n}, result), lines, EXIT_OK


def cmd_verify(args) -> tuple[OutputDocument, list[str], int]:
    checks = run_suite(args.suite, args.n_max)
    ok = all(c.passed for c in checks)
    result = {"checks": [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in checks]}
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "") for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    inputs = {"suite": args.suite, "n_max": args.n_max}
    return OutputDocument("verify", inputs, result, "pass" if ok else "fail"), lines, EXIT_OK if ok else EXIT_FAIL


def cmd_general(args) -> tuple[OutputDocument, list[str], int]:
    try:
        data = load_class_data(args.class_data)
    except ClassDataParseError as exc:
        raise InputError(str(exc)) from None
    try:
        data.validate()
    except ClassDataError as exc:
        doc = OutputDocument("general", {"class_data": str(args.class_data)}, {"error": str(exc)}, "fail")
        return doc, [f"class data invalid: {exc}"], EXIT_FAIL
    order = args.order if args.order is not None else data.dim * (data.dim - 1) + 10
    per_char = [molien.schur_analogue_general(data, i, order) for i in range(len(data.characters))]
    total = TruncatedSeries([], order)
    for s in per_char:
        total = total + s * s
    direct = molien.molien_double_general(data, order)
    result = {"schur_analogues": per_char, "hilbert_double": total, "molien_direct_agrees": total == direct}
    lines = [f"S_{i}(t): {_series_text(s.coeffs)}" for i, s in enumerate(per_char)]
    lines.append(f"H(K[W+W]^G, t): {_series_text(total.coeffs)}")
    lines.append(f"agrees with direct Molien average: {total == direct}")
    inputs = {"class_data": str(args.class_data), "order": order}
    status = "pass" if total == direct else "fail"
    return OutputDocument("general", inputs, result, status), lines, EXIT_OK if total == direct else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text")

    parser = argparse.ArgumentParser(
        prog="invhilb", description="Hilbert series of diagonal symmetric-group invariants."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series for a composition n_1,...,n_k")
    p.add_argument("--gamma", required=True, help="comma-separated positive integers, e.g. 2,3")
    p.add_argument("--order", type=int, help="truncation order of the printed expansion")
    p.add_argument("--route", choices=["a", "b", "c", "all"], default="a")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--latex", action="store_true")
    p.set_defaults(handler=cmd_hilbert)

    p = sub.add_parser("schur", parents=[common], help="Schur function at 1, t, t^2, ...")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 2,1")
    p.add_argument("--order", type=int)
    p.add_argument("--latex", action="store_true")
    p.set_defaults(handler=cmd_schur)

    p = sub.add_parser("fmaj", parents=[common], help="major-index numerator f_n(t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help="permit n = 11, 12")
    p.set_defaults(handler=cmd_fmaj)

    p = sub.add_parser("stats", parents=[common], help="secondary invariant counts for S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("--suite", choices=["identities", "orbit", "characters", "all"], default="all")
    p.add_argument("--n-max", type=int, default=4)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("general", parents=[common], help="Schur analogues for a finite group from class data")
    p.add_argument("--class-data", required=True, help="YAML class-data file")
    p.add_argument("--order", type=int)
    p.set_defaults(handler=cmd_general)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "order", None) is not None and args.order < 0:
        print("error: --order must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc, lines, code = args.handler(args)
    except ValueError as exc:  # includes InputError and enumeration guards
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "structured":
        out.write(doc.dumps())
    else:
        out.write("\n".join(lines) + "\n")
    return code


def entry() -> None:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    sys.exit(main())


if __name__ == "__main__":
    entry()
