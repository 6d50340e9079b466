"""Batch command-line interface.

Subcommands: lub, act, verify <suite>, transfer, kms, decompose <a>, cube,
report.  Reports render as text or JSON (--format); exit status is 0 when
all checks pass, 1 on any check failure, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from axb.kms import (
    FACES,
    GROUND,
    GROUND_FACTORS_IFF_KMS_LIMIT,
    KMS_INFINITY,
    cube_face_check,
    factors_through,
    kms_value,
)
from axb.operators import defect_decomposition, normalize, verify_defect_decomposition
from axb.parsing import (
    ParseError,
    format_point,
    format_word_sum,
    parse_group_element,
    parse_laurent,
    parse_point,
    parse_semigroup_element,
    parse_toeplitz,
    parse_word_expr,
)
from axb.semigroup import lub
from axb.spectrum import Undefined, Window, partial_act
from axb.suites import SUITES, SuiteOptions, reports_to_json, run_all, run_suite
from axb.transfer import endo, symbol_map, transfer

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


def _parse_primes(text: str) -> list[int]:
    return [int(p) for p in text.split(",") if p.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="axb",
        description="Exact computations in the operator algebras of the ax+b semigroup over N.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lub = sub.add_parser("lub", help="least upper bound of two semigroup elements")
    p_lub.add_argument("--x", required=True, help='element "(m,a)"')
    p_lub.add_argument("--y", required=True, help='element "(n,b)"')

    p_act = sub.add_parser("act", help="apply a group element to a spectrum point")
    p_act.add_argument("--g", required=True, help='group element "(r,a)" with rational entries')
    p_act.add_argument("--point", required=True, help='point "A(m;N)" or "B(r;N)"')
    p_act.add_argument("--window", type=int, default=None, help="witness/closure search bound")

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    _add_suite_flags(p_verify)

    p_transfer = sub.add_parser("transfer", help="apply a transfer operator or endomorphism")
    p_transfer.add_argument("--a", type=int, required=True)
    p_transfer.add_argument("--element", required=True)
    p_transfer.add_argument(
        "--system", choices=["laurent", "toeplitz"], default="laurent"
    )
    p_transfer.add_argument("--endo", action="store_true", help="apply the endomorphism instead")
    p_transfer.add_argument("--symbol", action="store_true", help="also print the symbol of the result")

    p_kms = sub.add_parser("kms", help="evaluate an equilibrium state on an element")
    group = p_kms.add_mutually_exclusive_group(required=True)
    group.add_argument("--beta", help="rational inverse temperature >= 1")
    group.add_argument("--ground", action="store_true")
    group.add_argument("--infinity", action="store_true")
    p_kms.add_argument("--element", required=True, help="generator-word expression")
    p_kms.add_argument("--factors", action="store_true", help="also print quotient factoring")

    p_dec = sub.add_parser("decompose", help="defect decomposition of 1 - sum_k W_(k,a)W_(k,a)*")
    p_dec.add_argument("a", type=int)
    p_dec.add_argument("--verify", action="store_true", help="verify symbolically and on the backend")

    p_cube = sub.add_parser("cube", help="check a face of the morphism cube on generators")
    p_cube.add_argument("--face", required=True, choices=sorted(FACES))
    p_cube.add_argument("--primes", default="2,3,5", help="comma-separated primes")

    p_report = sub.add_parser("report", help="run every suite and emit a combined report")
    _add_suite_flags(p_report)

    return parser


def _add_suite_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--window", type=int, default=None, help="override the suite's default window")
    p.add_argument("--primes", type=str, default=None, help="comma-separated primes")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised corpora")
    p.add_argument("--format", choices=["text", "json"], default="text")


def _suite_options(args) -> SuiteOptions:
    return SuiteOptions(
        window=args.window,
        primes=_parse_primes(args.primes) if args.primes else None,
        seed=args.seed,
    )


def _cmd_lub(args) -> int:
    x = parse_semigroup_element(args.x)
    y = parse_semigroup_element(args.y)
    z = lub(x, y)
    print("infinity" if z is None else str(z))
    return EXIT_OK


def _cmd_act(args) -> int:
    g = parse_group_element(args.g)
    point = parse_point(args.point)
    window = Window(args.window, max(12, args.window // 4)) if args.window else Window()
    image = partial_act(g, point, window=window)
    if isinstance(image, Undefined):
        kind = "certainly undefined" if image.certain else "undefined on the searched window"
        suffix = f" (window {image.window})" if image.window else ""
        print(f"{kind}: {image.reason}{suffix}")
    else:
        print(format_point(image))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, _suite_options(args))
    if args.format == "json":
        print(reports_to_json([report]))
    else:
        print(report.render_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_transfer(args) -> int:
    if args.a < 1:
        raise ParseError("level must be a positive natural", str(args.a), 0)
    elem = parse_laurent(args.element) if args.system == "laurent" else parse_toeplitz(args.element)
    result = endo(args.a, elem) if args.endo else transfer(args.a, elem)
    print(repr(result))
    if args.symbol and args.system == "toeplitz":
        print("symbol:", repr(symbol_map(result)))
    return EXIT_OK


def _cmd_kms(args) -> int:
    if args.ground:
        params = GROUND
    elif args.infinity:
        params = KMS_INFINITY
    else:
        params = Fraction(args.beta)
    expr = normalize(parse_word_expr(args.element))
    value = kms_value(params, expr)
    print(f"value: {value!r} ~ {value.approx():.10g}")
    if args.factors:
        for quotient in ("additive", "multiplicative"):
            outcome = factors_through(params, quotient)
            if outcome == GROUND_FACTORS_IFF_KMS_LIMIT:
                outcome = "iff the state is a limit of finite-temperature states"
            print(f"factors through {quotient} quotient: {outcome}")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    terms = defect_decomposition(args.a)
    if not terms:
        print("the defect at level 1 is zero; empty decomposition")
        return EXIT_OK
    for t in terms:
        conj = format_word_sum(((Fraction(1), t.conjugator),))
        print(f"conjugator {conj!s:20s} prime {t.prime}")
    if args.verify:
        ok = verify_defect_decomposition(args.a)
        print("verified:", ok)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_cube(args) -> int:
    primes = _parse_primes(args.primes)
    ok, details = cube_face_check(args.face, primes)
    for gen, img1, img2, same in details:
        print(f"generator {gen}: {'agree' if same else 'DISAGREE'}")
    print("face commutes:", ok)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_report(args) -> int:
    options = _suite_options(args)
    reports = run_all(options)
    if args.format == "json":
        print(reports_to_json(reports))
    else:
        for report in reports:
            print(report.render_text())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "lub": _cmd_lub,
        "act": _cmd_act,
        "verify": _cmd_verify,
        "transfer": _cmd_transfer,
        "kms": _cmd_kms,
        "decompose": _cmd_decompose,
        "cube": _cmd_cube,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
