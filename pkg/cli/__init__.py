"""Command-line entry point: ``python -m cli`` or ``python degcx.py``.

stdout carries JSON only (or Macaulay2 text with ``--m2``); logs go to stderr.
Exit codes: 0 ok, 1 verification failure, 2 usage, parse or domain error.
Negative degrees work spaced or joined: ``--gamma -1,0`` or ``--gamma=-1,0``.
"""
import argparse
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional

from models.errors import DegcxError, DimensionMismatchError
from models.monomial import MonomialIdeal
from services.cohomology import scan_cohomology, takayama_dim
from services.degree_complex import (
    PowerMode,
    degree_complex_direct,
    formula_fiber_product,
    formula_mixed_product,
    formula_power_of_sum,
    formula_product,
    formula_sum,
    formula_symbolic_sum,
    power_view,
)
from services.primes import SymbolicPower, minimal_primes, symbolic_power_ideal
from services.verifier import CHECKS, Verifier
from utils.config import get_config, load_settings_file
from utils.formats import dumps, complex_to_dict, format_ideal, macaulay2_ring, parse_gamma, parse_ideal, to_macaulay2

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FORMULAS = ("direct", "sum", "product", "power-of-sum", "symbolic-sum", "fiber", "mixed")

# Number of extra ideal files each formula reads after the main one.
EXTRA_IDEALS = {"direct": 0, "sum": 1, "product": 1, "power-of-sum": 1, "symbolic-sum": 1, "fiber": 1, "mixed": 3}

# Options whose value may start with a minus sign.
DEGREE_OPTIONS = ("--gamma",)
DEGREE_VALUE = re.compile(r"-\d[\d,\s-]*")


def _read_ideal(path: str, n: Optional[int] = None) -> MonomialIdeal:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_ideal(text, n)


def _emit(data) -> None:
    sys.stdout.write(dumps(data) + "\n")


def _target(ideal: MonomialIdeal, symbolic: Optional[int]):
    return ideal if symbolic is None else SymbolicPower(ideal, symbolic)


def _scan_ideal(ideal: MonomialIdeal, symbolic: Optional[int]) -> MonomialIdeal:
    return ideal if symbolic is None else symbolic_power_ideal(ideal, symbolic)


def cmd_degree_complex(args) -> int:
    ideal = _read_ideal(args.ideal)
    others = [_read_ideal(path, ideal.n) for path in args.others]
    needed = EXTRA_IDEALS[args.formula]
    if len(others) != needed:
        raise DimensionMismatchError(f"formula {args.formula} needs {needed} extra ideal file(s), got {len(others)}")
    gamma = parse_gamma(args.gamma, ideal.n)
    mode = PowerMode(args.mode)
    if args.formula not in ("direct", "sum") and args.split is None:
        raise DimensionMismatchError(f"formula {args.formula} needs --split")

    if args.formula == "direct":
        target = ideal if args.s is None else power_view(ideal, args.s, mode)
        result = degree_complex_direct(target, gamma)
    elif args.formula == "sum":
        result = formula_sum(ideal, others[0], gamma, args.split)
    elif args.formula == "product":
        result = formula_product(ideal, others[0], gamma, args.split)
    elif args.formula == "power-of-sum":
        result = formula_power_of_sum(ideal, others[0], args.s or 1, gamma, args.split)
    elif args.formula == "symbolic-sum":
        result = formula_symbolic_sum(ideal, others[0], args.s or 1, gamma, args.split)
    elif args.formula == "fiber":
        result = formula_fiber_product(ideal, others[0], args.s or 1, gamma, args.split, mode).to_complex()
    else:
        i2, j1, j2 = others
        result = formula_mixed_product(ideal, i2, j1, j2, gamma, args.split)

    if args.m2:
        sys.stdout.write(macaulay2_ring(result.n) + "\n" + to_macaulay2(result) + "\n")
    else:
        _emit(complex_to_dict(result))
    return EXIT_OK


def cmd_cohomology(args) -> int:
    ideal = _read_ideal(args.ideal)
    if args.scan:
        table = scan_cohomology(_scan_ideal(ideal, args.symbolic))
        _emit(table.rows())
        return EXIT_OK
    if args.gamma is None:
        raise DimensionMismatchError("cohomology needs --gamma or --scan")
    gamma = parse_gamma(args.gamma, ideal.n)
    target = _target(ideal, args.symbolic)
    degrees = range(ideal.n + 1) if args.p is None else [args.p]
    rows = [{"p": p, "gamma": list(gamma), "dim": takayama_dim(target, gamma, p)} for p in degrees]
    _emit([row for row in rows if row["dim"]] if args.p is None else rows)
    return EXIT_OK


def _invariant(args, name: str) -> int:
    table = scan_cohomology(_scan_ideal(_read_ideal(args.ideal), args.symbolic))
    value, (p, gamma) = table.reg() if name == "reg" else table.depth()
    _emit({name: value, "p": p, "gamma": list(gamma)})
    return EXIT_OK


def cmd_reg(args) -> int:
    return _invariant(args, "reg")


def cmd_depth(args) -> int:
    return _invariant(args, "depth")


def cmd_symbolic_power(args) -> int:
    ideal = _read_ideal(args.ideal)
    _emit({"ideal": format_ideal(symbolic_power_ideal(ideal, args.s))})
    return EXIT_OK


def cmd_minimal_primes(args) -> int:
    ideal = _read_ideal(args.ideal)
    _emit([[v + 1 for v in range(ideal.n) if prime >> v & 1] for prime in minimal_primes(ideal)])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        _emit({check_id: {"alias": spec.alias, "summary": spec.summary} for check_id, spec in CHECKS.items()})
        return EXIT_OK
    if not args.check:
        raise DimensionMismatchError("verify needs a check id, 'all' or --list")
    verifier = Verifier(seed=args.seed, instances=args.instances, max_n=args.max_n, max_s=args.max_s)
    reports = verifier.run_all() if args.check == "all" else [verifier.run(args.check)]
    _emit([report.to_dict() for report in reports] if args.check == "all" else reports[0].to_dict())
    failed = [report.theorem for report in reports if not report.passed]
    if failed:
        logger.warning(f"Verification failed for: {', '.join(failed)}")
        return EXIT_FAILURE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degcx", description="Degree complexes and local cohomology of monomial ideals")
    parser.add_argument("--settings", help="JSON settings file with a Values object (exported to the environment)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    dc = sub.add_parser("degree-complex", help="degree complex of an ideal, directly or by a decomposition formula")
    dc.add_argument("ideal", help="ideal file ('-' for stdin)")
    dc.add_argument("others", nargs="*", help="J for sum/product/power-of-sum/symbolic-sum/fiber; I2 J1 J2 for mixed")
    dc.add_argument("--gamma", required=True, help="comma-separated degree, e.g. --gamma -1,0")
    dc.add_argument("--formula", choices=FORMULAS, default="direct")
    dc.add_argument("--split", type=int, help="block boundary m: x1..xm against the rest")
    dc.add_argument("--s", type=int, help="power exponent")
    dc.add_argument("--mode", choices=[mode.value for mode in PowerMode], default=PowerMode.ORDINARY.value)
    dc.add_argument("--m2", action="store_true", help="emit Macaulay2 simplicialComplex syntax")
    dc.set_defaults(handler=cmd_degree_complex)

    co = sub.add_parser("cohomology", help="dim H^p(S/I)_gamma at one degree or over the whole scan window")
    co.add_argument("ideal")
    co.add_argument("--gamma")
    co.add_argument("--p", type=int)
    co.add_argument("--scan", action="store_true")
    co.add_argument("--symbolic", type=int, metavar="S", help="act on the symbolic power I^(S)")
    co.set_defaults(handler=cmd_cohomology)

    for name, handler in (("reg", cmd_reg), ("depth", cmd_depth)):
        cmd = sub.add_parser(name, help=f"{name} of S/I from the cohomology scan")
        cmd.add_argument("ideal")
        cmd.add_argument("--symbolic", type=int, metavar="S", help="act on the symbolic power I^(S)")
        cmd.set_defaults(handler=handler)

    sp = sub.add_parser("symbolic-power", help="minimal generators of I^(s)")
    sp.add_argument("ideal")
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(handler=cmd_symbolic_power)

    mp = sub.add_parser("minimal-primes", help="minimal primes of a squarefree ideal, as 1-based variable lists")
    mp.add_argument("ideal")
    mp.set_defaults(handler=cmd_minimal_primes)

    ve = sub.add_parser("verify", help="run a harness check by id or alias ('all' for every check)")
    ve.add_argument("check", nargs="?", help="registry id such as 3.9, or its alias such as power-of-sum")
    ve.add_argument("--list", action="store_true")
    ve.add_argument("--seed", type=int)
    ve.add_argument("--instances", type=int)
    ve.add_argument("--max-n", type=int)
    ve.add_argument("--max-s", type=int)
    ve.set_defaults(handler=cmd_verify)
    return parser


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_config().log_level)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def _attach_degree_values(argv: List[str]) -> List[str]:
    """Rewrite `--gamma -1,0` as `--gamma=-1,0`; argparse would take the value for an option."""
    result = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in DEGREE_OPTIONS and i + 1 < len(argv) and DEGREE_VALUE.fullmatch(argv[i + 1]):
            result.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        result.append(arg)
        i += 1
    return result


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_degree_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        if args.settings:
            load_settings_file(args.settings)
        _configure_logging(args.verbose)
        return args.handler(args)
    except DegcxError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        logger.error(f"{args.command}: {e}", exc_info=True)
        return EXIT_USAGE
