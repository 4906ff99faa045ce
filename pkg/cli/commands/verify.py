"""`qform verify`: oracle sweeps over F_p or over Q."""

import argparse

import structlog

from cli.parsing import parse_scalars, positive_int
from config import settings
from models.reports import AxiomReport
from services.conic import Conic
from services.errors import ParseError
from services.numeric import GF
from services.oracle import (
    FiniteConic,
    exhaustive_algebra_check,
    exhaustive_axiom_check,
    random_conic_check,
)
from services.quadform import parse_form

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "verify", parents=[common],
        help="Check the group (or algebra) laws exhaustively over F_p or on random points over Q"
    )
    parser.add_argument("--form", required=True)
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--mod", type=int, metavar="P", help="Work over F_p (with --exhaustive)")
    mode.add_argument("--random", type=positive_int, metavar="N", help="N random cases over Q")
    parser.add_argument("--exhaustive", action="store_true", help="Sweep every triple (requires --mod)")
    parser.add_argument("--seed", type=int, default=None, help="Seed (default QFORM_SEED)")
    parser.add_argument("--base", metavar="X,Y", help="Identity point (default: first point)")
    parser.add_argument("--algebra", action="store_true",
                        help="Check the ternary algebra A(q) instead of the conic group (with --mod)")
    parser.add_argument("--workers", type=positive_int, default=None,
                        help="Worker processes for the triple table (default ORACLE_WORKERS)")
    parser.set_defaults(handler=run, usage_parser=parser)


def run(args: argparse.Namespace) -> AxiomReport:
    seed = settings.seed if args.seed is None else args.seed
    if args.mod is not None:
        if not args.exhaustive:
            raise ParseError("--mod requires --exhaustive")
        return _run_finite(args, seed)
    if args.exhaustive or args.algebra:
        raise ParseError("--exhaustive and --algebra require --mod")

    conic = Conic(parse_form(args.form))
    if args.base is not None:
        base = conic.point(*parse_scalars(args.base, 2))
    else:
        base = conic.find_point(settings.search_height_bound)
    logger.info("random_verify_started", conic=str(conic.form), cases=args.random, seed=seed)
    return random_conic_check(conic, base, args.random, seed)


def _run_finite(args: argparse.Namespace, seed: int) -> AxiomReport:
    field = GF(args.mod)
    form = parse_form(args.form)
    if args.algebra:
        return exhaustive_algebra_check(form.reduce(field), seed)

    conic = FiniteConic.over(form, args.mod)
    base = None
    if args.base is not None:
        base = conic.point(*parse_scalars(args.base, 2, field))
    return exhaustive_axiom_check(conic, base, workers=args.workers, seed=seed)
