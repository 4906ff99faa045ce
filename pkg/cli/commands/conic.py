"""`qform conic mul | inverse | find-point | witness | power`: the conic group."""

import argparse
from typing import Optional

import structlog

from cli.parsing import parse_scalars, positive_int, strs
from config import settings
from models.responses import PointResponse, SymbolResponse
from services.conic import Conic, ConicPoint
from services.quadform import parse_form

logger = structlog.get_logger()


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    conic = subparsers.add_parser("conic", help="Group law on the points of q(x, y) = 0")
    actions = conic.add_subparsers(dest="action", required=True, metavar="ACTION")

    def add(name: str, handler, summary: str) -> argparse.ArgumentParser:
        parser = actions.add_parser(name, parents=[common], help=summary)
        parser.add_argument("--form", required=True, help='Conic form, e.g. "x^2-2y^2-1"')
        parser.add_argument("--base", help="Identity point x,y (default: first point found by search)")
        parser.set_defaults(handler=handler, usage_parser=parser)
        return parser

    mul = add("mul", run_mul, "P * Q^* * R")
    for flag in ("--p", "--q", "--r"):
        mul.add_argument(flag, required=True, metavar="X,Y")

    inverse = add("inverse", run_inverse, "R with P * base^* * R = base")
    inverse.add_argument("--p", required=True, metavar="X,Y")

    find = add("find-point", run_find_point, "first rational point by height")
    find.add_argument("--height", type=positive_int, default=None,
                      help=f"Height bound (default {settings.search_height_bound})")

    witness = add("witness", run_witness, "symbol g with g * Q = P")
    witness.add_argument("--p", required=True, metavar="X,Y", help="Target point")
    witness.add_argument("--q", required=True, metavar="X,Y", help="Source point")

    power = add("power", run_power, "P^n with identity base")
    power.add_argument("--p", required=True, metavar="X,Y")
    power.add_argument("--n", type=int, required=True, help="Exponent (negative allowed)")


def _conic(args: argparse.Namespace) -> Conic:
    return Conic(parse_form(args.form))


def _point(conic: Conic, text: str) -> ConicPoint:
    return conic.point(*parse_scalars(text, 2, conic.field))


def _base(conic: Conic, args: argparse.Namespace, height: Optional[int] = None) -> ConicPoint:
    if args.base is not None:
        return _point(conic, args.base)
    base = conic.find_point(height or settings.search_height_bound)
    logger.info("base_point_defaulted", conic=str(conic.form), base=str(base))
    return base


def _response(operation: str, conic: Conic, point: ConicPoint) -> PointResponse:
    return PointResponse(operation=operation, form=str(conic.form), x=str(point.x), y=str(point.y))


def run_mul(args: argparse.Namespace) -> PointResponse:
    conic = _conic(args)
    if args.base is not None:
        _point(conic, args.base)
    first, second, third = (_point(conic, text) for text in (args.p, args.q, args.r))
    return _response("mul", conic, conic.triple(first, second, third))


def run_inverse(args: argparse.Namespace) -> PointResponse:
    conic = _conic(args)
    return _response("inverse", conic, conic.inverse_point(_point(conic, args.p), _base(conic, args)))


def run_find_point(args: argparse.Namespace) -> PointResponse:
    conic = _conic(args)
    if args.base is not None:
        return _response("find-point", conic, _point(conic, args.base))
    return _response("find-point", conic, conic.find_point(args.height or settings.search_height_bound))


def run_witness(args: argparse.Namespace) -> SymbolResponse:
    conic = _conic(args)
    group = conic.group(_base(conic, args))
    target, source = _point(conic, args.p), _point(conic, args.q)
    symbol = group.witness(target, source)
    image = group.act(symbol, source)
    return SymbolResponse(
        form=str(conic.form),
        left=strs(symbol.left.as_tuple()),
        right=strs(symbol.right.as_tuple()),
        image=strs(image.as_tuple())
    )


def run_power(args: argparse.Namespace) -> PointResponse:
    conic = _conic(args)
    return _response("power", conic, conic.power(_point(conic, args.p), args.n, _base(conic, args)))
