"""`qform compose2 | compose3 | proj3`: the composition identities."""

import argparse

from cli.parsing import parse_points, parse_scalars, strs
from models.responses import Compose2Response, Compose3Response, ProjectiveResponse
from services.compose import HomogeneousForm, compose2, compose3, normalize_projective, proj_compose3


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    for name, handler, count, arity, summary in (
        ("compose2", run_compose2, 2, 2, "F(P1) F(P2) = u^2 + b u v + a c v^2"),
        ("compose3", run_compose3, 3, 2, "F(P1) F(P2) F(P3) = F(x, y)"),
        ("proj3", run_proj3, 3, 3, "fourth point on a x^2 + b y^2 + c z^2 = 0"),
    ):
        parser = subparsers.add_parser(name, parents=[common], help=summary)
        parser.add_argument("--abc", required=True, help="Coefficients a,b,c")
        parser.add_argument(
            "--p", action="append", metavar="POINT",
            help=f"Point ({'x,y' if arity == 2 else 'x,y,z'}); give it {count} times, in order"
        )
        parser.set_defaults(handler=handler, usage_parser=parser)


def run_compose2(args: argparse.Namespace) -> Compose2Response:
    form = HomogeneousForm(*parse_scalars(args.abc, 3))
    first, second = parse_points(args.p, 2, 2, "--p")
    u, v = compose2(form, first, second)
    return Compose2Response(
        abc=strs((form.a, form.b, form.c)),
        points=[strs(first), strs(second)],
        u=str(u),
        v=str(v),
        value=str(form.norm(u, v)),
        factors=[str(form(*point)) for point in (first, second)]
    )


def run_compose3(args: argparse.Namespace) -> Compose3Response:
    form = HomogeneousForm(*parse_scalars(args.abc, 3))
    points = parse_points(args.p, 3, 2, "--p")
    x, y = compose3(form, *points)
    return Compose3Response(
        abc=strs((form.a, form.b, form.c)),
        points=[strs(point) for point in points],
        x=str(x),
        y=str(y),
        value=str(form(x, y)),
        factors=[str(form(*point)) for point in points]
    )


def run_proj3(args: argparse.Namespace) -> ProjectiveResponse:
    a, b, c = parse_scalars(args.abc, 3)
    points = parse_points(args.p, 3, 3, "--p")
    point = proj_compose3(a, b, c, *points)
    return ProjectiveResponse(
        abc=strs((a, b, c)),
        points=[strs(p) for p in points],
        point=strs(point),
        normalized=list(normalize_projective(point))
    )
