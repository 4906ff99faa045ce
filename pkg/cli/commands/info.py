"""`qform info`: invariants of a form."""

import argparse

from cli.parsing import field_from_args, strs
from models.responses import InvariantsResponse
from services.quadform import parse_form


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("info", parents=[common], help="Disc, Det, center and m of a form")
    parser.add_argument("--form", required=True, help='Form text, e.g. "x^2+y^2-1"')
    parser.add_argument("--mod", type=int, default=None, help="Reduce coefficients into F_p")
    parser.set_defaults(handler=run, usage_parser=parser)


def run(args: argparse.Namespace) -> InvariantsResponse:
    field = field_from_args(args)
    form = parse_form(args.form, field)
    invariants = form.invariants()
    return InvariantsResponse(
        form=str(form),
        field=field.name,
        disc=str(invariants.disc),
        det=str(invariants.det3),
        center=strs((invariants.h, invariants.k)) if invariants.has_center else None,
        m=str(invariants.m) if invariants.has_center else None
    )
