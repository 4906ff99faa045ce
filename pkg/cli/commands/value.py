"""`qform value mul`: the ternary group on the value set."""

import argparse

from models.responses import ValueResponse
from services.numeric import Rational
from services.quadform import parse_form
from services.values import value_triple


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    value = subparsers.add_parser("value", help="alpha * beta^* * gamma on the values of q")
    actions = value.add_subparsers(dest="action", required=True, metavar="ACTION")
    mul = actions.add_parser("mul", parents=[common], help="alpha * beta^* * gamma")
    mul.add_argument("--form", required=True)
    for flag in ("--alpha", "--beta", "--gamma"):
        mul.add_argument(flag, required=True, metavar="N/D")
    mul.set_defaults(handler=run_mul, usage_parser=mul)


def run_mul(args: argparse.Namespace) -> ValueResponse:
    form = parse_form(args.form)
    alpha, beta, gamma = (Rational.parse(text) for text in (args.alpha, args.beta, args.gamma))
    return ValueResponse(
        form=str(form),
        alpha=str(alpha),
        beta=str(beta),
        gamma=str(gamma),
        value=str(value_triple(form, alpha, beta, gamma))
    )
