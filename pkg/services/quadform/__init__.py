"""
Quadratic Form Package

The form q(x,y) = a x^2 + b x y + c y^2 + d x + e y + f, its invariants
Det(q), Disc(q), center (h, k) and m, the text parser, and bounded
height-ordered searches for representations.
"""

from .form import QuadraticForm, FormInvariants
from .parser import parse_form, render_form, tokenize
from .search import iter_points_by_height, search_representation

__all__ = [
    "QuadraticForm",
    "FormInvariants",
    "parse_form",
    "render_form",
    "tokenize",
    "iter_points_by_height",
    "search_representation",
]
