#!/usr/bin/env python3
"""
Test script for quadratic forms

Tests parsing, rendering, invariants, centering and height-ordered search.
"""

import sys
import os
import itertools
from random import Random

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from services.errors import DegenerateDisc, DegreeError, DomainViolation, NotFound, ParseError
from services.numeric import GF, QQ, Rational
from services.oracle import FormConstraint, random_form_sampler
from services.quadform import (
    QuadraticForm,
    iter_points_by_height,
    parse_form,
    render_form,
    search_representation,
    tokenize,
)

CIRCLE = "x^2+y^2-1"
SHIFTED_CIRCLE = "x^2+y^2-2x-4y+2"
TILTED = "2x^2+3x*y+4y^2+x"


def _permutation_det(matrix):
    """Leibniz expansion; independent of the cofactor code in QuadraticForm."""
    n = len(matrix)
    total = Rational(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Rational(-1 if inversions % 2 else 1)
        for row, column in enumerate(perm):
            term = term * matrix[row][column]
        total = total + term
    return total


def test_parse_form():
    """Test the form parser."""

    print("=" * 60)
    print("🧪 Testing Form Parser")
    print("=" * 60)

    print("\n1. Coefficient extraction...")
    assert parse_form(CIRCLE).coefficients() == (1, 0, 1, 0, 0, -1)
    assert parse_form(TILTED).coefficients() == (2, 3, 4, 1, 0, 0)
    assert parse_form("1/2 y").coefficients() == (0, 0, 0, 0, Rational(1, 2), 0)
    assert parse_form("3xy - x*x + y y").coefficients() == (-1, 3, 1, 0, 0, 0)
    print(f"   ✅ {CIRCLE} → (1,0,1,0,0,-1)")

    print("\n2. Like terms combine...")
    assert parse_form("x + x + 2y - y + 3 - 1").coefficients() == (0, 0, 0, 2, 1, 2)
    assert parse_form("X^2 + Y^2").coefficients() == (1, 0, 1, 0, 0, 0)
    assert parse_form("-x^2").a == -1
    print("   ✅ x + x → 2x")

    print("\n3. Degree errors...")
    with pytest.raises(DegreeError):
        parse_form("x^3+y")
    with pytest.raises(DegreeError):
        parse_form("x*y*x")
    with pytest.raises(DegreeError) as info:
        parse_form("1 + x^2*y")
    assert info.value.position == 4
    print("   ✅ DegreeError with position")

    print("\n4. Malformed input...")
    for text in ("", "x^", "x +", "x ++ y", "2x^1/2", "x $ y", "x^y"):
        with pytest.raises(ParseError):
            parse_form(text)
    with pytest.raises(ParseError) as info:
        parse_form("x + ? y")
    assert info.value.position == 4
    assert "position 4" in str(info.value)
    print("   ✅ ParseError with position")

    print("\n5. Tokens...")
    kinds = [token.kind for token in tokenize("3x^2 - 1/2y")]
    assert kinds == ["num", "var", "op", "num", "op", "num", "var"]
    print(f"   ✅ {kinds}")

    print("\n6. Parsing into F_p...")
    form = parse_form("x^2 + 1/2 y - 3", GF(5))
    assert form.field == GF(5)
    assert form.e == GF(5)(3)
    assert form.f == GF(5)(2)
    with pytest.raises(DomainViolation):
        parse_form("x^2 + 1/5", GF(5))
    print("   ✅ Coefficients reduced mod p")

    print("\n" + "=" * 60)
    print("✅ Parser tests passed!")
    print("=" * 60)


def test_render_round_trip():
    """Test render_form and parse_form ∘ render."""

    print("=" * 60)
    print("🧪 Testing Form Rendering")
    print("=" * 60)

    assert render_form(QuadraticForm(2, 3, 4, 1, 0, 0)) == "2*x^2 + 3*x*y + 4*y^2 + x"
    assert render_form(parse_form(CIRCLE)) == "x^2 + y^2 - 1"
    assert render_form(parse_form("-x^2 - 1/2 y")) == "-x^2 - 1/2*y"
    assert render_form(QuadraticForm(0, 0, 0)) == "0"
    print("   ✅ Canonical renderings")

    for form in random_form_sampler(seed=7, count=100):
        assert parse_form(render_form(form)) == form
    print("   ✅ parse(render(q)) == q for 100 random forms")

    print("\n" + "=" * 60)
    print("✅ Rendering tests passed!")
    print("=" * 60)


def test_invariants():
    """Test Disc, Det, center and m."""

    print("=" * 60)
    print("🧪 Testing Form Invariants")
    print("=" * 60)

    print("\n1. Disc...")
    assert parse_form("x^2+y^2").disc == 1
    assert parse_form("2x^2+3xy+4y^2").disc == Rational(23, 4)
    assert parse_form("x^2-y").disc == 0
    print("   ✅ Disc: 1, 23/4, 0")

    print("\n2. Det...")
    assert parse_form("x^2+y^2").det3 == 0
    assert parse_form(CIRCLE).det3 == -1
    assert parse_form("x^2-y").det3 == Rational(-1, 4)
    print("   ✅ Det: 0, -1, -1/4")

    print("\n3. Center...")
    assert parse_form(CIRCLE).center() == (0, 0)
    assert parse_form(SHIFTED_CIRCLE).center() == (1, 2)
    assert parse_form(TILTED).center() == (Rational(-8, 23), Rational(3, 23))
    with pytest.raises(DegenerateDisc):
        parse_form("x^2-y").center()
    print("   ✅ Centers: (0,0), (1,2), (-8/23,3/23)")

    print("\n4. m...")
    assert parse_form(CIRCLE).m_value() == 1
    assert parse_form("x^2+y^2").m_value() == 0
    assert parse_form(SHIFTED_CIRCLE).m_value() == 3
    with pytest.raises(DegenerateDisc):
        parse_form("x^2-y").m_value()
    print("   ✅ m: 1, 0, 3")

    print("\n5. Absent, not zero, when Disc = 0...")
    invariants = parse_form("x^2-y").invariants()
    assert not invariants.has_center
    assert invariants.h is None and invariants.m is None
    assert invariants.to_dict() == {"det": "-1/4", "disc": "0", "h": None, "k": None, "m": None}
    assert parse_form(TILTED).invariants().to_dict()["h"] == "-8/23"
    print("   ✅ FormInvariants.to_dict")

    print("\n" + "=" * 60)
    print("✅ Invariant tests passed!")
    print("=" * 60)


def test_evaluation_and_centering():
    """Test eval, centered eval and the critical point."""

    print("=" * 60)
    print("🧪 Testing Evaluation")
    print("=" * 60)

    assert parse_form("x^2+y^2").evaluate(3, 4) == 25
    assert parse_form(CIRCLE).evaluate(Rational(3, 5), Rational(4, 5)) == 0
    assert parse_form("x^2-y").evaluate(2, 4) == 0
    assert parse_form(CIRCLE).centered_evaluate(Rational(3, 5), Rational(4, 5)) == 0
    assert parse_form(SHIFTED_CIRCLE).centered_evaluate(1, 2) == -3
    assert parse_form(TILTED).centered_evaluate(0, 0) == 0
    print("   ✅ Documented values")

    rng = Random(99)
    forms = random_form_sampler(seed=3, count=50, constraints=[FormConstraint.DISC_NONZERO])
    for form in forms:
        h, k = form.center()
        assert form.gradient(h, k) == (0, 0)
        for _ in range(50):
            x, y = QQ.random_element(rng), QQ.random_element(rng)
            assert form.centered_evaluate(x, y) == form.evaluate(x, y)
    print("   ✅ Centered eval identity on 50 forms × 50 points; gradient vanishes at center")

    for form in random_form_sampler(seed=4, count=100):
        a, b, c, d, e, f = form.coefficients()
        matrix = [[a, b / 2, d / 2], [b / 2, c, e / 2], [d / 2, e / 2, f]]
        assert form.det3 == _permutation_det(matrix)
        assert form.disc == _permutation_det([[a, b / 2], [b / 2, c]])
    print("   ✅ Det and Disc match a Leibniz-expansion oracle on 100 forms")

    print("\n" + "=" * 60)
    print("✅ Evaluation tests passed!")
    print("=" * 60)


def test_height_search():
    """Test height-ordered enumeration and representation search."""

    print("=" * 60)
    print("🧪 Testing Height Search")
    print("=" * 60)

    print("\n1. Enumeration order...")
    first = list(iter_points_by_height(1))
    assert first[:3] == [(-1, -1), (-1, 0), (-1, 1)]
    assert len(first) == len(set(first)) == 9
    two = list(iter_points_by_height(2))
    assert len(two) == len(set(two))
    assert (Rational(1, 2), Rational(-1, 2)) in two
    with pytest.raises(ValueError):
        list(iter_points_by_height(0))
    print(f"   ✅ height ≤ 1: {len(first)} points, height ≤ 2: {len(two)} points")

    print("\n2. Representations...")
    circle = parse_form(CIRCLE)
    assert search_representation(circle, 0, 1) == (-1, 0)
    assert search_representation(parse_form("x^2+y^2"), 5, 2) == (-2, -1)
    assert search_representation(parse_form("x^2-y"), 7, 7) == (-3, 2)
    assert search_representation(circle, 0, 5) == search_representation(circle, 0, 1)
    print("   ✅ First hits independent of the bound")

    print("\n3. Not found...")
    with pytest.raises(NotFound):
        search_representation(parse_form("x^2+y^2+1"), 0, 6)
    with pytest.raises(NotFound):
        search_representation(parse_form("x^2+y^2"), 3, 20)
    print("   ✅ NotFound within the bound")

    print("\n" + "=" * 60)
    print("✅ Height search tests passed!")
    print("=" * 60)


if __name__ == "__main__":
    test_parse_form()
    test_render_round_trip()
    test_invariants()
    test_evaluation_and_centering()
    test_height_search()

    print("\n" + "=" * 60)
    print("✅ ALL QUADRATIC FORM TESTS PASSED!")
    print("=" * 60)
