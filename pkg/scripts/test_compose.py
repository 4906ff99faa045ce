#!/usr/bin/env python3
"""
Test script for the composition identities

Tests the two-fold and three-fold identities for a x^2 + b x y + c y^2,
the fourth-point formula on a x^2 + b y^2 + c z^2 = 0, and projective
normalization.
"""

import sys
import os
import itertools
from random import Random

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from config import settings
from services.compose import (
    HomogeneousForm,
    compose2,
    compose3,
    normalize_projective,
    proj_compose3,
    two_square,
)
from services.errors import IdentityViolation, NotOnVariety, ZeroPoint
from services.matalg import embed, pair_product, triple
from services.numeric import GF, QQ, Rational

# a x^2 + b y^2 + c z^2 = 0 with a few known points each
VARIETIES = {
    (1, 1, -2): [(1, 1, 1), (1, -1, 1), (7, 1, 5), (1, 7, 5)],
    (1, -4, 3): [(1, 1, 1), (1, -1, 1), (2, 1, 0), (-1, 1, 1)],
    (1, 1, -1): [(3, 4, 5), (5, 12, 13), (1, 0, 1), (0, 1, 1)],
    (2, 3, -5): [(1, 1, 1), (1, -1, 1), (-1, 1, 1)],
    (1, -2, 1): [(1, 1, 1), (7, 5, 1), (1, 1, -1)],
}


def _on_variety(abc, point):
    a, b, c = abc
    x, y, z = point
    return a * x * x + b * y * y + c * z * z == 0


def test_two_fold_identity():
    """F(P1) F(P2) = u^2 + b u v + a c v^2."""

    print("=" * 60)
    print("🧪 Testing Two-Fold Composition")
    print("=" * 60)

    print("\n1. Examples...")
    assert compose2(HomogeneousForm(1, 0, 1), (1, 2), (2, 3)) == (8, 1)
    form = HomogeneousForm(2, 3, 4)
    assert compose2(form, (1, 0), (0, 1)) == (3, -1)
    assert form.norm(3, -1) == 8
    assert two_square(1, 2, 2, 3) == (8, 1)
    u, v = two_square(3, 4, 3, 4)
    assert (u, v) == (25, 0)
    print("   ✅ (8,1): 5 * 13 = 65; (3,-1): 2 * 4 = 8")

    print("\n2. 1000 random rational cases...")
    rng = Random(101)
    for _ in range(1000):
        form = HomogeneousForm(*(QQ.random_element(rng) for _ in range(3)))
        first = (QQ.random_element(rng), QQ.random_element(rng))
        second = (QQ.random_element(rng), QQ.random_element(rng))
        u, v = compose2(form, first, second)
        assert form(*first) * form(*second) == form.norm(u, v)
        x, y = two_square(*first, *second)
        assert (first[0] ** 2 + first[1] ** 2) * (second[0] ** 2 + second[1] ** 2) == x * x + y * y
    print("   ✅ Exact on 1000 cases")

    print("\n3. Exhaustive over F_3 and F_5...")
    for p in (3, 5):
        field = GF(p)
        elements = list(field.elements())
        count = 0
        for a, b, c in itertools.product(elements, repeat=3):
            form = HomogeneousForm(a, b, c, field=field)
            for x1, y1, x2, y2 in itertools.product(elements, repeat=4):
                u, v = compose2(form, (x1, y1), (x2, y2))
                assert form(x1, y1) * form(x2, y2) == form.norm(u, v)
                count += 1
        print(f"   ✅ F_{p}: {count} tuples")

    print("\n" + "=" * 60)
    print("✅ Two-fold tests passed!")
    print("=" * 60)


def test_three_fold_identity():
    """F(P1) F(P2) F(P3) = F(x, y)."""

    print("=" * 60)
    print("🧪 Testing Three-Fold Composition")
    print("=" * 60)

    print("\n1. Examples...")
    form = HomogeneousForm(1, 0, 1)
    assert compose3(form, (1, 2), (2, 3), (1, 1)) == (7, 9)
    assert form(7, 9) == 130
    assert compose3(HomogeneousForm(2, 3, 4), (1, 0), (1, 0), (1, 0)) == (2, 0)
    print("   ✅ (7,9): 5 * 13 * 2 = 130")

    print("\n2. 1000 random rational cases, Disc = 0 included...")
    rng = Random(103)
    for index in range(1000):
        coefficients = (1, 2, 1) if index % 10 == 0 else tuple(QQ.random_element(rng) for _ in range(3))
        form = HomogeneousForm(*coefficients)
        points = [(QQ.random_element(rng), QQ.random_element(rng)) for _ in range(3)]
        x, y = compose3(form, *points)
        assert form(*points[0]) * form(*points[1]) * form(*points[2]) == form(x, y)
        u, v = compose2(form, points[0], points[1])
        assert form(*points[0]) * form(*points[1]) == form.norm(u, v)
    print("   ✅ Exact on 1000 cases")

    print("\n3. Agreement with the triple product in A(F)...")
    checked = 0
    while checked < 100:
        form = HomogeneousForm(*(QQ.random_element(rng) for _ in range(3)))
        quadratic = form.as_quadratic_form()
        if quadratic.disc.is_zero():
            continue
        points = [(QQ.random_element(rng), QQ.random_element(rng)) for _ in range(3)]
        elements = [embed(quadratic, *point) for point in points]
        assert compose3(form, *points) == triple(*elements).point
        g = pair_product(elements[0], elements[1])
        assert compose2(form, points[0], points[1]) == (g.u, g.v)
        checked += 1
    print("   ✅ 100 forms")

    print("\n4. Exhaustive over F_3...")
    field = GF(3)
    elements = list(field.elements())
    for a, b, c in itertools.product(elements, repeat=3):
        form = HomogeneousForm(a, b, c, field=field)
        for x1, y1, x2, y2, x3, y3 in itertools.product(elements, repeat=6):
            x, y = compose3(form, (x1, y1), (x2, y2), (x3, y3))
            assert form(x1, y1) * form(x2, y2) * form(x3, y3) == form(x, y)
    print(f"   ✅ {3 ** 9} tuples")

    print("\n" + "=" * 60)
    print("✅ Three-fold tests passed!")
    print("=" * 60)


def test_projective_fourth_point():
    """A fourth point on a x^2 + b y^2 + c z^2 = 0."""

    print("=" * 60)
    print("🧪 Testing Projective Composition")
    print("=" * 60)

    print("\n1. Examples...")
    ones = (1, 1, 1)
    assert proj_compose3(1, 1, -2, ones, ones, ones) == (2, 2, -2)
    assert normalize_projective((2, 2, -2)) == (1, 1, -1)
    assert proj_compose3(1, -4, 3, ones, ones, ones) == (-3, -3, 3)
    assert normalize_projective((-3, -3, 3)) == (1, 1, -1)
    point = proj_compose3(1, 1, -2, (1, 1, 1), (1, -1, 1), (7, 1, 5))
    assert point == (-2, 14, -10)
    assert normalize_projective(point) == (1, -7, 5)
    print("   ✅ (2,2,-2), (-3,-3,3), (-2,14,-10)")

    print("\n2. 500 instances from scaled known points...")
    rng = Random(107)
    keys = sorted(VARIETIES)
    for index in range(500):
        abc = keys[index % len(keys)]
        scaled = []
        for _ in range(3):
            scale = QQ.random_element(rng)
            while scale.is_zero():
                scale = QQ.random_element(rng)
            scaled.append(tuple(scale * coordinate for coordinate in rng.choice(VARIETIES[abc])))
        result = proj_compose3(*abc, *scaled)
        assert _on_variety(abc, result)
    print(f"   ✅ 500 instances across {len(keys)} coefficient vectors")

    print("\n3. Invalid points...")
    with pytest.raises(ZeroPoint):
        proj_compose3(1, 1, -2, (0, 0, 0), ones, ones)
    with pytest.raises(NotOnVariety):
        proj_compose3(1, 1, -2, ones, (1, 0, 0), ones)
    print("   ✅ ZeroPoint and NotOnVariety raised")

    print("\n" + "=" * 60)
    print("✅ Projective tests passed!")
    print("=" * 60)


def test_normalize_projective():
    """Coprime integers with a positive leading entry."""

    print("=" * 60)
    print("🧪 Testing Projective Normalization")
    print("=" * 60)

    assert normalize_projective((Rational(-1, 2), Rational(7, 2), Rational(-5, 2))) == (1, -7, 5)
    assert normalize_projective((0, -2, 4)) == (0, 1, -2)
    assert normalize_projective((Rational(2, 3), Rational(1, 6), 0)) == (4, 1, 0)
    assert normalize_projective((0, 0, -7)) == (0, 0, 1)
    with pytest.raises(ZeroPoint):
        normalize_projective((0, 0, 0))
    print("   ✅ Normal forms")

    print("\n" + "=" * 60)
    print("✅ Normalization tests passed!")
    print("=" * 60)


def test_identity_tripwire(monkeypatch):
    """A broken identity raises IdentityViolation in debug runs only."""
    monkeypatch.setattr(HomogeneousForm, "norm", lambda self, u, v: self.field(0))

    monkeypatch.setattr(settings, "debug", True)
    monkeypatch.setattr(settings, "env", "development")
    with pytest.raises(IdentityViolation):
        compose2(HomogeneousForm(1, 0, 1), (1, 2), (2, 3))

    monkeypatch.setattr(settings, "env", "production")
    assert compose2(HomogeneousForm(1, 0, 1), (1, 2), (2, 3)) == (8, 1)


if __name__ == "__main__":
    test_two_fold_identity()
    test_three_fold_identity()
    test_projective_fourth_point()
    test_normalize_projective()

    print("\n" + "=" * 60)
    print("✅ ALL COMPOSITION TESTS PASSED!")
    print("=" * 60)
