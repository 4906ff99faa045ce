#!/usr/bin/env python3
"""
Test script for exact scalars

Tests Rational, PrimeFieldElement and the field factory.
"""

import sys
import os
import pickle
from fractions import Fraction
from random import Random

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from hypothesis import given, strategies as st

from services.errors import (
    DivisionByZero,
    EvenCharacteristic,
    ModulusMismatch,
    NotPrime,
    ParseError,
    QFormError,
)
from services.numeric import GF, QQ, PrimeFieldElement, Rational, get_field, is_prime

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4).map(Rational)


def test_rational_arithmetic():
    """Test exact rational arithmetic."""

    print("=" * 60)
    print("🧪 Testing Rational Arithmetic")
    print("=" * 60)

    print("\n1. Basic operations...")
    assert Rational(1, 2) + Rational(1, 3) == Rational(5, 6)
    assert Rational(1, 2) - Rational(1, 3) == Rational(1, 6)
    assert Rational(2, 3) * Rational(9, 4) == Rational(3, 2)
    assert Rational(2, 3) / Rational(4, 9) == Rational(3, 2)
    assert -Rational(7, 3) == Rational(-7, 3)
    print("   ✅ 1/2 + 1/3 = 5/6")

    print("\n2. Canonical form...")
    half = Rational(2, 4)
    assert (half.numerator, half.denominator) == (1, 2)
    negative = Rational(3, -6)
    assert (negative.numerator, negative.denominator) == (-1, 2)
    assert str(half) == "1/2"
    assert str(Rational(-4, 2)) == "-2"
    print(f"   ✅ 2/4 → {half}, 3/-6 → {negative}")

    print("\n3. Mixed with ints and Fractions...")
    assert 1 + Rational(1, 2) == Rational(3, 2)
    assert 1 - Rational(1, 2) == Rational(1, 2)
    assert 2 / Rational(4) == Rational(1, 2)
    assert Rational(1, 2) * Fraction(2, 3) == Rational(1, 3)
    assert Rational(3) == 3
    print("   ✅ Coercion works")

    print("\n4. Division by zero...")
    with pytest.raises(DivisionByZero):
        Rational(0).inverse()
    with pytest.raises(DivisionByZero):
        Rational(1) / 0
    with pytest.raises(DivisionByZero):
        Rational(1, 0)
    with pytest.raises(ZeroDivisionError):
        Rational(5) / Rational(0)
    print("   ✅ DivisionByZero raised (and is a ZeroDivisionError)")

    print("\n5. Powers and ordering...")
    assert Rational(2, 3) ** 2 == Rational(4, 9)
    assert Rational(2, 3) ** -1 == Rational(3, 2)
    assert Rational(1, 3) < Rational(1, 2)
    assert abs(Rational(-5, 7)) == Rational(5, 7)
    print("   ✅ Powers and comparisons exact")

    print("\n6. Large numerators stay exact...")
    big = Rational(3, 7) ** 200
    assert big * Rational(7, 3) ** 200 == 1
    print(f"   ✅ (3/7)^200 has {len(str(big.numerator))} digit numerator")

    print("\n" + "=" * 60)
    print("✅ Rational arithmetic tests passed!")
    print("=" * 60)


def test_rational_parse():
    """Test the n/d text format."""

    print("=" * 60)
    print("🧪 Testing Rational Parsing")
    print("=" * 60)

    print("\n1. Valid texts...")
    assert Rational.parse("-7/3") == Rational(-7, 3)
    assert Rational.parse(" 4 / 8 ") == Rational(1, 2)
    assert Rational.parse("+12") == Rational(12)
    assert QQ("5/10") == Rational(1, 2)
    print("   ✅ Parsed -7/3, 4/8, +12")

    print("\n2. Invalid texts...")
    for text in ("", "1.5", "1/", "a", "1/-2", "--1"):
        with pytest.raises(ParseError):
            Rational.parse(text)
    with pytest.raises(DivisionByZero):
        Rational.parse("1/0")
    print("   ✅ ParseError for malformed input")

    print("\n3. Type errors...")
    with pytest.raises(TypeError):
        Rational(1.5)
    with pytest.raises(TypeError):
        Rational(True)
    with pytest.raises(TypeError):
        QQ(2.0)
    print("   ✅ Floats and bools rejected")

    print("\n" + "=" * 60)
    print("✅ Rational parsing tests passed!")
    print("=" * 60)


@given(rationals)
def test_rational_render_round_trip(value):
    assert Rational.parse(str(value)) == value
    assert pickle.loads(pickle.dumps(value)) == value


@given(rationals, rationals, rationals)
def test_rational_field_axioms_property(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == 1


def test_field_axioms_sampled():
    """Test field axioms on 1000 seeded triples in Q and in F_p."""

    print("=" * 60)
    print("🧪 Testing Field Axioms (seeded)")
    print("=" * 60)

    rng = Random(1234)
    for field in (QQ, GF(3), GF(7), GF(101)):
        for _ in range(1000):
            x, y, z = (field.random_element(rng) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x - x == field.zero()
            if not x.is_zero():
                assert x * x.inverse() == field.one()
                assert (y / x) * x == y
        print(f"   ✅ {field.name}: 1000 triples")

    print("\n" + "=" * 60)
    print("✅ Field axiom tests passed!")
    print("=" * 60)


def test_prime_field():
    """Test F_p arithmetic."""

    print("=" * 60)
    print("🧪 Testing Prime Field Arithmetic")
    print("=" * 60)

    F5 = GF(5)

    print("\n1. Reduction...")
    assert F5(3) + F5(4) == F5(2)
    assert F5(12).value == 2
    assert F5(-1).value == 4
    assert (F5(2) - F5(4)).value == 3
    assert F5(3) * 4 == 2
    print("   ✅ 3 + 4 = 2 (mod 5)")

    print("\n2. Inverses...")
    assert F5(2).inverse() == F5(3)
    assert F5(1) / F5(2) == F5(3)
    with pytest.raises(DivisionByZero):
        F5(0).inverse()
    print("   ✅ 2^-1 = 3 (mod 5)")

    print("\n3. Rationals map into F_p...")
    assert F5(Rational(1, 2)) == F5(3)
    assert F5("3/4") == F5(2)
    with pytest.raises(DivisionByZero):
        F5(Rational(1, 5))
    print("   ✅ 1/2 ↦ 3 (mod 5)")

    print("\n4. Modulus mismatch...")
    with pytest.raises(ModulusMismatch):
        F5(1) + GF(7)(1)
    with pytest.raises(ModulusMismatch):
        GF(7)(F5(1))
    print("   ✅ ModulusMismatch raised")

    print("\n5. Invalid moduli...")
    with pytest.raises(EvenCharacteristic):
        GF(2)
    with pytest.raises(NotPrime):
        GF(9)
    with pytest.raises(QFormError):
        GF(1)
    print("   ✅ p = 2 and composite p rejected")

    print("\n6. Enumeration and hashing...")
    assert [e.value for e in GF(7).elements()] == list(range(7))
    assert len({F5(1), F5(6), F5(11)}) == 1
    for value in range(5):
        assert F5(value) == value and hash(F5(value)) == hash(value)
    assert {F5(1): "one"}[1] == "one"
    assert pickle.loads(pickle.dumps(F5(3))) == F5(3)
    assert isinstance(F5(3), PrimeFieldElement)
    print("   ✅ elements() and hashing consistent")

    print("\n" + "=" * 60)
    print("✅ Prime field tests passed!")
    print("=" * 60)


def test_is_prime_and_factory():
    """Test trial division and field specifications."""

    print("=" * 60)
    print("🧪 Testing Field Factory")
    print("=" * 60)

    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(9973)
    assert not is_prime(9999)
    print("   ✅ is_prime")

    assert get_field() is QQ
    assert get_field("QQ") is QQ
    assert get_field("F_7") == GF(7)
    assert get_field("GF(11)") == GF(11)
    assert get_field(13) == GF(13)
    with pytest.raises(ParseError):
        get_field("R")
    print("   ✅ get_field resolves Q, F_7, GF(11), 13")

    print("\n" + "=" * 60)
    print("✅ Factory tests passed!")
    print("=" * 60)


if __name__ == "__main__":
    test_rational_arithmetic()
    test_rational_parse()
    test_field_axioms_sampled()
    test_prime_field()
    test_is_prime_and_factory()

    print("\n" + "=" * 60)
    print("✅ ALL NUMERIC TESTS PASSED!")
    print("=" * 60)
