"""Tests for exact field arithmetic."""

import itertools
import random
from fractions import Fraction

import pytest

from chordcert.errors import (
    DivisionByZero,
    InfiniteField,
    MixedFields,
    NotPrime,
    ParseError,
    ReducibleModulus,
)
from chordcert.fields import (
    RATIONALS,
    FieldKind,
    build_extension,
    build_prime_field,
    enumerate_field,
    format_element,
    parse_element,
    parse_field_spec,
)


def test_prime_field_arithmetic(f5):
    """2 + 4 = 1 and 1/2 = 3 in F_5."""
    two, four = f5.from_int(2), f5.from_int(4)
    assert two + four == f5.from_int(1)
    assert two.inverse() == f5.from_int(3)
    assert two * 3 == 1
    assert f5.from_int(-1) == f5.from_int(4)


def test_extension_arithmetic(f4):
    """In F_4 = F_2[u]/(u^2+u+1): u*u = u+1 and 1/u = u+1."""
    u = f4.generator()
    u_plus_one = f4.from_coeffs((1, 1))
    assert u * u == u_plus_one
    assert u.inverse() == u_plus_one
    assert u * u_plus_one == f4.one()


def test_rational_arithmetic():
    a = RATIONALS.from_fraction(Fraction(1, 3))
    b = RATIONALS.from_fraction(Fraction(1, 6))
    assert a + b == RATIONALS.from_fraction(Fraction(1, 2))
    assert RATIONALS.from_fraction(Fraction(-3, 7)).inverse() == Fraction(-7, 3)


def test_division_by_zero(f5):
    with pytest.raises(DivisionByZero):
        f5.zero().inverse()
    with pytest.raises(DivisionByZero):
        f5.one() / f5.zero()


def test_mixed_fields_rejected(f5, f4):
    with pytest.raises(MixedFields):
        f5.one() + build_prime_field(7).one()
    with pytest.raises(MixedFields):
        f5.one() * f4.one()


def test_build_prime_field_rejects_composites():
    with pytest.raises(NotPrime):
        build_prime_field(4)
    with pytest.raises(NotPrime):
        build_prime_field(1)


def test_build_prime_field_checks_the_bound_first():
    """2^61 - 1 is prime but far past 2^31; it is rejected without a primality test."""
    with pytest.raises(NotPrime, match="exceeds"):
        build_prime_field(2**61 - 1)
    with pytest.raises(NotPrime, match="exceeds"):
        parse_field_spec("p=2305843009213693951")


def test_build_extension():
    """u^2+u+1 is irreducible over F_2, u^2+1 = (u+1)^2 is not; u^2+1 is irreducible over F_3."""
    f4 = build_extension(2, (1, 1, 1))
    assert f4.size == 4
    assert f4.kind is FieldKind.EXTENSION

    with pytest.raises(ReducibleModulus) as exc_info:
        build_extension(2, (1, 0, 1))
    assert exc_info.value.factor == [1, 1]
    assert exc_info.value.cofactor == [1, 1]

    f9 = build_extension(3, (1, 0, 1))
    assert f9.size == 9

    with pytest.raises(NotPrime):
        build_extension(4, (1, 1, 1))


def test_enumerate_field(f5, f4):
    assert [e.value for e in enumerate_field(build_prime_field(2))] == [0, 1]
    assert [e.value for e in f5.elements()] == [0, 1, 2, 3, 4]
    assert [e.value for e in f4.elements()] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    with pytest.raises(InfiniteField):
        list(enumerate_field(RATIONALS))


@pytest.mark.parametrize("spec", ["p=2", "p=3", "p=5", "p=7", "p=2,k=2,mod=1,1,1",
                                  "p=3,k=2,mod=1,0,1", "p=2,k=3,mod=1,1,0,1",
                                  "p=2,k=4,mod=1,1,0,0,1"])
def test_field_axioms_exhaustive(spec):
    """Ring axioms and inverses on every field with at most 16 elements used by the sweeps."""
    field = parse_field_spec(spec)
    elements = field.elements()
    zero, one = field.zero(), field.one()
    assert zero != one
    for a in elements:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if a != zero:
            assert a * a.inverse() == one
            assert a.inverse().inverse() == a
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(elements, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_canonical_representation_across_construction_paths(f4):
    """(a/b)*b and a agree on value and text for random elements."""
    rng = random.Random(7)
    for field in (build_prime_field(7), f4, RATIONALS):
        for _ in range(50):
            if field.is_finite:
                a = rng.choice(field.elements())
                b = rng.choice([e for e in field.elements() if e != field.zero()])
            else:
                a = field.from_fraction(Fraction(rng.randint(-50, 50), rng.randint(1, 50)))
                b = field.from_fraction(Fraction(rng.randint(1, 50), rng.randint(1, 50)))
            c = (a / b) * b
            assert c == a
            assert format_element(c) == format_element(a)
            assert hash(c) == hash(a)


def test_parse_field_spec():
    assert parse_field_spec("p=5").size == 5
    assert parse_field_spec("Q") is RATIONALS
    assert str(parse_field_spec("p=2,k=2,mod=1,1,1")) == "p=2,k=2,mod=1,1,1"
    for bad in ("p=", "q=5", "p=2,k=2", "p=2,k=2,mod=1,1", "p=2,k=2,mod=1,1,2"):
        with pytest.raises(ParseError):
            parse_field_spec(bad)


def test_parse_and_format_elements(f5, f4):
    assert parse_element(f5, "7") == f5.from_int(2)
    assert parse_element(RATIONALS, "-3/7") == Fraction(-3, 7)
    assert parse_element(f4, "1,1") == f4.from_coeffs((1, 1))
    assert parse_element(f4, "0;1") == f4.generator()
    assert format_element(f4.from_coeffs((1, 1))) == "1,1"
    assert format_element(RATIONALS.from_fraction(Fraction(1, 2))) == "1/2"
    with pytest.raises(ParseError):
        parse_element(f5, "1/2")
    with pytest.raises(ParseError):
        parse_element(f4, "1,0,1")
    with pytest.raises(DivisionByZero):
        parse_element(RATIONALS, "1/0")
