from fractions import Fraction

import pytest

from hopfbrace.fields import GF, QQ, FieldSpec


def test_rational_coercion():
    assert QQ.coerce("3/4") == Fraction(3, 4)
    assert QQ.coerce(-2) == Fraction(-2)
    assert QQ.coerce(Fraction(1, 3)) == Fraction(1, 3)


def test_rational_scalar_str_roundtrip():
    for v in (Fraction(0), Fraction(5), Fraction(-7, 3)):
        assert QQ.coerce(QQ.scalar_str(v)) == v


def test_prime_field_coercion():
    F7 = GF(7)
    assert F7.coerce(10) == 3
    assert F7.coerce(-1) == 6
    # "1/2" means the inverse of 2 mod 7
    assert F7.coerce("1/2") == 4


def test_prime_field_bad_denominator():
    with pytest.raises(ZeroDivisionError):
        GF(5).coerce("1/10")


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_parse_and_json_roundtrip():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("Fp:11") == GF(11)
    for F in (QQ, GF(7)):
        assert FieldSpec.from_json(F.to_json()) == F
    with pytest.raises(ValueError):
        FieldSpec.parse("R")


def test_scalar_str_mod_p():
    F5 = GF(5)
    assert F5.scalar_str(F5.coerce(12)) == "2"
