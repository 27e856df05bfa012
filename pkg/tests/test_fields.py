from fractions import Fraction

import pytest

from pencil_orbits.exact_forms import GF, QQ, FieldError, ModP, parse_rational


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)),
    ("-3/6", Fraction(-1, 2)),
    ("+4/2", Fraction(2)),
    (" 7 / 9 ", Fraction(7, 9)),
])
def test_parse_rational(text, value):
    x = parse_rational(text)
    assert x == value
    assert x.denominator > 0


@pytest.mark.parametrize("text", ["1.5", "1e3", "a", "1/0", "", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(FieldError):
        parse_rational(text)


def test_prime_field_requires_odd_prime():
    for bad in (2, 9, 1, 0):
        with pytest.raises(FieldError):
            GF(bad)
    assert GF(10007).p == 10007


def test_modp_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == 1
    assert a * b == 1
    assert a / b == F(3) * F(3)
    assert -a == 4
    assert a**6 == 1
    assert F("1/2") * 2 == 1
    assert F(Fraction(3, 4)) == F(3) / 4
    with pytest.raises(ZeroDivisionError):
        a / F(0)
    with pytest.raises(FieldError):
        ModP(1, 7) + ModP(1, 11)


def test_modp_is_immutable():
    with pytest.raises(AttributeError):
        GF(7)(3).v = 4


def test_prime_field_rejects_bad_denominator():
    with pytest.raises(FieldError):
        GF(7)(Fraction(1, 7))


def test_rationals_stay_reduced():
    x = QQ("-6/4")
    assert (x.numerator, x.denominator) == (-3, 2)
