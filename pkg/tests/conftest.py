import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import strategies as st

from pencil_orbits.exact_forms import QQ, BinaryForm, SymMatrix3

S, T = sp.symbols("s t")

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def linear_or_quadratic(draw):
    deg = draw(st.integers(1, 2))
    coeffs = draw(st.lists(small_ints, min_size=deg + 1, max_size=deg + 1).filter(any))
    return BinaryForm(coeffs, deg, QQ)


@st.composite
def factored_forms(draw, max_degree=6):
    """Products of small factors with multiplicities, so repeated roots are common."""
    out = BinaryForm.constant(draw(st.integers(1, 5)) * draw(st.sampled_from([1, -1])), QQ)
    for _ in range(draw(st.integers(1, 4))):
        g = draw(linear_or_quadratic())
        m = draw(st.integers(1, 3))
        if out.degree + m * g.degree > max_degree:
            break
        out = out * g**m
    if out.degree == 0:
        out = out * BinaryForm.linear(1, draw(small_ints), QQ)
    return out


@st.composite
def dense_forms(draw, min_degree=1, max_degree=6):
    deg = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(small_ints, min_size=deg + 1, max_size=deg + 1).filter(any))
    return BinaryForm(coeffs, deg, QQ)


binary_forms = st.one_of(factored_forms(), dense_forms())


@st.composite
def sym_matrices(draw, bound=5):
    return SymMatrix3(*(draw(st.integers(-bound, bound)) for _ in range(6)), QQ)


def to_sympy(f: BinaryForm):
    d = f.degree
    return sum(sp.Rational(c.numerator, c.denominator) * S ** (d - i) * T**i for i, c in enumerate(f.coeffs))


def from_sympy(expr, degree):
    poly = sp.Poly(expr, S, T)
    coeffs = [Fraction(int(sp.fraction(poly.coeff_monomial(S ** (degree - i) * T**i))[0]),
                       int(sp.fraction(poly.coeff_monomial(S ** (degree - i) * T**i))[1]))
              for i in range(degree + 1)]
    return BinaryForm(coeffs, degree, QQ)


@pytest.fixture
def rng():
    return random.Random(20240601)
