import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from pencil_orbits.exact_forms import QQ, TernaryForm, hessian

u0, u1, u2 = (TernaryForm.variable(i) for i in range(3))
U = sp.symbols("u0 u1 u2")

CUBIC_MONOMIALS = [(i, j, 3 - i - j) for i in range(4) for j in range(4 - i)]


def to_sympy(F):
    return sum(sp.Rational(c.numerator, c.denominator) * U[0] ** e[0] * U[1] ** e[1] * U[2] ** e[2]
               for e, c in F.terms.items()) + sp.Integer(0)


def test_fermat_cubic():
    assert hessian(u0**3 + u1**3 + u2**3) == u0 * u1 * u2 * 216


def test_triangle():
    assert hessian(u0 * u1 * u2) == u0 * u1 * u2 * 2


def test_repeated_factor_survives():
    H = hessian(u0 * u0 * u1)
    # every monomial of H must be divisible by u0
    assert all(e[0] >= 1 for e in H.terms)


def test_hessian_rejects_non_cubics():
    with pytest.raises(ValueError):
        hessian(u0 * u1)


def test_degree_checks():
    with pytest.raises(ValueError):
        TernaryForm({(1, 1, 0): 1}, 3)
    with pytest.raises(ValueError):
        u0 + u0 * u1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=10, max_size=10))
def test_hessian_matches_sympy(cs):
    F = TernaryForm(dict(zip(CUBIC_MONOMIALS, cs)), 3, QQ)
    expected = sp.expand(sp.hessian(to_sympy(F), U).det())
    assert sp.expand(to_sympy(hessian(F)) - expected) == 0


def test_evaluation_and_restriction():
    F = u0**3 - u0 * u1 * u2 * 2 + u2**3
    assert F(1, 2, 3) == 1 - 12 + 27
    # coefficients in u2 at (u0, u1) = (1, 2): 1 - 4 u2 + u2^3
    assert F.as_poly_in_last(1, 2) == [1, -4, 0, 1]
