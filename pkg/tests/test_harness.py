import random

import pytest
import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester

from pencil_orbits.classifier import OrbitLabel
from pencil_orbits.exact_forms import QQ, BinaryForm, BinaryQuartic, SymMatrix3, TernaryForm, quartic_I, quartic_J
from pencil_orbits.harness import (
    CHECKS,
    EXPECTED_FANO,
    TrialReport,
    flex_eliminant,
    run_check,
    secant_lines_through,
    tangent_sextic,
    ternary_det,
    verify_flex_count,
    verify_generic_line,
    verify_secant_J,
    verify_table,
    verify_tangent_sextic,
)
from pencil_orbits.schubert import ChowElement

U = sp.symbols("u0 u1 u2")
x = BinaryForm.linear(1, 0, QQ)
y = BinaryForm.linear(0, 1, QQ)


def box_matrix(rng, bound=10):
    return SymMatrix3(*(rng.randint(-bound, bound) for _ in range(6)), QQ)


def ternary_to_sympy(F):
    return sum((sp.Rational(c.numerator, c.denominator) * U[0] ** e[0] * U[1] ** e[1] * U[2] ** e[2]
                for e, c in F.terms.items()), sp.Integer(0))


def test_tangent_sextic_is_homogeneous_sextic():
    rng = random.Random(5)
    for _ in range(30):
        q6 = tangent_sextic(box_matrix(rng), box_matrix(rng), box_matrix(rng))
        assert q6.degree == 6
        # homogeneity: q6(k a, k b) = k^6 q6(a, b)
        assert q6(2 * 3, 2 * 5) == 2**6 * q6(3, 5)


def test_tangent_sextic_matches_direct_discriminant():
    rng = random.Random(6)
    Q, Qp, Qpp = box_matrix(rng), box_matrix(rng), box_matrix(rng)
    q6 = tangent_sextic(Q, Qp, Qpp)
    from pencil_orbits.classifier import det_form, make_pencil
    from pencil_orbits.exact_forms import disc3
    for lam, mu in [(1, 0), (0, 1), (2, -3), (5, 7)]:
        f = det_form(make_pencil(Q, Qp.scale(lam) + Qpp.scale(mu)))
        assert q6(lam, mu) == disc3(*f.coeffs)


def test_flex_eliminant_matches_sylvester_resultant():
    rng = random.Random(9)
    for _ in range(3):
        F = ternary_det(box_matrix(rng, 3), box_matrix(rng, 3), box_matrix(rng, 3))
        from pencil_orbits.exact_forms import hessian
        Fs, Hs = ternary_to_sympy(F), ternary_to_sympy(hessian(F))
        expected = sp.expand(sylvester(Fs, Hs, U[2]).det())
        R = flex_eliminant(F)
        assert R.degree == 9
        got = sum((sp.Rational(c.numerator, c.denominator) * U[0] ** (9 - i) * U[1] ** i
                   for i, c in enumerate(R.coeffs)), sp.Integer(0))
        assert sp.expand(got - expected) == 0


def test_fermat_cubic_has_nine_flexes():
    u0, u1, u2 = (TernaryForm.variable(i) for i in range(3))
    F = u0**3 + u1**3 + u2**3
    from pencil_orbits.exact_forms import discriminant, squarefree_pattern
    R = flex_eliminant(F)
    # flexes of the Fermat cubic lie on u0 u1 u2 = 0; projection from [0:0:1] is
    # not generic (three flexes on each line through it), so just check the degree
    assert R.degree == 9 and not R.is_zero()
    assert sum(m * d for m, d in squarefree_pattern(R)) == 9


def test_secant_examples():
    assert quartic_J(BinaryQuartic.from_form(x**4 + y**4 * 3)) == 0
    assert quartic_I(BinaryQuartic.from_form(x**4 + y**4)) == 12
    generic = BinaryQuartic(*(QQ(c) for c in (1, 2, -3, 5, 7)))
    assert quartic_J(generic) != 0


def test_line_through_x4_minus_y4_lies_in_V_J():
    rng = random.Random(4)
    for _ in range(20):
        u, v = rng.randint(-9, 9), rng.randint(-9, 9)
        q = (x**4 - y**4) * u + (x * y * (x**2 + y**2)) * v
        assert quartic_J(BinaryQuartic.from_form(q)) == 0


def test_secant_lines_through_general_point():
    L1, L2 = BinaryForm([1, 2], 1, QQ), BinaryForm([3, -1], 1, QQ)
    point, ends = secant_lines_through(L1, L2, QQ("2/3"))
    for end in ends:
        for u, v in [(1, 0), (0, 1), (2, 5), (-3, 7)]:
            assert quartic_J(BinaryQuartic.from_form(point * u + end * v)) == 0


def test_reports_are_deterministic():
    for check in CHECKS:
        a = run_check(check, 5, seed=123)
        b = run_check(check, 5, seed=123)
        assert (a.trials, a.successes, a.failures) == (b.trials, b.successes, b.failures)


def test_parallel_matches_serial():
    a = run_check("tangent", 12, seed=7, workers=1)
    b = run_check("tangent", 12, seed=7, workers=3)
    assert (a.trials, a.successes, a.failures) == (b.trials, b.successes, b.failures)


def test_wrappers_pass_thresholds():
    assert verify_tangent_sextic(40, 1).passed()
    assert verify_flex_count(10, 1).passed()
    assert verify_generic_line(100, 1).passed()
    assert verify_secant_J(40, 1).passed()


def test_run_check_validates():
    with pytest.raises(ValueError):
        run_check("nope", 1, 0)
    with pytest.raises(ValueError):
        run_check("tangent", 0, 0)


def test_trial_report_json_and_merge():
    a = TrialReport("tangent", 3, 2, [("0/1", "q6 has a repeated root")], 0.5)
    b = TrialReport("tangent", 2, 2, [], 0.25)
    m = a.merge(b)
    assert (m.trials, m.successes, len(m.failures)) == (5, 4, 1)
    assert m.successes + len(m.failures) == m.trials
    assert set(m.to_json()) == {"check", "trials", "successes", "failures", "elapsed"}
    assert m.rate == 0.8 and not m.passed() and m.passed(0.8)
    with pytest.raises(ValueError):
        a.merge(TrialReport("flex"))


def test_table():
    report = verify_table()
    assert report.ok, report.mismatches()
    assert report.mismatches() == []
    degrees = [r.degree for r in report.rows]
    assert degrees == [14, 84, 36, 99, 56, 21, 24, 18]
    assert report.fano_principal_parts == report.fano_sym3 == EXPECTED_FANO
    row4 = report.rows[3]
    assert row4.orbit is OrbitLabel.O4
    assert row4.cls == ChowElement({(2, 0): 6, (1, 1): 9}, 5)
    assert report.rows[5].degree == 3 * 3 + 6 * 2
    assert report.to_json()["pass"] is True
    assert "FAIL" not in report.text()
