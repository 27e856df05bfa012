import json
import random
from collections import Counter
from fractions import Fraction

import pytest

from pencil_orbits.classifier import (
    HASSE_EDGES,
    IntegerBox,
    OrbitLabel,
    PencilError,
    PrimeFieldMode,
    base_locus_descriptor,
    canonical_representative,
    classify,
    det_form,
    make_pencil,
    pencil_from_json,
    random_pencil,
)
from pencil_orbits.exact_forms import GF, QQ, BinaryForm, SymMatrix3, binary_gcd, rank3

ORBITS = list(OrbitLabel)


def conic(field=QQ, **kw):
    return SymMatrix3.from_conic(**kw, field=field)


def pencil(first, second, field=QQ):
    return make_pencil(conic(field, **first), conic(field, **second))


def orbit_of(p):
    return classify(p)[0]


def random_invertible(rng, n, lo=-3, hi=3):
    while True:
        A = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        if n == 2:
            d = A[0][0] * A[1][1] - A[0][1] * A[1][0]
        else:
            d = (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
                 - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
                 + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))
        if d:
            return A


@pytest.mark.parametrize("field", [QQ, GF(10007), GF(3)], ids=["Q", "F10007", "F3"])
@pytest.mark.parametrize("o", ORBITS, ids=[o.name for o in ORBITS])
def test_representatives_classify_to_their_orbit(o, field):
    assert orbit_of(canonical_representative(o, field)) == o


def test_named_generators():
    assert orbit_of(pencil({"xx": 1, "yy": 1}, {"xx": 1, "zz": 1})) == OrbitLabel.O1
    assert orbit_of(pencil({"xx": 1}, {"yy": 1, "xz": 1})) == OrbitLabel.O5
    assert orbit_of(pencil({"xy": 1}, {"xz": 1})) == OrbitLabel.O7
    assert orbit_of(pencil({"xx": 1}, {"xy": 1})) == OrbitLabel.O8


def test_representative_generators():
    p = canonical_representative(OrbitLabel.O3)
    assert p.Q == conic(xx=1) and p.Qp == conic(yz=1)
    p = canonical_representative(OrbitLabel.O4)
    assert p.Q == conic(xx=1, yz=1) and p.Qp == conic(xz=1)
    assert p.Qp.e == Fraction(1, 2)
    p = canonical_representative(OrbitLabel.O6)
    assert p.Q == conic(xx=1) and p.Qp == conic(yy=1)


def test_make_pencil_errors():
    assert make_pencil(conic(xx=1), conic(yy=1))
    with pytest.raises(PencilError, match="not a pencil"):
        make_pencil(conic(xx=1), conic(xx=2))
    with pytest.raises(PencilError, match="not a pencil"):
        make_pencil(conic(), conic(yy=1))
    with pytest.raises(PencilError):
        make_pencil(conic(xx=1), conic(GF(7), yy=1))


def test_det_form_examples():
    assert det_form(pencil({"xx": 1, "yy": 1}, {"xz": 2})) == BinaryForm([0, 0, -1, 0], 3, QQ)
    assert det_form(pencil({"xx": 1}, {"yy": 1})).is_zero()
    f = det_form(pencil({"xx": 1, "yy": 1}, {"xx": 1, "zz": 1}))
    assert f == BinaryForm([0, 1, 1, 0], 3, QQ)  # st(s+t)


def test_certificates():
    label, cert = classify(canonical_representative(OrbitLabel.O3))
    assert cert.pattern == ((1, 1), (2, 1))
    assert cert.rank_at_multiple_root == 1
    assert cert.multiple_root is not None
    assert cert.rank1_locus is None
    label, cert = classify(canonical_representative(OrbitLabel.O1))
    assert cert.multiple_root is None and cert.rank_at_multiple_root is None
    label, cert = classify(canonical_representative(OrbitLabel.O8))
    assert cert.det_cubic.is_zero() and cert.rank1_locus.degree == 2
    label, cert = classify(canonical_representative(OrbitLabel.O7))
    assert cert.rank1_locus.degree == 0


def test_certificate_json_is_serializable():
    for o in ORBITS:
        _, cert = classify(canonical_representative(o))
        json.dumps(cert.to_json())


def test_degeneration_families(rng):
    for _ in range(20):
        t = Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 9))
        assert orbit_of(pencil({"xx": 1}, {"yy": 1, "xz": t})) == OrbitLabel.O5
        assert orbit_of(pencil({"xz": 1}, {"yz": 1, "xx": t})) == OrbitLabel.O4
    assert orbit_of(pencil({"xx": 1}, {"yy": 1})) == OrbitLabel.O6
    assert orbit_of(pencil({"xz": 1}, {"yz": 1})) == OrbitLabel.O7


@pytest.mark.parametrize("o", ORBITS, ids=[o.name for o in ORBITS])
def test_invariant_under_basis_change(o, rng):
    p = canonical_representative(o)
    for _ in range(100):
        (a, b), (c, d) = random_invertible(rng, 2)
        q = make_pencil(p.member(a, b), p.member(c, d))
        assert orbit_of(q) == o


@pytest.mark.parametrize("o", ORBITS, ids=[o.name for o in ORBITS])
def test_invariant_under_congruence(o, rng):
    p = canonical_representative(o)
    for _ in range(100):
        A = random_invertible(rng, 3)
        assert orbit_of(make_pencil(p.Q.congruent(A), p.Qp.congruent(A))) == o


def test_simple_roots_have_rank_two():
    """At every rational simple root of the det cubic the member has rank 2."""
    F = GF(31)
    rng = random.Random(11)
    points = [(F(1), F(x)) for x in range(31)] + [(F(0), F(1))]
    checked = 0
    for _ in range(300):
        p = random_pencil(rng, PrimeFieldMode(31))
        f = det_form(p)
        if f.is_zero():
            continue
        repeated = binary_gcd(f.ds(), f.dt())
        for s, t in points:
            if f(s, t) == 0 and repeated(s, t) != 0:
                assert rank3(p.member(s, t)) == 2
                checked += 1
    assert checked > 100


def test_random_pencil_is_deterministic():
    a = random_pencil(42, IntegerBox(10))
    b = random_pencil(42, IntegerBox(10))
    assert a == b
    assert random_pencil(43, IntegerBox(10)) != a
    assert random_pencil(5, PrimeFieldMode(10007)) == random_pencil(5, PrimeFieldMode(10007))


def test_random_pencil_gives_up():
    class Stuck:
        field = QQ

        def draw(self, rng):
            return 0

    with pytest.raises(PencilError):
        random_pencil(1, Stuck())


def test_sampling_modes_validate():
    with pytest.raises(ValueError):
        IntegerBox(0)
    with pytest.raises(ValueError):
        PrimeFieldMode(4).field


def test_integer_box_draws_classify():
    rng = random.Random(1)
    counts = Counter(orbit_of(random_pencil(rng, IntegerBox(10))) for _ in range(1000))
    assert sum(counts.values()) == 1000


def test_small_box_reaches_every_orbit():
    rng = random.Random(2)
    seen = Counter(orbit_of(random_pencil(rng, IntegerBox(1))) for _ in range(4000))
    assert set(seen) == set(ORBITS)


def test_prime_field_general_orbit_dominates():
    rng = random.Random(3)
    counts = Counter(orbit_of(random_pencil(rng, PrimeFieldMode(10007))) for _ in range(1000))
    assert counts[OrbitLabel.O1] >= 950


def test_labels_and_descriptors():
    assert base_locus_descriptor(OrbitLabel.O2) == "(2,1,1)"
    assert base_locus_descriptor(OrbitLabel.O6) == "{*}"
    assert base_locus_descriptor(OrbitLabel.O8) == "L∪{*}: *∈L"
    assert OrbitLabel.from_index(4) is OrbitLabel.O4
    assert [o.index for o in ORBITS] == list(range(1, 9))
    assert OrbitLabel.O7.label == "line-plus-point"
    with pytest.raises(ValueError):
        OrbitLabel.from_index(9)


def test_hasse_diagram_respects_codimension():
    for i, j in HASSE_EDGES:
        assert OrbitLabel.from_index(j).codimension > OrbitLabel.from_index(i).codimension


def test_json_round_trip():
    for field in (QQ, GF(10007)):
        for o in ORBITS:
            p = canonical_representative(o, field)
            data = json.loads(json.dumps(p.to_json()))
            assert pencil_from_json(data) == p


@pytest.mark.parametrize("data", [
    {"Q": ["1", "0", "0", "0", "0", "0"]},
    {"Q": ["1", "0"], "Qp": ["0", "1", "0", "0", "0", "0"]},
    {"Q": ["1.5", "0", "0", "0", "0", "0"], "Qp": ["0", "1", "0", "0", "0", "0"]},
    {"Q": ["1", "0", "0", "0", "0", "0"], "Qp": ["0", "1", "0", "0", "0", "0"], "field": {"type": "Fp", "p": 9}},
    {"Q": ["1", "0", "0", "0", "0", "0"], "Qp": ["2", "0", "0", "0", "0", "0"]},
])
def test_json_rejects_malformed(data):
    from pencil_orbits.exact_forms import FieldError
    with pytest.raises((PencilError, FieldError, ValueError)):
        pencil_from_json(data)
