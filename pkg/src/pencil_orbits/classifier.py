"""Classify a pencil of plane conics into one of the eight PGL_3 orbits.

Pencils not contained in the cubic fourfold S of singular conics are sorted by
how the line meets S: the root pattern of ``det(sQ + tQ')`` and the rank of
the member at a multiple root. Pencils inside S are sorted by how the line
meets the Veronese surface X of rank-1 conics, read off from the gcd of the
2x2 minors of ``sQ + tQ'``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .exact_forms import (
    GF,
    QQ,
    BinaryForm,
    SymMatrix3,
    discriminant,
    gcd_many,
    rank3,
    squarefree_decomposition,
)
from .exact_forms.fields import field_from_json
from .exact_forms.symmatrix import minors_generic
from .exact_forms.ternary import det3_generic


class PencilError(ValueError):
    """Input does not describe a pencil."""


class ClassificationError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""


class OrbitLabel(Enum):
    O1 = (1, "general", "(1,1,1,1)", 0)
    O2 = (2, "simply tangent", "(2,1,1)", 1)
    O3 = (3, "bitangent", "(2,2)", 2)
    O4 = (4, "osculating", "(3,1)", 2)
    O5 = (5, "superosculating", "(4)", 3)
    O6 = (6, "double-line-pair", "{*}", 4)
    O7 = (7, "line-plus-point", "L∪{*}: *∉L", 4)
    O8 = (8, "line-plus-embedded-point", "L∪{*}: *∈L", 5)

    @property
    def index(self) -> int:
        return self.value[0]

    @property
    def label(self) -> str:
        return self.value[1]

    @property
    def codimension(self) -> int:
        return self.value[3]

    @classmethod
    def from_index(cls, i: int) -> OrbitLabel:
        for o in cls:
            if o.index == i:
                return o
        raise ValueError(f"no orbit O{i}")


# Hasse diagram: O_i -> O_j when O_j is open in the boundary of the closure of O_i.
HASSE_EDGES = (
    (1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (4, 7), (5, 6), (6, 8), (7, 8),
)


def base_locus_descriptor(o: OrbitLabel) -> str:
    return o.value[2]


@dataclass(frozen=True)
class Pencil:
    Q: SymMatrix3
    Qp: SymMatrix3

    @property
    def field(self):
        return self.Q.field

    def member(self, s, t) -> SymMatrix3:
        return self.Q.scale(s) + self.Qp.scale(t)

    def to_json(self) -> dict:
        return {"Q": self.Q.to_strings(), "Qp": self.Qp.to_strings(), "field": self.field.to_json()}


def make_pencil(Q: SymMatrix3, Qp: SymMatrix3) -> Pencil:
    if Q.field != Qp.field:
        raise PencilError("not a pencil: matrices over different fields")
    if Q.is_proportional_to(Qp):
        raise PencilError("not a pencil: the two conics are proportional (or one is zero)")
    return Pencil(Q, Qp)


def pencil_from_json(data: dict) -> Pencil:
    try:
        fld = field_from_json(data.get("field"))
        return make_pencil(SymMatrix3.parse(data["Q"], fld), SymMatrix3.parse(data["Qp"], fld))
    except (KeyError, TypeError, AttributeError) as exc:
        raise PencilError(f"malformed pencil: {exc}") from exc


def _linear_entries(p: Pencil):
    F = p.field
    return [BinaryForm([x, y], 1, F) for x, y in zip(p.Q.entries(), p.Qp.entries())]


def det_form(p: Pencil) -> BinaryForm:
    """``det(sQ + tQ')`` as a binary cubic (possibly identically zero)."""
    return det3_generic(*_linear_entries(p))


def minor_forms(p: Pencil) -> tuple:
    """The six 2x2 minors of ``sQ + tQ'`` as binary quadratics."""
    return minors_generic(*_linear_entries(p))


@dataclass
class Certificate:
    det_cubic: BinaryForm
    pattern: tuple = ()
    multiple_root: tuple | None = None
    rank_at_multiple_root: int | None = None
    rank1_locus: BinaryForm | None = None

    def to_json(self) -> dict:
        F = self.det_cubic.field
        return {
            "det_cubic": self.det_cubic.coefficient_strings(),
            "pattern": [list(x) for x in self.pattern],
            "multiple_root": None if self.multiple_root is None else [F.format(x) for x in self.multiple_root],
            "rank_at_multiple_root": self.rank_at_multiple_root,
            "rank1_locus": None if self.rank1_locus is None else self.rank1_locus.coefficient_strings(),
        }


def classify(p: Pencil) -> tuple[OrbitLabel, Certificate]:
    f = det_form(p)
    if not f.is_zero():
        return _classify_smooth_member(p, f)
    return _classify_singular(p, f)


def _classify_smooth_member(p: Pencil, f: BinaryForm):
    parts = squarefree_decomposition(f)
    pattern = tuple((m, g.degree) for m, g in parts.items())
    cert = Certificate(det_cubic=f, pattern=pattern)
    if pattern == ((1, 3),):
        return OrbitLabel.O1, cert
    if pattern == ((1, 1), (2, 1)):
        root = parts[2].root_of_linear()
        choices = {2: OrbitLabel.O2, 1: OrbitLabel.O3}
    elif pattern == ((3, 1),):
        root = parts[3].root_of_linear()
        choices = {2: OrbitLabel.O4, 1: OrbitLabel.O5}
    else:
        raise ClassificationError(f"classification theorem violated: det cubic pattern {pattern}")
    r = rank3(p.member(*root))
    cert.multiple_root = root
    cert.rank_at_multiple_root = r
    if r not in choices:
        raise ClassificationError(f"classification theorem violated: rank {r} at multiple root")
    return choices[r], cert


def _classify_singular(p: Pencil, f: BinaryForm):
    minors = minor_forms(p)
    if all(m.is_zero() for m in minors):
        raise ClassificationError("classification theorem violated: every member has rank <= 1")
    g = gcd_many(minors)
    cert = Certificate(det_cubic=f, rank1_locus=g)
    if g.degree == 0:
        return OrbitLabel.O7, cert
    if g.degree == 2:
        if discriminant(g):
            return OrbitLabel.O6, cert
        return OrbitLabel.O8, cert
    raise ClassificationError(f"classification theorem violated: rank-1 locus of degree {g.degree}")


_REPRESENTATIVES = {
    # (first conic, second conic) as monomial -> coefficient maps
    OrbitLabel.O1: ({"xx": 1, "yy": 1}, {"xx": 1, "zz": 1}),
    OrbitLabel.O2: ({"xx": 1, "yy": 1}, {"xz": 1}),
    OrbitLabel.O3: ({"xx": 1}, {"yz": 1}),
    OrbitLabel.O4: ({"xx": 1, "yz": 1}, {"xz": 1}),
    OrbitLabel.O5: ({"xx": 1}, {"yy": 1, "xz": 1}),
    OrbitLabel.O6: ({"xx": 1}, {"yy": 1}),
    OrbitLabel.O7: ({"xy": 1}, {"xz": 1}),
    OrbitLabel.O8: ({"xx": 1}, {"xy": 1}),
}


def canonical_representative(o: OrbitLabel, field=QQ) -> Pencil:
    """Standard pencil for the orbit; a monomial like xz becomes e = 1/2."""
    first, second = _REPRESENTATIVES[o]
    return make_pencil(SymMatrix3.from_conic(**first, field=field),
                       SymMatrix3.from_conic(**second, field=field))


@dataclass(frozen=True)
class IntegerBox:
    bound: int = 10

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("integer box needs B >= 1")

    @property
    def field(self):
        return QQ

    def draw(self, rng: random.Random):
        return rng.randint(-self.bound, self.bound)


@dataclass(frozen=True)
class PrimeFieldMode:
    p: int = 10007

    @property
    def field(self):
        return GF(self.p)

    def draw(self, rng: random.Random):
        return rng.randrange(self.p)


MAX_DRAWS = 100


def random_symmatrix(rng: random.Random, mode) -> SymMatrix3:
    return SymMatrix3(*(mode.draw(rng) for _ in range(6)), mode.field)


def random_pencil(seed, mode=None) -> Pencil:
    """Two random symmetric matrices, re-drawn until they span a line."""
    mode = mode or IntegerBox(10)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(MAX_DRAWS):
        Q, Qp = random_symmatrix(rng, mode), random_symmatrix(rng, mode)
        if not Q.is_proportional_to(Qp):
            return Pencil(Q, Qp)
    raise PencilError(f"no pencil after {MAX_DRAWS} draws")
