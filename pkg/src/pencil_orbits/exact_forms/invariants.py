"""Classical invariants of binary quartics and the j-invariant."""

from __future__ import annotations

from dataclasses import dataclass

from .binary import BinaryForm
from .fields import QQ, field_of
from .linalg import determinant


@dataclass(frozen=True)
class BinaryQuartic:
    """``a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4``."""

    a0: object
    a1: object
    a2: object
    a3: object
    a4: object

    @classmethod
    def from_form(cls, f: BinaryForm) -> BinaryQuartic:
        if f.degree != 4:
            raise ValueError(f"expected a quartic, got degree {f.degree}")
        return cls(*f.coeffs)

    def coeffs(self) -> tuple:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)

    def to_form(self, field=None) -> BinaryForm:
        return BinaryForm(self.coeffs(), 4, field or field_of(self.coeffs()))


def quartic_I(q: BinaryQuartic):
    a0, a1, a2, a3, a4 = q.coeffs()
    return 12 * a0 * a4 - 3 * a1 * a3 + a2 * a2


def quartic_J(q: BinaryQuartic):
    a0, a1, a2, a3, a4 = q.coeffs()
    return (72 * a0 * a2 * a4 - 27 * a0 * a3 * a3 - 27 * a1 * a1 * a4
            + 9 * a1 * a2 * a3 - 2 * a2 * a2 * a2)


def hankel_matrix(q: BinaryQuartic):
    a0, a1, a2, a3, a4 = q.coeffs()
    return [[12 * a0, 3 * a1, 2 * a2],
            [3 * a1, 2 * a2, 3 * a3],
            [2 * a2, 3 * a3, 12 * a4]]


def quartic_J_hankel(q: BinaryQuartic, field=None):
    """J as a quarter of the catalecticant determinant."""
    field = field or field_of(q.coeffs())
    return determinant(hankel_matrix(q), field) / 4


def j_of_cross_ratio(lam, field=None):
    """``256 (1 - l + l^2)^3 / (l^2 (1 - l)^2)`` for a cross-ratio ``l`` not in {0, 1}."""
    field = field or field_of([lam], QQ)
    lam = field(lam)
    if lam == 0 or lam == 1:
        raise ValueError("degenerate cross-ratio")
    num = 256 * (1 - lam + lam * lam) ** 3
    return num / (lam * lam * (1 - lam) ** 2)
