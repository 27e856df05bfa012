"""Symmetric 3x3 matrices in the (a, b, c, h, e, f) layout of plane conics.

The conic ``a x^2 + 2h xy + b y^2 + 2e xz + 2f yz + c z^2`` has the matrix
``[[a, h, e], [h, b, f], [e, f, c]]``; off-diagonal entries carry no factor 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import QQ, field_of
from .linalg import rank
from .ternary import det3_generic

ENTRY_ORDER = ("a", "b", "c", "h", "e", "f")


@dataclass(frozen=True, eq=False)
class SymMatrix3:
    a: object
    b: object
    c: object
    h: object
    e: object
    f: object
    field: object = QQ

    def __post_init__(self):
        for name in ENTRY_ORDER:
            object.__setattr__(self, name, self.field(getattr(self, name)))

    @classmethod
    def of(cls, a=0, b=0, c=0, h=0, e=0, f=0, field=None) -> SymMatrix3:
        if field is None:
            field = field_of((a, b, c, h, e, f))
        return cls(a, b, c, h, e, f, field)

    @classmethod
    def from_conic(cls, xx=0, yy=0, zz=0, xy=0, xz=0, yz=0, field=QQ) -> SymMatrix3:
        """Matrix of ``xx x^2 + yy y^2 + zz z^2 + xy xy + xz xz + yz yz``."""
        half = field.one / 2
        return cls(xx, yy, zz, field(xy) * half, field(xz) * half, field(yz) * half, field)

    @classmethod
    def from_rows(cls, rows, field=QQ) -> SymMatrix3:
        for i in range(3):
            for j in range(3):
                if field(rows[i][j]) != field(rows[j][i]):
                    raise ValueError("matrix is not symmetric")
        return cls(rows[0][0], rows[1][1], rows[2][2], rows[0][1], rows[0][2], rows[1][2], field)

    @classmethod
    def parse(cls, entries, field=QQ) -> SymMatrix3:
        """From six literals in the order [a, b, c, h, e, f]."""
        if len(entries) != 6:
            raise ValueError(f"expected 6 entries [a,b,c,h,e,f], got {len(entries)}")
        return cls(*(field(str(x)) for x in entries), field)

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.h, self.e, self.f)

    def to_strings(self) -> list[str]:
        return [self.field.format(x) for x in self.entries()]

    def rows(self):
        return [[self.a, self.h, self.e], [self.h, self.b, self.f], [self.e, self.f, self.c]]

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __add__(self, other: SymMatrix3) -> SymMatrix3:
        return SymMatrix3(*(x + y for x, y in zip(self.entries(), other.entries())), self.field)

    def __sub__(self, other: SymMatrix3) -> SymMatrix3:
        return SymMatrix3(*(x - y for x, y in zip(self.entries(), other.entries())), self.field)

    def scale(self, k) -> SymMatrix3:
        k = self.field(k)
        return SymMatrix3(*(k * x for x in self.entries()), self.field)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymMatrix3):
            return NotImplemented
        return self.field == other.field and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def congruent(self, A) -> SymMatrix3:
        """``A^T M A`` for a 3x3 matrix ``A`` (list of rows)."""
        F = self.field
        M = self.rows()
        A = [[F(x) for x in row] for row in A]
        MA = [[sum((M[i][k] * A[k][j] for k in range(3)), F.zero) for j in range(3)] for i in range(3)]
        R = [[sum((A[k][i] * MA[k][j] for k in range(3)), F.zero) for j in range(3)] for i in range(3)]
        return SymMatrix3.from_rows(R, F)

    def minors(self) -> tuple:
        """The six distinct 2x2 minors (cofactors) of the symmetric matrix."""
        return minors_generic(*self.entries())

    def is_proportional_to(self, other: SymMatrix3) -> bool:
        """True when the two matrices span at most a line (either may be zero)."""
        x, y = self.entries(), other.entries()
        return all(x[i] * y[j] == x[j] * y[i] for i in range(6) for j in range(i + 1, 6))


def minors_generic(a, b, c, h, e, f) -> tuple:
    return (b * c - f * f, a * c - e * e, a * b - h * h,
            e * f - c * h, h * f - b * e, h * e - a * f)


def det3(M: SymMatrix3):
    """``abc + 2hef - af^2 - be^2 - ch^2``."""
    return det3_generic(*M.entries())


def rank3(M: SymMatrix3) -> int:
    """Rank of the matrix over its coefficient field, by elimination."""
    return rank(M.rows(), M.field)
