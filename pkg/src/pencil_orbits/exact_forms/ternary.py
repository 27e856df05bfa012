"""Ternary forms in u0, u1, u2 and the Hessian of a plane cubic."""

from __future__ import annotations

from .fields import QQ, field_of


class TernaryForm:
    __slots__ = ("degree", "terms", "field")

    def __init__(self, terms: dict, degree: int, field=None):
        if field is None:
            field = field_of(terms.values())
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != 3 or min(exps) < 0 or sum(exps) != degree:
                raise ValueError(f"exponent {exps} does not have total degree {degree}")
            c = field(c)
            if c:
                clean[exps] = c
        self.degree = degree
        self.terms = clean
        self.field = field

    @classmethod
    def linear(cls, c0, c1, c2, field=QQ) -> TernaryForm:
        return cls({(1, 0, 0): c0, (0, 1, 0): c1, (0, 0, 1): c2}, 1, field)

    @classmethod
    def variable(cls, i: int, field=QQ) -> TernaryForm:
        e = [0, 0, 0]
        e[i] = 1
        return cls({tuple(e): 1}, 1, field)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, TernaryForm):
            return other
        return TernaryForm({(0, 0, 0): other}, 0, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        if other.degree != self.degree:
            raise ValueError(f"adding ternary forms of degree {self.degree} and {other.degree}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, self.field.zero) + c
        return TernaryForm(out, self.degree, self.field)

    __radd__ = __add__

    def __neg__(self):
        return TernaryForm({e: -c for e, c in self.terms.items()}, self.degree, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            c = self.field(other)
            return TernaryForm({e: c * v for e, v in self.terms.items()}, self.degree, self.field)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, self.field.zero) + c1 * c2
        return TernaryForm(out, self.degree + other.degree, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a form")
        out = TernaryForm({(0, 0, 0): 1}, 0, self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def partial(self, i: int) -> TernaryForm:
        if self.degree == 0:
            return TernaryForm({}, 0, self.field)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return TernaryForm(out, self.degree - 1, self.field)

    def __call__(self, u0, u1, u2):
        f = self.field
        u = (f(u0), f(u1), f(u2))
        return sum((c * u[0] ** e[0] * u[1] ** e[1] * u[2] ** e[2] for e, c in self.terms.items()), f.zero)

    def as_poly_in_last(self, u0, u1):
        """Specialize u0, u1 and return the coefficients in u2 (low-to-high, length degree+1)."""
        f = self.field
        u0, u1 = f(u0), f(u1)
        out = [f.zero] * (self.degree + 1)
        for e, c in self.terms.items():
            out[e[2]] = out[e[2]] + c * u0 ** e[0] * u1 ** e[1]
        return out

    def __repr__(self):
        body = " + ".join(f"{self.field.format(c)}*u^{e}" for e, c in sorted(self.terms.items(), reverse=True))
        return f"TernaryForm({body or '0'}, degree={self.degree})"


def det3_generic(a, b, c, h, e, f):
    """``abc + 2hef - af^2 - be^2 - ch^2`` for entries in any commutative ring."""
    return a * b * c + 2 * h * e * f - a * f * f - b * e * e - c * h * h


def hessian(F: TernaryForm) -> TernaryForm:
    """Determinant of the matrix of second partials of a ternary cubic."""
    if F.degree != 3:
        raise ValueError(f"hessian expects a cubic, got degree {F.degree}")
    d = [F.partial(i) for i in range(3)]
    H = [[d[i].partial(j) for j in range(3)] for i in range(3)]
    return det3_generic(H[0][0], H[1][1], H[2][2], H[0][1], H[0][2], H[1][2])
