"""Binary forms (homogeneous polynomials in s, t) with exact coefficients.

Coefficient ``i`` of a degree-``d`` form multiplies ``s^(d-i) t^i``. A root
``[s0 : t0]`` is a point of P^1; ``t`` divides the form exactly when the
root ``[1 : 0]`` occurs, which shows up as leading zero coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from . import univariate as up
from .fields import QQ, field_of
from .linalg import determinant


class BinaryForm:
    __slots__ = ("degree", "coeffs", "field")

    def __init__(self, coeffs, degree: int | None = None, field=None):
        coeffs = list(coeffs)
        if field is None:
            field = field_of(coeffs)
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            raise ValueError("binary form needs a non-negative degree")
        if len(coeffs) != degree + 1:
            raise ValueError(f"degree {degree} form needs {degree + 1} coefficients, got {len(coeffs)}")
        self.degree = degree
        self.coeffs = tuple(field(c) for c in coeffs)
        self.field = field

    @classmethod
    def zero(cls, degree: int, field=QQ) -> BinaryForm:
        return cls([field.zero] * (degree + 1), degree, field)

    @classmethod
    def constant(cls, c, field=QQ) -> BinaryForm:
        return cls([c], 0, field)

    @classmethod
    def linear(cls, cs, ct, field=None) -> BinaryForm:
        """The form ``cs*s + ct*t``."""
        return cls([cs, ct], 1, field)

    @classmethod
    def from_dehomogenized(cls, poly, degree: int, field) -> BinaryForm:
        """Homogenize ``poly(x)`` (low-to-high, ``x = s/t``) to the given degree."""
        if len(poly) - 1 > degree:
            raise ValueError("polynomial degree exceeds the form degree")
        coeffs = [field.zero] * (degree + 1)
        for k, c in enumerate(poly):
            coeffs[degree - k] = c
        return cls(coeffs, degree, field)

    def dehomogenize(self):
        """``f(x, 1)`` as a low-to-high coefficient list."""
        return up.trim(reversed(self.coeffs))

    def t_multiplicity(self) -> int:
        """Exponent of the largest power of t dividing the (nonzero) form."""
        k = 0
        while k <= self.degree and not self.coeffs[k]:
            k += 1
        return k

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, BinaryForm):
            if other.field != self.field:
                raise ValueError("binary forms over different fields")
            return other
        return BinaryForm.constant(self.field(other), self.field)

    def _check_degree(self, other):
        if other.degree != self.degree:
            raise ValueError(f"adding forms of degree {self.degree} and {other.degree}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check_degree(other)
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)], self.degree, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        self._check_degree(other)
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)], self.degree, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return BinaryForm([-a for a in self.coeffs], self.degree, self.field)

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            c = self.field(other)
            return BinaryForm([c * a for a in self.coeffs], self.degree, self.field)
        other = self._coerce(other)
        out = [self.field.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(out, self.degree + other.degree, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BinaryForm.constant(self.field.one, self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __call__(self, s, t):
        f = self.field
        s, t = f(s), f(t)
        d = self.degree
        return sum((c * s ** (d - i) * t**i for i, c in enumerate(self.coeffs)), f.zero)

    def ds(self) -> BinaryForm:
        """Partial derivative in s (degree drops by one)."""
        if self.degree == 0:
            return BinaryForm.zero(0, self.field)
        d = self.degree
        return BinaryForm([c * (d - i) for i, c in enumerate(self.coeffs[:-1])], d - 1, self.field)

    def dt(self) -> BinaryForm:
        if self.degree == 0:
            return BinaryForm.zero(0, self.field)
        return BinaryForm([c * i for i, c in enumerate(self.coeffs)][1:], self.degree - 1, self.field)

    def leading(self):
        """First nonzero coefficient (highest power of s)."""
        for c in self.coeffs:
            if c:
                return c
        return self.field.zero

    def monic(self) -> BinaryForm:
        if self.is_zero():
            return self
        return self * (self.field.one / self.leading())

    def primitive(self) -> BinaryForm:
        """Over Q: integer coefficients, content 1, positive leading coefficient."""
        if self.field != QQ or self.is_zero():
            return self.monic()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = igcd(g, v)
        if self.leading() < 0:
            g = -g
        return BinaryForm([Fraction(v, g) for v in ints], self.degree, self.field)

    def root_of_linear(self):
        """The point ``[s0 : t0]`` where a nonzero linear form vanishes."""
        if self.degree != 1 or self.is_zero():
            raise ValueError("not a nonzero linear form")
        a, b = self.coeffs
        return (-b, a) if a else (self.field.one, self.field.zero)

    def coefficient_strings(self) -> list[str]:
        return [self.field.format(c) for c in self.coeffs]

    def __repr__(self):
        return f"BinaryForm({self.coefficient_strings()}, degree={self.degree}, field={self.field!r})"

    def __str__(self):
        return format_form(self)


def _monomial(d: int, i: int, names=("s", "t")) -> str:
    parts = []
    for var, e in ((names[0], d - i), (names[1], i)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def format_form(f: BinaryForm, names=("s", "t")) -> str:
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        mono = _monomial(f.degree, i, names)
        text = f.field.format(c)
        neg = text.startswith("-")
        mag = text.lstrip("-")
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        terms.append(("-" if neg else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic homogeneous gcd of two binary forms (not both zero)."""
    if f.field != g.field:
        raise ValueError("binary forms over different fields")
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd undefined for two zero forms")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    field = f.field
    k = min(f.t_multiplicity(), g.t_multiplicity())
    h = up.gcd(f.dehomogenize(), g.dehomogenize(), field)
    return BinaryForm.from_dehomogenized(h, len(h) - 1 + k, field)


def gcd_many(forms) -> BinaryForm:
    """gcd of a collection of forms, ignoring zero members."""
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("gcd undefined for all-zero forms")
    g = nonzero[0].monic()
    for f in nonzero[1:]:
        g = binary_gcd(g, f)
    return g


def squarefree_decomposition(f: BinaryForm) -> dict[int, BinaryForm]:
    """Map multiplicity ``m`` to the monic product of the distinct roots of multiplicity ``m``."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero form")
    field = f.field
    k = f.t_multiplicity()
    parts = {m: BinaryForm.from_dehomogenized(p, len(p) - 1, field)
             for m, p in up.squarefree_decomposition(f.dehomogenize(), field).items()}
    if k:
        t = BinaryForm([field.zero, field.one], 1, field)
        parts[k] = parts[k] * t if k in parts else t
    return dict(sorted(parts.items()))


def squarefree_pattern(f: BinaryForm) -> tuple[tuple[int, int], ...]:
    """Sorted ``(multiplicity, degree of cluster)`` pairs; sum of products is ``f.degree``."""
    return tuple((m, g.degree) for m, g in squarefree_decomposition(f).items())


def resultant(f: BinaryForm, g: BinaryForm):
    """Homogeneous Sylvester resultant; zero iff f and g share a projective root."""
    if f.field != g.field:
        raise ValueError("binary forms over different fields")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero form")
    m, n = f.degree, g.degree
    field = f.field
    size = m + n
    rows = []
    for i in range(n):
        rows.append([field.zero] * i + list(f.coeffs) + [field.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([field.zero] * i + list(g.coeffs) + [field.zero] * (size - n - 1 - i))
    return determinant(rows, field)


def discriminant(f: BinaryForm):
    """Discriminant of a binary form of degree >= 1.

    Normalized as ``(-1)^(n(n-1)/2) Res(f, df/ds) / a0``, so on cubics it
    equals :func:`disc3` exactly (constant 1) and on quadratics it is
    ``b^2 - 4ac``. Forms divisible by t are first moved by the unimodular
    substitution ``t -> t + k s``, under which the discriminant is invariant.
    """
    if f.is_zero():
        raise ValueError("discriminant of the zero form")
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    field = f.field
    g = f
    if not f.coeffs[0]:
        g = None
        limit = field.characteristic or (n + 1)
        for k in range(1, min(limit, n + 1) + 1):
            if f(1, k):
                g = substitute_linear(f, (1, 0), (k, 1))
                break
        if g is None:
            raise ArithmeticError("no shift makes the leading coefficient nonzero")
    if n == 1:
        return field.one
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return resultant(g, g.ds()) * sign / g.coeffs[0]


def substitute_linear(f: BinaryForm, s_img, t_img) -> BinaryForm:
    """``f(a*s + b*t, c*s + d*t)`` for ``s_img = (a, b)``, ``t_img = (c, d)``."""
    field = f.field
    ls = BinaryForm.linear(s_img[0], s_img[1], field)
    lt = BinaryForm.linear(t_img[0], t_img[1], field)
    out = BinaryForm.zero(f.degree, field)
    for i, c in enumerate(f.coeffs):
        if c:
            out = out + (ls ** (f.degree - i)) * (lt**i) * c
    return out


def disc3(c0, c1, c2, c3):
    """Discriminant of ``c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3`` over any commutative ring.

    Uses the standard term ``-4 c0 c2^3``, which keeps the result homogeneous
    of degree 6 when ``c_i`` are forms of degree ``i``.
    """
    return (18 * c0 * c1 * c2 * c3
            - 4 * c1 * c1 * c1 * c3
            + c1 * c1 * c2 * c2
            - 4 * c0 * c2 * c2 * c2
            - 27 * c0 * c0 * c3 * c3)
