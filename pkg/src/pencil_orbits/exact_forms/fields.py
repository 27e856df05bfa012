"""Exact scalar fields: the rationals and prime fields F_p (p odd).

Rationals are plain :class:`fractions.Fraction` values. Prime-field elements
are :class:`ModP` instances. Code that needs a zero or a one, or has to coerce
an ``int``, goes through a field object (:data:`QQ` or :func:`GF`).
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

DEFAULT_PRIME = 10007

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue class modulo an odd prime. Immutable."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v % p)

    def __setattr__(self, name, value):
        raise AttributeError("ModP is immutable")

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return ModP(pow(self.v, -1, self.p), self.p) ** (-n)
        return ModP(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field Q, with elements represented as ``Fraction``."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise FieldError("cannot coerce an F_p element into Q")
        if isinstance(x, str):
            return parse_rational(x)
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction))

    def format(self, x) -> str:
        return str(Fraction(x))

    def to_json(self) -> dict:
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p for an odd prime p."""

    def __init__(self, p: int):
        if p <= 2 or not is_prime(p):
            raise FieldError(f"prime field needs an odd prime, got {p}")
        self.p = p
        self.characteristic = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldError(f"element of F_{x.p} is not in F_{self.p}")
            return x
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in F_{self.p}")
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModP(int(x), self.p)

    def contains(self, x) -> bool:
        return isinstance(x, ModP) and x.p == self.p

    def format(self, x) -> str:
        return str(self(x).v)

    def to_json(self) -> dict:
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional sign) into a reduced Fraction."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise FieldError(f"malformed rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise FieldError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def field_of(values, default=QQ):
    """Field of the first ``ModP`` among ``values``; otherwise ``default``."""
    for v in values:
        if isinstance(v, ModP):
            return GF(v.p)
    return default


def field_from_json(desc) -> RationalField | PrimeField:
    if desc is None:
        return QQ
    kind = desc.get("type")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(desc.get("p", DEFAULT_PRIME)))
    raise FieldError(f"unknown field type {kind!r}")
