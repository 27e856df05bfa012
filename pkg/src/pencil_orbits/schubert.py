"""Chow ring of the Grassmannian of lines G(1, N) in the Schubert basis.

Classes ``sigma_{a,b}`` are indexed by two-row partitions in the box
``N-1 >= a >= b >= 0``. Multiplication by a special class ``sigma_h`` is the
two-row Pieri rule; general products go through Giambelli,
``sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}``.

Text syntax: ``"6*s[2] + 9*s[1,1] @ N=5"``.
"""

from __future__ import annotations

import re
from math import comb

DEFAULT_N = 5


class SchubertError(ValueError):
    pass


def check_partition(a: int, b: int, N: int) -> None:
    if not (N - 1 >= a >= b >= 0):
        raise SchubertError(f"({a},{b}) is outside the box N-1 >= a >= b >= 0 for N={N}")


def partitions(N: int, codim: int | None = None):
    """All (a, b) in the box, optionally of a fixed codimension a+b."""
    out = [(a, b) for a in range(N - 1, -1, -1) for b in range(a, -1, -1)]
    if codim is not None:
        out = [p for p in out if sum(p) == codim]
    return sorted(out, key=lambda p: (p[0] + p[1], -p[0]))


class ChowElement:
    """Homogeneous integer combination of Schubert classes in A G(1, N)."""

    __slots__ = ("N", "terms")

    def __init__(self, terms: dict | None = None, N: int = DEFAULT_N):
        clean = {}
        codims = set()
        for (a, b), c in (terms or {}).items():
            check_partition(a, b, N)
            if int(c) != c:
                raise SchubertError(f"non-integer coefficient {c}")
            if c:
                clean[(a, b)] = clean.get((a, b), 0) + int(c)
                codims.add(a + b)
        if len(codims) > 1:
            raise SchubertError(f"inhomogeneous class with codimensions {sorted(codims)}")
        self.N = N
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def sigma(cls, a: int, b: int = 0, N: int = DEFAULT_N) -> ChowElement:
        check_partition(a, b, N)
        return cls({(a, b): 1}, N)

    @classmethod
    def zero(cls, N: int = DEFAULT_N) -> ChowElement:
        return cls({}, N)

    @property
    def codim(self) -> int | None:
        """Codimension, or None for the zero element."""
        for a, b in self.terms:
            return a + b
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, a: int, b: int = 0) -> int:
        return self.terms.get((a, b), 0)

    def _check(self, other: ChowElement):
        if not isinstance(other, ChowElement):
            raise TypeError(f"expected ChowElement, got {type(other).__name__}")
        if other.N != self.N:
            raise SchubertError(f"context mismatch: N={self.N} vs N={other.N}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ChowElement(out, self.N)

    __radd__ = __add__

    def __neg__(self):
        return ChowElement({k: -v for k, v in self.terms.items()}, self.N)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement({k: v * other for k, v in self.terms.items()}, self.N)
        if isinstance(other, ChowElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = ChowElement.sigma(0, 0, self.N)
        for _ in range(n):
            out = multiply(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __repr__(self):
        return f"ChowElement({format_class(self)!r})"

    def __str__(self):
        return format_class(self, with_context=False)


def pieri(x: ChowElement, h: int) -> ChowElement:
    """Multiply by the special class ``sigma_h`` (two-row horizontal strips)."""
    if h < 0:
        raise SchubertError("pieri needs h >= 0")
    N = x.N
    out: dict = {}
    for (a, b), c in x.terms.items():
        for b2 in range(b, a + 1):
            a2 = a + b + h - b2
            if a2 < a or a2 > N - 1:
                continue
            out[(a2, b2)] = out.get((a2, b2), 0) + c
    return ChowElement(out, N)


def _times_basis(x: ChowElement, a: int, b: int) -> ChowElement:
    # Giambelli: sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}
    if b == 0:
        return pieri(x, a)
    return pieri(pieri(x, b), a) - pieri(pieri(x, b - 1), a + 1)


def multiply(x: ChowElement, y: ChowElement) -> ChowElement:
    x._check(y)
    out = ChowElement.zero(x.N)
    for (a, b), c in y.terms.items():
        out = out + _times_basis(x, a, b) * c
    return out


def integral(x: ChowElement) -> int:
    """Degree of a top-codimension class (coefficient of the point class)."""
    return x.coefficient(x.N - 1, x.N - 1)


def schubert_degree(a: int, b: int, N: int = DEFAULT_N) -> int:
    """Plücker degree of the Schubert cycle: C(2N-2-a-b, N-1-b) (a-b+1) / (N-b)."""
    check_partition(a, b, N)
    num = comb(2 * N - 2 - a - b, N - 1 - b) * (a - b + 1)
    q, r = divmod(num, N - b)
    if r:
        raise ArithmeticError(f"hook-length quotient not integral for ({a},{b}) N={N}")
    return q


def plucker_degree(x: ChowElement) -> int:
    return sum(c * schubert_degree(a, b, x.N) for (a, b), c in x.terms.items())


def basis_name(a: int, b: int, symbol: str = "s") -> str:
    return f"{symbol}[{a}]" if b == 0 else f"{symbol}[{a},{b}]"


def _format_terms(items, suffix: str = "") -> str:
    pieces = []
    for (a, b), c in items:
        name = basis_name(a, b) + suffix
        body = name if abs(c) == 1 else f"{abs(c)}*{name}"
        pieces.append(("-" if c < 0 else "+", body))
    if not pieces:
        return ""
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def sorted_terms(x: ChowElement):
    return sorted(x.terms.items(), key=lambda kv: -kv[0][0])


def format_class(x: ChowElement, with_context: bool = True) -> str:
    text = _format_terms(sorted_terms(x)) or "0"
    return f"{text} @ N={x.N}" if with_context else text


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(s\[\s*\d+\s*(?:,\s*\d+\s*)?\])|(z)|([-+*()^]))")
_CONTEXT_RE = re.compile(r"@\s*N\s*=\s*(\d+)\s*$")


def tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise SchubertError(f"unexpected input at {text[pos:]!r}")
        num, cls, zeta, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif cls is not None:
            inner = [int(v) for v in cls[2:-1].split(",")]
            out.append(("cls", (inner[0], inner[1] if len(inner) > 1 else 0)))
        elif zeta is not None:
            out.append(("z", None))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over + - * ^ and parentheses.

    ``make_class(a, b)``, ``make_int(n)`` and ``make_zeta()`` build ring
    values, so the same grammar serves A G(1,N) and A(Phi).
    """

    def __init__(self, tokens, make_class, make_int, make_zeta=None):
        self.toks = tokens
        self.i = 0
        self.make_class = make_class
        self.make_int = make_int
        self.make_zeta = make_zeta

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        val = self.expr()
        if self.i != len(self.toks):
            raise SchubertError(f"trailing input near token {self.peek()}")
        return val

    def expr(self):
        kind, v = self.peek()
        neg = False
        if kind == "op" and v in "+-":
            self.take()
            neg = v == "-"
        val = self.term()
        if neg:
            val = -val
        while True:
            kind, v = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                rhs = self.term()
                if isinstance(val, int) and not isinstance(rhs, int):
                    val = self.make_int(val)
                elif isinstance(rhs, int) and not isinstance(val, int):
                    rhs = self.make_int(rhs)
                val = val + rhs if v == "+" else val - rhs
            else:
                return val

    def term(self):
        val = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            val = val * self.power()
        return val

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise SchubertError("exponent must be a non-negative integer")
            if isinstance(base, int):
                return base**n
            out = None
            for _ in range(n):
                out = base if out is None else out * base
            return out if out is not None else self.make_int(1)
        return base

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return v
        if kind == "cls":
            return self.make_class(*v)
        if kind == "z":
            if self.make_zeta is None:
                raise SchubertError("'z' is only allowed in flag-bundle expressions")
            return self.make_zeta()
        if (kind, v) == ("op", "("):
            val = self.expr()
            if self.take() != ("op", ")"):
                raise SchubertError("unbalanced parentheses")
            return val
        raise SchubertError(f"unexpected token {v!r}")


def split_context(text: str, N: int | None = None) -> tuple[str, int]:
    m = _CONTEXT_RE.search(text)
    if m:
        ctx = int(m.group(1))
        if N is not None and N != ctx:
            raise SchubertError(f"context N={ctx} in text conflicts with N={N}")
        return text[: m.start()], ctx
    return text, N if N is not None else DEFAULT_N


def parse_class(text: str, N: int | None = None) -> ChowElement:
    """Parse and evaluate an expression such as ``"s[1]*s[1] - s[2] @ N=5"``."""
    body, N = split_context(text, N)
    val = _Parser(
        tokenize(body),
        make_class=lambda a, b: ChowElement.sigma(a, b, N),
        make_int=lambda n: ChowElement.sigma(0, 0, N) * n,
    ).parse()
    if isinstance(val, int):
        val = ChowElement.sigma(0, 0, N) * val
    return val
