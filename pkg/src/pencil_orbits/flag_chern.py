"""The Chow ring of the flag bundle Phi over G(1,5) and the Chern classes that
compute orbit-closure classes.

``A(Phi) = A G(1,5)[z] / (z^2 - sigma_1 z + sigma_{1,1})``. Every element has
the normal form ``alpha*z + beta`` and pushforward to G(1,5) keeps ``alpha``.
"""

from __future__ import annotations

from .schubert import (
    DEFAULT_N,
    ChowElement,
    SchubertError,
    _Parser,
    _format_terms,
    sorted_terms,
    split_context,
    tokenize,
)

HYPERSURFACE_DEGREE = 3  # Delta is a cubic, so principal parts are of O(3)
N = DEFAULT_N
FANO_MULTIPLICITY_O6 = 4


def _sigma(a, b=0):
    return ChowElement.sigma(a, b, N)


class FlagElement:
    """``alpha*z + beta`` with codim(beta) = codim(alpha) + 1."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha: ChowElement | None = None, beta: ChowElement | None = None):
        alpha = alpha if alpha is not None else ChowElement.zero(N)
        beta = beta if beta is not None else ChowElement.zero(N)
        if alpha.N != N or beta.N != N:
            raise SchubertError(f"flag bundle lives over G(1,{N})")
        if alpha and beta and alpha.codim + 1 != beta.codim:
            raise SchubertError(
                f"grading mismatch: z-coefficient of codim {alpha.codim}, constant of codim {beta.codim}")
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def zeta(cls) -> FlagElement:
        return cls(alpha=_sigma(0))

    @classmethod
    def one(cls) -> FlagElement:
        return cls(beta=_sigma(0))

    @classmethod
    def base(cls, x: ChowElement) -> FlagElement:
        return cls(beta=x)

    @property
    def degree(self) -> int | None:
        if self.alpha:
            return self.alpha.codim + 1
        if self.beta:
            return self.beta.codim
        return None

    def is_zero(self) -> bool:
        return not self.alpha and not self.beta

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if isinstance(other, ChowElement):
            other = FlagElement.base(other)
        if not isinstance(other, FlagElement):
            return NotImplemented
        d1, d2 = self.degree, other.degree
        if d1 is not None and d2 is not None and d1 != d2:
            raise SchubertError(f"grading mismatch: degrees {d1} and {d2}")
        return FlagElement(self.alpha + other.alpha, self.beta + other.beta)

    __radd__ = __add__

    def __neg__(self):
        return FlagElement(-self.alpha, -self.beta)

    def __sub__(self, other):
        if isinstance(other, ChowElement):
            other = FlagElement.base(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FlagElement(self.alpha * other, self.beta * other)
        if isinstance(other, ChowElement):
            other = FlagElement.base(other)
        if isinstance(other, FlagElement):
            return flag_multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ChowElement)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, ChowElement):
            other = FlagElement.base(other)
        if not isinstance(other, FlagElement):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return f"FlagElement({format_flag(self)!r})"

    def __str__(self):
        return format_flag(self, with_context=False)


def flag_multiply(x: FlagElement, y: FlagElement) -> FlagElement:
    """Product reduced with z^2 = sigma_1 z - sigma_{1,1}."""
    aa = x.alpha * y.alpha
    alpha = aa * _sigma(1) + x.alpha * y.beta + x.beta * y.alpha
    beta = x.beta * y.beta - aa * _sigma(1, 1)
    return FlagElement(alpha, beta)


def pushforward(x: FlagElement) -> ChowElement:
    """Pushforward to G(1,5): the coefficient of z."""
    return x.alpha


def _principal_parts_factor(m: int, d: int = HYPERSURFACE_DEGREE) -> FlagElement:
    # Chern root of O(d) (x) Sym^m(relative cotangent): (d - 2m) z + m sigma_1
    return FlagElement.zeta() * (d - 2 * m) + FlagElement.base(_sigma(1) * m)


def _check_rank(r: int):
    if not 1 <= r <= HYPERSURFACE_DEGREE + 1:
        raise ValueError(f"principal-parts rank must be in 1..{HYPERSURFACE_DEGREE + 1}, got {r}")


def chern_top_principal_parts(r: int) -> FlagElement:
    """Top Chern class of the rank-r bundle of relative principal parts of O(3)."""
    _check_rank(r)
    out = FlagElement.one()
    for m in range(r):
        out = out * _principal_parts_factor(m)
    return out


def chern_polynomial_principal_parts(r: int) -> list[FlagElement]:
    """Graded pieces ``[c_0, c_1, ..., c_r]`` of the total Chern class."""
    _check_rank(r)
    total = [FlagElement.one()]
    for m in range(r):
        factor = [FlagElement.one(), _principal_parts_factor(m)]
        prod = [FlagElement() for _ in range(len(total) + 1)]
        for i, x in enumerate(total):
            for j, y in enumerate(factor):
                prod[i + j] = prod[i + j] + x * y
        total = prod
    return total


def _sym_product(d: int) -> dict:
    # prod_{i=0}^{d} (i*A + (d-i)*B) as {(expA, expB): coeff}
    poly = {(0, 0): 1}
    for i in range(d + 1):
        nxt: dict = {}
        for (p, q), c in poly.items():
            if i:
                nxt[(p + 1, q)] = nxt.get((p + 1, q), 0) + c * i
            if d - i:
                nxt[(p, q + 1)] = nxt.get((p, q + 1), 0) + c * (d - i)
        poly = {k: v for k, v in nxt.items() if v}
    return poly


def _elementary_power(p: int, q: int) -> dict:
    # e1^p e2^q with e1 = A + B, e2 = A B, expanded in A, B
    poly = {(q, q): 1}
    for _ in range(p):
        nxt: dict = {}
        for (i, j), c in poly.items():
            nxt[(i + 1, j)] = nxt.get((i + 1, j), 0) + c
            nxt[(i, j + 1)] = nxt.get((i, j + 1), 0) + c
        poly = nxt
    return poly


def to_elementary(poly: dict) -> dict:
    """Rewrite a symmetric polynomial in two roots as ``{(p, q): c}`` meaning c e1^p e2^q."""
    poly = {k: v for k, v in poly.items() if v}
    out: dict = {}
    while poly:
        (i, j) = max(poly)
        c = poly[(i, j)]
        if i < j:
            raise ValueError("polynomial is not symmetric")
        out[(i - j, j)] = out.get((i - j, j), 0) + c
        for k, v in _elementary_power(i - j, j).items():
            poly[k] = poly.get(k, 0) - c * v
        poly = {k: v for k, v in poly.items() if v}
    return out


def sym3_dual_elementary(d: int = HYPERSURFACE_DEGREE) -> dict:
    """Top Chern class of Sym^d of the dual tautological bundle, in e1, e2."""
    return to_elementary(_sym_product(d))


def chern_top_sym3_dual(d: int = HYPERSURFACE_DEGREE) -> ChowElement:
    """c_4(Sym^3 S*) via the splitting principle, with e1 = sigma_1, e2 = sigma_{1,1}."""
    out = ChowElement.zero(N)
    for (p, q), c in sym3_dual_elementary(d).items():
        out = out + (_sigma(1) ** p) * (_sigma(1, 1) ** q) * c
    return out


def orbit7_class(fano: ChowElement, o6: ChowElement) -> ChowElement:
    """Class of the closure of O7 from the Fano scheme class and the class of O6."""
    for name, x in (("fano", fano), ("o6", o6)):
        if x and x.codim != 4:
            raise SchubertError(f"{name} must have codimension 4, got {x.codim}")
    # [F_1(S)] = 4 [O6] + 1 [O7]
    return fano - o6 * FANO_MULTIPLICITY_O6


def format_flag(x: FlagElement, with_context: bool = True) -> str:
    pieces = [_format_terms(sorted_terms(x.alpha), suffix="*z"), _format_terms(sorted_terms(x.beta))]
    pieces = [p for p in pieces if p]
    if not pieces:
        text = "0"
    else:
        text = pieces[0]
        for p in pieces[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
    return f"{text} @ N={N}" if with_context else text


def parse_flag(text: str) -> FlagElement:
    """Parse expressions in s[...] and z, e.g. ``"6*s[1]*z - 3*s[1,1]"``."""
    body, ctx = split_context(text, N)
    val = _Parser(
        tokenize(body),
        make_class=lambda a, b: FlagElement.base(ChowElement.sigma(a, b, ctx)),
        make_int=lambda n: FlagElement.one() * n,
        make_zeta=FlagElement.zeta,
    ).parse()
    if isinstance(val, int):
        val = FlagElement.one() * val
    return val
