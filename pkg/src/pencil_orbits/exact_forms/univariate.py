"""Dense univariate polynomials over an exact field.

A polynomial is a list ``[c0, c1, ..., cn]`` of field elements for
``c0 + c1 x + ... + cn x^n`` with ``cn != 0``; ``[]`` is the zero polynomial.
Every function takes the field explicitly so that constants can be built.
"""

from __future__ import annotations


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def degree(a) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a, b):
    return add(a, [-c for c in b])


def scale(a, c):
    return trim([c * x for x in a])


def mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a, b, field):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [field.zero] * max(len(a) - len(b) + 1, 0)
    inv = field.one / b[-1]
    db = len(b) - 1
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c * inv
        q[k - db] = c
        for j, y in enumerate(b):
            r[k - db + j] = r[k - db + j] - c * y
    return trim(q), trim(r[:db])


def exact_div(a, b, field):
    q, r = divmod_(a, b, field)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(a, field):
    if not a:
        return []
    inv = field.one / a[-1]
    return [c * inv for c in a]


def gcd(a, b, field):
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_(a, b, field)
        a, b = b, r
    return monic(a, field)


def derivative(a, field):
    return trim([c * i for i, c in enumerate(a)][1:])


def evaluate(a, x, field):
    acc = field.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pth_root(a, p):
    # a(x) = b(x^p); over F_p the Frobenius fixes every coefficient
    return [a[i] for i in range(0, len(a), p)]


def squarefree_decomposition(a, field) -> dict[int, list]:
    """Map multiplicity ``m`` to the monic product of roots of multiplicity ``m``.

    Works in characteristic 0 and over F_p (where p-th powers are peeled off
    separately). Constant factors are dropped.
    """
    a = monic(trim(a), field)
    if not a:
        raise ValueError("squarefree decomposition of the zero polynomial")
    out: dict[int, list] = {}
    if len(a) == 1:
        return out
    p = field.characteristic
    c = gcd(a, derivative(a, field), field)
    w = exact_div(a, c, field)
    i = 1
    while len(w) > 1:
        y = gcd(w, c, field)
        z = exact_div(w, y, field)
        if len(z) > 1:
            out[i] = z
        i += 1
        w = y
        c = exact_div(c, y, field)
    if len(c) > 1:
        if not p:
            raise ArithmeticError("leftover factor in characteristic 0")
        for m, g in squarefree_decomposition(_pth_root(c, p), field).items():
            out[m * p] = mul(out.get(m * p, [field.one]), g, field)
    return out


def interpolate(xs, ys, field):
    """Newton interpolation through the points ``(xs[i], ys[i])``."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for k in range(n - 2, -1, -1):
        poly = add(mul(poly, [-xs[k], field.one], field), [coef[k]])
    return trim(poly)
