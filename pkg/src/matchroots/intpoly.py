"""Univariate polynomials with arbitrary-precision integer coefficients.

A polynomial is a dense tuple of coefficients, index i holding the
coefficient of x^i.  The zero polynomial is the empty tuple; every other
value keeps a nonzero leading coefficient.  All operations are pure and
values are immutable, so they can be shared freely across threads and
processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import zip_longest


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial.  ``IntPoly((0, 1))`` is x.

    >>> IntPoly((1, 0, 1))
    IntPoly('x^2 + 1')
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use IntPoly.of to normalize)")

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        """Build from constant term upward, trimming trailing zeros."""
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        return IntPoly(tuple(coeffs[:end]))

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly((c,)) if c else IntPoly(())

    @staticmethod
    def monomial(degree: int, c: int = 1) -> "IntPoly":
        if c == 0:
            return IntPoly(())
        return IntPoly((0,) * degree + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial.  The zero polynomial has none."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.of(*(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.of(*(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly(())
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly.of(*(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def content(self) -> int:
        """gcd of the coefficients, nonnegative; 0 only for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no primitive part")
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return IntPoly(tuple(a // c for a in self.coeffs))

    # ---- rendering ----------------------------------------------------

    def to_text(self) -> str:
        """Human form, highest degree first: ``x^4 - 3*x^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_json_coeffs(self) -> list[str]:
        """Decimal-string coefficients, index = degree (report wire form)."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json_coeffs(items) -> "IntPoly":
        return IntPoly.of(*(int(s) for s in items))

    def __repr__(self):
        return f"IntPoly('{self.to_text()}')"


X = IntPoly((0, 1))
ONE = IntPoly((1,))


def divide_exact(g: IntPoly, f: IntPoly) -> IntPoly | None:
    """Quotient q with g = f*q over the integers, or None when no such q exists.

    Long division from the top coefficient down: the quotient of g by f over
    the rationals is unique, so if any step needs a non-integer coefficient
    or a nonzero remainder survives, no integer quotient exists.
    """
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_zero():
        return IntPoly(())
    if g.degree < f.degree:
        return None
    rem = list(g.coeffs)
    fc = f.coeffs
    flead = fc[-1]
    qlen = len(rem) - len(fc) + 1
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        top = rem[k + len(fc) - 1]
        if top % flead:
            return None
        t = top // flead
        q[k] = t
        if t:
            for i, c in enumerate(fc):
                rem[k + i] -= t * c
    if any(rem[: len(fc) - 1]):
        return None
    return IntPoly.of(*q)


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = b*q + r, deg r < deg b."""
    da, db = a.degree, b.degree
    if da < db:
        raise ValueError("pseudo_rem needs deg a >= deg b")
    lb = b.lead
    rem = list(a.coeffs)
    for k in range(da - db, -1, -1):
        c = rem[db + k]
        for i in range(len(rem)):
            rem[i] *= lb
        if c:
            for i, bc in enumerate(b.coeffs):
                rem[k + i] -= c * bc
    return IntPoly.of(*rem[:db])


def gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient.

    Subresultant polynomial remainder sequence, which keeps intermediate
    coefficients from exploding while staying in exact integer arithmetic.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    p, q = a.primitive(), b.primitive()
    if p.degree < q.degree:
        p, q = q, p
    g = h = 1
    while True:
        delta = p.degree - q.degree
        r = pseudo_rem(p, q)
        if r.is_zero():
            return q.primitive()
        if r.degree == 0:
            return ONE
        divisor = g * h**delta
        p, q = q, IntPoly(tuple(c // divisor for c in r.coeffs))
        g = p.lead
        # h <- g^delta * h^(1-delta), exact in Z for delta >= 2 (signed)
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition of the positive primitive part of p.

    Returns pairwise-coprime square-free non-constant parts with their
    multiplicities, sorted by (degree, coefficients); the weighted product
    reconstructs ``p.primitive()``.

    >>> squarefree_decomposition(IntPoly.of(4, 0, -4, 0, 1))
    [(IntPoly('x^2 - 2'), 2)]
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    f = p.primitive()
    if f.degree == 0:
        return []
    out: list[tuple[IntPoly, int]] = []
    g0 = gcd(f, f.derivative())
    b = divide_exact(f, g0)
    assert b is not None
    if g0.degree == 0:
        return [(b, 1)]
    c = divide_exact(f.derivative(), g0)
    assert c is not None
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        a = gcd(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b2 = divide_exact(b, a)
        assert b2 is not None
        b = b2
        if b.degree == 0:
            break
        c2 = divide_exact(d, a)
        assert c2 is not None
        d = c2 - b.derivative()
        i += 1
    out.sort(key=lambda fa: (fa[0].degree, fa[0].coeffs))
    return out
