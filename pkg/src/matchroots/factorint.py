"""Irreducible factorization over the rationals and root-class multiplicity.

Factorization pipeline: strip powers of x, Yun square-free decomposition,
then each square-free part goes through factorization modulo a small odd
prime, linear Hensel lifting of the modular factors, and subset
recombination with an exact trial division.  Input degrees here are tiny
(a matching polynomial of an n-vertex graph has degree n), so the
exponential recombination step never bites.

A ``RootClass`` is an irreducible primitive integer polynomial with
positive leading coefficient.  It stands for an algebraic number together
with all of its conjugates; every conjugate root of an irreducible factor
has the same multiplicity in any rational polynomial, so the factor itself
is a faithful, exact proxy for "the root" and no numeric root isolation is
ever needed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .intpoly import IntPoly, X, divide_exact, squarefree_decomposition

# ---------------------------------------------------------------------------
# polynomials over GF(p): lists of ints in [0, p), highest index nonzero
# ---------------------------------------------------------------------------


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_from_intpoly(f: IntPoly, p: int):
    return _gf_trim([c % p for c in f.coeffs])


def _gf_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _gf_trim(out)


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _gf_trim(out)


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % p
    return _gf_trim(out)


def _gf_scale(a, k, p):
    k %= p
    return _gf_trim([(c * k) % p for c in a])


def _gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return _gf_scale(a, inv, p)


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    if len(a) < len(b):
        return [], list(a)
    inv = pow(b[-1], -1, p)
    rem = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        t = (rem[k + len(b) - 1] * inv) % p
        q[k] = t
        if t:
            for i, c in enumerate(b):
                rem[k + i] = (rem[k + i] - t * c) % p
    return _gf_trim(q), _gf_trim(rem[: len(b) - 1])


def _gf_mod(a, b, p):
    return _gf_divmod(a, b, p)[1]


def _gf_gcd(a, b, p):
    while b:
        a, b = b, _gf_mod(a, b, p)
    return _gf_monic(a, p)


def _gf_eea(a, b, p):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if not r0:
        raise ValueError("eea of two zero polynomials")
    inv = pow(r0[-1], -1, p)
    return _gf_scale(r0, inv, p), _gf_scale(s0, inv, p), _gf_scale(t0, inv, p)


def _gf_pow_mod(a, e, m, p):
    result = [1]
    base = _gf_mod(a, m, p)
    while e:
        if e & 1:
            result = _gf_mod(_gf_mul(result, base, p), m, p)
        base = _gf_mod(_gf_mul(base, base, p), m, p)
        e >>= 1
    return result


def _gf_derivative(a, p):
    return _gf_trim([(i * c) % p for i, c in enumerate(a)][1:])


# ---------------------------------------------------------------------------
# factorization over GF(p), p odd: distinct-degree + Cantor-Zassenhaus
# ---------------------------------------------------------------------------


def _gf_distinct_degree(f, p):
    """Split monic square-free f into (d, product of degree-d irreducibles)."""
    out = []
    v = list(f)
    h = [0, 1]
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _gf_pow_mod(h, p, v, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), v, p)
        if len(g) - 1 > 0:
            out.append((d, g))
            v, r = _gf_divmod(v, g, p)
            assert not r
            h = _gf_mod(h, v, p)
    if len(v) - 1 > 0:
        out.append((len(v) - 1, v))
    return out


def _gf_equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of monic f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    half = (p**d - 1) // 2
    while True:
        a = _gf_trim([rng.randrange(p) for _ in range(n)])
        if len(a) - 1 < 1:
            continue
        g = _gf_gcd(a, f, p)
        if 0 < len(g) - 1 < n:
            break
        b = _gf_pow_mod(a, half, f, p)
        g = _gf_gcd(_gf_sub(b, [1], p), f, p)
        if 0 < len(g) - 1 < n:
            break
    q, r = _gf_divmod(f, g, p)
    assert not r
    return _gf_equal_degree(g, d, p, rng) + _gf_equal_degree(q, d, p, rng)


def _gf_factor_squarefree(f, p, rng):
    """Monic irreducible factors of monic square-free f over GF(p)."""
    out = []
    for d, g in _gf_distinct_degree(f, p):
        out.extend(_gf_equal_degree(g, d, p, rng))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Hensel lifting (linear, binary factor tree)
# ---------------------------------------------------------------------------


def _zm_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _lift_pair(f, g0, h0, p, pk):
    """Lift the coprime split f = g0*h0 (mod p) to mod pk, f and lifts monic.

    One linear step per power of p: with e = (f - g*h)/q mod p, the
    corrections u = t*e rem g0 and v = (e - u*h0)/g0 solve
    u*h0 + v*g0 = e over GF(p), and g += q*u, h += q*v.
    """
    one, s, t = _gf_eea(g0, h0, p)
    assert one == [1], "modular factors must be coprime"
    g = list(g0)
    h = list(h0)
    q = p
    while q < pk:
        prod = _zm_mul(g, h, q * p)
        fq = [c % (q * p) for c in f] + [0] * max(0, len(prod) - len(f))
        prod += [0] * (len(fq) - len(prod))
        e = _gf_trim([((fc - pc) % (q * p)) // q % p for fc, pc in zip(fq, prod)])
        if e:
            u = _gf_mod(_gf_mul(t, e, p), g0, p)
            num = _gf_sub(e, _gf_mul(u, h0, p), p)
            v, vr = _gf_divmod(num, g0, p)
            assert not vr
            g = [c for c in g] + [0] * max(0, len(u) - len(g))
            for i, c in enumerate(u):
                g[i] = g[i] + q * c
            h = [c for c in h] + [0] * max(0, len(v) - len(h))
            for i, c in enumerate(v):
                h[i] = h[i] + q * c
        q *= p
    return g, h


def _lift_factors(f, facs, p, pk):
    """Lift monic modular factors (prod = f mod p) to factors mod pk."""
    if len(facs) == 1:
        return [[c % pk for c in f]]
    mid = len(facs) // 2
    g0 = [1]
    for fac in facs[:mid]:
        g0 = _gf_mul(g0, fac, p)
    h0 = [1]
    for fac in facs[mid:]:
        h0 = _gf_mul(h0, fac, p)
    g, h = _lift_pair(f, g0, h0, p, pk)
    return _lift_factors(g, facs[:mid], p, pk) + _lift_factors(h, facs[mid:], p, pk)


# ---------------------------------------------------------------------------
# Zassenhaus over Z
# ---------------------------------------------------------------------------


def _odd_primes():
    yield from (3, 5, 7)
    n = 9
    while True:
        n += 2
        d = 3
        while d * d <= n:
            if n % d == 0:
                break
            d += 2
        else:
            yield n


def _symmetric(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _factor_bound(f: IntPoly) -> int:
    """Coefficient bound for any monic integer factor of monic f (Mignotte-style)."""
    n = f.degree
    norm2 = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    return (1 << n) * norm2


def _zassenhaus_monic(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a monic square-free integer polynomial, x ∤ f."""
    if f.degree == 1:
        return [f]
    # pick a prime keeping f square-free mod p; fewer modular factors = less lifting
    best = None
    found = 0
    for p in _odd_primes():
        fp = _gf_from_intpoly(f, p)
        if len(fp) - 1 != f.degree:
            continue
        if len(_gf_gcd(fp, _gf_derivative(fp, p), p)) - 1 != 0:
            continue
        rng = random.Random(p * 1_000_003 + f.degree)
        facs = _gf_factor_squarefree(_gf_monic(fp, p), p, rng)
        found += 1
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if found >= 3 or len(best[1]) == 1:
            break
    p, facs = best
    if len(facs) == 1:
        return [f]
    bound = _factor_bound(f)
    pk = p
    while pk < 2 * bound + 1:
        pk *= p
    lifted = _lift_factors(list(f.coeffs), facs, p, pk)
    consts = [fac[0] % pk for fac in lifted]

    out: list[IntPoly] = []
    current = f
    remaining = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(remaining):
        extracted = False
        for subset in combinations(remaining, size):
            c0 = 1
            for i in subset:
                c0 = (c0 * consts[i]) % pk
            sc0 = _symmetric(c0, pk)
            # constant-term divisibility prefilter (x does not divide f here)
            if sc0 == 0 or current.coeffs[0] % sc0 != 0:
                continue
            cand_m = [1]
            for i in subset:
                cand_m = _zm_mul(cand_m, lifted[i], pk)
            cand = IntPoly.of(*(_symmetric(c, pk) for c in cand_m))
            if cand.is_zero() or cand.degree == 0:
                continue
            q = divide_exact(current, cand)
            if q is not None:
                out.append(cand)
                current = q
                remaining = [i for i in remaining if i not in subset]
                extracted = True
                break
        if not extracted:
            size += 1
    if not current.is_zero() and current.degree >= 1:
        out.append(current)
    return out


def _zassenhaus_squarefree(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive square-free polynomial with lc > 0, x ∤ f."""
    a = f.lead
    if a == 1:
        return sorted(_zassenhaus_monic(f), key=lambda g: (g.degree, g.coeffs))
    # monicize: F(x) = a^(n-1) f(x/a); map factors back through x -> a*x
    n = f.degree
    mon = IntPoly.of(*[c * a ** (n - 1 - i) for i, c in enumerate(f.coeffs[:-1])], 1)
    out = []
    for g in _zassenhaus_monic(mon):
        mapped = IntPoly.of(*(c * a**i for i, c in enumerate(g.coeffs)))
        out.append(mapped.primitive())
    return sorted(out, key=lambda g: (g.degree, g.coeffs))


# ---------------------------------------------------------------------------
# public types and operations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class RootClass:
    """An algebraic root of an integer polynomial, held as its minimal polynomial.

    Instances produced by :func:`factor` are irreducible by construction;
    use :meth:`validated` for untrusted input.  ``RootClass(X)`` is the
    root 0.
    """

    minpoly: IntPoly

    def __post_init__(self):
        mp = self.minpoly
        if mp.is_zero() or mp.degree < 1:
            raise ValueError("minimal polynomial must be nonconstant")
        if mp.lead < 0 or mp.content() != 1:
            raise ValueError("minimal polynomial must be primitive with positive lead")

    @classmethod
    def validated(cls, poly: IntPoly) -> "RootClass":
        """Normalize and check irreducibility; rejects reducible input."""
        if poly.is_zero() or poly.degree < 1:
            raise ValueError("root polynomial must be nonconstant")
        prim = poly.primitive()
        fp = factor(prim)
        if len(fp.factors) != 1 or fp.factors[0][1] != 1:
            raise ValueError(f"{prim.to_text()} is reducible over the rationals")
        return fp.factors[0][0]

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def sort_key(self):
        return (self.minpoly.degree, self.minpoly.coeffs)

    def to_text(self) -> str:
        return self.minpoly.to_text()

    def __repr__(self):
        return f"RootClass('{self.to_text()}')"


ZERO_ROOT = RootClass(X)


@dataclass(frozen=True)
class FactoredPoly:
    """unit * prod(factor^exponent), factors distinct and sorted."""

    unit: int
    factors: tuple[tuple[RootClass, int], ...]

    def __post_init__(self):
        if self.unit == 0:
            raise ValueError("unit must be nonzero")
        keys = [rc.sort_key() for rc, _ in self.factors]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("factors must be sorted and distinct")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    def reconstruct(self) -> IntPoly:
        out = IntPoly.constant(self.unit)
        for rc, e in self.factors:
            out = out * rc.minpoly**e
        return out

    def multiplicity_of(self, root: RootClass) -> int:
        for rc, e in self.factors:
            if rc == root:
                return e
        return 0

    def root_classes(self) -> list[RootClass]:
        return [rc for rc, _ in self.factors]

    def to_text(self) -> str:
        parts = []
        if self.unit != 1 or not self.factors:
            parts.append(str(self.unit))
        for rc, e in self.factors:
            body = rc.to_text()
            if len(rc.minpoly.coeffs) - rc.minpoly.coeffs.count(0) > 1:
                body = f"({body})"
            parts.append(body if e == 1 else f"{body}^{e}")
        return " * ".join(parts)

    def __repr__(self):
        return f"FactoredPoly('{self.to_text()}')"


def factor(p: IntPoly) -> FactoredPoly:
    """Complete irreducible factorization of p over the rationals."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = p.content()
    if p.lead < 0:
        unit = -unit
    w = IntPoly(tuple(c // unit for c in p.coeffs))
    factors: list[tuple[RootClass, int]] = []
    if w.degree >= 1:
        v = 0
        while w.coeffs[v] == 0:
            v += 1
        if v:
            factors.append((ZERO_ROOT, v))
            w = IntPoly(w.coeffs[v:])
    if w.degree >= 1:
        for part, mult in squarefree_decomposition(w):
            for irr in _zassenhaus_squarefree(part):
                factors.append((RootClass(irr), mult))
    factors.sort(key=lambda fe: fe[0].sort_key())
    return FactoredPoly(unit, tuple(factors))


def multiplicity(root: RootClass, g: IntPoly) -> int:
    """Largest k with root.minpoly^k dividing g exactly; 0 when it does not divide."""
    if g.is_zero():
        raise ValueError("multiplicity in the zero polynomial is undefined")
    k = 0
    cur = g
    mp = root.minpoly
    while not cur.is_zero() and (cur.degree >= mp.degree):
        q = divide_exact(cur, mp)
        if q is None:
            break
        cur = q
        k += 1
    return k
