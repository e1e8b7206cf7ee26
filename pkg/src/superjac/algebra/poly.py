"""Univariate polynomials over Z and over F_p.

Coefficients are stored in ascending degree order with no trailing zeros;
the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import dense
from .dense import GF
from .field import PrimeField, as_field
from .matrix import PrimeFieldMatrix


def format_coeffs(coeffs, var: str = "x") -> str:
    """Render ascending coefficients as e.g. ``x^5 - x - 1``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", dense.strip(int(c) for c in self.coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def reduce(self, field: int | PrimeField) -> "ModPoly":
        return ModPoly(as_field(field), self.coeffs)

    def __str__(self):
        return format_coeffs(self.coeffs)


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over the prime field ``field``."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        field = as_field(self.field)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", dense.strip(int(c) % field.p for c in self.coeffs))

    @cached_property
    def K(self) -> GF:
        return GF(self.field.p)

    @property
    def p(self) -> int:
        return self.field.p

    @classmethod
    def x(cls, field) -> "ModPoly":
        return cls(field, (0, 1))

    @classmethod
    def one(cls, field) -> "ModPoly":
        return cls(field, (1,))

    def _new(self, coeffs) -> "ModPoly":
        return ModPoly(self.field, coeffs)

    def _coerce(self, other) -> tuple:
        if isinstance(other, ModPoly):
            if other.field != self.field:
                raise TypeError(f"polynomials over F_{self.p} and F_{other.p}")
            return other.coeffs
        if isinstance(other, int):
            return dense.normalize((other,), self.K)
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def monic(self) -> "ModPoly":
        return self._new(dense.monic(self.coeffs, self.K))

    def derivative(self) -> "ModPoly":
        return self._new(dense.derivative(self.coeffs, self.K))

    def __call__(self, x: int) -> int:
        return dense.evaluate(self.coeffs, x % self.p, self.K)

    def __add__(self, other):
        b = self._coerce(other)
        return self._new(dense.add(self.coeffs, b, self.K))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return self._new(dense.sub(self.coeffs, b, self.K))

    def __rsub__(self, other):
        b = self._coerce(other)
        return self._new(dense.sub(b, self.coeffs, self.K))

    def __neg__(self):
        return self._new(dense.neg(self.coeffs, self.K))

    def __mul__(self, other):
        b = self._coerce(other)
        return self._new(dense.mul(self.coeffs, b, self.K))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = dense.divmod_(self.coeffs, self._coerce(other), self.K)
        return self._new(q), self._new(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "ModPoly":
        out = ModPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def powmod(self, e: int, modulus: "ModPoly") -> "ModPoly":
        return self._new(dense.powmod(self.coeffs, e, modulus.coeffs, self.K))

    def shift(self, alpha: int) -> "ModPoly":
        """The polynomial x -> self(x + alpha)."""
        return self._new(dense.taylor_shift(self.coeffs, alpha % self.p, self.K))

    def reversal(self, deg: int | None = None) -> "ModPoly":
        """x^deg * self(1/x), with deg defaulting to the degree."""
        return self._new(dense.reverse(self.coeffs, self.degree if deg is None else deg))

    def is_squarefree(self) -> bool:
        if self.degree < 1:
            return True
        return poly_gcd(self, self.derivative()).is_one()

    def roots(self) -> list[int]:
        """Roots in F_p, sorted; small fields are scanned directly."""
        if self.is_zero():
            raise ValueError("every element is a root of the zero polynomial")
        if self.p <= 4096:
            return [a for a in range(self.p) if self(a) == 0]
        out = []
        for g, _ in factor_mod_p(self, seed=0):
            if g.degree == 1:
                out.append((-g.coeffs[0]) % self.p)
        return sorted(out)

    def __str__(self):
        return f"{format_coeffs(self.coeffs)} mod {self.p}"


def poly_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd of two polynomials over the same prime field."""
    if a.field != b.field:
        raise TypeError("polynomials over different fields")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return ModPoly(a.field, dense.gcd(a.coeffs, b.coeffs, a.K))


# -- factorization over F_p ---------------------------------------------------

def _pth_root(f: ModPoly) -> ModPoly:
    # f' = 0, so only exponents divisible by p occur; a^p = a on F_p
    p = f.p
    return ModPoly(f.field, f.coeffs[::p])


def _squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic f -> [(g_i, m_i)] with f = prod g_i^m_i, each g_i squarefree."""
    out = []
    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = poly_gcd(w, c)
        fac = w // y
        if not fac.is_one():
            out.append((fac, i))
        w, c = y, c // y
        i += 1
    if not c.is_one():
        for g, m in _squarefree_decomposition(_pth_root(c)):
            out.append((g, m * f.p))
    return out


def _distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Squarefree monic f -> [(g_d, d)], g_d = product of its degree-d factors."""
    out = []
    x = ModPoly.x(f.field)
    h = x % f
    rest = f
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(f.p, rest)
        g = poly_gcd(rest, h - x)
        if not g.is_one():
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree(g: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Split g, a product of distinct monic irreducibles of degree d."""
    if g.degree == d:
        return [g]
    p = g.p
    n = g.degree
    while True:
        a = ModPoly(g.field, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        u = poly_gcd(g, a)
        if 0 < u.degree < n:
            break
        if p == 2:
            t, acc = a, a
            for _ in range(d - 1):
                t = t.powmod(2, g)
                acc = acc + t
            b = acc
        else:
            b = a.powmod((p**d - 1) // 2, g) - 1
        if b.is_zero():
            continue
        u = poly_gcd(g, b)
        if 0 < u.degree < n:
            break
    return _equal_degree(u, d, rng) + _equal_degree(g // u, d, rng)


def _sort_key(f: ModPoly):
    return (f.degree, tuple(reversed(f.coeffs)))


def factor_mod_p(f: ModPoly, seed: int = 0) -> list[tuple[ModPoly, int]]:
    """Factor f into monic irreducibles over its prime field.

    Returns ``[(g, m), ...]`` sorted by degree, then coefficients, with
    ``prod g**m == f.monic()``.  Randomness in the equal-degree split is drawn
    from ``random.Random(seed)``; the sorted output does not depend on it.
    """
    if f.degree < 1:
        raise ValueError("factor_mod_p needs a polynomial of degree >= 1")
    rng = random.Random(seed)
    counts: Counter = Counter()
    for sq, mult in _squarefree_decomposition(f.monic()):
        for g, d in _distinct_degree(sq):
            for irr in _equal_degree(g, d, rng):
                counts[irr] += mult
    return sorted(counts.items(), key=lambda item: _sort_key(item[0]))


def is_irreducible(f: ModPoly) -> bool:
    """Rabin's test; shares no code path with factor_mod_p."""
    n = f.degree
    if n < 1:
        return False
    f = f.monic()
    x = ModPoly.x(f.field)
    if not ((x.powmod(f.p**n, f) - x) % f).is_zero():
        return False
    prime_divisors = [q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))]
    for q in prime_divisors:
        if not poly_gcd(f, x.powmod(f.p ** (n // q), f) - x).is_one():
            return False
    return True


# -- resultants ---------------------------------------------------------------

def sylvester_matrix(a, b, deg_a: int | None = None, deg_b: int | None = None) -> list[list[int]]:
    """Sylvester matrix of coefficient tuples a, b (ascending order).

    ``deg_a``/``deg_b`` override the degrees, padding with leading zeros.
    """
    m = len(a) - 1 if deg_a is None else deg_a
    n = len(b) - 1 if deg_b is None else deg_b
    da = [0] * (m + 1 - len(a)) + list(reversed(a))
    db = [0] * (n + 1 - len(b)) + list(reversed(b))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + da + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + db + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Determinant of the Sylvester matrix of a and b."""
    if a.degree < 1 or b.degree < 1:
        raise ValueError("resultant needs both degrees >= 1")
    return bareiss_det(sylvester_matrix(a.coeffs, b.coeffs))


def discriminant(f: IntPoly | ModPoly) -> int:
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f).

    For a ModPoly the derivative is given its formal degree n - 1, so the
    value is the reduction of the integer discriminant of any lift of f
    with the same degree.
    """
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if isinstance(f, IntPoly):
        r = resultant(f, f.derivative())
        d, rest = divmod(sign * r, f.lc)
        assert rest == 0, "Res(f, f') is always divisible by lc(f)"
        return d
    rows = sylvester_matrix(f.coeffs, f.derivative().coeffs, n, n - 1)
    r = PrimeFieldMatrix(f.field, rows).det()
    return sign * r * f.field.inv(f.lc) % f.p


RATIONAL_ROOT_SEARCH_LIMIT = 10**12


def rational_roots(f: IntPoly) -> list[Fraction] | None:
    """Rational roots by the rational root theorem; None when coefficients are too large to search."""
    coeffs = list(f.coeffs)
    roots = []
    if coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) < 2:
        return roots
    a0, an = abs(coeffs[0]), abs(coeffs[-1])
    if max(a0, an) > RATIONAL_ROOT_SEARCH_LIMIT:
        return None
    g = IntPoly(coeffs)
    for u in _divisors(a0):
        for v in _divisors(an):
            if gcd(u, v) != 1:
                continue
            for s in (1, -1):
                r = Fraction(s * u, v)
                # v^n g(u/v) as an integer avoids fractions
                if sum(c * (s * u) ** i * v ** (g.degree - i) for i, c in enumerate(g.coeffs)) == 0:
                    roots.append(r)
    return sorted(set(roots))


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]
