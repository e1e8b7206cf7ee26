"""Dense univariate polynomial kernels over a coefficient field.

Polynomials are tuples of coefficients in ascending degree with no trailing
zeros; the zero polynomial is ``()``.  Every function takes the coefficient
field ``K`` explicitly, so the same code serves F_p and Q.
"""

from __future__ import annotations

from fractions import Fraction


class GF:
    """Residues mod p, represented by ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p

    def norm(self, c) -> int:
        return int(c) % self.p

    def inv(self, c) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return pow(c, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class QQ:
    """Rationals via ``fractions.Fraction``."""

    def norm(self, c) -> Fraction:
        return Fraction(c)

    def inv(self, c) -> Fraction:
        if c == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(c)

    def __eq__(self, other):
        return isinstance(other, QQ)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def strip(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def normalize(a, K) -> tuple:
    return strip(K.norm(c) for c in a)


def degree(a) -> int:
    return len(a) - 1


def add(a, b, K) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = K.norm(out[i] + c)
    return strip(out)


def neg(a, K) -> tuple:
    return tuple(K.norm(-c) for c in a)


def sub(a, b, K) -> tuple:
    return add(a, neg(b, K), K)


def scale(a, c, K) -> tuple:
    return strip(K.norm(x * c) for x in a)


def mul(a, b, K) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return normalize(out, K)


def shift(a, k: int) -> tuple:
    """Multiply by x**k."""
    return (0,) * k + tuple(a) if a else ()


def divmod_(a, b, K) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lc = K.inv(b[-1])
    if len(r) <= db:
        return (), strip(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = K.norm(r[k + db] * inv_lc)
        q[k] = c
        if c != 0:
            for j, y in enumerate(b):
                r[k + j] = K.norm(r[k + j] - c * y)
    return strip(q), strip(r[:db])


def rem(a, b, K) -> tuple:
    return divmod_(a, b, K)[1]


def exact_div(a, b, K) -> tuple:
    q, r = divmod_(a, b, K)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def monic(a, K) -> tuple:
    if not a:
        return ()
    return scale(a, K.inv(a[-1]), K)


def gcd(a, b, K) -> tuple:
    """Monic gcd; gcd(0, 0) is left to the caller."""
    while b:
        a, b = b, rem(a, b, K)
    return monic(a, K)


def xgcd(a, b, K) -> tuple[tuple, tuple, tuple]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = (K.norm(1),), ()
    t0, t1 = (), (K.norm(1),)
    while r1:
        q, r = divmod_(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, K), K)
        t0, t1 = t1, sub(t0, mul(q, t1, K), K)
    if not r0:
        return (), s0, t0
    c = K.inv(r0[-1])
    return scale(r0, c, K), scale(s0, c, K), scale(t0, c, K)


def derivative(a, K) -> tuple:
    return normalize((i * c for i, c in enumerate(a) if i), K)


def evaluate(a, x, K):
    acc = K.norm(0)
    for c in reversed(a):
        acc = K.norm(acc * x + c)
    return acc


def taylor_shift(a, alpha, K) -> tuple:
    """Coefficients of a(x + alpha)."""
    out = list(a)
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] = K.norm(out[j] + alpha * out[j + 1])
    return strip(out)


def reverse(a, deg: int) -> tuple:
    """x**deg * a(1/x)."""
    padded = list(a) + [0] * (deg + 1 - len(a))
    return strip(reversed(padded))


def powmod(a, e: int, m, K) -> tuple:
    result = (K.norm(1),)
    base = rem(a, m, K)
    result = rem(result, m, K)
    while e:
        if e & 1:
            result = rem(mul(result, base, K), m, K)
        e >>= 1
        if e:
            base = rem(mul(base, base, K), m, K)
    return result
