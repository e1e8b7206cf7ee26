"""Invariants of the superelliptic curve y^p = f(x).

Eigenvalues of the automorphism y -> zeta*y are tracked as exponents of
zeta modulo p.  The differential x^a dx / y^b is holomorphic exactly when
p(a + 1) < b n (for p not dividing n, equality cannot occur) and lies in
the zeta^(-b) eigenspace.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .algebra import ExtensionDomain, IntPoly, ModPoly, QuotientRing, discriminant, is_prime, rational_roots
from .algebra import dense
from .algebra.dense import QQ


@dataclass(frozen=True)
class CurveSpec:
    """Curve y^p = f(x) over Q (f an IntPoly) or over F_q (f a ModPoly)."""

    p: int
    f: IntPoly | ModPoly

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.n < 4:
            raise ValueError(f"f must have degree >= 4, got {self.n}")
        if isinstance(self.f, ModPoly):
            if self.f.p == self.p:
                raise ValueError("the base field characteristic must differ from p")
            if not self.f.is_squarefree():
                raise ValueError(f"f = {self.f} has a repeated root")
        elif discriminant(self.f) == 0:
            raise ValueError(f"f = {self.f} has a repeated root")

    @property
    def n(self) -> int:
        return self.f.degree

    @property
    def q(self) -> int | None:
        """Characteristic of the base field, None for Q."""
        return self.f.p if isinstance(self.f, ModPoly) else None

    @property
    def base(self) -> str:
        return "Q" if self.q is None else f"F_{self.q}"


def genus(n: int, p: int) -> int:
    if n < 4:
        raise ValueError(f"genus formula needs n >= 4, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return (p - 1) * (n - 2) // 2 if n % p == 0 else (p - 1) * (n - 1) // 2


@dataclass(frozen=True)
class DifferentialBasis:
    """Holomorphic differentials x^a dx / y^b, stored as (a, b) pairs."""

    n: int
    p: int
    entries: tuple[tuple[int, int], ...]

    @property
    def eigen_exponents(self) -> tuple[int, ...]:
        return tuple((-b) % self.p for _, b in self.entries)

    def __len__(self):
        return len(self.entries)

    def to_list(self) -> list[dict]:
        return [{"a": a, "b": b, "eigen_exponent": (-b) % self.p} for a, b in self.entries]


def differential_basis(n: int, p: int) -> DifferentialBasis:
    if n % p == 0:
        raise ValueError(f"{p} divides n = {n}; reduce to degree {n - 1} first (reduce_degree)")
    entries = []
    for b in range(1, p):
        a = 0
        while p * (a + 1) < b * n:
            entries.append((a, b))
            a += 1
    return DifferentialBasis(n, p, tuple(entries))


@dataclass(frozen=True)
class MultiplicityProfile:
    counts: dict[int, int]
    n_sigma: int | None = None
    n_sigma_bar: int | None = None
    computed_on_degree: int | None = None

    @property
    def ribet_coprime(self) -> bool | None:
        if self.n_sigma is None:
            return None
        return gcd(self.n_sigma, self.n_sigma_bar) == 1

    def to_dict(self) -> dict:
        return {
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "n_sigma": self.n_sigma,
            "n_sigma_bar": self.n_sigma_bar,
            "ribet_coprime": self.ribet_coprime,
            "computed_on_degree": self.computed_on_degree,
        }


def eigen_multiplicities(n: int, p: int) -> MultiplicityProfile:
    """Eigenspace dimensions; for p | n they are read off the degree n-1 model."""
    m = n - 1 if n % p == 0 else n
    basis = differential_basis(m, p)
    counts = dict(sorted(Counter(basis.eigen_exponents).items()))
    if p != 3:
        return MultiplicityProfile(counts, computed_on_degree=m)
    b1 = sum(1 for _, b in basis.entries if b == 1)
    return MultiplicityProfile(counts, b1, len(basis) - b1, m)


def trigonal_multiplicities(n: int) -> tuple[int, int]:
    """Closed forms for p = 3: n = 3k gives (k-1, 2k-1); n = 3k-e gives (k-1, 2k-1-[2e/3])."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    k, r = divmod(n, 3)
    if r == 0:
        return k - 1, 2 * k - 1
    k += 1
    e = 3 * k - n
    return k - 1, 2 * k - 1 - (2 * e) // 3


def trigonal_basis(n: int) -> DifferentialBasis:
    """The p = 3 basis written directly from the closed form (3 must not divide n)."""
    if n % 3 == 0:
        raise ValueError("closed form basis needs 3 not dividing n")
    s, t = trigonal_multiplicities(n)
    return DifferentialBasis(n, 3, tuple((i, 1) for i in range(s)) + tuple((j, 2) for j in range(t)))


# -- degree reduction --------------------------------------------------------

def _deflate(coeffs: tuple, alpha, K) -> tuple:
    """Exact quotient by (x - alpha); alpha must be a root."""
    q, r = dense.divmod_(coeffs, dense.normalize((-alpha, 1), K), K)
    if r:
        raise ValueError("alpha is not a root of f")
    return q


@dataclass(frozen=True)
class ReductionTrace:
    """x1 = 1/(x - alpha), y1 = y/(x - alpha)^m turns y^p = f into y1^p = h1(x1)."""

    alpha: object
    f1: tuple
    h: tuple
    h1: tuple
    scale: int = 1
    curve: CurveSpec | None = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "f1": [str(c) for c in self.f1],
            "h": [str(c) for c in self.h],
            "h1": [str(c) for c in self.h1],
            "scale": self.scale,
            "notes": list(self.notes),
        }


def _check_divisible(c: CurveSpec):
    if c.n % c.p:
        raise ValueError(f"reduction only applies when p divides n; {c.p} does not divide {c.n}")


def reduction_trace(c: CurveSpec, alpha) -> ReductionTrace:
    """The reduced model of degree n-1 together with every intermediate polynomial."""
    _check_divisible(c)
    n = c.n
    if isinstance(c.f, ModPoly):
        a = int(alpha) % c.f.p
        if c.f(a) != 0:
            raise ValueError(f"{a} is not a root of {c.f}")
        f1 = c.f // ModPoly(c.f.field, (-a, 1))
        h = f1.shift(a)
        h1 = h.reversal(n - 1)
        assert h1.degree == n - 1 and h1.is_squarefree(), "separable f gives a separable reduced model"
        assert h1.lc == c.f.derivative()(a)
        out = CurveSpec(c.p, h1)
        return ReductionTrace(a, f1.coeffs, h.coeffs, h1.coeffs, 1, out)

    a = Fraction(alpha)
    K = QQ()
    f = dense.normalize(c.f.coeffs, K)
    if dense.evaluate(f, a, K) != 0:
        raise ValueError(f"{a} is not a root of {c.f}")
    f1 = _deflate(f, a, K)
    h = dense.taylor_shift(f1, a, K)
    h1 = dense.reverse(h, n - 1)
    # (D y1)^p = D^p h1(x1) is an integral model of the same curve
    d = lcm(*(x.denominator for x in h1))
    scale = d ** c.p
    h1_int = IntPoly(int(x * scale) for x in h1)
    assert h1_int.degree == n - 1 and discriminant(h1_int) != 0
    notes = () if scale == 1 else (f"h1 scaled by {d}^{c.p} to clear denominators",)
    return ReductionTrace(a, f1, h, h1, scale, CurveSpec(c.p, h1_int), notes)


def reduce_degree(c: CurveSpec, alpha) -> CurveSpec:
    """The curve y1^p = h1(x1) of degree n-1, for a root alpha of f in the base field."""
    return reduction_trace(c, alpha).curve


def reduce_degree_symbolic(c: CurveSpec, minpoly: IntPoly | None = None) -> ReductionTrace:
    """Reduction over Q(alpha) = Q[t]/(minpoly(t)) for a root alpha of f.

    ``minpoly`` defaults to f, which is then assumed irreducible; a
    reducible modulus shows up as NotInvertibleError.
    """
    _check_divisible(c)
    if not isinstance(c.f, IntPoly):
        raise TypeError("the symbolic path is for curves over Q")
    ring = QuotientRing.over_rationals(minpoly or c.f)
    K = ExtensionDomain(ring)
    a = ring.gen()
    f = dense.normalize(c.f.coeffs, K)
    if dense.evaluate(f, a, K) != 0:
        raise ValueError("the adjoined root is not a root of f")
    f1 = _deflate(f, a, K)
    h = dense.taylor_shift(f1, a, K)
    h1 = dense.reverse(h, c.n - 1)
    assert len(h1) == c.n, "leading coefficient f'(alpha) must be nonzero"
    g = dense.gcd(h1, dense.derivative(h1, K), K)
    assert len(g) == 1, "separable f gives a separable reduced model"
    return ReductionTrace(a, f1, h, h1, 1, None, ("coefficients lie in Q(a), a a root of " + str(minpoly or c.f),))


@dataclass(frozen=True)
class CurveReport:
    curve: CurveSpec
    genus: int
    basis: DifferentialBasis
    multiplicities: MultiplicityProfile
    reduction: ReductionTrace | None = None
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "p": self.curve.p,
            "n": self.curve.n,
            "base": self.curve.base,
            "genus": self.genus,
            "basis": self.basis.to_list(),
            "multiplicities": self.multiplicities.to_dict(),
            "ribet_coprime": self.multiplicities.ribet_coprime,
            "reduction": self.reduction.to_dict() if self.reduction else None,
            "warnings": list(self.warnings),
        }


def curve_report(c: CurveSpec) -> CurveReport:
    """Genus, differential basis and multiplicities; reduces first when p | n."""
    p, n = c.p, c.n
    g = genus(n, p)
    mult = eigen_multiplicities(n, p)
    if n % p:
        return CurveReport(c, g, differential_basis(n, p), mult)
    warnings = []
    trace = None
    if isinstance(c.f, ModPoly):
        roots = c.f.roots()
    else:
        roots = rational_roots(c.f)
        if roots is None:
            warnings.append("rational root search skipped: coefficients too large")
            roots = []
    if roots:
        trace = reduction_trace(c, roots[0])
        assert genus(n - 1, p) == g
    else:
        warnings.append(f"f has no root over {c.base}; explicit model skipped, degree {n - 1} formulas used")
    return CurveReport(c, g, differential_basis(n - 1, p), mult, trace, tuple(warnings))
