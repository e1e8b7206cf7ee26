"""Arithmetic in K[x]/(m) for K = Q or F_p.

Used to compute with a root alpha of f, i.e. in K(alpha) = K[x]/(f).  The
modulus is assumed irreducible but this is not checked; a failed inversion
reports the nontrivial factor it ran into.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import dense
from .dense import GF, QQ
from .poly import IntPoly, ModPoly, format_coeffs


class NotInvertibleError(ArithmeticError):
    def __init__(self, element: "QuotientRingElement", factor: tuple):
        self.element = element
        self.factor = factor
        super().__init__(f"{element} is not invertible: shares the factor {format_coeffs(factor)}")


@dataclass(frozen=True)
class QuotientRing:
    """K[x]/(modulus); ``p`` is None for K = Q."""

    modulus: tuple
    p: int | None = None

    def __post_init__(self):
        K = self.K
        object.__setattr__(self, "modulus", dense.normalize(self.modulus, K))
        if len(self.modulus) < 2:
            raise ValueError("modulus must have degree >= 1")

    @classmethod
    def over_rationals(cls, f: IntPoly | tuple) -> "QuotientRing":
        coeffs = f.coeffs if isinstance(f, IntPoly) else f
        return cls(tuple(Fraction(c) for c in coeffs), None)

    @classmethod
    def over_field(cls, f: ModPoly) -> "QuotientRing":
        return cls(f.coeffs, f.p)

    @property
    def K(self):
        return QQ() if self.p is None else GF(self.p)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __call__(self, rep) -> "QuotientRingElement":
        if isinstance(rep, QuotientRingElement):
            return rep
        if not isinstance(rep, (tuple, list)):
            rep = (rep,)
        return QuotientRingElement(self, dense.rem(dense.normalize(rep, self.K), self.modulus, self.K))

    def gen(self) -> "QuotientRingElement":
        """The class of x, i.e. the adjoined root."""
        return self((0, 1))

    def one(self) -> "QuotientRingElement":
        return self((1,))

    def zero(self) -> "QuotientRingElement":
        return self(())


@dataclass(frozen=True)
class QuotientRingElement:
    ring: QuotientRing
    rep: tuple

    def __post_init__(self):
        if len(self.rep) > self.ring.degree:
            raise ValueError("representative degree must be below the modulus degree")

    def _other(self, other) -> "QuotientRingElement":
        if isinstance(other, QuotientRingElement):
            if other.ring != self.ring:
                raise TypeError("elements of different quotient rings")
            return other
        return self.ring(other)

    def __add__(self, other):
        o = self._other(other)
        return QuotientRingElement(self.ring, dense.add(self.rep, o.rep, self.ring.K))

    __radd__ = __add__

    def __neg__(self):
        return QuotientRingElement(self.ring, dense.neg(self.rep, self.ring.K))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        K = self.ring.K
        return QuotientRingElement(self.ring, dense.rem(dense.mul(self.rep, o.rep, K), self.ring.modulus, K))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * quotient_invert(self._other(other))

    def __pow__(self, e: int):
        if e < 0:
            return quotient_invert(self) ** (-e)
        out, base = self.ring.one(), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def is_zero(self) -> bool:
        return not self.rep

    def is_one(self) -> bool:
        return self.rep == (1,)

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        if isinstance(other, QuotientRingElement):
            return self.ring == other.ring and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __str__(self):
        return format_coeffs(tuple(self.rep), var="a") if self.rep else "0"


def quotient_invert(e: QuotientRingElement) -> QuotientRingElement:
    """Inverse modulo the ring's modulus via the extended Euclidean algorithm."""
    K = e.ring.K
    if not e.rep:
        raise NotInvertibleError(e, e.ring.modulus)
    g, s, _ = dense.xgcd(e.rep, e.ring.modulus, K)
    if g != (K.norm(1),):
        raise NotInvertibleError(e, g)
    return QuotientRingElement(e.ring, dense.rem(s, e.ring.modulus, K))


class ExtensionDomain:
    """K(alpha) as a coefficient domain for the dense polynomial kernels."""

    def __init__(self, ring: QuotientRing):
        self.ring = ring

    def norm(self, c) -> QuotientRingElement:
        return self.ring(c)

    def inv(self, c) -> QuotientRingElement:
        return quotient_invert(self.ring(c))

    def __eq__(self, other):
        return isinstance(other, ExtensionDomain) and other.ring == self.ring

    def __hash__(self):
        return hash(("ext", self.ring))
