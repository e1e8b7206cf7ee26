"""Certificates that Gal(f/Q) contains the alternating group.

Every conclusion is derived from Frobenius cycle types (Dedekind: for a
prime ell not dividing lc(f) disc(f), the degrees of the irreducible factors
of f mod ell form a cycle type occurring in the Galois group) plus the
square class of the discriminant.  Rules are sound but incomplete; when
none applies the verdict is Inconclusive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt, lcm

from .algebra import IntPoly, ModPoly, discriminant, factor_mod_p, is_prime, primes_up_to, rational_roots
from .permutations import CycleType


class GaloisVerdict(str, enum.Enum):
    SYMMETRIC = "SymmetricGroup"
    ALTERNATING = "AlternatingGroup"
    CONTAINS_ALTERNATING = "ContainsAlternating"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class FrobeniusWitness:
    ell: int
    pattern: CycleType
    factors: tuple[tuple[int, ...], ...]

    def verify(self, f: IntPoly) -> bool:
        """The stored monic irreducible factors multiply back to f mod ell."""
        if f.lc % self.ell == 0:
            return False
        fm = f.reduce(self.ell)
        prod = ModPoly(self.ell, (fm.lc,))
        for coeffs in self.factors:
            prod = prod * ModPoly(self.ell, coeffs)
        return prod == fm and CycleType(len(c) - 1 for c in self.factors) == self.pattern

    @classmethod
    def from_dict(cls, d: dict) -> "FrobeniusWitness":
        factors = tuple(tuple(int(c) for c in fac) for fac in d["factors"])
        return cls(int(d["ell"]), CycleType(d["pattern"]), factors)

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "pattern": sorted(self.pattern.parts),
            "factors": [list(c) for c in self.factors],
        }


@dataclass(frozen=True)
class GaloisCertificate:
    verdict: GaloisVerdict
    n: int
    disc: int
    disc_is_square: bool
    witnesses: tuple[FrobeniusWitness, ...]
    rules_fired: tuple[str, ...]
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "disc": str(self.disc),
            "disc_is_square": self.disc_is_square,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "rules_fired": list(self.rules_fired),
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GaloisCertificate":
        witnesses = tuple(FrobeniusWitness.from_dict(w) for w in d["witnesses"])
        n = witnesses[0].pattern.n if witnesses else int(d["n"])
        return cls(
            GaloisVerdict(d["verdict"]), n, int(d["disc"]), bool(d["disc_is_square"]),
            witnesses, tuple(d["rules_fired"]), d.get("reason", ""),
        )

    @property
    def group(self) -> str | None:
        return {GaloisVerdict.SYMMETRIC: "S_n", GaloisVerdict.ALTERNATING: "A_n"}.get(self.verdict)


def disc_is_square(d: int) -> bool:
    if d == 0:
        raise ValueError("zero discriminant: f has a repeated root")
    return d > 0 and isqrt(d) ** 2 == d


def frobenius_cycle_type(f: IntPoly, ell: int, seed: int = 0, disc: int | None = None) -> FrobeniusWitness:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if f.lc % ell == 0:
        raise ValueError(f"{ell} divides the leading coefficient")
    d = discriminant(f) if disc is None else disc
    if d % ell == 0:
        raise ValueError(f"{ell} divides disc(f) = {d}; its factorization pattern is not a Frobenius class")
    factors = factor_mod_p(f.reduce(ell), seed=seed)
    assert all(m == 1 for _, m in factors)
    return FrobeniusWitness(ell, CycleType(g.degree for g, _ in factors), tuple(g.coeffs for g, _ in factors))


def _subset_sums(parts) -> set[int]:
    sums = {0}
    for x in parts:
        sums |= {s + x for s in sums}
    return sums


def _prime_part_power(pattern: CycleType, n: int) -> int | None:
    """A prime part q > n/2; some power of the element is then a q-cycle."""
    for q in pattern.parts:
        if 2 * q > n and is_prime(q):
            return q
    return None


def _transposition_power(pattern: CycleType) -> bool:
    """Exactly one even part, equal to 2, the rest odd: the lcm(odd parts) power is a transposition."""
    even = [x for x in pattern.parts if x % 2 == 0]
    if even != [2]:
        return False
    m = reduce(lcm, (x for x in pattern.parts if x % 2), 1)
    return power_cycle_type(pattern, m).parts == (2,) + (1,) * (pattern.n - 2)


def power_cycle_type(pattern: CycleType, m: int) -> CycleType:
    """Cycle type of the m-th power: an x-cycle splits into gcd(x, m) cycles of length x / gcd(x, m)."""
    return CycleType(x // gcd(x, m) for x in pattern.parts for _ in range(gcd(x, m)))


def analyze_patterns(n: int, patterns: list[tuple[int, CycleType]], disc: int) -> tuple[GaloisVerdict, tuple[str, ...], str]:
    """Pure rule engine: verdict and fired rules from (ell, pattern) pairs and disc."""
    rules: list[str] = []
    square = disc_is_square(disc)
    rules.append("parity: disc square, G inside A_n" if square else "parity: disc nonsquare, G not inside A_n")

    degrees = set(range(n + 1))
    transitive_by = None
    for ell, pat in patterns:
        if pat.parts == (n,):
            transitive_by = f"R1: pattern [{n}] at ell={ell}, f irreducible, G transitive with an n-cycle"
            break
        degrees &= _subset_sums(pat.parts)
        if degrees <= {0, n}:
            transitive_by = f"R0: factor degrees incompatible up to ell={ell}, f irreducible, G transitive"
            break
    if transitive_by is None:
        return GaloisVerdict.INCONCLUSIVE, tuple(rules), "no transitivity witness"
    rules.append(transitive_by)

    if n <= 3:
        rules.append(f"small degree: every transitive subgroup of S_{n} contains A_{n}")
        return (GaloisVerdict.ALTERNATING if square else GaloisVerdict.SYMMETRIC), tuple(rules), ""

    primitive_by = "n prime" if is_prime(n) else None
    jordan = None
    transposition = None
    for ell, pat in patterns:
        q = _prime_part_power(pat, n)
        if q is not None:
            primitive_by = primitive_by or f"prime part {q} > n/2 at ell={ell}"
            if q <= n - 3 and jordan is None:
                jordan = f"R2: prime part {q} in ({n}/2, {n}-3] at ell={ell}, a {q}-cycle in a primitive group, G contains A_n"
        if primitive_by is None and pat.parts == (n - 1, 1):
            primitive_by = f"pattern [{n - 1},1] at ell={ell}, G 2-transitive"
        if transposition is None and _transposition_power(pat):
            transposition = f"R3: pattern {sorted(pat.parts)} at ell={ell} powers to a transposition"

    if primitive_by is not None:
        rules.append(f"primitive: {primitive_by}")
    if jordan is not None:
        rules.append(jordan)
    if transposition is not None and primitive_by is not None:
        rules.append(transposition + "; primitive with a transposition, G = S_n")
        if square:
            raise AssertionError("a transposition contradicts a square discriminant")
        return GaloisVerdict.SYMMETRIC, tuple(rules), ""
    if jordan is not None:
        return (GaloisVerdict.ALTERNATING if square else GaloisVerdict.SYMMETRIC), tuple(rules), ""
    return GaloisVerdict.INCONCLUSIVE, tuple(rules), "transitive, but no witness forces A_n"


def certify(f: IntPoly, prime_budget: int = 200, seed: int = 0) -> GaloisCertificate:
    """Scan primes ell <= prime_budget (skipping divisors of lc(f) disc(f)) and apply the rules."""
    n = f.degree
    if n < 2:
        raise ValueError("certify needs deg f >= 2")
    disc = discriminant(f)
    if disc == 0:
        raise ValueError(f"f = {f} is not squarefree")
    square = disc_is_square(disc)
    roots = rational_roots(f)
    if roots:
        return GaloisCertificate(
            GaloisVerdict.INCONCLUSIVE, n, disc, square, (), (),
            f"f is reducible over Q: rational root {roots[0]}",
        )
    witnesses: list[FrobeniusWitness] = []
    verdict, rules, reason = GaloisVerdict.INCONCLUSIVE, (), "no usable primes within budget"
    for ell in primes_up_to(prime_budget):
        if f.lc % ell == 0 or disc % ell == 0:
            continue
        witnesses.append(frobenius_cycle_type(f, ell, seed=seed, disc=disc))
        verdict, rules, reason = analyze_patterns(n, [(w.ell, w.pattern) for w in witnesses], disc)
        if verdict in (GaloisVerdict.SYMMETRIC, GaloisVerdict.ALTERNATING):
            break
    return GaloisCertificate(verdict, n, disc, square, tuple(witnesses), rules, reason)


def recheck(cert: GaloisCertificate, f: IntPoly) -> bool:
    """Re-derive the verdict from the stored witnesses and f alone."""
    disc = discriminant(f)
    if disc != cert.disc or f.degree != cert.n:
        return False
    for w in cert.witnesses:
        if disc % w.ell == 0 or not w.verify(f):
            return False
    if not cert.witnesses:
        return cert.verdict is GaloisVerdict.INCONCLUSIVE
    verdict, rules, _ = analyze_patterns(cert.n, [(w.ell, w.pattern) for w in cert.witnesses], disc)
    return verdict == cert.verdict and rules == cert.rules_fired
