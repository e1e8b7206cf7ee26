"""Permutation groups S_n, A_n and the modules F_p^B, (F_p^B)^0, (F_p^B)^00.

Conventions
-----------
* A permutation ``s`` of B = {0, ..., n-1} is stored by its image tuple.
  Products compose right to left: ``(s * t)(i) == s(t(i))``.
* ``s`` acts on maps h: B -> F_p by ``(s h)(b) = h(s^-1(b))``, hence
  ``s e_i = e_{s(i)}`` and ``rho(s * t) == rho(s) @ rho(t)``.
* (F_p^B)^0 has basis u_i = e_i - e_{n-1} (0 <= i <= n-2); a sum-zero vector
  has coordinates equal to its first n-1 entries.
* When p | n, (F_p^B)^00 = (F_p^B)^0 / F_p 1_B with coset representatives
  u_0, ..., u_{n-3}.  Since 1_B = u_0 + ... + u_{n-2}, a coordinate vector c
  reduces to (c_j - c_{n-2})_{j < n-2}.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import PrimeField, PrimeFieldMatrix
from .algebra.field import as_field


class Family(str, enum.Enum):
    SYMMETRIC = "sym"
    ALTERNATING = "alt"


@dataclass(frozen=True)
class GroupKind:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.n < 2:
            raise ValueError("n must be at least 2")

    @classmethod
    def symmetric(cls, n: int) -> "GroupKind":
        return cls(Family.SYMMETRIC, n)

    @classmethod
    def alternating(cls, n: int) -> "GroupKind":
        return cls(Family.ALTERNATING, n)

    @property
    def order(self) -> int:
        full = math.factorial(self.n)
        return full if self.family is Family.SYMMETRIC else full // 2

    def __str__(self):
        return ("S" if self.family is Family.SYMMETRIC else "A") + str(self.n)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        out = Permutation.identity(self.n)
        for _ in range(abs(e)):
            out = out * base
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.n):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> "CycleType":
        return CycleType(len(c) for c in self.cycles())

    @property
    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def fixed_points(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i == j)

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored in non-increasing order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if any(x < 1 for x in parts):
            raise ValueError("cycle lengths must be positive")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse ``"2,2,1"`` (commas and/or whitespace)."""
        tokens = text.replace(",", " ").split()
        if not tokens:
            raise ValueError("empty cycle type")
        try:
            return cls(int(t) for t in tokens)
        except ValueError as exc:
            raise ValueError(f"bad cycle type {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    def fixed_points(self) -> int:
        return self.parts.count(1)

    def is_p_regular(self, p: int) -> bool:
        return all(x % p for x in self.parts)

    def representative(self) -> Permutation:
        cycles, start = [], 0
        for length in self.parts:
            cycles.append(list(range(start, start + length)))
            start += length
        return Permutation.from_cycles(self.n, *cycles)

    def __str__(self):
        return ",".join(map(str, self.parts))


# -- generators -----------------------------------------------------------

def standard_generators(g: GroupKind) -> list[Permutation]:
    """Fixed generating sets.

    S_n: the transposition (0 1) and the n-cycle (0 1 ... n-1).
    A_n: the 3-cycle (0 1 2) together with the n-cycle when n is odd, or the
    (n-1)-cycle (1 2 ... n-1) fixing 0 when n is even.
    """
    n = g.n
    if g.family is Family.SYMMETRIC:
        if n < 2:
            raise ValueError("S_n needs n >= 2")
        return [Permutation.from_cycles(n, [0, 1]), Permutation.from_cycles(n, list(range(n)))]
    if n < 3:
        raise ValueError("A_n generators need n >= 3")
    if n == 3:
        return [Permutation.from_cycles(3, [0, 1, 2])]
    long = list(range(n)) if n % 2 else list(range(1, n))
    return [Permutation.from_cycles(n, [0, 1, 2]), Permutation.from_cycles(n, long)]


def generated_group(gens: Sequence[Permutation]) -> set[Permutation]:
    """All elements of <gens>, by breadth-first closure (small n only)."""
    if not gens:
        raise ValueError("need at least one generator")
    ident = Permutation.identity(gens[0].n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = s * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def orbit(point: int, gens: Sequence[Permutation]) -> set[int]:
    seen = {point}
    stack = [point]
    while stack:
        b = stack.pop()
        for s in gens:
            c = s(b)
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return seen


def random_word(gens: Sequence[Permutation], length: int, rng: random.Random) -> list[int]:
    return [rng.randrange(len(gens)) for _ in range(length)]


def evaluate_word(gens: Sequence[Permutation], word: Sequence[int]) -> Permutation:
    out = Permutation.identity(gens[0].n)
    for i in word:
        out = out * gens[i]
    return out


# -- modules --------------------------------------------------------------

@dataclass(frozen=True)
class GModule:
    """A representation given by one invertible matrix per group generator."""

    field: PrimeField
    dim: int
    generators: tuple[PrimeFieldMatrix, ...]
    label: str = ""
    basis_labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "field", as_field(self.field))
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("a GModule needs at least one generator")
        for g in self.generators:
            if g.field != self.field or g.shape != (self.dim, self.dim):
                raise ValueError(f"generator of shape {g.shape} over {g.field} in a dim-{self.dim} module over {self.field}")
            if self.dim and not g.is_invertible():
                raise ValueError("generator matrices must be invertible")

    @property
    def p(self) -> int:
        return self.field.p

    def transpose(self) -> "GModule":
        """Generators transposed: its submodules are annihilators of ours."""
        return GModule(self.field, self.dim, tuple(g.T for g in self.generators), self.label + "^T")


def _sum_zero_coords(col: list[int], p: int, quotient: bool) -> list[int]:
    coords = col[:-1]
    if quotient:
        last = coords[-1]
        coords = [(c - last) % p for c in coords[:-1]]
    return [c % p for c in coords]


def permutation_matrix(s: Permutation, p: int | PrimeField, part: str = "v00") -> PrimeFieldMatrix:
    """Matrix of s on F_p^B ("full"), (F_p^B)^0 ("v0") or (F_p^B)^00 ("v00")."""
    field = as_field(p)
    n = s.n
    if part == "full":
        cols = []
        for i in range(n):
            col = [0] * n
            col[s(i)] = 1
            cols.append(col)
        return PrimeFieldMatrix.from_columns(field, cols, n)
    if part not in ("v0", "v00"):
        raise ValueError(f"unknown part {part!r}")
    quotient = part == "v00" and n % field.p == 0
    dim = n - 2 if quotient else n - 1
    cols = []
    for i in range(dim):
        vec = [0] * n
        vec[s(i)] += 1
        vec[s(n - 1)] -= 1
        cols.append(_sum_zero_coords(vec, field.p, quotient))
    return PrimeFieldMatrix.from_columns(field, cols, dim)


def v00_dimension(n: int, p: int) -> int:
    return n - 2 if n % p == 0 else n - 1


def permutation_module(
    gens: Sequence[Permutation], p: int | PrimeField, part: str = "v00", label: str = ""
) -> GModule:
    field = as_field(p)
    mats = tuple(permutation_matrix(s, field, part) for s in gens)
    n = gens[0].n
    dim = mats[0].rows
    if part == "full":
        labels = tuple(f"e{i}" for i in range(n))
    else:
        labels = tuple(f"e{i}-e{n - 1}" for i in range(dim))
    return GModule(field, dim, mats, label or f"{part}(n={n},p={field.p})", labels)


def build_v00(n: int, p: int | PrimeField, family: Family | str = Family.ALTERNATING) -> GModule:
    """(F_p^B)^00 for B = {0..n-1} under the standard generators of S_n or A_n."""
    field = as_field(p)
    g = GroupKind(Family(family), n)
    gens = standard_generators(g)
    tag = "Sym" if g.family is Family.SYMMETRIC else "Alt"
    return permutation_module(gens, field, "v00", f"V00(n={n},p={field.p},{tag})")


def oddeven_intertwiner(n: int, p: int | PrimeField, family: Family | str = Family.ALTERNATING) -> PrimeFieldMatrix:
    """Isomorphism (F_p^B')^00 -> (F_p^B)^00 of modules over the point stabilizer.

    The removed point is b = n-1, so B' = {0..n-2} and the stabilizer G_b is
    Sym(B') or Alt(B').  A map h on B' is extended by h(b) = 0 and then
    reduced modulo F_p 1_B.  The returned T satisfies
    ``T @ rho_small(s) == rho_big(s) @ T`` for every s in G_b.
    """
    field = as_field(p)
    if n % field.p:
        raise ValueError(f"p = {field.p} does not divide n = {n}")
    small_dim = n - 2  # (F_p^B')^00 = (F_p^B')^0 since p does not divide n-1
    cols = []
    for i in range(small_dim):
        vec = [0] * n  # e_i - e_{n-2} on B', extended by zero at b = n-1
        vec[i] += 1
        vec[n - 2] -= 1
        cols.append(_sum_zero_coords(vec, field.p, quotient=True))
    return PrimeFieldMatrix.from_columns(field, cols, small_dim)


def stabilizer_generators(n: int, family: Family | str = Family.ALTERNATING) -> list[Permutation]:
    """Standard generators of Sym/Alt on {0..n-2}, extended to fix n-1."""
    small = standard_generators(GroupKind(Family(family), n - 1))
    return [Permutation(s.images + (n - 1,)) for s in small]


# -- characters -----------------------------------------------------------

def permutation_character(t: CycleType) -> int:
    """Number of fixed points."""
    return t.fixed_points()


def chi(t: CycleType) -> int:
    """Character of (Q^B)^0: fixed points minus one."""
    return t.fixed_points() - 1


def brauer_phi(t: CycleType, n: int, p: int | PrimeField) -> int:
    """Brauer character of (F_p^B)^00 at a p-regular class.

    Equals chi when p does not divide n and chi - 1 when it does (the
    trivial constituent F_p 1_B is factored out).
    """
    p = as_field(p).p
    if t.n != n:
        raise ValueError(f"cycle type {t} is not a partition of {n}")
    if not t.is_p_regular(p):
        raise ValueError(f"cycle type {t} is {p}-singular")
    return chi(t) - 1 if n % p == 0 else chi(t)
