"""Submodules, simplicity and commutants of GModules over F_p.

``is_simple`` runs the Holt-Rees form of Norton's irreducibility test: pick
random elements A of the enveloping algebra until some irreducible factor g
of the characteristic polynomial of A has nullity(g(A)) == deg g.  Then one
spin in the module and one in its dual decide simplicity with certainty.
Both verdicts are certified; the test never reports a false "simple".
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import ModPoly, PrimeFieldMatrix, factor_mod_p, rank_nullspace
from .algebra.matrix import _matmul
from .permutations import GModule

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 2**20


class _Echelon:
    """Incrementally grown semi-echelon basis of a subspace of F_p^dim."""

    def __init__(self, dim: int, p: int, dtype=np.int64):
        self.dim = dim
        self.p = p
        self.dtype = dtype if p < 2**31 else object
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(v, dtype=self.dtype) % self.p
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = (v - c * row) % self.p
        return v

    def add(self, v) -> np.ndarray | None:
        """Insert v; return its reduced normalized form if it was new."""
        w = self.reduce(v)
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return None
        piv = int(nz[0])
        w = (w * pow(int(w[piv]), -1, self.p)) % self.p
        self.rows.append(w)
        self.pivots.append(piv)
        return w

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Reduced row echelon basis; equal subspaces give equal tuples."""
        if not self.rows:
            return ()
        red, _ = PrimeFieldMatrix(self.p, np.array(self.rows)).rref()
        return tuple(red.row(i) for i in range(len(self.rows)))


def _matvec(a: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    return _matmul(a, v.reshape(-1, 1), p).ravel()


def _spin(gens: Sequence[np.ndarray], seeds, dim: int, p: int) -> _Echelon:
    ech = _Echelon(dim, p)
    queue = []
    for s in seeds:
        w = ech.add(s)
        if w is not None:
            queue.append(w)
    while queue and len(ech) < dim:
        v = queue.pop()
        for g in gens:
            w = ech.add(_matvec(g, v, p))
            if w is not None:
                queue.append(w)
    return ech


def _check_vectors(m: GModule, vectors) -> list[list[int]]:
    out = []
    for v in vectors:
        v = [int(x) % m.p for x in v]
        if len(v) != m.dim:
            raise ValueError(f"vector of length {len(v)} in a module of dimension {m.dim}")
        out.append(v)
    return out


def spin(m: GModule, seeds) -> list[tuple[int, ...]]:
    """Smallest submodule containing ``seeds``, as an RREF basis."""
    seeds = _check_vectors(m, seeds)
    return list(_spin([g.array for g in m.generators], seeds, m.dim, m.p).canonical())


# -- commutant ------------------------------------------------------------

def _commutant_system(m: GModule) -> PrimeFieldMatrix:
    """Rows encode X g - g X = 0 for X flattened row-major."""
    d, p = m.dim, m.p
    eye = np.eye(d, dtype=object)
    blocks = []
    for g in m.generators:
        a = g.array.astype(object)
        blocks.append((np.kron(eye, a.T) - np.kron(a, eye)) % p)
    return PrimeFieldMatrix(m.field, np.concatenate(blocks, axis=0))


def commutant_basis(m: GModule) -> list[PrimeFieldMatrix]:
    """Basis of End_G(V) = {X : X g = g X for every generator g}."""
    d = m.dim
    if d == 0:
        return []
    _, null = rank_nullspace(_commutant_system(m))
    return [PrimeFieldMatrix(m.field, np.array(v, dtype=object).reshape(d, d)) for v in null]


def commutant_dimension(m: GModule) -> int:
    d = m.dim
    if d == 0:
        return 0
    return d * d - _commutant_system(m).rank()


# -- characteristic polynomial ----------------------------------------------

def charpoly(a: PrimeFieldMatrix) -> ModPoly:
    """det(x I - a) via reduction to upper Hessenberg form."""
    n, p = a.rows, a.p
    if n != a.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    h = a.tolist()
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = pow(h[j + 1][j], -1, p)
        for r in range(j + 2, n):
            u = h[r][j] * inv % p
            if not u:
                continue
            h[r] = [(x - u * y) % p for x, y in zip(h[r], h[j + 1])]
            for row in h:
                row[j + 1] = (row[j + 1] + u * row[r]) % p
    # p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
    polys = [ModPoly(p, (1,))]
    for m in range(1, n + 1):
        cur = ModPoly(p, (-h[m - 1][m - 1], 1)) * polys[m - 1]
        prod = 1
        for i in range(1, m):
            prod = prod * h[m - i][m - i - 1] % p
            if not prod:
                break
            cur = cur - polys[m - i - 1] * (h[m - i - 1][m - 1] * prod % p)
        polys.append(cur)
    return polys[n]


def _poly_at(g: ModPoly, a: PrimeFieldMatrix) -> PrimeFieldMatrix:
    eye = PrimeFieldMatrix.identity(a.field, a.rows)
    out = PrimeFieldMatrix.zeros(a.field, a.rows, a.rows)
    for c in reversed(g.coeffs):
        out = out @ a + eye.scale(c)
    return out


# -- simplicity -----------------------------------------------------------

@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    absolutely_simple: bool
    commutant_dim: int
    witness: tuple[tuple[int, ...], ...] | None = None
    method: str = ""

    def __post_init__(self):
        assert self.absolutely_simple == (self.simple and self.commutant_dim == 1)

    def to_dict(self) -> dict:
        return {
            "simple": self.simple,
            "absolutely_simple": self.absolutely_simple,
            "commutant_dim": self.commutant_dim,
            "witness": [list(v) for v in self.witness] if self.witness is not None else None,
            "method": self.method,
        }


def _annihilator(rows: Sequence[Sequence[int]], m: GModule) -> tuple[tuple[int, ...], ...]:
    """{v : w . v = 0 for all w in rows}, as an RREF basis."""
    _, null = rank_nullspace(PrimeFieldMatrix(m.field, [list(r) for r in rows]))
    return tuple(null)


def _norton(m: GModule, rng: random.Random, attempts: int):
    """Return (simple, witness) or None if no decisive algebra element was found."""
    d, p = m.dim, m.p
    gens = list(m.generators)
    gens_arr = [g.array for g in gens]
    dual_arr = [g.array.T.copy() for g in gens]
    pool = list(gens)
    for attempt in range(attempts):
        x, y = rng.choice(pool), rng.choice(pool)
        pool.append(x @ y)
        a = PrimeFieldMatrix.zeros(m.field, d, d)
        for elt in pool:
            c = rng.randrange(p)
            if c:
                a = a + elt.scale(c)
        cp = charpoly(a)
        for g, _ in factor_mod_p(cp, seed=rng.randrange(2**32)):
            if g.degree > d // 2 + 1 and g.degree != d:
                continue
            ga = _poly_at(g, a)
            _, null = rank_nullspace(ga)
            if not null:
                continue
            sub = _spin(gens_arr, [null[0]], d, p)
            if len(sub) < d:
                return False, sub.canonical()
            if len(null) != g.degree:
                continue
            _, dual_null = rank_nullspace(ga.T)
            dual_sub = _spin(dual_arr, [dual_null[0]], d, p)
            if len(dual_sub) < d:
                return False, _annihilator(dual_sub.canonical(), m)
            log.debug("norton: decisive element after %d attempts (factor degree %d)", attempt + 1, g.degree)
            return True, None
    return None


def _exhaustive_simple(m: GModule):
    for v in _projective_points(m.dim, m.p):
        sub = _spin([g.array for g in m.generators], [v], m.dim, m.p)
        if len(sub) < m.dim:
            return False, sub.canonical()
    return True, None


def is_simple(m: GModule, seed: int = 0, attempts: int = 200) -> SimplicityVerdict:
    """Decide simplicity of ``m``; a witness submodule is attached when not simple.

    Falls back to spinning every vector when p^dim <= 2^20 and the random
    search found no decisive element; beyond that it raises rather than
    guess.
    """
    if m.dim < 1:
        raise ValueError("simplicity is only defined for nonzero modules")
    comm = commutant_dimension(m)
    if m.dim == 1:
        return SimplicityVerdict(True, comm == 1, comm, None, "dimension-1")
    result = _norton(m, random.Random(seed), attempts)
    method = "norton"
    if result is None:
        if m.p ** m.dim > EXHAUSTIVE_LIMIT:
            raise RuntimeError(f"no decisive algebra element in {attempts} attempts; module too large to enumerate")
        result = _exhaustive_simple(m)
        method = "exhaustive"
    simple, witness = result
    return SimplicityVerdict(simple, simple and comm == 1, comm, witness, method)


def is_absolutely_simple(m: GModule, seed: int = 0) -> SimplicityVerdict:
    """Simple with commutant F_p; over a finite field this is absolute simplicity."""
    return is_simple(m, seed)


# -- exhaustive submodule enumeration -------------------------------------------

@dataclass(frozen=True)
class SubmoduleReport:
    dims: tuple[int, ...]
    count: int
    exhaustive: bool
    bases: tuple[tuple[tuple[int, ...], ...], ...] = ()

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "count": self.count, "exhaustive": self.exhaustive}


def _projective_points(dim: int, p: int):
    """One nonzero vector per line: first nonzero coordinate equal to 1."""
    for lead in range(dim):
        tail = dim - lead - 1
        for k in range(p**tail):
            v = [0] * dim
            v[lead] = 1
            for j in range(tail):
                k, r = divmod(k, p)
                v[dim - 1 - j] = r
            yield v


def enumerate_submodules_tiny(m: GModule) -> SubmoduleReport:
    """Every submodule of a small module, by spinning all vectors and closing under sums."""
    if m.p**m.dim > EXHAUSTIVE_LIMIT:
        raise ValueError(f"{m.p}^{m.dim} vectors exceed the enumeration limit; use is_simple instead")
    gens = [g.array for g in m.generators]
    subs = {(): None}
    for v in _projective_points(m.dim, m.p):
        subs[_spin(gens, [v], m.dim, m.p).canonical()] = None
    frontier = [s for s in subs if s]
    while frontier:
        found = []
        keys = [s for s in subs if s]
        for a in frontier:
            for b in keys:
                ech = _Echelon(m.dim, m.p)
                for row in a + b:
                    ech.add(row)
                key = ech.canonical()
                if key not in subs:
                    subs[key] = None
                    found.append(key)
        frontier = found
    bases = tuple(sorted(subs, key=lambda s: (len(s), s)))
    return SubmoduleReport(tuple(len(s) for s in bases), len(bases), True, bases)


# -- stable subalgebras ---------------------------------------------------------

class _Budget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self, k: int = 1) -> bool:
        self.left -= k
        return self.left >= 0


def _stable_closure(x: np.ndarray, gens, gens_inv, p: int, d: int, budget: _Budget):
    """Smallest unital subalgebra containing x and stable under conjugation.

    Returns the list of basis matrices, or None if it is all of End(V) or
    the budget ran out.
    """
    full = d * d
    ech = _Echelon(full, p)
    mats: list[np.ndarray] = []

    def add(z):
        w = ech.add(z.ravel())
        if w is not None:
            mats.append(z)
            return True
        return False

    add(np.eye(d, dtype=np.int64))
    queue = [x] if add(x) else []
    while queue:
        y = queue.pop(0)
        for g, gi in zip(gens, gens_inv):
            if not budget.spend(2):
                return None
            z = _matmul(_matmul(g, y, p), gi, p)
            if add(z):
                queue.append(z)
        for b in list(mats):
            if not budget.spend(2):
                return None
            for z in (_matmul(y, b, p), _matmul(b, y, p)):
                if add(z):
                    queue.append(z)
        if len(ech) == full:
            return None
    return mats


def verify_stable_subalgebra(basis: Sequence[PrimeFieldMatrix], m: GModule) -> bool:
    """Exact check: unital, closed under products, stable under conjugation."""
    d, p = m.dim, m.p
    ech = _Echelon(d * d, p)
    for b in basis:
        ech.add(b.array.ravel())
    if len(ech) != len(basis):
        return False
    if not ech.contains(np.eye(d, dtype=np.int64).ravel()):
        return False
    for a in basis:
        for b in basis:
            if not ech.contains((a @ b).array.ravel()):
                return False
    for g in m.generators:
        gi = g.inverse()
        for b in basis:
            if not ech.contains((g @ b @ gi).array.ravel()):
                return False
    return True


def stable_subalgebra_probe(m: GModule, seed: int = 0, budget: int = 10_000) -> list[PrimeFieldMatrix] | None:
    """Search for a proper G-stable unital subalgebra R of End(V).

    ``budget`` caps the number of d x d matrix products.  Candidates are the
    generator matrices, the commutant basis, then random matrices; each is
    closed under multiplication and conjugation by the generators.  A result
    is a certified counterexample to very simplicity (re-verified exactly);
    None proves nothing.
    """
    d, p = m.dim, m.p
    if d < 2:
        raise ValueError("the probe needs dim >= 2")
    rng = random.Random(seed)
    gens = [g.array for g in m.generators]
    gens_inv = [g.inverse().array for g in m.generators]
    left = _Budget(budget)

    def candidates():
        yield from gens
        for c in commutant_basis(m):
            yield c.array
        while True:
            yield np.array([[rng.randrange(p) for _ in range(d)] for _ in range(d)], dtype=np.int64)

    for x in candidates():
        if left.left <= 0:
            return None
        mats = _stable_closure(x, gens, gens_inv, p, d, left)
        if mats is None or len(mats) <= 1:
            continue
        basis = [PrimeFieldMatrix(m.field, z) for z in mats]
        if verify_stable_subalgebra(basis, m):
            return basis
        raise AssertionError("closure produced a subspace that failed exact re-verification")
    return None
