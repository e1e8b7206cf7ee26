"""Acceptance criteria, one test each, with one PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) or through pytest; the
summary lines are printed either way.
"""

import io
import json
import random
import time
from math import gcd

import pytest

from superjac.algebra import IntPoly, ModPoly
from superjac.cli import run
from superjac.criteria import Mode, Status, decide_very_simple, is_fermat_prime
from superjac.curve import (
    CurveSpec,
    differential_basis,
    eigen_multiplicities,
    genus,
    reduce_degree,
    trigonal_basis,
    trigonal_multiplicities,
)
from superjac.galois import GaloisVerdict, certify
from superjac.meataxe import (
    commutant_dimension,
    enumerate_submodules_tiny,
    is_absolutely_simple,
    is_simple,
    stable_subalgebra_probe,
    verify_stable_subalgebra,
)
from superjac.permutations import CycleType, Family, GroupKind, Permutation, brauer_phi, build_v00, permutation_module, standard_generators, v00_dimension

ODD_PRIMES_13 = [3, 5, 7, 11, 13]


def c1_genus_grid():
    for n in range(4, 31):
        for p in ODD_PRIMES_13:
            expect = (p - 1) * (n - 1) // 2 if n % p else (p - 1) * (n - 2) // 2
            if genus(n, p) != expect:
                return False, f"genus({n},{p})"
    spots = (genus(5, 3), genus(6, 3), genus(4, 5))
    return spots == (4, 4, 6), f"spot values {spots}"


def c2_module_grid():
    for n in range(5, 10):
        for family in Family:
            for p in (2, 3, 5, 7):
                m = build_v00(n, p, family)
                if m.dim != v00_dimension(n, p) or m.dim != (n - 2 if n % p == 0 else n - 1):
                    return False, f"dim V00({n},{p})"
                if not is_absolutely_simple(m).absolutely_simple or commutant_dimension(m) != 1:
                    return False, f"V00({n},{p},{family.value}) not absolutely simple"
    return True, "40 modules absolutely simple with commutant F_p"


def c3_brute_force():
    v = build_v00(5, 3, Family.ALTERNATING)
    rep = enumerate_submodules_tiny(v)
    if rep.dims != (0, 4) or not is_simple(v).simple:
        return False, f"V00(5,3) submodules {rep.dims}"
    full = permutation_module(standard_generators(GroupKind.symmetric(5)), 3, "full")
    rep_full = enumerate_submodules_tiny(full)
    line = ((1, 1, 1, 1, 1),)
    has_line = line in rep_full.bases
    has_hyperplane = any(len(b) == 4 and all(sum(row) % 3 == 0 for row in b) for b in rep_full.bases)
    agrees = is_simple(full).simple == (rep_full.count == 2)
    return has_line and has_hyperplane and agrees, f"F_3^5 submodule dims {rep_full.dims}"


def c4_a5p5():
    values = [brauer_phi(CycleType(t), 5, 5) for t in ([1] * 5, [2, 2, 1], [3, 1, 1])]
    m = build_v00(5, 5, Family.ALTERNATING)
    ok = values == [3, -1, 0] and m.dim == 3 and is_absolutely_simple(m).absolutely_simple
    return ok, f"phi = {values}, dim {m.dim}"


def c5_differential_bases():
    for n in range(4, 31):
        if n % 3 and set(differential_basis(n, 3).entries) != set(trigonal_basis(n).entries):
            return False, f"closed form differs at n={n}"
        for p in ODD_PRIMES_13:
            if n % p and len(differential_basis(n, p)) != genus(n, p):
                return False, f"|basis({n},{p})| != genus"
    return True, "closed form and genus count agree"


def c6_trigonal_multiplicities():
    bad = []
    for n in range(4, 31):
        k, r = divmod(n, 3)
        if r == 0:
            expect = (k - 1, 2 * k - 1)
        else:
            k, e = k + 1, 3 - r
            expect = (k - 1, 2 * k - 1 - (2 * e) // 3)
        m = eigen_multiplicities(n, 3)
        if (m.n_sigma, m.n_sigma_bar) != expect or trigonal_multiplicities(n) != expect:
            bad.append(f"pair at n={n}")
        if (gcd(*expect) == 1) != ((n - 1) % 3 != 0):
            bad.append(f"n={n}: {expect} coprime={gcd(*expect) == 1} but 3 | n-1 is {(n - 1) % 3 == 0}")
    spots = trigonal_multiplicities(5) == (1, 3) and trigonal_multiplicities(7) == (2, 4)
    return not bad and spots, "; ".join(bad) or "all 27 degrees agree"


def c7_reduction():
    c = CurveSpec(3, ModPoly(7, (1, 1, 0, 0, 0, 0, 1)))
    r = reduce_degree(c, 5)
    if not (r.n == 5 and r.f.is_squarefree() and genus(6, 3) == genus(5, 3) == 4):
        return False, "x^6+x+1 example"
    rng = random.Random(7)
    done = 0
    while done < 50:
        q = rng.choice([7, 11, 13])
        p = rng.choice([3, 5])
        n = p * rng.randint(2, 3)
        alpha = rng.randrange(q)
        f = ModPoly(q, [rng.randrange(q) for _ in range(n - 1)] + [1]) * ModPoly(q, (-alpha, 1))
        if not f.is_squarefree():
            continue
        red = reduce_degree(CurveSpec(p, f), alpha)
        if not (red.f.is_squarefree() and red.n == n - 1 and genus(n - 1, p) == genus(n, p)):
            return False, f"random case {done}"
        done += 1
    return True, "example plus 50 random cases"


def c8_galois_flagship():
    f = IntPoly((-1, -1, 0, 0, 0, 1))
    cert = certify(f, 200)
    mod2 = any(w.ell == 2 and sorted(w.pattern.parts) == [2, 3] for w in cert.witnesses)
    ok = cert.verdict is GaloisVerdict.SYMMETRIC and mod2 and cert.disc == 2869 and not cert.disc_is_square
    return ok and all(w.verify(f) for w in cert.witnesses), f"{cert.verdict.value}, disc {cert.disc}"


def c9_end_to_end():
    out, err = io.StringIO(), io.StringIO()
    code = run(["analyze", "--p", "3", "--f", "x^5-x-1", "--json"], out, err)
    if code != 0:
        return False, err.getvalue()
    c = json.loads(out.getvalue())["conclusions"]
    ok = c["maximal_commutative"] and c["fermat_full_ring"] and c["hodge_flag"] and c["jacobian_dimension"] == 4 == 3 * 2 - 2
    return ok, f"jacobian dimension {c['jacobian_dimension']}"


def c10_criteria_matrix():
    inconclusive = []
    for n in range(5, 13):
        for p in ODD_PRIMES_13:
            v = decide_very_simple(n, p, Mode.VERIFIED)
            if v.status is Status.INCONCLUSIVE:
                if "A_5" not in v.reason or "PGL_2" not in v.reason:
                    return False, f"({n},{p}) reason {v.reason!r}"
                inconclusive.append((n, p))
            if decide_very_simple(n, p, Mode.TRUSTED).status is not Status.VERY_SIMPLE:
                return False, f"trusted mode ({n},{p})"
    expected = [(5, p) for p in ODD_PRIMES_13 if p % 5 in (1, 4)]
    fermat = all(map(is_fermat_prime, (3, 5, 17, 257, 65537))) and not any(map(is_fermat_prime, (7, 13, 31)))
    return inconclusive == expected and fermat, f"inconclusive at {inconclusive}"


def c11_probe():
    c5 = permutation_module([Permutation.from_cycles(5, [0, 1, 2, 3, 4])], 3, "v0")
    found = stable_subalgebra_probe(c5, seed=0)
    if found is None or len(found) != 4 or not verify_stable_subalgebra(found, c5):
        return False, "no dim-4 subalgebra for C_5 over F_3"
    v = build_v00(5, 3, Family.ALTERNATING)
    hits = [stable_subalgebra_probe(v, seed=s, budget=10**4) for s in range(3)]
    return all(h is None for h in hits), "C_5: dim 4 found; V00(5,3): none in 3 seeds"


CRITERIA = [
    (1, "genus grid", 1, c1_genus_grid),
    (2, "module grid", 30, c2_module_grid),
    (3, "brute-force submodule oracle", 5, c3_brute_force),
    (4, "Brauer character A5 over F_5", 1, c4_a5p5),
    (5, "differential bases", 1, c5_differential_bases),
    (6, "trigonal multiplicities", 1, c6_trigonal_multiplicities),
    (7, "degree reduction", 5, c7_reduction),
    (8, "Galois flagship", 5, c8_galois_flagship),
    (9, "end-to-end analyze", 10, c9_end_to_end),
    (10, "criteria matrix", 1, c10_criteria_matrix),
    (11, "stable subalgebra probe", 10, c11_probe),
]

# n = 4 is a counterexample to the literal equivalence: (1, 2) is coprime while 3 | 3.
KNOWN_FAILURES = {6: "n=4 has coprime multiplicities (1, 2) although 3 divides n-1 = 3"}


def evaluate(number, title, limit, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = bool(ok) and elapsed < limit
    line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title} ({elapsed:.2f} s, limit {limit} s): {detail}"
    return passed, line


def _params():
    for number, title, limit, fn in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[number])] if number in KNOWN_FAILURES else []
        yield pytest.param(number, title, limit, fn, id=f"criterion-{number}", marks=marks)


@pytest.mark.parametrize("number, title, limit, fn", list(_params()))
def test_criterion(number, title, limit, fn, capsys):
    passed, line = evaluate(number, title, limit, fn)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    print(f"{sum(ok for ok, _ in results)}/{len(results)} criteria pass")
