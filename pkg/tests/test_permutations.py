import math
import random

import pytest
from hypothesis import given, strategies as st

from superjac.algebra import PrimeFieldMatrix
from superjac.permutations import (
    CycleType,
    Family,
    GModule,
    GroupKind,
    Permutation,
    brauer_phi,
    build_v00,
    chi,
    evaluate_word,
    generated_group,
    oddeven_intertwiner,
    orbit,
    permutation_character,
    permutation_matrix,
    permutation_module,
    random_word,
    stabilizer_generators,
    standard_generators,
    v00_dimension,
)


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("family", list(Family))
def test_standard_generators_generate(n, family):
    g = GroupKind(family, n)
    gens = standard_generators(g)
    group = generated_group(gens)
    assert len(group) == g.order == (math.factorial(n) // (1 if family is Family.SYMMETRIC else 2))
    assert all(s.sign == 1 for s in group) or family is Family.SYMMETRIC
    assert orbit(0, gens) == set(range(n))


def test_permutation_basics():
    s = Permutation.from_cycles(5, [0, 1, 2], [3, 4])
    assert s.cycle_type() == CycleType([3, 2])
    assert s.sign == -1 and s**6 == Permutation.identity(5)
    assert s * s.inverse() == Permutation.identity(5)
    assert CycleType.parse("2, 2 1").parts == (2, 2, 1)
    with pytest.raises(ValueError):
        CycleType.parse("")
    with pytest.raises(ValueError):
        CycleType([2, 0])


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_v00_dimension_grid(n, p):
    m = build_v00(n, p)
    assert m.dim == v00_dimension(n, p) == (n - 2 if n % p == 0 else n - 1)
    assert m.dim == permutation_module(standard_generators(GroupKind.symmetric(n)), p).dim


def test_v00_examples():
    assert build_v00(5, 3).dim == 4
    assert build_v00(6, 3).dim == 4
    assert build_v00(6, 2, "sym").dim == 4
    with pytest.raises(ValueError):
        permutation_matrix(Permutation.identity(4), 3, "bogus")


@given(st.integers(4, 9), st.sampled_from([2, 3, 5]), st.sampled_from(["full", "v0", "v00"]), st.integers(0, 10**6))
def test_representation_is_a_homomorphism(n, p, part, seed):
    rng = random.Random(seed)
    gens = standard_generators(GroupKind.symmetric(n))
    mats = [permutation_matrix(s, p, part) for s in gens]
    for _ in range(5):
        word = random_word(gens, rng.randint(0, 12), rng)
        prod = PrimeFieldMatrix.identity(p, mats[0].rows)
        for i in word:
            prod = prod @ mats[i]
        assert permutation_matrix(evaluate_word(gens, word), p, part) == prod


def test_full_module_matches_definition():
    s = Permutation.from_cycles(4, [0, 2, 3])
    m = permutation_matrix(s, 5, "full")
    for i in range(4):
        e = [0] * 4
        e[i] = 1
        out = m @ e
        assert out.index(1) == s(i) and sum(out) == 1


@pytest.mark.parametrize("n, p", [(6, 3), (6, 2), (9, 3), (10, 5), (8, 2), (14, 7)])
@pytest.mark.parametrize("family", list(Family))
def test_oddeven_intertwiner(n, p, family):
    t = oddeven_intertwiner(n, p, family)
    assert t.shape == (n - 2, n - 2) and t.is_invertible()
    for s in stabilizer_generators(n, family):
        small = permutation_matrix(Permutation(s.images[:-1]), p, "v00")
        assert t @ small == permutation_matrix(s, p, "v00") @ t


def test_intertwiner_needs_p_dividing_n():
    with pytest.raises(ValueError):
        oddeven_intertwiner(7, 3)


def test_characters():
    t = CycleType([2, 1, 1, 1])
    assert permutation_character(t) == 3 and chi(t) == 2
    assert brauer_phi(CycleType([1] * 6), 6, 3) == 4
    assert brauer_phi(CycleType([5, 1]), 6, 3) == -1
    with pytest.raises(ValueError):
        brauer_phi(CycleType([3, 1, 1]), 5, 3)
    with pytest.raises(ValueError):
        brauer_phi(CycleType([3, 1]), 5, 2)


@pytest.mark.parametrize("n", range(4, 10))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_trace_reduces_to_brauer_character(n, p):
    rng = random.Random(n * 100 + p)
    gens = standard_generators(GroupKind.symmetric(n))
    seen = 0
    for _ in range(60):
        s = evaluate_word(gens, random_word(gens, rng.randint(10, 16), rng))
        t = s.cycle_type()
        if not t.is_p_regular(p):
            continue
        seen += 1
        assert permutation_matrix(s, p, "v00").trace() == brauer_phi(t, n, p) % p
    assert seen


def test_gmodule_validation():
    with pytest.raises(ValueError):
        GModule(3, 2, ())
    with pytest.raises(ValueError):
        GModule(3, 2, (PrimeFieldMatrix(3, [[1, 1], [1, 1]]),))
    with pytest.raises(ValueError):
        GModule(3, 2, (PrimeFieldMatrix.identity(5, 2),))
