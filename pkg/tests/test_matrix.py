import itertools
import random

import pytest
from hypothesis import given, strategies as st
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from superjac.algebra import PrimeFieldMatrix, rank_nullspace, solve_linear
from superjac.algebra.matrix import stack


def sympy_rank(rows, p):
    if not rows or not rows[0]:
        return 0
    return DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p)).rank()


@st.composite
def matrices(draw, max_size=12):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    r = draw(st.integers(1, max_size))
    c = draw(st.integers(1, max_size))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return p, rows


def test_identity_rank():
    r, null = rank_nullspace(PrimeFieldMatrix.identity(5, 3))
    assert (r, null) == (3, [])


def test_zero_matrix_nullspace():
    r, null = rank_nullspace(PrimeFieldMatrix.zeros(3, 2, 4))
    assert r == 0 and len(null) == 4


def test_rank_one_over_f3_exhaustive_oracle():
    m = PrimeFieldMatrix(3, [[1, 2], [2, 1]])
    r, null = rank_nullspace(m)
    kernel = [v for v in itertools.product(range(3), repeat=2) if m @ v == (0, 0)]
    assert r == 1 and null == [(1, 1)]
    assert sorted(kernel) == sorted({tuple(c * x % 3 for x in (1, 1)) for c in range(3)})


@given(matrices())
def test_rank_nullity_and_kernel(data):
    p, rows = data
    m = PrimeFieldMatrix(p, rows)
    r, null = rank_nullspace(m)
    assert r == sympy_rank(rows, p)
    assert r + len(null) == m.cols
    for v in null:
        assert not any(m @ v)
    if null:
        red, piv = PrimeFieldMatrix(p, null).rref()
        assert PrimeFieldMatrix(p, null) == red  # canonical RREF output
        assert len(piv) == len(null)


@given(matrices())
def test_rows_lie_in_echelon_row_space(data):
    p, rows = data
    m = PrimeFieldMatrix(p, rows)
    red, piv = m.rref()
    basis = PrimeFieldMatrix(p, [red.row(i) for i in range(len(piv))]) if piv else None
    for i in range(m.rows):
        row = m.row(i)
        if basis is None:
            assert not any(row)
            continue
        # row = sum row[piv_j] * basis_j by the RREF structure
        combo = [0] * m.cols
        for j, pc in enumerate(piv):
            for k in range(m.cols):
                combo[k] = (combo[k] + row[pc] * basis[j, k]) % p
        assert tuple(combo) == row


def test_solve_identity_and_inconsistent():
    b = (1, 2, 3)
    assert solve_linear(PrimeFieldMatrix.identity(5, 3), b) == b
    assert solve_linear(PrimeFieldMatrix.zeros(5, 3, 3), b) is None


def test_solve_f2_exhaustive_oracle():
    m = PrimeFieldMatrix(2, [[1, 1], [0, 0]])
    x = solve_linear(m, (1, 0))
    sols = [v for v in itertools.product(range(2), repeat=2) if m @ v == (1, 0)]
    assert x in sols


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_linear(PrimeFieldMatrix.identity(5, 3), (1, 2))


@given(matrices(max_size=8), st.data())
def test_solve_consistent_systems(data, d):
    p, rows = data
    m = PrimeFieldMatrix(p, rows)
    x0 = d.draw(st.lists(st.integers(0, p - 1), min_size=m.cols, max_size=m.cols))
    b = m @ x0
    x = solve_linear(m, b)
    assert x is not None and m @ x == b


def test_det_inverse_against_sympy(rng):
    for _ in range(40):
        p = rng.choice([2, 3, 5, 7, 11])
        n = rng.randint(1, 7)
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        m = PrimeFieldMatrix(p, rows)
        dm = DomainMatrix([[GF(p)(x) for x in r] for r in rows], (n, n), GF(p))
        assert m.det() == int(dm.det()) % p
        if m.det():
            assert m @ m.inverse() == PrimeFieldMatrix.identity(p, n)
            assert m ** -2 @ m ** 2 == PrimeFieldMatrix.identity(p, n)
        else:
            with pytest.raises(ZeroDivisionError):
                m.inverse()


def test_large_prime_products_are_exact():
    p = 2**61 - 1
    rng = random.Random(3)
    a = [[rng.randrange(p) for _ in range(4)] for _ in range(4)]
    b = [[rng.randrange(p) for _ in range(4)] for _ in range(4)]
    expect = [[sum(a[i][k] * b[k][j] for k in range(4)) % p for j in range(4)] for i in range(4)]
    assert (PrimeFieldMatrix(p, a) @ PrimeFieldMatrix(p, b)).tolist() == expect
    q = 2**31 - 1  # int64 storage with overflow-prone products
    a = [[q - 1] * 5 for _ in range(5)]
    assert (PrimeFieldMatrix(q, a) @ PrimeFieldMatrix(q, a)).tolist() == [[5 * (q - 1) ** 2 % q] * 5] * 5


def test_immutability_and_field_checks():
    m = PrimeFieldMatrix(3, [[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        m.array[0, 0] = 2
    with pytest.raises(TypeError):
        m + PrimeFieldMatrix(5, [[1, 2], [0, 1]])
    assert stack([m, m]).shape == (4, 2)
    assert PrimeFieldMatrix(3, [[4, -1]]).tolist() == [[1, 2]]
