"""Dense matrices over F_p backed by numpy.

Entries live in an int64 array when p < 2**31 and in an object array (Python
ints) otherwise.  Matrix products that could overflow int64 are routed
through object arithmetic, so results are exact for every prime.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .field import PrimeField, as_field

_INT64_LIMIT = 2**63 - 1


def _dtype(p: int):
    return np.int64 if p < 2**31 else object


def _as_array(rows, p: int, shape=None) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        arr = rows
    else:
        rows = [list(r) for r in rows]
        if shape is not None and (not rows or not rows[0]):
            return np.zeros(shape, dtype=_dtype(p))
        arr = np.array(rows, dtype=object)
        if arr.size == 0:
            arr = arr.reshape(len(rows), 0)
    if arr.dtype == object:
        arr = np.array([[int(x) % p for x in row] for row in arr], dtype=object).reshape(arr.shape)
    else:
        arr = np.mod(arr, p)
    return arr.astype(_dtype(p))


def _matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    k = a.shape[1]
    if a.dtype != object and (p - 1) ** 2 * max(k, 1) <= _INT64_LIMIT:
        return (a @ b) % p
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(_dtype(p))


class PrimeFieldMatrix:
    """Immutable rows x cols matrix over F_p."""

    __slots__ = ("field", "_a")

    def __init__(self, field: int | PrimeField, rows, shape: tuple[int, int] | None = None):
        self.field = as_field(field)
        arr = _as_array(rows, self.field.p, shape)
        if arr.ndim != 2:
            raise ValueError("matrix entries must form a rectangular 2-d array")
        if shape is not None and arr.shape != tuple(shape):
            raise ValueError(f"expected shape {shape}, got {arr.shape}")
        arr.flags.writeable = False
        self._a = arr

    # construction -------------------------------------------------------
    @classmethod
    def _wrap(cls, field: PrimeField, arr: np.ndarray) -> "PrimeFieldMatrix":
        m = object.__new__(cls)
        m.field = field
        arr = np.ascontiguousarray(arr, dtype=_dtype(field.p))
        arr.flags.writeable = False
        m._a = arr
        return m

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "PrimeFieldMatrix":
        field = as_field(field)
        return cls._wrap(field, np.zeros((rows, cols), dtype=_dtype(field.p)))

    @classmethod
    def identity(cls, field, n: int) -> "PrimeFieldMatrix":
        field = as_field(field)
        arr = np.zeros((n, n), dtype=_dtype(field.p))
        for i in range(n):
            arr[i, i] = 1
        return cls._wrap(field, arr)

    @classmethod
    def from_columns(cls, field, columns: Sequence[Sequence[int]], n_rows: int) -> "PrimeFieldMatrix":
        if not columns:
            return cls.zeros(field, n_rows, 0)
        return cls(field, [list(c) for c in columns]).T

    # shape and entries --------------------------------------------------
    @property
    def p(self) -> int:
        return self.field.p

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a.ravel())

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def __getitem__(self, idx):
        return int(self._a[idx])

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a[i])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a[:, j])

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other: "PrimeFieldMatrix"):
        if not isinstance(other, PrimeFieldMatrix) or other.field != self.field:
            raise TypeError("matrices over different fields")

    def __add__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return self._wrap(self.field, (self._a + other._a) % self.p)

    def __sub__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return self._wrap(self.field, (self._a - other._a) % self.p)

    def __neg__(self) -> "PrimeFieldMatrix":
        return self._wrap(self.field, (-self._a) % self.p)

    def scale(self, c: int) -> "PrimeFieldMatrix":
        c %= self.p
        if self._a.dtype != object and (self.p - 1) * c > _INT64_LIMIT:
            return self._wrap(self.field, (self._a.astype(object) * c) % self.p)
        return self._wrap(self.field, (self._a * c) % self.p)

    def __matmul__(self, other):
        if isinstance(other, PrimeFieldMatrix):
            self._check_same(other)
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            return self._wrap(self.field, _matmul(self._a, other._a, self.p))
        vec = np.asarray(list(other), dtype=object).reshape(-1, 1)
        if vec.shape[0] != self.cols:
            raise ValueError("vector length does not match column count")
        out = _matmul(self._a, _as_array(vec, self.p), self.p)
        return tuple(int(x) for x in out.ravel())

    def __pow__(self, e: int) -> "PrimeFieldMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = PrimeFieldMatrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    @property
    def T(self) -> "PrimeFieldMatrix":
        return self._wrap(self.field, self._a.T)

    def trace(self) -> int:
        return int(sum(int(self._a[i, i]) for i in range(min(self.shape)))) % self.p

    def __eq__(self, other):
        return (
            isinstance(other, PrimeFieldMatrix)
            and other.field == self.field
            and other.shape == self.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self):
        return hash((self.p, self.shape, self.entries))

    def __repr__(self):
        return f"PrimeFieldMatrix(F_{self.p}, {self.tolist()})"

    def is_zero(self) -> bool:
        return not self._a.any()

    # linear algebra -----------------------------------------------------
    def rref(self) -> tuple["PrimeFieldMatrix", tuple[int, ...]]:
        arr, pivots = _rref(self._a, self.p)
        return self._wrap(self.field, arr), pivots

    def rank(self) -> int:
        return len(_rref(self._a, self.p)[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _det(self._a, self.p)

    def inverse(self) -> "PrimeFieldMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = np.concatenate([self._a, np.eye(n, dtype=self._a.dtype)], axis=1)
        red, pivots = _rref(aug, self.p)
        if pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return self._wrap(self.field, red[:, n:])


def _rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = np.array(a, dtype=a.dtype, copy=True)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        factors = m[:, c].copy()
        factors[r] = 0
        nzr = np.nonzero(factors)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(factors[nzr], m[r]) % p) % p
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def _det(a: np.ndarray, p: int) -> int:
    m = np.array(a, dtype=a.dtype, copy=True)
    n = m.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            det = -det
        pivot = int(m[c, c])
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        below = (m[c + 1 :, c] * inv) % p
        nzr = np.nonzero(below)[0]
        if nzr.size:
            idx = nzr + c + 1
            m[idx] = (m[idx] - np.outer(below[nzr], m[c]) % p) % p
    return det % p


def rank_nullspace(m: PrimeFieldMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """Rank of ``m`` and a basis of {v : m v = 0}.

    The basis is returned in reduced echelon form (as the rows of an RREF
    matrix), so the output is canonical for the kernel.
    """
    red, pivots = m.rref()
    rank = len(pivots)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    p = m.p
    basis = []
    for j in free:
        v = [0] * m.cols
        v[j] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i, j]) % p
        basis.append(v)
    if not basis:
        return rank, []
    canon, _ = PrimeFieldMatrix(m.field, basis).rref()
    return rank, [canon.row(i) for i in range(len(basis))]


def solve_linear(m: PrimeFieldMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    b = list(b)
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    p = m.p
    aug = np.concatenate([m.array, _as_array(np.array(b, dtype=object).reshape(-1, 1), p)], axis=1)
    red, pivots = _rref(aug, p)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [0] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = int(red[i, m.cols])
    return tuple(x)


def stack(blocks: Iterable[PrimeFieldMatrix]) -> PrimeFieldMatrix:
    blocks = list(blocks)
    field = blocks[0].field
    return PrimeFieldMatrix._wrap(field, np.concatenate([b.array for b in blocks], axis=0))
