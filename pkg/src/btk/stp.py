"""Semi-tensor product kernel.

Dense matrices are plain integer numpy arrays. Logical matrices (exactly one
1 per column) are kept in condensed delta form, ``LogicalMatrix(n, (i1, ..., ir))``
meaning ``delta_n[i1, ..., ir]`` with 1-based row indices.

Every operation accepts either kind. When all operands are logical the result
stays logical and is computed by index arithmetic only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "LogicalMatrix",
    "Matrix",
    "as_matrix",
    "delta",
    "identity",
    "ones_row",
    "ones",
    "stp",
    "stp_chain",
    "kron",
    "swap_matrix",
    "power_reducing",
    "khatri_rao",
    "parse_delta",
]

Matrix = np.ndarray


@dataclass(frozen=True)
class LogicalMatrix:
    """An ``rows x len(cols)`` zero/one matrix with one 1 per column.

    ``cols[j]`` is the 1-based row index of the 1 in column ``j + 1``.
    """

    rows: int
    cols: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if self.rows < 1:
            raise ValueError(f"rows must be positive, got {self.rows}")
        if not cols:
            raise ValueError("a logical matrix needs at least one column")
        for j, c in enumerate(cols, start=1):
            if not 1 <= c <= self.rows:
                raise ValueError(f"column {j}: index {c} outside [1, {self.rows}]")

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, len(self.cols))

    def col(self, j: int) -> int:
        """Row index of the 1 in column ``j`` (1-based)."""
        return self.cols[j - 1]

    def to_dense(self) -> Matrix:
        out = np.zeros(self.shape, dtype=np.int64)
        out[np.asarray(self.cols) - 1, np.arange(self.ncols)] = 1
        return out

    @classmethod
    def from_dense(cls, m) -> "LogicalMatrix":
        m = np.asarray(m)
        if m.ndim != 2:
            raise ValueError("expected a 2-d array")
        if not np.isin(m, (0, 1)).all() or not (m.sum(axis=0) == 1).all():
            raise ValueError("not a logical matrix: need exactly one 1 per column")
        return cls(m.shape[0], tuple(int(i) + 1 for i in m.argmax(axis=0)))

    def is_permutation(self) -> bool:
        return self.rows == self.ncols and sorted(self.cols) == list(range(1, self.rows + 1))

    def inverse(self) -> "LogicalMatrix":
        """Inverse (= transpose) of a permutation matrix."""
        if not self.is_permutation():
            raise ValueError("only permutation matrices are invertible in logical form")
        inv = [0] * self.rows
        for j, i in enumerate(self.cols, start=1):
            inv[i - 1] = j
        return LogicalMatrix(self.rows, tuple(inv))

    transpose = inverse

    def __matmul__(self, other):
        return stp(self, other)

    def __str__(self) -> str:
        return f"δ{self.rows}[{','.join(map(str, self.cols))}]"

    def __repr__(self) -> str:
        return f"LogicalMatrix({self.rows}, {self.cols})"


Operand = Union[LogicalMatrix, Matrix, Sequence]


def as_matrix(a: Operand) -> Matrix:
    """Dense integer view of ``a``; floats are refused."""
    if isinstance(a, LogicalMatrix):
        return a.to_dense()
    m = np.asarray(a)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    if m.ndim != 2 or m.size == 0:
        raise ValueError("expected a nonempty 2-d matrix")
    if m.dtype == object:
        if not all(isinstance(v, (int, np.integer)) for v in m.flat):
            raise TypeError("matrix entries must be integers")
        return m
    if not np.issubdtype(m.dtype, np.integer) and m.dtype != np.bool_:
        raise TypeError(f"matrix entries must be integers, got dtype {m.dtype}")
    return m.astype(np.int64, copy=False)


def delta(n: int, cols: Iterable[int] | int) -> LogicalMatrix:
    """``delta(n, i)`` is the column delta_n^i; ``delta(n, [i, j, ...])`` a logical matrix."""
    if isinstance(cols, (int, np.integer)):
        cols = (int(cols),)
    return LogicalMatrix(n, tuple(cols))


def identity(n: int) -> LogicalMatrix:
    return LogicalMatrix(n, tuple(range(1, n + 1)))


def ones_row(n: int) -> LogicalMatrix:
    """The row vector 1_n^T, which is the logical matrix delta_1[1, ..., 1]."""
    return LogicalMatrix(1, (1,) * n)


def ones(n: int) -> Matrix:
    """The column vector 1_n (not logical for n > 1)."""
    return np.ones((n, 1), dtype=np.int64)


def _logical_kron(a: LogicalMatrix, b: LogicalMatrix) -> LogicalMatrix:
    p = b.rows
    return LogicalMatrix(a.rows * p, tuple((i - 1) * p + j for i in a.cols for j in b.cols))


def _logical_product(a: LogicalMatrix, b: LogicalMatrix) -> LogicalMatrix:
    ac = a.cols
    return LogicalMatrix(a.rows, tuple(ac[j - 1] for j in b.cols))


def _logical_expand(a: LogicalMatrix, r: int) -> LogicalMatrix:
    # a ⊗ I_r without the generic kron overhead
    if r == 1:
        return a
    return LogicalMatrix(a.rows * r, tuple((i - 1) * r + s for i in a.cols for s in range(1, r + 1)))


def kron(a: Operand, b: Operand):
    """Kronecker product; logical in, logical out."""
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        return _logical_kron(a, b)
    return np.kron(as_matrix(a), as_matrix(b))


def stp(a: Operand, b: Operand):
    """Left semi-tensor product ``(A ⊗ I_{t/n})(B ⊗ I_{t/p})`` with ``t = lcm(n, p)``."""
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        n, p = a.ncols, b.rows
        if n == p:
            return _logical_product(a, b)
        t = lcm(n, p)
        return _logical_product(_logical_expand(a, t // n), _logical_expand(b, t // p))
    a, b = as_matrix(a), as_matrix(b)
    n, p = a.shape[1], b.shape[0]
    if n == p:
        return a @ b
    t = lcm(n, p)
    left = np.kron(a, np.eye(t // n, dtype=np.int64)) if t != n else a
    right = np.kron(b, np.eye(t // p, dtype=np.int64)) if t != p else b
    return left @ right


def stp_chain(*factors: Operand):
    """``f1 ⋉ f2 ⋉ ... ⋉ fn`` evaluated left to right."""
    if not factors:
        raise ValueError("need at least one factor")
    out = factors[0]
    for f in factors[1:]:
        out = stp(out, f)
    return out


def swap_matrix(m: int, n: int) -> LogicalMatrix:
    """W_[m,n]: column ``(i-1)n + j`` holds delta_mn^{(j-1)m + i}, so W x y = y x."""
    if m < 1 or n < 1:
        raise ValueError("swap dimensions must be positive")
    return LogicalMatrix(m * n, tuple((j - 1) * m + i for i in range(1, m + 1) for j in range(1, n + 1)))


def power_reducing(k: int) -> LogicalMatrix:
    """PR_k = diag(delta_k^1, ..., delta_k^k), the k^2 x k matrix with PR_k x = x x."""
    if k < 2:
        raise ValueError(f"power-reducing matrix needs k >= 2, got {k}")
    return LogicalMatrix(k * k, tuple((i - 1) * k + i for i in range(1, k + 1)))


def khatri_rao(a: Operand, b: Operand):
    """Column-wise semi-tensor product of two matrices with equal column counts."""
    if isinstance(a, LogicalMatrix) and isinstance(b, LogicalMatrix):
        if a.ncols != b.ncols:
            raise ValueError(f"column counts differ: {a.ncols} vs {b.ncols}")
        q = b.rows
        return LogicalMatrix(a.rows * q, tuple((i - 1) * q + j for i, j in zip(a.cols, b.cols)))
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[1]:
        raise ValueError(f"column counts differ: {a.shape[1]} vs {b.shape[1]}")
    cols = [stp(a[:, [j]], b[:, [j]]) for j in range(a.shape[1])]
    return np.hstack(cols)


_DELTA_RE = re.compile(r"^\s*(?:δ|d|delta)_?(\d+)\s*\[\s*([\d\s,]*)\]\s*$")


def parse_delta(text: str) -> LogicalMatrix:
    """Parse ``δ4[1,2,3]`` (also ``d4[...]`` / ``delta4[...]``) into a LogicalMatrix."""
    m = _DELTA_RE.match(text)
    if not m:
        raise ValueError(f"not in delta notation: {text!r}")
    cols = [int(c) for c in re.split(r"[\s,]+", m.group(2).strip()) if c]
    return LogicalMatrix(int(m.group(1)), tuple(cols))
