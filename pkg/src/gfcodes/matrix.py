"""Dense matrices over GF(q): row reduction, rank, null space, column selection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf import FieldCtx


@dataclass(frozen=True, eq=False)
class MatrixGF:
    """A rows x cols matrix of element codes over ``ctx``.

    ``entries`` is a read-only int64 array. Equality compares field and entries.
    """

    ctx: FieldCtx
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64, copy=True)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ValueError(f"matrix must be 2-dimensional, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= self.ctx.q):
            raise ValueError(f"entries must lie in [0, {self.ctx.q})")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> MatrixGF:
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> MatrixGF:
        return cls(ctx, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> MatrixGF:
        return MatrixGF(self.ctx, self.entries.T)

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        if self.ctx != other.ctx:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return MatrixGF(self.ctx, self.ctx.matmul(self.entries, other.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.ctx == other.ctx and self.shape == other.shape and bool(np.all(self.entries == other.entries))

    def __hash__(self) -> int:
        return hash((self.ctx, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.ctx!r}, {self.entries.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def rank(self) -> int:
        return rank_array(self.ctx, self.entries)


# -- array-level kernels ---------------------------------------------------------

def _rref_gf2(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    rows, cols = a.shape
    # bit j of a row word is column j
    weights = [1 << j for j in range(cols)]
    words = [sum(w for w, v in zip(weights, row) if v) for row in a.tolist()]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        bit = 1 << c
        for i in range(r, rows):
            if words[i] & bit:
                break
        else:
            continue
        words[r], words[i] = words[i], words[r]
        pv = words[r]
        for j in range(rows):
            if j != r and words[j] & bit:
                words[j] ^= pv
        pivots.append(c)
        r += 1
    out = np.zeros_like(a)
    for i, w in enumerate(words[:r]):
        out[i] = [(w >> j) & 1 for j in range(cols)]
    return out, pivots


def rref_array(ctx: FieldCtx, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns.

    Pivot search scans columns left to right and takes the first nonzero entry
    top to bottom. Rows below the rank are zero.
    """
    a = np.array(a, dtype=np.int64)
    rows, cols = a.shape
    if ctx.q == 2:
        return _rref_gf2(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = ctx.mul(a[r], ctx.inv(int(a[r, c])))
        f = a[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit] = ctx.sub(a[hit], ctx.mul(f[hit, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank_array(ctx: FieldCtx, a: np.ndarray) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref_array(ctx, a)[1])


def nullspace_array(ctx: FieldCtx, a: np.ndarray) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0}``, one row per free column."""
    a = np.asarray(a, dtype=np.int64)
    rows, cols = a.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref_array(ctx, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = ctx.neg(int(r[i, f]))
    return basis


def batch_rank(ctx: FieldCtx, a: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices ``a`` with shape (B, r, c).

    Elimination runs over the last axis, so put the short dimension there.
    """
    a = np.array(a, dtype=np.int64)
    nb, nr, nc = a.shape
    rank = np.zeros(nb, dtype=np.int64)
    if nb == 0 or nr == 0 or nc == 0:
        return rank
    used = np.zeros((nb, nr), dtype=bool)
    prime = ctx.is_prime_field
    p = ctx.p
    for j in range(nc):
        cand = (a[:, :, j] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = np.flatnonzero(has)
        piv = cand[idx].argmax(axis=1)
        sub = a[idx, :, j:]
        prow = sub[np.arange(idx.size), piv]  # (b, c-j)
        if prime:
            prow = (prow * ctx._inv[prow[:, :1]]) % p
            sub = (sub - sub[:, :, :1] * prow[:, None, :]) % p
        else:
            prow = ctx.mul(prow, ctx.inv(prow[:, :1]))
            sub = ctx.sub(sub, ctx.mul(sub[:, :, :1], prow[:, None, :]))
        a[idx, :, j:] = sub
        used[idx, piv] = True
        rank[idx] += 1
    return rank


# -- public operations -----------------------------------------------------------

def rref_rank(m: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Return ``(R, rank, pivots)`` with R the unique RREF of ``m``."""
    r, piv = rref_array(m.ctx, m.entries)
    return MatrixGF(m.ctx, r), len(piv), tuple(piv)


def nullspace(m: MatrixGF) -> MatrixGF:
    """Rows spanning ``{x : m @ x^T = 0}``; there are ``cols - rank`` of them."""
    return MatrixGF(m.ctx, nullspace_array(m.ctx, m.entries))


def submatrix_columns(m: MatrixGF, idx: Sequence[int]) -> MatrixGF:
    """Columns ``idx`` of ``m`` in the given (strictly increasing) order."""
    idx = [int(i) for i in idx]
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError("column indices must be strictly increasing")
    if idx and (idx[0] < 0 or idx[-1] >= m.cols):
        raise IndexError(f"column index out of range for {m.cols} columns")
    return MatrixGF(m.ctx, m.entries[:, idx].reshape(m.rows, len(idx)))


def transpose(m: MatrixGF) -> MatrixGF:
    return m.T
