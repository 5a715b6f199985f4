"""Canonical enumeration of subspaces of GF(q)^k.

Every s-dimensional subspace is represented by its reduced row echelon basis.
The enumeration order is frozen:

1. pivot-column sets in *decreasing* lexicographic order, so for ``s = 1``
   the stream is the normalized vectors in increasing lexicographic order
   (``(0,0,1), (0,1,0), (0,1,1), (1,0,0), ...``);
2. inside a pivot set, the free entries (read row-major) count in base q with
   the first free entry most significant.

Ordinals index this stream from 0, so ``[lo, hi)`` ranges can be scanned
independently and merged.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence

import numpy as np

from .gf import FieldCtx
from .matrix import MatrixGF, nullspace_array, rref_array

DEFAULT_SUBSPACE_BUDGET = 2_000_000
BATCH_ELEMENTS = 1 << 20


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured budget."""


def budget(default: int = DEFAULT_SUBSPACE_BUDGET) -> int:
    env = os.environ.get("GFCODES_BUDGET")
    if env:
        return int(env)
    return default


def check_budget(count: int, limit: int | None, what: str = "subspaces") -> None:
    limit = budget() if limit is None else limit
    if count > limit:
        raise BudgetExceeded(f"{count} {what} exceed the enumeration budget of {limit}")


def gaussian_binomial(k: int, s: int, q: int) -> int:
    """Number of s-dimensional subspaces of GF(q)^k, in exact integers."""
    if s < 0 or s > k:
        raise ValueError(f"need 0 <= s <= k, got s={s}, k={k}")
    num = den = 1
    for i in range(s):
        num *= q ** (k - i) - 1
        den *= q ** (s - i) - 1
    return num // den


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Canonical (RREF) basis of an s-dimensional subspace of GF(q)^k."""

    ctx: FieldCtx
    k: int
    s: int
    basis: MatrixGF
    ordinal: int

    @property
    def rows(self) -> np.ndarray:
        return self.basis.entries

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(int(np.flatnonzero(r)[0]) for r in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ctx == other.ctx and self.k == other.k and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ctx, self.k, self.rows.tobytes()))

    def __repr__(self) -> str:
        return f"SubspaceBasis(k={self.k}, s={self.s}, ordinal={self.ordinal}, basis={self.rows.tolist()})"

    def contains(self, x: Sequence[int]) -> bool:
        x = np.asarray(x, dtype=np.int64)
        return bool(_in_span(self.ctx, self.rows, x[:, None])[0])


# -- enumeration -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _blocks(k: int, s: int, q: int) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...], int, int], ...]:
    """(pivots, free positions, block size, first ordinal) per pivot set, in stream order."""
    out = []
    start = 0
    for piv in reversed(list(combinations(range(k), s))):
        pset = set(piv)
        free = tuple((i, c) for i, p in enumerate(piv) for c in range(p + 1, k) if c not in pset)
        size = q ** len(free)
        out.append((piv, free, size, start))
        start += size
    return tuple(out)


def _block_arrays(ctx: FieldCtx, k: int, piv, free, lo: int, hi: int) -> np.ndarray:
    s = len(piv)
    n = hi - lo
    out = np.zeros((n, s, k), dtype=np.int64)
    for i, p in enumerate(piv):
        out[:, i, p] = 1
    if free:
        ords = np.arange(lo, hi, dtype=np.int64)
        q = ctx.q
        for pos in range(len(free) - 1, -1, -1):
            i, c = free[pos]
            out[:, i, c] = ords % q
            ords //= q
    return out


def subspace_batches(
    ctx: FieldCtx, k: int, s: int, lo: int = 0, hi: int | None = None, batch: int | None = None
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(first_ordinal, bases)`` with ``bases`` of shape (b, s, k) covering [lo, hi)."""
    total = gaussian_binomial(k, s, ctx.q)
    hi = total if hi is None else min(hi, total)
    if batch is None:
        batch = max(256, BATCH_ELEMENTS // max(1, s * k))
    for piv, free, size, start in _blocks(k, s, ctx.q):
        a, b = max(lo, start), min(hi, start + size)
        while a < b:
            e = min(b, a + batch)
            yield a, _block_arrays(ctx, k, piv, free, a - start, e - start)
            a = e


def enumerate_subspaces(
    k: int, s: int, ctx: FieldCtx, lo: int = 0, hi: int | None = None
) -> Iterator[SubspaceBasis]:
    """Stream the canonical bases of all s-dimensional subspaces of GF(q)^k."""
    if s < 0 or s > k:
        raise ValueError(f"need 0 <= s <= k, got s={s}, k={k}")
    for first, arr in subspace_batches(ctx, k, s, lo, hi):
        for j, rows in enumerate(arr):
            yield SubspaceBasis(ctx, k, s, MatrixGF(ctx, rows.reshape(s, k)), first + j)


def subspace_at(ctx: FieldCtx, k: int, s: int, ordinal: int) -> SubspaceBasis:
    for sb in enumerate_subspaces(k, s, ctx, ordinal, ordinal + 1):
        return sb
    raise IndexError(f"ordinal {ordinal} out of range")


def subspace_ordinal(ctx: FieldCtx, rref_rows: np.ndarray) -> int:
    """Position of a canonical basis in the enumeration stream."""
    rref_rows = np.asarray(rref_rows, dtype=np.int64)
    s, k = rref_rows.shape
    piv = tuple(int(np.flatnonzero(r)[0]) for r in rref_rows)
    for bp, free, _size, start in _blocks(k, s, ctx.q):
        if bp == piv:
            idx = 0
            for i, c in free:
                idx = idx * ctx.q + int(rref_rows[i, c])
            return start + idx
    raise ValueError("rows are not a canonical basis")


def span(ctx: FieldCtx, rows, k: int | None = None) -> SubspaceBasis:
    """Canonical basis of the span of ``rows`` (which may be dependent)."""
    a = np.asarray(rows, dtype=np.int64)
    if k is None:
        k = a.shape[1]
    a = a.reshape(-1, k)
    r, piv = rref_array(ctx, a) if a.shape[0] else (a, [])
    basis = r[: len(piv)].reshape(len(piv), k)
    return SubspaceBasis(ctx, k, len(piv), MatrixGF(ctx, basis), subspace_ordinal(ctx, basis))


def orthogonal_complement(v: SubspaceBasis) -> SubspaceBasis:
    """Canonical basis of V^perp under the Euclidean inner product."""
    if v.s == 0:
        return span(v.ctx, np.eye(v.k, dtype=np.int64), v.k)
    return span(v.ctx, nullspace_array(v.ctx, v.rows), v.k)


# -- membership and m_G ------------------------------------------------------------

def _in_span(ctx: FieldCtx, basis: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Membership of each column of ``cols`` (k x n) in the row span of an RREF basis."""
    k = cols.shape[0]
    if basis.shape[0] == 0:
        return ~np.any(cols, axis=0)
    piv = [int(np.flatnonzero(r)[0]) for r in basis]
    recon = ctx.matmul(basis.T, cols[piv, :])
    return np.all(recon == cols, axis=0) if k else np.ones(cols.shape[1], dtype=bool)


def batch_membership(ctx: FieldCtx, bases: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """(B, n) mask: column j of ``cols`` lies in the span of ``bases[b]``.

    Each ``bases[b]`` must be an RREF basis (d x k). A vector x lies in the
    span iff it equals the combination of basis rows weighted by its pivot
    coordinates.
    """
    nb, d, k = bases.shape
    if d == 0:
        return np.broadcast_to(~np.any(cols, axis=0), (nb, cols.shape[1])).copy()
    piv = np.argmax(bases != 0, axis=2)  # (B, d)
    coeff = cols[piv]  # (B, d, n)
    recon = ctx.matmul(np.swapaxes(bases, 1, 2), coeff)  # (B, k, n)
    return np.all(recon == cols[None], axis=1)


def multiplicity_mG(g: MatrixGF, v: SubspaceBasis) -> int:
    """Number of columns of ``g`` lying in ``v``."""
    if g.ctx != v.ctx:
        raise ValueError("field mismatch")
    if g.rows != v.k:
        raise ValueError(f"columns live in GF(q)^{g.rows} but V is in GF(q)^{v.k}")
    return int(np.count_nonzero(_in_span(g.ctx, v.rows, g.entries)))


# -- partitioned scans -------------------------------------------------------------

def partition(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def map_ranges(fn: Callable, ranges: Sequence[tuple[int, int]], workers: int = 1) -> list:
    """Apply ``fn(lo, hi)`` to each range, in order; processes when workers > 1."""
    if workers <= 1 or len(ranges) <= 1:
        return [fn(lo, hi) for lo, hi in ranges]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        futs = [ex.submit(fn, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futs]
