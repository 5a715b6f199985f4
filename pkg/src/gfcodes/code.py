"""Linear codes over GF(q) and operations on their supports."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldCtx, gf
from .matrix import MatrixGF, nullspace_array, rank_array, rref_array
from .subspace import (
    SubspaceBasis,
    budget,
    check_budget,
    multiplicity_mG,
    orthogonal_complement,
)

DEFAULT_CODEWORD_BUDGET = 1 << 24


@dataclass(frozen=True)
class SupportSet:
    """Sorted, duplicate-free coordinate indices (0-based)."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i) -> bool:
        return i in self.indices

    @property
    def weight(self) -> int:
        return len(self.indices)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.indices]

    def issubset(self, other: SupportSet) -> bool:
        return set(self.indices) <= set(other.indices)


class LinearCode:
    """An [n, k]_q linear code given by a generator matrix.

    ``gen`` is the row-reduced generator (k x n, rank k); ``source`` keeps the
    matrix as supplied. All computations use ``gen``; message vectors and
    subspaces of GF(q)^k therefore refer to the rows of ``gen``.
    """

    def __init__(self, generator: MatrixGF, name: str | None = None,
                 guaranteed_minimal: Iterable[int] = ()):
        if generator.rows == 0 or generator.cols == 0:
            raise ValueError("generator matrix is empty")
        r, piv = rref_array(generator.ctx, generator.entries)
        if not piv:
            raise ValueError("generator matrix is zero (dimension 0)")
        self.ctx: FieldCtx = generator.ctx
        self.source = generator
        self.gen = MatrixGF(self.ctx, r[: len(piv)])
        self.info_set: tuple[int, ...] = tuple(piv)
        self.n = generator.cols
        self.k = len(piv)
        self.dependent_rows = self.k < generator.rows
        self.name = name
        self.guaranteed_minimal = frozenset(guaranteed_minimal)

    @classmethod
    def from_rows(cls, q: int | FieldCtx, rows: Sequence[Sequence[int]], **kw) -> LinearCode:
        ctx = q if isinstance(q, FieldCtx) else gf(q)
        return cls(MatrixGF(ctx, np.asarray(rows, dtype=np.int64)), **kw)

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def G(self) -> np.ndarray:
        return self.gen.entries

    @cached_property
    def pcheck(self) -> MatrixGF:
        """Parity-check matrix in RREF, (n - k) x n."""
        h = nullspace_array(self.ctx, self.G)
        if h.shape[0]:
            h = rref_array(self.ctx, h)[0]
        return MatrixGF(self.ctx, h.reshape(self.n - self.k, self.n))

    @cached_property
    def pcheck_pivots(self) -> tuple[int, ...]:
        h = self.pcheck.entries
        return tuple(int(np.flatnonzero(r)[0]) for r in h)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}]_{self.q}>"

    def same_code(self, other: LinearCode) -> bool:
        """Equal codeword sets (same field and length)."""
        return self.ctx == other.ctx and self.n == other.n and self.k == other.k and bool(
            np.array_equal(self.G, other.G)
        )

    # -- codewords -------------------------------------------------------------
    def encode(self, msg: Sequence[int]) -> np.ndarray:
        return self.ctx.matmul(np.asarray(msg, dtype=np.int64)[None, :], self.G)[0]

    def messages(self, lo: int, hi: int) -> np.ndarray:
        """Message vectors with base-q ordinals in [lo, hi), first coordinate most significant."""
        ords = np.arange(lo, hi, dtype=np.int64)
        out = np.zeros((hi - lo, self.k), dtype=np.int64)
        for i in range(self.k - 1, -1, -1):
            out[:, i] = ords % self.q
            ords //= self.q
        return out

    def codeword_weights(self, chunk: int = 1 << 14):
        """Yield (first_ordinal, messages, weights) over all q^k messages."""
        total = self.q**self.k
        for lo in range(0, total, chunk):
            hi = min(total, lo + chunk)
            msgs = self.messages(lo, hi)
            words = self.ctx.matmul(msgs, self.G)
            yield lo, msgs, np.count_nonzero(words, axis=1)


# -- construction and I/O -------------------------------------------------------

def code_from_generator(m: MatrixGF, name: str | None = None) -> LinearCode:
    return LinearCode(m, name=name)


def parse_code_file(text: str) -> LinearCode:
    """Parse ``q k n`` followed by k rows of n integers; ``#`` starts a comment line."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0]
    if len(head) != 3:
        raise ValueError("header must be 'q k n'")
    q, k, n = (int(x) for x in head)
    rows = lines[1:]
    if k < 1:
        raise ValueError("code file declares k < 1")
    if len(rows) != k:
        raise ValueError(f"expected {k} generator rows, found {len(rows)}")
    ctx = gf(q)
    if ctx.m != 1:
        raise ValueError("code files support prime q only")
    mat = []
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row has {len(r)} entries, expected {n}")
        vals = [int(x) for x in r]
        if any(not 0 <= v < q for v in vals):
            raise ValueError(f"entries must lie in [0, {q})")
        mat.append(vals)
    return LinearCode(MatrixGF(ctx, np.array(mat, dtype=np.int64)))


def read_code_file(path: str | Path) -> LinearCode:
    return parse_code_file(Path(path).read_text())


def format_code_file(c: LinearCode, comment: str | None = None) -> str:
    """Canonical single-space emission of the generator (``source`` if it has full rank)."""
    mat = c.source.entries if not c.dependent_rows else c.G
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(f"{c.q} {mat.shape[0]} {c.n}")
    out.extend(" ".join(str(int(v)) for v in row) for row in mat)
    return "\n".join(out) + "\n"


def write_code_file(c: LinearCode, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_code_file(c, comment))


# -- structural operations -----------------------------------------------------------

def dual(c: LinearCode) -> LinearCode:
    if c.k == c.n:
        raise ValueError("the dual of the full space is the zero code")
    return LinearCode(c.pcheck)


def normalize_columns(ctx: FieldCtx, cols: np.ndarray) -> np.ndarray:
    """Scale each nonzero column (k x n) so its first nonzero entry is 1."""
    cols = np.asarray(cols, dtype=np.int64)
    nz = cols != 0
    first = np.argmax(nz, axis=0)
    lead = cols[first, np.arange(cols.shape[1])]
    scale = np.where(lead == 0, 1, lead)
    return ctx.mul(cols, ctx.inv(scale)[None, :])


def zero_columns(c: LinearCode) -> int:
    return int(np.count_nonzero(~np.any(c.G, axis=0)))


def is_projective(c: LinearCode) -> bool:
    """Columns nonzero and pairwise independent (equivalently d(C^perp) >= 3)."""
    if zero_columns(c):
        return False
    normed = normalize_columns(c.ctx, c.G)
    return len({col.tobytes() for col in normed.T}) == c.n


def projectivize(c: LinearCode) -> LinearCode:
    """Drop every column that is a scalar multiple of an earlier one."""
    if zero_columns(c):
        raise ValueError("code has a zero column; projection is undefined")
    normed = normalize_columns(c.ctx, c.G)
    seen: set[bytes] = set()
    keep = []
    for j, col in enumerate(normed.T):
        key = col.tobytes()
        if key not in seen:
            seen.add(key)
            keep.append(j)
    if len(keep) == c.n:
        return c
    return LinearCode(MatrixGF(c.ctx, c.G[:, keep]), name=c.name and f"proj({c.name})")


def puncture(c: LinearCode, coords: Iterable[int]) -> LinearCode:
    coords = sorted(set(int(i) for i in coords))
    if any(not 0 <= i < c.n for i in coords):
        raise IndexError("puncture coordinate out of range")
    if not coords:
        return c
    keep = [j for j in range(c.n) if j not in set(coords)]
    if len(keep) < c.k or rank_array(c.ctx, c.G[:, keep]) < c.k:
        raise ValueError(f"puncturing {len(coords)} coordinates drops the dimension below {c.k}")
    return LinearCode(MatrixGF(c.ctx, c.G[:, keep]))


def subcode_support(c: LinearCode, v: SubspaceBasis) -> SupportSet:
    """Support of the subcode ``{yG : y in V}``."""
    if v.ctx != c.ctx or v.k != c.k:
        raise ValueError(f"V must be a subspace of GF({c.q})^{c.k}")
    if v.s == 0:
        raise ValueError("V must be nonzero")
    words = c.ctx.matmul(v.rows, c.G)
    supp = SupportSet(tuple(np.flatnonzero(np.any(words, axis=0)).tolist()))
    assert len(supp) == c.n - multiplicity_mG(c.gen, orthogonal_complement(v))
    return supp


def batch_supports(c: LinearCode, bases: np.ndarray) -> np.ndarray:
    """(B, n) support masks of the subcodes spanned by ``bases @ G`` for bases (B, s, k)."""
    words = c.ctx.matmul(bases, c.G)
    return np.any(words != 0, axis=1)


@dataclass
class Extremes:
    min_weight: int
    min_message: np.ndarray
    max_weight: int
    max_message: np.ndarray
    distribution: dict[int, int] = field(default_factory=dict)

    def codeword(self, c: LinearCode, which: str) -> np.ndarray:
        return c.encode(self.min_message if which == "min" else self.max_message)


def extremal_codewords(c: LinearCode, limit: int | None = None) -> Extremes:
    """Min- and max-weight nonzero codewords and the full weight distribution.

    Ties go to the smallest message in base-q ordinal order.
    """
    check_budget(c.q**c.k, budget(DEFAULT_CODEWORD_BUDGET) if limit is None else limit, "codewords")
    best_min = best_max = None
    hist = np.zeros(c.n + 1, dtype=np.int64)
    for lo, msgs, w in c.codeword_weights():
        hist += np.bincount(w, minlength=c.n + 1)
        ww = w.copy()
        if lo == 0:
            ww[0] = c.n + 1
        j = int(np.argmin(ww))
        if best_min is None or ww[j] < best_min[0]:
            best_min = (int(ww[j]), msgs[j].copy())
        if lo == 0:
            ww[0] = -1
        j = int(np.argmax(w if lo else ww))
        wj = int(w[j])
        if best_max is None or wj > best_max[0]:
            best_max = (wj, msgs[j].copy())
    dist = {int(i): int(v) for i, v in enumerate(hist) if v}
    return Extremes(best_min[0], best_min[1], best_max[0], best_max[1], dist)


def weight_distribution(c: LinearCode, limit: int | None = None) -> dict[int, int]:
    return extremal_codewords(c, limit).distribution


def minimum_distance(c: LinearCode, limit: int | None = None) -> int:
    return extremal_codewords(c, limit).min_weight
