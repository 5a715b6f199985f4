"""Point sets in PG(k-1, q): t-fold and cutting s-blocking checks, the
code <-> point set correspondence, and lower bounds on blocking set sizes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .code import LinearCode, is_projective, normalize_columns
from .gf import FieldCtx, gf
from .matrix import MatrixGF, batch_rank, rank_array
from .subspace import (
    SubspaceBasis,
    batch_membership,
    check_budget,
    gaussian_binomial,
    subspace_at,
    subspace_batches,
)


@dataclass(frozen=True, eq=False)
class PGPointSet:
    """Normalized representatives (first nonzero coordinate 1), sorted lexicographically."""

    ctx: FieldCtx
    k: int
    points: np.ndarray  # (m, k)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.int64).reshape(-1, self.k)
        if pts.size and (pts.min() < 0 or pts.max() >= self.ctx.q):
            raise ValueError(f"coordinates must lie in [0, {self.ctx.q})")
        if len(pts) and not np.all(np.any(pts, axis=1)):
            raise ValueError("the zero vector is not a projective point")
        pts = normalize_columns(self.ctx, pts.T).T if len(pts) else pts
        uniq = sorted({tuple(p) for p in pts.tolist()})
        if len(uniq) != len(pts):
            raise ValueError("duplicate points after normalization")
        arr = np.array(uniq, dtype=np.int64).reshape(len(uniq), self.k)
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PGPointSet):
            return NotImplemented
        return self.ctx == other.ctx and self.k == other.k and np.array_equal(self.points, other.points)

    def __hash__(self) -> int:
        return hash((self.ctx, self.k, self.points.tobytes()))

    def spans(self) -> bool:
        return len(self) > 0 and rank_array(self.ctx, self.points) == self.k

    def complement(self) -> PGPointSet:
        from .constructions import projective_points

        mine = {tuple(p) for p in self.points.tolist()}
        rest = [p for p in projective_points(self.ctx, self.k).T.tolist() if tuple(p) not in mine]
        return PGPointSet(self.ctx, self.k, np.array(rest, dtype=np.int64).reshape(-1, self.k))


# -- correspondence with codes --------------------------------------------------------

def pointset_from_code(c: LinearCode) -> PGPointSet:
    """Generator columns as projective points; the code must be projective."""
    if not is_projective(c):
        raise ValueError("code is not projective; apply projectivize first")
    return PGPointSet(c.ctx, c.k, c.G.T)


def code_from_pointset(b: PGPointSet) -> LinearCode:
    """Code whose generator columns are the points, in sorted order."""
    if not b.spans():
        raise ValueError(f"point set does not generate GF({b.ctx.q})^{b.k}")
    return LinearCode(MatrixGF(b.ctx, b.points.T))


# -- file format -----------------------------------------------------------------------

def parse_pointset(text: str) -> PGPointSet:
    """``q k m`` then m lines of k integers; ``#`` starts a comment line."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 3:
        raise ValueError("header must be 'q k m'")
    q, k, m = (int(x) for x in lines[0])
    ctx = gf(q)
    if ctx.m != 1:
        raise ValueError("point-set files support prime q only")
    rows = lines[1:]
    if k < 1 or len(rows) != m:
        raise ValueError(f"expected {m} points, found {len(rows)}")
    if any(len(r) != k for r in rows):
        raise ValueError(f"every point needs {k} coordinates")
    return PGPointSet(ctx, k, np.array([[int(x) for x in r] for r in rows], dtype=np.int64).reshape(m, k))


def read_pointset(path: str | Path) -> PGPointSet:
    return parse_pointset(Path(path).read_text())


def format_pointset(b: PGPointSet) -> str:
    out = [f"{b.ctx.q} {b.k} {len(b)}"]
    out.extend(" ".join(str(v) for v in p) for p in b.points.tolist())
    return "\n".join(out) + "\n"


def write_pointset(b: PGPointSet, path: str | Path) -> None:
    Path(path).write_text(format_pointset(b))


# -- verification ----------------------------------------------------------------------

@dataclass
class BlockingVerdict:
    holds: bool
    witness: SubspaceBasis | None = None
    met: int | None = None  # points of B in the witness (t-fold) or their rank (cutting)

    def __bool__(self) -> bool:
        return self.holds


def _check_level(b: PGPointSet, s: int) -> None:
    if not 1 <= s <= b.k - 1:
        raise ValueError(f"s must lie in [1, {b.k - 1}], got {s}")


def _scan(b: PGPointSet, s: int, limit: int | None) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield (first, bases, inside) over codimension-s subspaces V; inside[i, j]: point j in V_i."""
    d = b.k - s
    check_budget(gaussian_binomial(b.k, d, b.ctx.q), limit)
    pts = b.points.T
    for first, bases in subspace_batches(b.ctx, b.k, d, batch=max(64, (1 << 20) // max(1, len(b) * b.k))):
        yield first, bases, batch_membership(b.ctx, bases, pts)


def is_t_fold_s_blocking(b: PGPointSet, t: int, s: int, limit: int | None = None) -> BlockingVerdict:
    """Every codimension-s subspace holds at least t points of B."""
    _check_level(b, s)
    if t < 1:
        raise ValueError("t must be >= 1")
    for first, _bases, inside in _scan(b, s, limit):
        cnt = inside.sum(axis=1)
        bad = np.flatnonzero(cnt < t)
        if bad.size:
            j = int(bad[0])
            return BlockingVerdict(False, subspace_at(b.ctx, b.k, b.k - s, first + j), int(cnt[j]))
    return BlockingVerdict(True)


def is_cutting_s_blocking(b: PGPointSet, s: int, limit: int | None = None) -> BlockingVerdict:
    """The points of B in every codimension-s subspace V span V."""
    _check_level(b, s)
    d = b.k - s
    pts = b.points
    for first, bases, inside in _scan(b, s, limit):
        cnt = inside.sum(axis=1)
        m = int(cnt.max())
        rank = np.zeros(len(bases), dtype=np.int64)
        if m:
            # coordinates of the member points w.r.t. the RREF basis are their pivot entries
            piv = np.argmax(bases != 0, axis=2)  # (B, d)
            sel = np.argsort(~inside, axis=1, kind="stable")[:, :m]
            live = np.take_along_axis(inside, sel, axis=1)
            coords = pts[sel[:, :, None], piv[:, None, :]] * live[:, :, None]  # (B, m, d)
            rank = batch_rank(b.ctx, coords)
        bad = np.flatnonzero(rank < d)
        if bad.size:
            j = int(bad[0])
            return BlockingVerdict(False, subspace_at(b.ctx, b.k, d, first + j), int(rank[j]))
    return BlockingVerdict(True)


# -- bounds -------------------------------------------------------------------------------

@dataclass
class BoundReport:
    t: int
    s: int
    k: int
    q: int
    spanning: bool
    bound_a: Fraction
    bound_b: Fraction | None
    bound_c: Fraction | None
    bound_c_simplified: bool
    cutting_a: Fraction
    cutting_b: Fraction | None

    @staticmethod
    def _ceil(x: Fraction | None) -> int | None:
        return None if x is None else ceil(x)

    @property
    def lower(self) -> int:
        """Best lower bound on |B| for a t-fold s-blocking set with this spanning status."""
        return max(ceil(x) for x in (self.bound_a, self.bound_b, self.bound_c) if x is not None)

    @property
    def cutting_lower(self) -> int:
        """Best lower bound on the size of a cutting s-blocking set."""
        return max(ceil(x) for x in (self.cutting_a, self.cutting_b) if x is not None)

    def lines(self) -> list[str]:
        def fmt(x):
            return "n/a" if x is None else f"{x} (>= {ceil(x)})"

        out = [
            f"t={self.t} s={self.s} k={self.k} q={self.q} complement spans: {'yes' if self.spanning else 'no'}",
            f"bound_a  t(q^k-1)/(q^(k-s)-1)                       {fmt(self.bound_a)}",
            f"bound_b  q^(k-1), complement not spanning            {fmt(self.bound_b)}",
            f"bound_c  min(t(q^(s+1)-1)/(q-1), t+q^2(q^s-1)/(q-1)) {fmt(self.bound_c)}",
        ]
        if self.bound_c is not None and self.bound_c_simplified:
            out.append("         t <= q, so bound_c = t(q^(s+1)-1)/(q-1)")
        out += [
            f"cutting  (k-s)(q^k-1)/(q^(k-s)-1)                    {fmt(self.cutting_a)}",
            f"cutting  (k-s)(q^(s+1)-1)/(q-1), needs k-s <= q      {fmt(self.cutting_b)}",
            f"lower bound (t-fold): {self.lower}   lower bound (cutting): {self.cutting_lower}",
        ]
        return out


def blocking_bounds(t: int, s: int, k: int, q: int, spanning: bool = True) -> BoundReport:
    """Lower bounds on t-fold s-blocking sets in PG(k-1, q) and on cutting s-blocking sets."""
    if not (t >= 1 and 1 <= s <= k - 1 and q >= 2):
        raise ValueError("need t >= 1, 1 <= s <= k-1, q >= 2")
    a = Fraction(t * (q**k - 1), q ** (k - s) - 1)
    b = None if spanning else Fraction(q ** (k - 1))
    c = None
    if spanning:
        c = min(Fraction(t * (q ** (s + 1) - 1), q - 1), t + Fraction(q**2 * (q**s - 1), q - 1))
    cut_a = Fraction((k - s) * (q**k - 1), q ** (k - s) - 1)
    cut_b = Fraction((k - s) * (q ** (s + 1) - 1), q - 1) if k - s <= q else None
    return BoundReport(t, s, k, q, spanning, a, b, c, t <= q, cut_a, cut_b)


def bounds_for(b: PGPointSet, t: int, s: int) -> BoundReport:
    """Bounds with the spanning status taken from the complement of B."""
    return blocking_bounds(t, s, b.k, b.ctx.q, spanning=b.complement().spans())


# -- exhaustive search ------------------------------------------------------------------------

@dataclass
class SearchSpace:
    """Points of PG(k-1, q) and, per codimension-s subspace, a bitmask of the points inside."""

    ctx: FieldCtx
    k: int
    s: int
    points: np.ndarray
    masks: list[int]
    bases: list[np.ndarray]

    def pointset(self, subset: int) -> PGPointSet:
        idx = [i for i in range(len(self.points)) if subset >> i & 1]
        return PGPointSet(self.ctx, self.k, self.points[idx])

    def is_t_fold(self, subset: int, t: int) -> bool:
        return all((subset & m).bit_count() >= t for m in self.masks)

    def is_cutting(self, subset: int) -> bool:
        d = self.k - self.s
        for m, basis in zip(self.masks, self.bases):
            inside = subset & m
            if inside.bit_count() < d:
                return False
            idx = [i for i in range(len(self.points)) if inside >> i & 1]
            if rank_array(self.ctx, self.points[idx]) < d:
                return False
        return True


def search_space(k: int, q: int, s: int) -> SearchSpace:
    from .constructions import projective_points

    ctx = gf(q)
    pts = projective_points(ctx, k).T.copy()
    masks, bases = [], []
    for _first, bb in subspace_batches(ctx, k, k - s):
        inside = batch_membership(ctx, bb, pts.T)
        for row, basis in zip(inside, bb):
            masks.append(sum(1 << i for i in np.flatnonzero(row).tolist()))
            bases.append(basis)
    return SearchSpace(ctx, k, s, pts, masks, bases)


def _subsets(n: int, sizes: Sequence[int]) -> Iterator[int]:
    for size in sizes:
        for combo in combinations(range(n), size):
            yield sum(1 << i for i in combo)


def exhaustive_min_blocking(k: int, q: int, t: int, s: int, max_size: int | None = None,
                            cutting: bool = False) -> tuple[int, PGPointSet] | None:
    """Smallest t-fold s-blocking set (or cutting s-blocking set) of PG(k-1, q), by subset search.

    Subsets are tried in increasing size, then in combination order; the
    first hit is the witness. Returns None when nothing up to ``max_size`` works.
    """
    n = (q**k - 1) // (q - 1)
    max_size = n if max_size is None else min(max_size, n)
    if n > 15 and max_size > 5:
        raise ValueError(f"PG({k - 1},{q}) has {n} points; exhaustive search needs <= 15 points or max_size <= 5")
    sp = search_space(k, q, s)
    ok = sp.is_cutting if cutting else (lambda sub: sp.is_t_fold(sub, t))
    for sub in _subsets(n, range(max_size + 1)):
        if ok(sub):
            return sub.bit_count(), sp.pointset(sub)
    return None


def all_blocking_subsets(k: int, q: int, t: int, s: int) -> Iterator[int]:
    """Bitmasks (over the lexicographic point order) of every t-fold s-blocking set."""
    sp = search_space(k, q, s)
    n = len(sp.points)
    if n > 15:
        raise ValueError("full enumeration needs at most 15 points")
    for sub in range(1 << n):
        if sp.is_t_fold(sub, t):
            yield sub
