"""Generalized Hamming weights, maximum support weights and subcode support weight distributions.

Two enumeration strategies compute the support weight of every s-dimensional
subcode:

``subcode``
    walk the s-dimensional subspaces W of GF(q)^k and take the support of
    ``W @ G`` directly;
``complement``
    walk the (k-s)-dimensional subspaces V and use ``w = n - m_G(V)``, where
    ``m_G(V)`` counts generator columns inside V.

Both visit the same number of subspaces; the default picks whichever has the
cheaper per-subspace product (``s <= k - s`` selects ``subcode``).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from .code import LinearCode, batch_supports
from .subspace import (
    batch_membership,
    check_budget,
    gaussian_binomial,
    map_ranges,
    partition,
    subspace_batches,
)

STRATEGIES = ("subcode", "complement")


def _check_s(c: LinearCode, s: int) -> None:
    if not 1 <= s <= c.k:
        raise ValueError(f"s must lie in [1, {c.k}], got {s}")


def default_strategy(c: LinearCode, s: int) -> str:
    return "subcode" if s <= c.k - s else "complement"


def iter_support_masks(c: LinearCode, s: int, lo: int = 0, hi: int | None = None):
    """Yield (first_ordinal, bases, masks) over s-dim subspaces W; masks are supp(W @ G)."""
    for first, bases in subspace_batches(c.ctx, c.k, s, lo, hi, batch=_batch_size(c, s)):
        yield first, bases, batch_supports(c, bases)


def _batch_size(c: LinearCode, dim: int) -> int:
    return max(64, (1 << 21) // max(1, c.k * c.n * max(dim, 1)))


def iter_weights(c: LinearCode, s: int, strategy: str | None = None, lo: int = 0, hi: int | None = None):
    """Yield (first_ordinal, weights) for the s-subcode support weights under ``strategy``.

    Ordinals refer to the stream of the enumerated subspaces: s-dimensional for
    ``subcode``, (k-s)-dimensional for ``complement``.
    """
    _check_s(c, s)
    strategy = strategy or default_strategy(c, s)
    if strategy == "subcode":
        for first, _bases, masks in iter_support_masks(c, s, lo, hi):
            yield first, np.count_nonzero(masks, axis=1)
    elif strategy == "complement":
        d = c.k - s
        for first, bases in subspace_batches(c.ctx, c.k, d, lo, hi, batch=_batch_size(c, d)):
            inside = batch_membership(c.ctx, bases, c.G)
            yield first, c.n - np.count_nonzero(inside, axis=1)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")


def _hist_range(c: LinearCode, s: int, strategy: str, lo: int, hi: int) -> np.ndarray:
    hist = np.zeros(c.n + 1, dtype=np.int64)
    for _first, w in iter_weights(c, s, strategy, lo, hi):
        hist += np.bincount(w, minlength=c.n + 1)
    return hist


@dataclass
class SswdTable:
    """A_j^s for j in [0, n]; ``counts[j]`` is the number of s-subcodes of support weight j."""

    s: int
    n: int
    counts: np.ndarray
    strategy: str = "subcode"

    def __getitem__(self, j: int) -> int:
        return int(self.counts[j])

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def nonzero(self) -> dict[int, int]:
        return {int(j): int(v) for j, v in enumerate(self.counts) if v}

    @property
    def min_weight(self) -> int:
        return int(np.flatnonzero(self.counts)[0])

    @property
    def max_weight(self) -> int:
        return int(np.flatnonzero(self.counts)[-1])


def sswd(c: LinearCode, s: int, strategy: str | None = None, workers: int = 1,
         limit: int | None = None) -> SswdTable:
    """Histogram of support weights over all s-dimensional subcodes."""
    _check_s(c, s)
    strategy = strategy or default_strategy(c, s)
    total = gaussian_binomial(c.k, s, c.q)
    check_budget(total, limit)
    parts = map_ranges(partial(_hist_range, c, s, strategy), partition(total, workers), workers)
    return SswdTable(s, c.n, np.sum(parts, axis=0), strategy)


def ghw_ds(c: LinearCode, s: int, strategy: str | None = None, limit: int | None = None) -> int:
    """d_s(C): the smallest support weight of an s-dimensional subcode."""
    _check_s(c, s)
    check_budget(gaussian_binomial(c.k, s, c.q), limit)
    return min(int(w.min()) for _f, w in iter_weights(c, s, strategy))


def max_weight_Ds(c: LinearCode, s: int, strategy: str | None = None, limit: int | None = None) -> int:
    """D_s(C): the largest support weight of an s-dimensional subcode."""
    _check_s(c, s)
    check_budget(gaussian_binomial(c.k, s, c.q), limit)
    return max(int(w.max()) for _f, w in iter_weights(c, s, strategy))


@dataclass
class WeightReport:
    n: int
    k: int
    q: int
    d: dict[int, int] = field(default_factory=dict)
    D: dict[int, int] = field(default_factory=dict)
    strategy: dict[int, str] = field(default_factory=dict)

    def hierarchy(self) -> list[int]:
        return [self.d[s] for s in sorted(self.d)]

    def rows(self) -> list[tuple[int, int, int]]:
        return [(s, self.d[s], self.D[s]) for s in sorted(self.d)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "d_s", "D_s"])
        w.writerows(self.rows())
        return buf.getvalue()


def weight_report(c: LinearCode, smax: int | None = None, strategy: str | None = None,
                  workers: int = 1, limit: int | None = None,
                  tables: dict[int, SswdTable] | None = None) -> WeightReport:
    """d_s and D_s for s = 1..smax (default k). Computed tables are stored in ``tables``."""
    smax = c.k if smax is None else min(smax, c.k)
    rep = WeightReport(c.n, c.k, c.q)
    for s in range(1, smax + 1):
        t = sswd(c, s, strategy, workers, limit)
        rep.d[s], rep.D[s] = t.min_weight, t.max_weight
        rep.strategy[s] = t.strategy
        if tables is not None:
            tables[s] = t
    return rep


def sswd_csv(tables) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["s", "j", "A_j"])
    for t in tables:
        for j, v in t.nonzero.items():
            w.writerow([t.s, j, v])
    return buf.getvalue()


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def griesmer_length(k: int, d: int, q: int) -> int:
    return sum(_ceil_div(d, q**i) for i in range(k))


def check_bounds(report: WeightReport, weight_distribution: dict[int, int] | None = None,
                 sswd1: SswdTable | None = None) -> list[str]:
    """Violations of the monotonicity, Singleton and Griesmer-type GHW bounds.

    An empty list means every check passed; anything else is a bug upstream.
    """
    n, k, q = report.n, report.k, report.q
    out: list[str] = []
    ss = sorted(report.d)
    for s in ss:
        ds = report.d[s]
        if not 1 <= ds <= n:
            out.append(f"d_{s}={ds} outside [1, {n}]")
        if s in report.D and not ds <= report.D[s] <= n:
            out.append(f"D_{s}={report.D[s]} not in [d_{s}, n]")
        if ds > n - k + s:
            out.append(f"Singleton: d_{s}={ds} > n-k+s={n - k + s}")
        tail = sum(_ceil_div((q - 1) * ds, q**i * (q**s - 1)) for i in range(1, k - s + 1))
        if ds + tail > n:
            out.append(f"Griesmer (b) at s={s}: {ds}+{tail} > {n}")
    for a, b in zip(ss, ss[1:]):
        if b == a + 1 and not report.d[a] < report.d[b]:
            out.append(f"monotonicity: d_{a}={report.d[a]} >= d_{b}={report.d[b]}")
    for s in ss:
        for r in ss:
            if s <= r and (q**r - 1) * report.d[s] > (q**r - q ** (r - s)) * report.d[r]:
                out.append(f"Griesmer (a): s={s}, r={r}: {q**r - 1}*{report.d[s]} > "
                           f"{q**r - q**(r - s)}*{report.d[r]}")
    if weight_distribution is not None and sswd1 is not None:
        for j in range(1, n + 1):
            if weight_distribution.get(j, 0) != (q - 1) * sswd1[j]:
                out.append(f"A_{j}={weight_distribution.get(j, 0)} != (q-1)*A^1_{j}={(q - 1) * sswd1[j]}")
    return out
