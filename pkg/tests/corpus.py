"""Codes shared across test modules, all small enough for the slow oracles or cheap to analyze."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from gfcodes import LinearCode, MatrixGF, gf
from gfcodes.constructions import (
    SolomonStifflerSpec,
    paper_example,
    punctured_simplex,
    simplex,
    solomon_stiffler,
)


def random_code(rng: np.random.Generator, q: int, k: int, n: int) -> LinearCode:
    """A uniformly random full-rank k x n generator over GF(q) (q prime)."""
    ctx = gf(q)
    while True:
        g = rng.integers(0, q, size=(k, n))
        if not g.any():
            continue
        c = LinearCode(MatrixGF(ctx, g))
        if c.k == k:
            return c


def random_codes(count: int, seed: int, qs=(2, 3, 5), kmax: int = 5, nmax: int = 14):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        q = int(rng.choice(qs))
        k = int(rng.integers(1, kmax + 1))
        n = int(rng.integers(k, nmax + 1))
        out.append(random_code(rng, q, k, n))
    return out


# small codes every exhaustive test may afford
SMALL_SEED = 20240611


@lru_cache(maxsize=None)
def small_random(count: int = 24) -> tuple[LinearCode, ...]:
    return tuple(random_codes(count, SMALL_SEED, qs=(2, 3), kmax=4, nmax=8))


@lru_cache(maxsize=None)
def constructed() -> tuple[LinearCode, ...]:
    return (
        simplex(2, 3),
        simplex(2, 4),
        simplex(3, 3),
        punctured_simplex(2, 4, [0, 5]),
        punctured_simplex(3, 3, [2]),
        solomon_stiffler(SolomonStifflerSpec(2, 4, (2,))),
        solomon_stiffler(SolomonStifflerSpec(3, 4, (1, 2))),
    )


# registry codes whose full analysis runs in a few seconds
FAST_REGISTRY = ("ex9_5_3", "ex12_5_5", "ss28_5_2", "ss24_5_2", "xie26_5_2")


@lru_cache(maxsize=None)
def registry(name: str) -> LinearCode:
    return paper_example(name)


def hamming_7_4() -> LinearCode:
    return LinearCode.from_rows(2, [
        [1, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1],
    ])
