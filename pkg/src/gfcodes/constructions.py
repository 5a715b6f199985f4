"""Code constructions: simplex and its punctures, Solomon-Stiffler codes,
simplex padding, the gAB-violating extension, cyclic codes, and a registry
of explicit example matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .code import LinearCode, extremal_codewords
from .ghw import WeightReport, sswd
from .gf import FieldCtx, builtin_modulus, field_new, gf
from .matrix import MatrixGF, rank_array
from .minimality import is_s_minimal
from .subspace import subspace_batches


# -- simplex family ---------------------------------------------------------------

def projective_points(ctx: FieldCtx, k: int) -> np.ndarray:
    """All points of PG(k-1, q) as normalized columns (k x N), lexicographic order."""
    cols = np.concatenate([b[:, 0, :] for _f, b in subspace_batches(ctx, k, 1)], axis=0)
    return cols.T.copy()


def simplex(q: int | FieldCtx, k: int) -> LinearCode:
    ctx = q if isinstance(q, FieldCtx) else gf(q)
    if k < 2:
        raise ValueError("simplex codes need k >= 2")
    return LinearCode(MatrixGF(ctx, projective_points(ctx, k)), name=f"S({ctx.q},{k})",
                      guaranteed_minimal=range(1, k))


def punctured_simplex(q: int, k: int, coords: Iterable[int]) -> LinearCode:
    """Simplex with the given column indices removed.

    ``guaranteed_minimal`` lists the s with t < q^(k-s-1), which are s-minimal
    whatever columns were removed.
    """
    ctx = gf(q)
    coords = sorted(set(int(i) for i in coords))
    t = len(coords)
    if t >= q ** (k - 1):
        raise ValueError(f"cannot puncture {t} >= q^(k-1) = {q ** (k - 1)} coordinates")
    pts = projective_points(ctx, k)
    if coords and not (0 <= coords[0] and coords[-1] < pts.shape[1]):
        raise IndexError("puncture coordinate out of range")
    keep = np.setdiff1d(np.arange(pts.shape[1]), coords)
    flags = [s for s in range(1, k) if t < q ** (k - s - 1)]
    return LinearCode(MatrixGF(ctx, pts[:, keep]), name=f"S({q},{k})-{t}", guaranteed_minimal=flags)


def _points_in(ctx: FieldCtx, pts: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Mask of columns of ``pts`` lying in the row span of ``basis``."""
    basis = np.atleast_2d(np.asarray(basis, dtype=np.int64))
    r = rank_array(ctx, basis)
    return np.array([rank_array(ctx, np.vstack([basis, p])) == r for p in pts.T])


def simplex_minus(q: int, k: int, blocks: Sequence[Sequence[Sequence[int]]], name: str | None = None) -> LinearCode:
    """Simplex with every point of each span(block) removed; blocks are lists of k-vectors."""
    ctx = gf(q)
    pts = projective_points(ctx, k)
    drop = np.zeros(pts.shape[1], dtype=bool)
    for b in blocks:
        drop |= _points_in(ctx, pts, b)
    return LinearCode(MatrixGF(ctx, pts[:, ~drop]), name=name)


# -- Solomon-Stiffler ------------------------------------------------------------

@dataclass(frozen=True)
class SolomonStifflerSpec:
    q: int
    k: int
    u: tuple[int, ...]

    def __post_init__(self):
        u = tuple(int(x) for x in self.u)
        object.__setattr__(self, "u", u)
        if not u:
            raise ValueError("u must be nonempty")
        if any(x < 1 for x in u):
            raise ValueError("every u_i must be >= 1")
        if any(b <= a for a, b in zip(u, u[1:])):
            raise ValueError("u must be strictly increasing")
        if sum(u) > self.k:
            raise ValueError(f"sum(u) = {sum(u)} exceeds k = {self.k}")

    @property
    def t(self) -> int:
        return len(self.u)

    def subspaces(self) -> list[np.ndarray]:
        """Coordinate-aligned U_i: consecutive unit vectors, offsets accumulating."""
        out, off = [], 0
        eye = np.eye(self.k, dtype=np.int64)
        for ui in self.u:
            out.append(eye[off:off + ui])
            off += ui
        return out

    def length(self) -> int:
        q = self.q
        return (q**self.k - 1) // (q - 1) - sum((q**ui - 1) // (q - 1) for ui in self.u)

    def min_distance(self) -> int:
        return self.q ** (self.k - 1) - sum(self.q ** (ui - 1) for ui in self.u)

    def minimal_levels(self) -> list[int]:
        """Levels s for which the construction is guaranteed s-minimal (t <= q-1, u_t <= k-s-1)."""
        if self.t > self.q - 1:
            return []
        return [s for s in range(1, self.k) if self.u[-1] <= self.k - s - 1]


def solomon_stiffler(spec: SolomonStifflerSpec) -> LinearCode:
    c = simplex_minus(spec.q, spec.k, spec.subspaces(), name=f"SS({spec.q},{spec.k},{list(spec.u)})")
    c.guaranteed_minimal = frozenset(spec.minimal_levels())
    return c


def ss_predicted_weights(spec: SolomonStifflerSpec) -> dict[int, int]:
    """The published closed-form table for t = 1, or t = 2 with q >= 3, codeword counts.

    The t = 2 table omits the weight d + q^(u_2 - 1) and misstates two
    multiplicities; ``ss_weight_distribution`` gives the enumerated values.
    """
    q, k, u = spec.q, spec.k, spec.u
    d = spec.min_distance()
    if spec.t == 1:
        return {d: q**k - q ** (k - u[0]), q ** (k - 1): q ** (k - u[0]) - 1}
    if spec.t == 2 and q >= 3:
        u1, u2 = u
        return {
            d: q**k - q ** (k - u1),
            d + q ** (u1 - 1): q ** (k - u1) - q ** (k - u2),
            d + q ** (u1 - 1) + q ** (u2 - 1): q ** (k - u2) - 1,
        }
    raise ValueError("closed form needs t = 1, or t = 2 with q >= 3")


def ss_weight_distribution(spec: SolomonStifflerSpec) -> dict[int, int]:
    """Nonzero weight distribution for any t, derived from the disjoint blocks.

    A message y loses q^(u_i - 1) coordinates for every U_i it does not
    annihilate, so its weight is q^(k-1) minus those losses; the count of
    messages with a given set of non-annihilated blocks is a product.
    """
    q, k, u = spec.q, spec.k, spec.u
    rest = q ** (k - sum(u))
    out: dict[int, int] = {}
    for hit in itertools.product((False, True), repeat=len(u)):
        w = q ** (k - 1) - sum(q ** (ui - 1) for ui, h in zip(u, hit) if h)
        m = rest
        for ui, h in zip(u, hit):
            m *= q**ui - 1 if h else 1
        if not any(hit):
            m -= 1
        if m:
            out[w] = out.get(w, 0) + m
    return dict(sorted(out.items()))


# -- padding --------------------------------------------------------------------------

def pad_with_simplex(c: LinearCode, t: int) -> LinearCode:
    """[G, S, ..., S] with t copies of the simplex generator appended."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return c
    pts = projective_points(c.ctx, c.k)
    g = np.hstack([c.G] + [pts] * t)
    label = f"{c.name or 'C'}+{t}S"
    return LinearCode(MatrixGF(c.ctx, g), name=label)


def simplex_weight(q: int, k: int, r: int) -> int:
    """Support weight of every r-subcode of the simplex code; padding by t copies adds t times this."""
    return (q**k - q ** (k - r)) // (q - 1)


def min_padding_ts(c: LinearCode, s: int, report: WeightReport | None = None) -> int:
    """Smallest t >= 0 with d_{s+1}(C) - D_s(C) + t q^(k-s-1) > 0."""
    if not 1 <= s <= c.k - 1:
        raise ValueError(f"s must lie in [1, {c.k - 1}]")
    D_s = report.D[s] if report and s in report.D else sswd(c, s).max_weight
    d_next = report.d[s + 1] if report and s + 1 in report.d else sswd(c, s + 1).min_weight
    if d_next > D_s:
        return 0
    return (D_s - d_next) // c.q ** (c.k - s - 1) + 1


# -- gAB-violating extension ----------------------------------------------------------

@dataclass
class Extension:
    code: LinearCode
    n_extra: int
    basis: np.ndarray  # k x n rows of C used before extension
    ratio_hypothesis: bool


def ab_violating_extend(c: LinearCode, s: int, strict: bool = False) -> Extension:
    """Prepend n' coordinates carrying a max-weight codeword, so D_s rises past the gAB ratio.

    Requires C to be s-minimal. With ``strict`` the ratio hypothesis
    ``d_s (q^(s+1)-1) > D_s (q^(s+1)-q)`` is also enforced.
    """
    q, k = c.q, c.k
    if k < 2 or not 1 <= s <= k - 1:
        raise ValueError(f"need k >= 2 and 1 <= s <= k-1, got k={k}, s={s}")
    t = sswd(c, s)
    d_s, D_s = t.min_weight, t.max_weight
    num, den = q ** (s + 1) - 1, q ** (s + 1) - q
    ratio_ok = d_s * num > D_s * den
    if strict and not ratio_ok:
        raise ValueError(f"D_{s}/d_{s} = {D_s}/{d_s} already violates the gAB ratio")
    ok, _ = is_s_minimal(c, s)
    if not ok:
        raise ValueError(f"code is not {s}-minimal")
    ext = extremal_codewords(c)
    n_extra = -(-num * d_s // den) - ext.max_weight
    if n_extra <= 0:
        raise ValueError(f"n' = {n_extra} <= 0: D_1 already reaches the gAB threshold")
    rows = [c.encode(ext.max_message)]
    r2 = _first_independent(c, rows, want_weight=ext.min_weight)
    if r2 is None:
        raise ValueError("no min-weight codeword independent of the max-weight one")
    rows.append(r2)
    while len(rows) < k:
        rows.append(_first_independent(c, rows))
    basis = np.array(rows, dtype=np.int64)
    new = np.zeros((k, n_extra), dtype=np.int64)
    new[0] = 1
    code = LinearCode(MatrixGF(c.ctx, np.hstack([new, basis])), name=f"{c.name or 'C'}'")
    return Extension(code, n_extra, basis, ratio_ok)


def _first_independent(c: LinearCode, rows: list[np.ndarray], want_weight: int | None = None):
    """First codeword in message order (optionally of a given weight) independent of ``rows``."""
    r = len(rows)
    for _lo, msgs, w in c.codeword_weights():
        for msg, wt in zip(msgs, w):
            if wt == 0 or (want_weight is not None and wt != want_weight):
                continue
            word = c.encode(msg)
            if rank_array(c.ctx, np.vstack(rows + [word])) > r:
                return word
    return None


# -- cyclic codes -------------------------------------------------------------------------

def cyclotomic_cosets(q: int, n: int) -> list[list[int]]:
    """q-cyclotomic cosets mod n in generation order, sorted by leader (their minimum)."""
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    seen: set[int] = set()
    out = []
    for a in range(n):
        if a in seen:
            continue
        coset, x = [], a
        while x not in coset:
            coset.append(x)
            x = x * q % n
        seen.update(coset)
        out.append(coset)
    return out


def multiplicative_order(q: int, n: int) -> int:
    if n == 1:
        return 1
    e, x = 1, q % n
    while x != 1:
        x = x * q % n
        e += 1
    return e


@dataclass(frozen=True)
class CyclicSpec:
    q: int
    n: int
    exclude: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exclude", tuple(sorted(set(int(a) for a in self.exclude))))
        if gcd(self.n, self.q) != 1:
            raise ValueError(f"gcd({self.n}, {self.q}) != 1")
        leaders = {min(c) for c in cyclotomic_cosets(self.q, self.n)}
        bad = [a for a in self.exclude if a not in leaders]
        if bad:
            raise ValueError(f"{bad} are not coset leaders mod {self.n}")


def _pmul(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = int(ctx.add(out[i + j], ctx.mul(x, y)))
    return out


def _pdivmod_prime(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    quot = [0] * max(1, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv % p
        quot[i] = f
        for j, y in enumerate(b):
            a[i + j] = (a[i + j] - f * y) % p
    return quot, a[: len(b) - 1]


def minimal_polynomial(big: FieldCtx, beta: int, coset: Sequence[int]) -> list[int]:
    """prod (x - beta^j) over the coset, low degree first, with base-field coefficients."""
    poly = [1]
    for j in coset:
        poly = _pmul(big, poly, [int(big.neg(big.pow(beta, j))), 1])
    if any(x >= big.p for x in poly):
        raise ArithmeticError("minimal polynomial has coefficients outside the prime field")
    return poly


def cyclic_code(spec: CyclicSpec) -> LinearCode:
    """Cyclic code whose zeros are every coset except the excluded ones.

    h(x) is the product of the excluded cosets' minimal polynomials and the
    generator matrix consists of the k = deg h shifts of g = (x^n - 1)/h.
    """
    q, n = spec.q, spec.n
    base = gf(q)
    if base.m != 1:
        raise ValueError("cyclic codes are built over prime fields only")
    m = multiplicative_order(q, n)
    try:
        builtin_modulus(q, m)
    except ValueError as exc:
        raise ValueError(f"no built-in GF({q}^{m}) for length {n}") from exc
    big = field_new(q, m)
    beta = big.pow(big.primitive_element(), (big.q - 1) // n)
    cosets = {min(c): c for c in cyclotomic_cosets(q, n)}
    h = reduce(lambda a, b: _pmul(base, a, b),
               (minimal_polynomial(big, beta, cosets[a]) for a in spec.exclude), [1])
    xn1 = [q - 1] + [0] * (n - 1) + [1]
    g, rem = _pdivmod_prime(xn1, h, q)
    if any(rem):
        raise ArithmeticError("h(x) does not divide x^n - 1")
    k = len(h) - 1
    if k == 0:
        raise ValueError("excluding no cosets gives the zero code")
    gm = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        gm[i, i:i + len(g)] = g
    return LinearCode(MatrixGF(base, gm), name=f"cyclic({q},{n},{list(spec.exclude)})")


# -- registry -------------------------------------------------------------------------------

_MATRICES = {
    "ex9_5_3": (2, [
        [1, 0, 0, 0, 1, 0, 1, 1, 1],
        [0, 1, 0, 0, 1, 0, 1, 1, 0],
        [0, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1, 1, 1],
    ]),
    "ex12_5_5": (5, [
        [1, 0, 0, 0, 2, 3, 0, 1, 4, 3, 0, 1],
        [0, 1, 0, 0, 1, 3, 0, 1, 3, 1, 4, 4],
        [0, 0, 1, 0, 1, 2, 0, 1, 2, 0, 2, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 3],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    ]),
    "golay12_3": (3, [
        [1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1],
        [0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2],
        [0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2],
        [0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1],
        [0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0],
    ]),
}

# removed blocks, each given by spanning vectors in GF(q)^k
_SIMPLEX_MINUS = {
    "ss28_5_2": (2, 5, [[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]]]),
    "ss24_5_2": (2, 5, [[[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]]),
    "ss117_5_3": (3, 5, [[[0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]]),
    "ss116_5_3": (3, 5, [[[1, 0, 0, 0, 0]], [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]]),
    "xie26_5_2": (2, 5, [[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]], [[0, 0, 1, 0, 0]], [[0, 0, 0, 1, 0]]]),
}

EXAMPLE_NAMES = tuple(_MATRICES) + tuple(_SIMPLEX_MINUS)


def paper_example(name: str) -> LinearCode:
    if name in _MATRICES:
        q, rows = _MATRICES[name]
        return LinearCode.from_rows(q, rows, name=name)
    if name in _SIMPLEX_MINUS:
        q, k, blocks = _SIMPLEX_MINUS[name]
        return simplex_minus(q, k, blocks, name=name)
    raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
