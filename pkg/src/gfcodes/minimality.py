"""s-minimality of subcodes and codes.

Two independent deciders are provided:

``rank``
    an s-subcode U is minimal iff ``rank H(supp U) == |supp U| - s`` for a
    parity-check matrix H. With H in RREF (pivot columns P, the other k
    columns F), ``rank H(S) = |S & P| + rank(H[rows whose pivot is not in S], S & F)``,
    which reduces each test to a rank of at most k columns.
``brute``
    the definition itself: look for another s-subcode whose support sits inside
    supp U. Inclusion ``supp U1 <= supp U2`` is ``Z(U2) <= Z(U1)`` on zero sets,
    so candidates are found by intersecting per-coordinate bitsets of the
    subcodes vanishing there. Worst case quadratic; used as the oracle.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .code import LinearCode, SupportSet, subcode_support
from .ghw import WeightReport, iter_support_masks, sswd
from .matrix import batch_rank, rref_rank, submatrix_columns
from .subspace import (
    BudgetExceeded,
    SubspaceBasis,
    check_budget,
    gaussian_binomial,
    subspace_at,
)


class GabVerdict(str, Enum):
    HOLDS_BY_GAP = "gap"
    HOLDS_BY_RATIO = "ratio"
    INCONCLUSIVE = "neither"


class SubcodeVerdict(str, Enum):
    MINIMAL_BY_T1A = "minimal: |supp U| < d_{s+1}"
    MINIMAL_BY_T1B = "minimal: ratio below (q^{s+1}-1)/(q^{s+1}-q) * d_s"
    NOT_MINIMAL = "not minimal (exact regime)"
    UNDECIDED = "undecided"


@dataclass
class NonMinimalWitness:
    """Distinct s-subcodes with supp(contained) a subset of supp(container)."""

    contained: SubspaceBasis
    container: SubspaceBasis
    contained_support: SupportSet
    container_support: SupportSet


def _check_s(c: LinearCode, s: int, top: int) -> None:
    if not 1 <= s <= top:
        raise ValueError(f"s must lie in [1, {top}], got {s}")


# -- single subcode ------------------------------------------------------------------

def is_minimal_subcode(c: LinearCode, v: SubspaceBasis) -> bool:
    """Rank test on the parity-check columns indexed by the subcode's support."""
    if v.k != c.k or v.ctx != c.ctx:
        raise ValueError(f"V must be a subspace of GF({c.q})^{c.k}")
    _check_s(c, v.s, c.k)
    supp = subcode_support(c, v)
    _, r, _ = rref_rank(submatrix_columns(c.pcheck, supp.indices))
    minimal = r == len(supp) - v.s
    if minimal:
        assert len(supp) <= c.n - c.k + v.s
    return minimal


# -- batched rank criterion -------------------------------------------------------

def _parity_blocks(c: LinearCode):
    piv = np.array(c.pcheck_pivots, dtype=np.int64)
    free = np.array([j for j in range(c.n) if j not in set(c.pcheck_pivots)], dtype=np.int64)
    return piv, free, c.pcheck.entries[:, free]


def rank_on_supports(c: LinearCode, masks: np.ndarray) -> np.ndarray:
    """rank H(S) for each support mask S in ``masks`` (B, n)."""
    piv, free, hf = _parity_blocks(c)
    if piv.size == 0:
        return np.zeros(masks.shape[0], dtype=np.int64)
    in_p = masks[:, piv]
    in_f = masks[:, free]
    # only rows whose pivot lies outside S contribute; there are at most n - |S|
    keep = ~in_p
    m = int(keep.sum(axis=1).max())
    rows = np.argsort(in_p, axis=1, kind="stable")[:, :m]
    live = np.take_along_axis(keep, rows, axis=1)
    a = hf[rows] * live[:, :, None] * in_f[:, None, :]
    return np.count_nonzero(in_p, axis=1) + batch_rank(c.ctx, a)


def minimal_mask(c: LinearCode, s: int, masks: np.ndarray) -> np.ndarray:
    return rank_on_supports(c, masks) == np.count_nonzero(masks, axis=1) - s


# -- brute force ------------------------------------------------------------------------

def _all_masks(c: LinearCode, s: int) -> np.ndarray:
    return np.concatenate([m for _f, _b, m in iter_support_masks(c, s)], axis=0)


def _zero_bitsets(zero: np.ndarray) -> list[int]:
    """Per coordinate, a bitset over subspace ordinals whose subcode vanishes there."""
    out = []
    for col in zero.T:
        out.append(int.from_bytes(np.packbits(col, bitorder="little").tobytes(), "little"))
    return out


def _brute_first_failure(c: LinearCode, s: int) -> tuple[int, int] | None:
    zero = ~_all_masks(c, s)
    total = zero.shape[0]
    if total <= 1:
        return None
    everyone = (1 << total) - 1
    bits = _zero_bitsets(zero)
    pop = [b.bit_count() for b in bits]
    for u in range(total):
        coords = np.flatnonzero(zero[u]).tolist()
        coords.sort(key=pop.__getitem__)
        cand = everyone
        for i in coords:
            cand &= bits[i]
            if cand & (cand - 1) == 0:
                break
        others = cand & ~(1 << u)
        if others:
            return (others & -others).bit_length() - 1, u
    return None


def _first_contained(c: LinearCode, s: int, u2: int, mask2: np.ndarray) -> int:
    outside = ~mask2
    for first, _b, masks in iter_support_masks(c, s):
        hit = ~np.any(masks & outside, axis=1)
        if u2 - first in range(len(hit)):
            hit[u2 - first] = False
        idx = np.flatnonzero(hit)
        if idx.size:
            return first + int(idx[0])
    raise AssertionError("rank criterion failed but no contained subcode exists")


def _witness(c: LinearCode, s: int, u1: int, u2: int) -> NonMinimalWitness:
    v1 = subspace_at(c.ctx, c.k, s, u1)
    v2 = subspace_at(c.ctx, c.k, s, u2)
    return NonMinimalWitness(v1, v2, subcode_support(c, v1), subcode_support(c, v2))


def is_s_minimal(c: LinearCode, s: int, alg: str = "rank",
                 limit: int | None = None) -> tuple[bool, NonMinimalWitness | None]:
    """Decide whether every s-subcode of ``c`` is minimal.

    Returns ``(verdict, witness)``; the witness is the first failing pair in
    enumeration order and is None for minimal codes.
    """
    _check_s(c, s, c.k - 1)
    check_budget(gaussian_binomial(c.k, s, c.q), limit)
    if alg == "rank":
        for first, _bases, masks in iter_support_masks(c, s):
            ok = minimal_mask(c, s, masks)
            if not ok.all():
                j = int(np.flatnonzero(~ok)[0])
                u2 = first + j
                return False, _witness(c, s, _first_contained(c, s, u2, masks[j]), u2)
        return True, None
    if alg == "brute":
        hit = _brute_first_failure(c, s)
        if hit is None:
            return True, None
        return False, _witness(c, s, *hit)
    raise ValueError(f"unknown algorithm {alg!r}")


# -- sufficient conditions --------------------------------------------------------------

def _need(c: LinearCode, report: WeightReport | None, ss, limit: int | None = None) -> WeightReport:
    """Fill in d_s and D_s for each s in ``ss`` that ``report`` lacks."""
    rep = report or WeightReport(c.n, c.k, c.q)
    for s in ss:
        if s not in rep.d:
            t = sswd(c, s, limit=limit)
            rep.d[s], rep.D[s], rep.strategy[s] = t.min_weight, t.max_weight, t.strategy
    return rep


def gab_verdict(q: int, s: int, d_s: int, D_s: int, d_next: int) -> GabVerdict:
    if D_s < d_next:
        return GabVerdict.HOLDS_BY_GAP
    if D_s * (q ** (s + 1) - q) < d_s * (q ** (s + 1) - 1):
        return GabVerdict.HOLDS_BY_RATIO
    return GabVerdict.INCONCLUSIVE


def gab_check(c: LinearCode, s: int, report: WeightReport | None = None) -> GabVerdict:
    """Generalized Ashikhmin-Barg test: D_s < d_{s+1}, else D_s/d_s below the ratio."""
    _check_s(c, s, c.k - 1)
    rep = _need(c, report, (s, s + 1))
    return gab_verdict(c.q, s, rep.d[s], rep.D[s], rep.d[s + 1])


@dataclass
class SubcodeCondition:
    verdict: SubcodeVerdict
    exact: bool
    weight: int

    @property
    def minimal(self) -> bool | None:
        if self.verdict in (SubcodeVerdict.MINIMAL_BY_T1A, SubcodeVerdict.MINIMAL_BY_T1B):
            return True
        if self.verdict is SubcodeVerdict.NOT_MINIMAL:
            return False
        return None


def subcode_condition(c: LinearCode, v: SubspaceBasis,
                      report: WeightReport | None = None) -> SubcodeCondition:
    """Weight-based sufficient conditions for one subcode, exact in the characterization regime.

    In the exact regime the verdict is cross-checked with the rank criterion.
    """
    s = v.s
    _check_s(c, s, c.k - 1)
    rep = _need(c, report, (s, s + 1))
    q, n, k = c.q, c.n, c.k
    w = len(subcode_support(c, v))
    d_s, d_next = rep.d[s], rep.d[s + 1]
    num, den = q ** (s + 1) - 1, q ** (s + 1) - q
    t1a = w < d_next
    t1b = w * den < d_s * num
    exact = d_next == n - k + s + 1 or (n - k + s) * den < num * d_s
    if t1a:
        verdict = SubcodeVerdict.MINIMAL_BY_T1A
    elif t1b:
        verdict = SubcodeVerdict.MINIMAL_BY_T1B
    elif exact:
        verdict = SubcodeVerdict.NOT_MINIMAL
    else:
        verdict = SubcodeVerdict.UNDECIDED
    out = SubcodeCondition(verdict, exact, w)
    if out.minimal is not None and out.minimal != is_minimal_subcode(c, v):
        raise RuntimeError(f"weight condition {verdict} contradicts the rank criterion for {v}")
    return out


# -- profile -------------------------------------------------------------------------------

@dataclass
class ProfileRow:
    s: int
    d_next: int | None
    D_s: int | None
    minimal: bool | None
    condition: GabVerdict | None
    witness: NonMinimalWitness | None = None
    note: str = ""


@dataclass
class MinimalityProfile:
    n: int
    k: int
    q: int
    d1: int | None
    rows: list[ProfileRow] = field(default_factory=list)

    def verdicts(self) -> dict[int, bool | None]:
        return {r.s: r.minimal for r in self.rows}

    def violations(self) -> list[str]:
        out = []
        v = self.verdicts()
        for s in sorted(v):
            if v.get(s + 1) is True and v[s] is False:
                out.append(f"{s + 1}-minimal but not {s}-minimal")
        if any(x is True for x in v.values()) and self.d1 is not None:
            bound = (self.q - 1) * (self.k - 1) + 1
            if self.d1 < bound:
                out.append(f"s-minimal code with d_1={self.d1} < (q-1)(k-1)+1={bound}")
        for r in self.rows:
            if r.condition not in (None, GabVerdict.INCONCLUSIVE) and r.minimal is False:
                out.append(f"s={r.s}: condition {r.condition.value} holds but code is not s-minimal")
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "d_s1", "D_s", "verdict", "condition"])
        for r in self.rows:
            verdict = {True: "yes", False: "no", None: "NA"}[r.minimal]
            w.writerow([r.s, _na(r.d_next), _na(r.D_s), verdict, r.condition.value if r.condition else "NA"])
        return buf.getvalue()


def _na(x) -> str:
    return "NA" if x is None else str(x)


def minimality_profile(c: LinearCode, alg: str = "rank", limit: int | None = None,
                       report: WeightReport | None = None) -> MinimalityProfile:
    """Verdict, weights and gAB condition for every s in [1, k-1].

    Levels whose enumeration exceeds the budget are left as gaps (None).
    """
    rep = report or WeightReport(c.n, c.k, c.q)
    for s in range(1, c.k + 1):
        try:
            _need(c, rep, (s,), limit)
        except BudgetExceeded:
            pass
    prof = MinimalityProfile(c.n, c.k, c.q, rep.d.get(1))
    for s in range(1, c.k):
        row = ProfileRow(s, rep.d.get(s + 1), rep.D.get(s), None, None)
        if s in rep.d and s + 1 in rep.d:
            row.condition = gab_verdict(c.q, s, rep.d[s], rep.D[s], rep.d[s + 1])
        try:
            row.minimal, row.witness = is_s_minimal(c, s, alg, limit)
        except BudgetExceeded as exc:
            row.note = str(exc)
        prof.rows.append(row)
    bad = prof.violations()
    if bad:
        raise AssertionError("; ".join(bad))
    return prof

