"""Recompute each published table from scratch and diff it against ``golden``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import golden
from .code import LinearCode, dual, extremal_codewords
from .constructions import CyclicSpec, ab_violating_extend, cyclic_code, pad_with_simplex, paper_example
from .ghw import iter_support_masks, sswd, weight_report
from .minimality import GabVerdict, gab_check, is_s_minimal, minimal_mask

TARGETS = ("t1", "t2", "t3", "t4", "t5", "ex4_8", "ex8_2", "ex8_3")


@dataclass
class Reproduction:
    target: str
    lines: list[str] = field(default_factory=list)
    diffs: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.diffs

    def expect(self, label: str, want, got) -> None:
        if want != got:
            self.diffs.append(f"{label}: expected {want}, got {got}")

    def report(self) -> str:
        out = list(self.lines)
        out += [f"  MISMATCH {d}" for d in self.diffs]
        out.append(f"{self.target}: {'PASS' if self.passed else 'FAIL'} ({self.seconds:.2f}s)")
        return "\n".join(out) + "\n"


def _yn(x) -> str:
    return {True: "yes", False: "no", None: "NA"}[x]


def minimality_by_weight(c: LinearCode, s: int) -> dict[int, set[bool]]:
    """Support weight -> set of minimality verdicts among s-subcodes of that weight."""
    out: dict[int, set[bool]] = {}
    for _first, _bases, masks in iter_support_masks(c, s):
        w = np.count_nonzero(masks, axis=1)
        ok = minimal_mask(c, s, masks)
        for wt in np.unique(w):
            out.setdefault(int(wt), set()).update(bool(x) for x in np.unique(ok[w == wt]))
    return out


def _sswd_table(r: Reproduction, c: LinearCode, weights, cells, minimal, hierarchy) -> None:
    r.lines.append("r " + "".join(f"{'A_' + str(j):>8}" for j in weights))
    got_h = []
    for s, row in cells.items():
        t = sswd(c, s)
        got_h.append(t.min_weight)
        by_w = minimality_by_weight(c, s) if s < c.k else {}
        text = []
        for j, want in zip(weights, row):
            got = t[j]
            r.expect(f"A^{s}_{j}", 0 if want is None else want, got)
            tag = ""
            if (s, j) in minimal:
                seen = by_w.get(j, set())
                r.expect(f"minimality of weight-{j} {s}-subcodes", {minimal[(s, j)]}, seen)
                tag = "m" if seen == {True} else "n" if seen == {False} else "?"
            text.append(f"{('-' if want is None and got == 0 else got)!s:>7}{tag:1}")
        r.lines.append(f"{s} " + "".join(text))
    r.expect("hierarchy", tuple(hierarchy), tuple(got_h))
    r.lines.append(f"hierarchy {tuple(got_h)}   (m = minimal, n = not minimal)")


def _t1() -> Reproduction:
    r = Reproduction("t1")
    c = paper_example("ex9_5_3")
    r.lines.append("SSWD of the [9,5,3]_2 code")
    _sswd_table(r, c, golden.T1_WEIGHTS, golden.T1_SSWD, golden.T1_MINIMAL, golden.T1_HIERARCHY)
    return r


def _t2() -> Reproduction:
    r = Reproduction("t2")
    c = paper_example("ex12_5_5")
    r.lines.append("SSWD of the [12,5,6]_5 code")
    _sswd_table(r, c, golden.T2_WEIGHTS, golden.T2_SSWD, golden.T2_MINIMAL, golden.T2_HIERARCHY)
    cd = dual(c)
    got = (cd.n, cd.k, extremal_codewords(cd).min_weight)
    r.expect("dual parameters", golden.T2_DUAL, got)
    r.lines.append(f"dual [{got[0]},{got[1]},{got[2]}]_5")
    return r


def _grid(r: Reproduction, label: str, c: LinearCode, rows, alg: str = "rank") -> None:
    rep = weight_report(c)
    r.lines.append(f"{label} [{c.n},{c.k}]_{c.q}")
    r.lines.append("s  d_s+1  D_s  s-minimal")
    for s, (dn, Ds, mn) in enumerate(rows, start=1):
        got_min = is_s_minimal(c, s, alg)[0]
        r.expect(f"{label} s={s} (d_s+1, D_s, minimal)", (dn, Ds, mn), (rep.d[s + 1], rep.D[s], got_min))
        r.lines.append(f"{s}  {rep.d[s + 1]:>5}  {rep.D[s]:>3}  {_yn(got_min)}")


def _t3() -> Reproduction:
    r = Reproduction("t3")
    c = paper_example("golay12_3")
    r.expect("golay self-dual", True, c.same_code(dual(c)))
    _grid(r, "C", c, golden.T3_BASE)
    t = 1
    rows = [(a + b * t, e + f * t, m) for (a, b), (e, f), m in golden.T3_PADDED]
    _grid(r, f"C_{t}", pad_with_simplex(c, t), rows, alg="brute")
    return r


def _params(r: Reproduction, label: str, c: LinearCode, want) -> None:
    got = (c.n, c.k, extremal_codewords(c).min_weight)
    r.expect(f"{label} parameters", tuple(want), got)


def _two_codes(target: str, table: dict) -> Reproduction:
    r = Reproduction(target)
    for name, spec in table.items():
        c = paper_example(name)
        _params(r, name, c, spec["params"])
        _grid(r, name, c, spec["rows"])
    return r


def _ex4_8() -> Reproduction:
    r = Reproduction("ex4_8")
    g = golden.EX4_8
    c = cyclic_code(CyclicSpec(g["q"], g["n"], g["exclude"]))
    ext = extremal_codewords(c)
    got = (c.n, c.k, ext.min_weight)
    r.expect("parameters", g["params"], got)
    weights = tuple(sorted(w for w in ext.distribution if w))
    r.expect("nonzero weights", g["weights"], weights)
    r.lines.append(f"cyclic [{got[0]},{got[1]},{got[2]}]_2, weights {weights}, distribution {ext.distribution}")
    for s, want in g["minimal"].items():
        got_m = is_s_minimal(c, s)[0]
        r.expect(f"{s}-minimal", want, got_m)
        r.lines.append(f"{s}-minimal: {_yn(got_m)}")
    return r


def _extension(target: str, g: dict) -> Reproduction:
    r = Reproduction(target)
    src = paper_example(g["source"])
    s = g["s"]
    rep = weight_report(src, smax=s)
    r.expect("source D_1", g["source_D1"], rep.D[1])
    r.expect(f"source d_{s}", g["source_d2"], rep.d[s])
    if "source_D2" in g:
        r.expect(f"source D_{s}", g["source_D2"], rep.D[s])
    e = ab_violating_extend(src, s)
    c = e.code
    r.expect("n'", g["n_extra"], e.n_extra)
    _params(r, "C'", c, g["params"])
    rp = weight_report(c)
    r.expect(f"d_{s}(C')", g["d2"], rp.d[s])
    r.expect(f"D_{s}(C')", g["D2"], rp.D[s])
    minimal = is_s_minimal(c, s, "brute")[0]
    r.expect(f"C' {s}-minimal (brute force)", True, minimal)
    verdict = gab_check(c, s, rp)
    r.expect("gAB verdict", GabVerdict.INCONCLUSIVE, verdict)
    r.lines.append(f"{g['source']} -> n'={e.n_extra}, C' = [{c.n},{c.k},{rp.d[1]}]_{c.q}, "
                   f"d_{s}={rp.d[s]}, D_{s}={rp.D[s]}, {s}-minimal: {_yn(minimal)}, gAB: {verdict.value}")
    return r


_RUNNERS = {
    "t1": _t1,
    "t2": _t2,
    "t3": _t3,
    "t4": lambda: _two_codes("t4", golden.T4),
    "t5": lambda: _two_codes("t5", golden.T5),
    "ex4_8": _ex4_8,
    "ex8_2": lambda: _extension("ex8_2", golden.EX8_2),
    "ex8_3": lambda: _extension("ex8_3", golden.EX8_3),
}


def reproduce(target: str) -> Reproduction:
    if target not in _RUNNERS:
        raise KeyError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    t0 = time.perf_counter()
    r = _RUNNERS[target]()
    r.seconds = time.perf_counter() - t0
    return r
