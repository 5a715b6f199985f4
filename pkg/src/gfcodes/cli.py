"""Command-line interface: analyze, construct, blocking, reproduce.

Exit codes: 0 ok, 1 reproduction or verification mismatch, 2 input error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .blocking import bounds_for, blocking_bounds, is_cutting_s_blocking, is_t_fold_s_blocking, read_pointset
from .code import LinearCode, extremal_codewords, format_code_file, read_code_file
from .constructions import (
    EXAMPLE_NAMES,
    CyclicSpec,
    SolomonStifflerSpec,
    ab_violating_extend,
    cyclic_code,
    pad_with_simplex,
    paper_example,
    punctured_simplex,
    simplex,
    solomon_stiffler,
)
from .ghw import WeightReport, sswd, sswd_csv
from .minimality import is_s_minimal, minimality_profile
from .reproduce import TARGETS, reproduce
from .subspace import BudgetExceeded

OK, MISMATCH, INPUT_ERROR, BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _load_code(ref: str) -> LinearCode:
    """A code file path, or the name of a registry example."""
    if Path(ref).exists():
        try:
            return read_code_file(ref)
        except ValueError as exc:
            raise InputError(f"{ref}: {exc}") from exc
    if ref in EXAMPLE_NAMES:
        return paper_example(ref)
    raise InputError(f"{ref}: no such file or example ({', '.join(EXAMPLE_NAMES)})")


# -- analyze --------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    c = _load_code(args.code)
    smax = c.k if args.smax is None else min(args.smax, c.k)
    t0 = time.perf_counter()
    rep = WeightReport(c.n, c.k, c.q)
    tables = []
    over = []
    for s in range(1, min(smax + 1, c.k) + 1):
        try:
            t = sswd(c, s, workers=args.workers)
        except BudgetExceeded as exc:
            over.append(f"s={s}: {exc}")
            continue
        rep.d[s], rep.D[s], rep.strategy[s] = t.min_weight, t.max_weight, t.strategy
        if s <= smax:
            tables.append(t)
    prof = minimality_profile(c, alg=args.alg, report=rep)
    prof.rows = [r for r in prof.rows if r.s <= smax]
    over += [f"s={r.s}: {r.note}" for r in prof.rows if r.note]
    ext = None
    try:
        ext = extremal_codewords(c)
    except BudgetExceeded as exc:
        over.append(f"codewords: {exc}")
    elapsed = time.perf_counter() - t0

    out = sys.stdout
    if args.format == "csv":
        out.write(prof.to_csv())
        if args.sswd:
            out.write("\n" + sswd_csv(tables))
    else:
        d = ext.min_weight if ext else "?"
        label = f" {c.name}" if c.name else ""
        out.write(f"code{label}: [{c.n},{c.k},{d}]_{c.q}\n")
        out.write(f"{'s':>2} {'d_s':>6} {'D_s':>6} {'d_s+1':>6} {'minimal':>8}  condition\n")
        for s in range(1, smax + 1):
            row = next((r for r in prof.rows if r.s == s), None)
            verdict = "-" if row is None else {True: "yes", False: "no", None: "NA"}[row.minimal]
            cond = row.condition.value if row is not None and row.condition else "-"
            out.write(f"{s:>2} {_cell(rep.d.get(s)):>6} {_cell(rep.D.get(s)):>6} "
                      f"{_cell(rep.d.get(s + 1)):>6} {verdict:>8}  {cond}\n")
        if args.sswd:
            for t in tables:
                cells = " ".join(f"{j}:{v}" for j, v in t.nonzero.items())
                out.write(f"A^{t.s}: {cells}\n")
        if args.timing:
            out.write(f"elapsed {elapsed:.2f}s\n")
    for msg in dict.fromkeys(over):
        print(f"budget exceeded at {msg}", file=sys.stderr)
    return BUDGET if over else OK


def _cell(x) -> str:
    return "NA" if x is None else str(x)


# -- construct ----------------------------------------------------------------------

def _build(args):
    """Return (code, levels to verify, algorithm)."""
    fam = args.family
    if fam == "simplex":
        c = simplex(args.q, args.k)
        return c, sorted(c.guaranteed_minimal), "rank"
    if fam == "punctured-simplex":
        c = punctured_simplex(args.q, args.k, args.coords or [])
        return c, sorted(c.guaranteed_minimal), "rank"
    if fam == "ss":
        c = solomon_stiffler(SolomonStifflerSpec(args.q, args.k, tuple(args.u)))
        return c, sorted(c.guaranteed_minimal), "rank"
    if fam == "pad":
        base = _load_code(args.code or args.example)
        return pad_with_simplex(base, args.t), [], "rank"
    if fam == "abx":
        base = _load_code(args.code or args.example)
        e = ab_violating_extend(base, args.s, strict=args.strict)
        return e.code, [args.s], "brute"
    if fam == "cyclic":
        return cyclic_code(CyclicSpec(args.q, args.n, tuple(args.exclude))), [], "rank"
    if fam == "example":
        return paper_example(args.name), [], "rank"
    raise InputError(f"unknown family {fam}")


def cmd_construct(args) -> int:
    try:
        c, levels, alg = _build(args)
    except (ValueError, KeyError, IndexError) as exc:
        raise InputError(str(exc)) from exc
    if args.verify:
        bad = [s for s in levels if not is_s_minimal(c, s, alg)[0]]
        if bad:
            print(f"verification failed: not s-minimal for s in {bad}", file=sys.stderr)
            return MISMATCH
    if args.emit == "matrix":
        text = "\n".join(" ".join(str(v) for v in row) for row in c.source.entries.tolist()) + "\n"
    elif args.emit == "report":
        ext = extremal_codewords(c)
        text = (f"{c.name or 'code'}: [{c.n},{c.k},{ext.min_weight}]_{c.q}\n"
                f"weights: {ext.distribution}\n")
        if levels and args.family != "abx":
            text += f"guaranteed s-minimal for s in {levels}\n"
    else:
        d = extremal_codewords(c).min_weight
        text = format_code_file(c, comment=f"{c.name or 'code'} [{c.n},{c.k},{d}]_{c.q}")
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


# -- blocking -------------------------------------------------------------------------

def cmd_blocking(args) -> int:
    if args.action == "bounds":
        if args.points:
            b = _read_points(args.points)
            rep = bounds_for(b, args.t, args.s)
        else:
            if None in (args.k, args.q):
                raise InputError("bounds needs --points, or --k and --q")
            try:
                rep = blocking_bounds(args.t, args.s, args.k, args.q, spanning=not args.not_spanning)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        print("\n".join(rep.lines()))
        return OK
    if not args.points:
        raise InputError("verify needs --points")
    b = _read_points(args.points)
    try:
        if args.cutting:
            v = is_cutting_s_blocking(b, args.s)
            what = f"cutting {args.s}-blocking"
        else:
            v = is_t_fold_s_blocking(b, args.t, args.s)
            what = f"{args.t}-fold {args.s}-blocking"
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(f"{len(b)} points in PG({b.k - 1},{b.ctx.q}): {what}: {'true' if v.holds else 'false'}")
    if not v.holds:
        noun = "rank" if args.cutting else "points"
        print(f"witness: subspace spanned by {v.witness.rows.tolist()} ({noun} of B inside: {v.met})")
    return OK


def _read_points(path: str):
    try:
        return read_pointset(path)
    except (OSError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


# -- reproduce ------------------------------------------------------------------------

def cmd_reproduce(args) -> int:
    targets = TARGETS if args.target == "all" else (args.target,)
    status = OK
    for t in targets:
        r = reproduce(t)
        sys.stdout.write(r.report())
        if not r.passed:
            status = MISMATCH
    return status


# -- parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="weight hierarchy, D_s and s-minimality of a code")
    a.add_argument("code", help="code file (q k n header, then k rows) or example name")
    a.add_argument("--smax", type=int)
    a.add_argument("--sswd", action="store_true", help="also print subcode support weight distributions")
    a.add_argument("--alg", choices=("rank", "brute"), default="rank")
    a.add_argument("--workers", type=int, default=1)
    a.add_argument("--format", choices=("text", "csv"), default="text")
    a.add_argument("--timing", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a code and emit it")
    c.add_argument("family", choices=("simplex", "punctured-simplex", "ss", "pad", "abx", "cyclic", "example"))
    c.add_argument("--q", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--u", type=_ints, help="Solomon-Stiffler dimensions, e.g. 1,2")
    c.add_argument("--coords", type=_ints, help="0-based simplex columns to delete")
    c.add_argument("--exclude", type=_ints, help="coset leaders that are not zeros of the code")
    c.add_argument("--t", type=int, default=1)
    c.add_argument("--s", type=int, default=1)
    c.add_argument("--strict", action="store_true", help="abx: also require the ratio hypothesis")
    c.add_argument("--code", help="input code file (pad, abx)")
    c.add_argument("--example", help="input example name (pad, abx)")
    c.add_argument("--name", help="example name (example)")
    c.add_argument("--verify", action="store_true", help="check the guaranteed s-minimality before writing")
    c.add_argument("--emit", choices=("code-file", "matrix", "report"), default="code-file")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    b = sub.add_parser("blocking", help="verify blocking sets or print lower bounds")
    b.add_argument("action", choices=("verify", "bounds"))
    b.add_argument("--points", help="point-set file (q k m header, then m points)")
    b.add_argument("--t", type=int, default=1)
    b.add_argument("--s", type=int, default=1)
    b.add_argument("--k", type=int)
    b.add_argument("--q", type=int)
    b.add_argument("--cutting", action="store_true", help="verify the cutting property instead")
    b.add_argument("--not-spanning", action="store_true", help="bounds: the complement does not span")
    b.set_defaults(func=cmd_blocking)

    r = sub.add_parser("reproduce", help="recompute a published table and diff it")
    r.add_argument("target", choices=TARGETS + ("all",))
    r.set_defaults(func=cmd_reproduce)
    return p


_REQUIRED = {
    "simplex": ("q", "k"),
    "punctured-simplex": ("q", "k"),
    "ss": ("q", "k", "u"),
    "cyclic": ("q", "n", "exclude"),
    "example": ("name",),
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            missing = [f"--{x}" for x in _REQUIRED.get(args.family, ()) if getattr(args, x) is None]
            if args.family in ("pad", "abx") and not (args.code or args.example):
                missing.append("--code or --example")
            if missing:
                raise InputError(f"{args.family} needs {', '.join(missing)}")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET


if __name__ == "__main__":
    sys.exit(main())
