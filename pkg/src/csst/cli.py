"""Command-line interface: ``csst <command> ...``; every command prints JSON.

Exit codes: 0 success (or "is a CSS-T pair"), 1 "not a pair" / trivial
pair, 2 input or domain error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from pathlib import Path

from . import __version__
from .codes import DEFAULT_BUDGET, BinaryCode
from .core import (
    maximality_flags,
    pair_family_dmin2,
    quantum_params,
    scaling_exponent,
    verify_csst,
)
from .cyclic import (
    CosetSet,
    coset_leaders,
    coset_of,
    construct,
    csst_cyclic_check,
    cyc_maximality,
    greedy_search,
    minimal_cosets,
)
from .errors import CsstError, InconsistencyError, StructuralError
from .field import field_new
from .gf2 import BinaryMatrix
from .tables import DEFAULT_SEED, build_table, format_table

_ROW = re.compile(r"[01]( ?[01])*")


class MatrixFileError(StructuralError):
    def __init__(self, path: str, line: int, col: int, msg: str):
        super().__init__(f"{path}:{line}:{col}: {msg}")
        self.line, self.col = line, col


def parse_matrix_text(text: str, path: str = "<text>") -> BinaryMatrix:
    """Rows of ``0``/``1`` (single spaces allowed), ``#`` comments and blank lines ignored."""
    rows: list[str] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if not _ROW.fullmatch(line):
            col = next(
                (i + 1 for i, ch in enumerate(line) if ch not in "01 " or (ch == " " and (i == 0 or line[i - 1] == " "))),
                len(line),
            )
            raise MatrixFileError(path, lineno, col, f"unexpected character {line[col - 1]!r}")
        bits = line.replace(" ", "")
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise MatrixFileError(path, lineno, 1, f"row has {len(bits)} entries, expected {width}")
        rows.append(bits)
    if not rows:
        raise MatrixFileError(path, 1, 1, "no matrix rows found")
    return BinaryMatrix.from_rows(rows)


def read_matrix(path: str) -> tuple[BinaryMatrix, str]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise StructuralError(f"{path}: {exc.strerror}") from None
    return parse_matrix_text(data.decode("utf-8", errors="replace"), path), hashlib.sha256(data).hexdigest()


def _params_doc(qp) -> dict:
    return {
        "n": qp.n,
        "k": qp.k,
        "d_lower": qp.d_lower,
        "d_upper": qp.d_upper,
        "d_exact": qp.d_exact,
        "witness_weight": qp.witness.weight if qp.witness is not None else None,
        "witness": str(qp.witness) if qp.witness is not None else None,
        "method": qp.method,
    }


def _gamma(qp) -> float | None:
    if qp.k >= 1 and qp.d_exact and qp.d_lower >= 2:
        return round(scaling_exponent(qp.n, qp.k, qp.d_lower), 3)
    return None


def pair_report(C1: BinaryCode, C2: BinaryCode, *, cross_check=False, maximality=True, seed=DEFAULT_SEED,
                budget=DEFAULT_BUDGET, d_lower=None, inputs=None) -> dict:
    rep = verify_csst(C1, C2, cross_check=cross_check)
    doc = {
        "inputs": dict(inputs or {}, n=C1.n, k1=C1.k, k2=C2.k),
        "css_t": {
            "status": rep.status,
            "is_pair": rep.is_pair,
            "conditions": {str(k): v for k, v in rep.condition_results.items()},
            "failed_condition": rep.failed_condition,
            "witness": str(rep.failing_witness) if rep.failing_witness is not None else None,
        },
        "params": None,
        "maximality": None,
        "triorthogonal_c2": rep.triorthogonal_c2,
        "gamma": None,
        "seed": seed,
        "budget": budget,
        "tool_version": __version__,
    }
    if rep.is_pair:
        qp = quantum_params(C1, C2, d_lower, budget, seed)
        doc["params"] = _params_doc(qp)
        doc["gamma"] = _gamma(qp)
        if maximality:
            c1, c2, full = maximality_flags(C1, C2)
            doc["maximality"] = {"in_c1": c1, "in_c2": c2, "full": full}
    return doc


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_verify(args) -> int:
    G1, h1 = read_matrix(args.c1)
    G2, h2 = read_matrix(args.c2)
    if G1.n_cols != G2.n_cols:
        raise StructuralError(f"length mismatch: {args.c1} has {G1.n_cols} columns, {args.c2} has {G2.n_cols}")
    doc = pair_report(
        BinaryCode(G1), BinaryCode(G2), cross_check=args.cross_check, maximality=args.maximality,
        seed=args.seed, budget=args.budget, inputs={"c1_sha256": h1, "c2_sha256": h2},
    )
    _emit(doc)
    return 0 if doc["css_t"]["is_pair"] else 1


def cmd_cosets(args) -> int:
    if args.n < 1 or args.n % 2 == 0:
        raise StructuralError(f"n must be odd, got {args.n}")
    _emit({"n": args.n, "cosets": [{"leader": min(c.elems), "elements": c.sorted()} for c in minimal_cosets(args.n)],
           "tool_version": __version__})
    return 0


def _parse_leaders(text: str, n: int, extended: bool) -> CosetSet:
    valid = coset_leaders(n)
    out = CosetSet.empty(n, extended)
    for tok in filter(None, (t.strip() for t in text.split(","))):
        try:
            a = int(tok)
        except ValueError:
            raise StructuralError(f"bad leader {tok!r}") from None
        if a == 0 and extended:
            out = out | coset_of(n, 0, True)
            continue
        if a not in valid:
            extra = "0, " if extended else ""
            raise StructuralError(f"{a} is not a coset leader mod {n}; valid leaders: {extra}{', '.join(map(str, valid))}")
        out = out | coset_of(n, a, extended)
    return out


def _coset_pair_doc(I1: CosetSet, I2: CosetSet, construct_codes: bool, seed: int, budget: int) -> tuple[dict, bool]:
    ok, params = csst_cyclic_check(I1, I2)
    s = (I1.n + 1).bit_length() - 1
    doc = {
        "inputs": {"n": I1.n, "extended": I1.extended, "I1": I1.sorted(), "I2": I2.sorted()},
        "sums": {"I1+I1": (I1 + I1).sorted(), "I1+I2": (I1 + I2).sorted(), "I1+I1+I2": (I1 + I1 + I2).sorted()},
        "criterion": {"I2_in_I1": I2 <= I1, "n_not_in_triple_sum": I1.n not in (I1 + I1 + I2), "ok": ok},
        "params": {"n": params.n, "k": params.k, "d_lower": params.d_lower},
        "maximality": None,
        "seed": seed,
        "budget": budget,
        "tool_version": __version__,
    }
    if ok and not I1.extended and len(I2):
        m = cyc_maximality(I1, I2)
        doc["maximality"] = {"in_c1": m.maximal_in_c1, "in_c2": m.maximal_in_c2, "full": m.maximal}
    if construct_codes and ok and len(I2):
        F = field_new(max(s, 2))
        C1, C2 = construct(I1, F), construct(I2, F)
        doc["constructed"] = pair_report(C1, C2, maximality=True, seed=seed, budget=budget, d_lower=params.d_lower)
    return doc, ok


def cmd_cyclic_pair(args) -> int:
    n = (1 << args.s) - 1
    I1 = _parse_leaders(args.i1, n, args.extended)
    I2 = _parse_leaders(args.i2, n, args.extended)
    if args.with_n:
        I1 = I1 | coset_of(n, n, args.extended)
    if args.with_0:
        if not args.extended:
            raise StructuralError("--with-0 needs --extended")
        I1 = I1 | coset_of(n, 0, True)
    doc, ok = _coset_pair_doc(I1, I2, not args.no_construct, args.seed, args.budget)
    _emit(doc)
    return 0 if ok else 1


def cmd_greedy(args) -> int:
    if not 4 <= args.s <= 10:
        raise StructuralError(f"s={args.s} outside the supported range 4..10")
    g = greedy_search(args.s, args.t, args.extended)
    doc, ok = _coset_pair_doc(g.I1, g.I2, args.construct, args.seed, args.sharpness_budget)
    doc["greedy"] = {"s": g.s, "t": g.t, "extended": g.extended, "skipped_leaders": list(g.skipped)}
    _emit(doc)
    return 0 if ok else 1


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise StructuralError(f"bad range {text!r}; expected A..B")
    lo = int(m.group(1))
    return lo, int(m.group(2) or lo)


def cmd_tables(args) -> int:
    lo, hi = _parse_range(args.s_range)
    rows = build_table(args.which, lo, hi, budget=args.budget, seed=args.seed)
    summary = {
        "table": args.which,
        "s_range": [lo, hi],
        "seed": args.seed,
        "budget": args.budget,
        "tool_version": __version__,
        "rows": [r.to_dict() for r in rows],
    }
    text = format_table(rows)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for r in rows:
            tag = f"{r.rm_orders[0]}-{r.rm_orders[1]}" if r.rm_orders else f"t{r.t}"
            (out / f"table{args.which}_{r.family}_s{r.s}_{tag}.json").write_text(json.dumps(r.to_dict(), indent=2) + "\n")
        (out / f"table{args.which}_summary.json").write_text(json.dumps(summary, indent=2) + "\n")
        (out / f"table{args.which}_summary.txt").write_text(text + "\n")
    if args.text:
        print(text)
    else:
        _emit(summary)
    return 0


def cmd_gamma(args) -> int:
    _emit({"n": args.n, "k": args.k, "d": args.d, "gamma": round(scaling_exponent(args.n, args.k, args.d), 3),
           "tool_version": __version__})
    return 0


def cmd_pairfamily_dmin2(args) -> int:
    C1, C2 = pair_family_dmin2(args.n)
    doc = pair_report(C1, C2, maximality=False, inputs={"family": "dmin2"})
    doc["c1"] = [str(r) for r in C1.rows()]
    doc["c2"] = [str(r) for r in C2.rows()]
    _emit(doc)
    return 0 if doc["css_t"]["is_pair"] else 1


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csst", description="CSS-T pairs of binary codes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def search_opts(sp, budget_flag="--budget"):
        sp.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="RNG seed (default 0xC557)")
        sp.add_argument(budget_flag, dest="sharpness_budget" if budget_flag != "--budget" else "budget",
                        type=int, default=DEFAULT_BUDGET, help="information-set iterations")

    sp = sub.add_parser("verify", help="verify a pair given as matrix files")
    sp.add_argument("--c1", required=True)
    sp.add_argument("--c2", required=True)
    sp.add_argument("--cross-check", action="store_true", help="also evaluate the equivalent conditions")
    sp.add_argument("--maximality", action="store_true", help="report the poset maximality flags")
    search_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cosets", help="list minimal cyclotomic cosets mod n")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("cyclic-pair", help="check a pair of coset unions")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--i1", required=True, help="comma-separated coset leaders")
    sp.add_argument("--i2", required=True, help="comma-separated coset leaders")
    sp.add_argument("--with-n", action="store_true", help="adjoin {n} to I1")
    sp.add_argument("--with-0", action="store_true", help="adjoin {0} to I1 (extended)")
    sp.add_argument("--no-construct", action="store_true", help="skip building the matrices")
    search_opts(sp)
    sp.set_defaults(func=cmd_cyclic_pair)

    sp = sub.add_parser("greedy", help="greedy coset selection")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--construct", action="store_true", help="build, re-verify and search for sharpness")
    search_opts(sp, "--sharpness-budget")
    sp.set_defaults(func=cmd_greedy)

    sp = sub.add_parser("tables", help="regenerate a parameter table")
    sp.add_argument("--which", type=int, choices=(1, 2), required=True)
    sp.add_argument("--s-range", default="7..10")
    sp.add_argument("--out", help="directory for per-row and summary reports")
    sp.add_argument("--text", action="store_true", help="print the text summary instead of JSON")
    search_opts(sp)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("gamma", help="scaling exponent log(n/k)/log(d)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("pairfamily-dmin2", help="the [[n, n/2-1, 2]] family")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_pairfamily_dmin2)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError:
        raise
    except (CsstError, ValueError) as exc:
        print(f"csst: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
