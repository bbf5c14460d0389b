"""Command line front end: ``gtkl <command> ...``.

Exit status is 0 on success, 1 when a requested verification fails, 2 for
usage errors and 3 when a resource limit stopped a check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import linalg
from .gt import normalize_and_transition
from .kl import KLTable, kl_polynomial, poly_str
from .perms import (
    chain_from_bits,
    chain_permutation,
    format_oneline,
    parse_oneline,
)
from .serialize import family_to_json, parse_shape, parse_tableau
from .tableaux import (
    TableauError,
    all_words,
    enumerate_syt,
    evacuate,
    leq,
    phi,
    rsk,
    rsk_inverse,
    sorted_by_order,
)
from .verify import Workspace, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
OUTPUT_ENV = "GTKL_OUTPUT_DIR"
MAX_DESK_N = 6


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    return int(text), int(text)


def _tab(t) -> str:
    return str(t)


def _emit(rows: list[list], fmt: str, header: list | None = None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(r[i])) for r in ([header] if header else []) + rows) for i in range(len(rows[0]))] if rows else []
    lines = []
    for r in ([header] if header else []) + rows:
        lines.append("  ".join(str(x).rjust(wd) for x, wd in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _transition_rows(tm) -> tuple[list, list[list]]:
    header = ["v \\ c"] + [_tab(t) for t in tm.order]
    rows = [[_tab(tm.phi[s])] + [str(x) for x in tm.entries[i]] for i, s in enumerate(tm.order)]
    return header, rows


def _check_shape_word(shape, b: str) -> None:
    n = sum(shape)
    if len(b) != max(n - 2, 0) or any(c not in "01" for c in b):
        raise UsageError(f"word {b!r} must be a 0/1 string of length {max(n - 2, 0)} for shape {shape}")


def cmd_verify(args) -> tuple[str, int]:
    n_min, n_max = parse_range(args.n)
    if n_min < 2 or n_max < n_min:
        raise UsageError("--n must be N or A..B with 2 <= A <= B")
    if n_max > MAX_DESK_N and not args.large:
        raise UsageError(f"n > {MAX_DESK_N} requires --large")
    shapes = None
    if args.shape:
        shape = parse_shape(args.shape)
        if not n_min <= sum(shape) <= n_max:
            raise UsageError(f"shape {shape} is not a partition of n in {args.n}")
        shapes = [shape]
    words = None
    if args.b is not None:
        if shapes:
            _check_shape_word(shapes[0], args.b)
        words = [args.b]
    reports = run_suite(n_min, n_max, shapes=shapes, words=words, jobs=args.jobs, seed=args.seed, timings=args.timings)
    summary = summarize(reports)
    out_dir = args.out or os.environ.get(OUTPUT_ENV)
    if out_dir:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        with open(path / "reports.jsonl", "w") as fh:
            for r in reports:
                fh.write(_json(r.to_dict()))
        (path / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    if args.format == "json":
        text = "".join(_json(r.to_dict()) for r in reports)
    elif args.format == "csv":
        rows = []
        for r in reports:
            if r.check != "triangularity" or "transition" not in r.payload:
                continue
            tr = r.payload["transition"]
            for i, row in enumerate(tr["entries"]):
                for j, x in enumerate(row):
                    rows.append([r.n, ",".join(map(str, r.shape)), r.word, i, j,
                                 json.dumps(tr["phi"][i][1]), json.dumps(tr["order"][j]), x])
        text = _emit(rows, "csv", ["n", "shape", "word", "row", "col", "v_label", "c_label", "entry"])
    else:
        parts = []
        for r in reports:
            label = ",".join(map(str, r.shape)) if r.shape else "-"
            word = r.word if r.word is not None else ""
            parts.append(f"{r.outcome.upper():8} {r.check:24} n={r.n} shape={label} {('b=' + word) if word else ''}".rstrip())
            if not r.passed:
                for wit in r.witnesses[:5]:
                    parts.append(f"    witness: {json.dumps(wit)}")
            if r.check == "triangularity" and "transition" in r.payload and (args.shape or r.n <= 3):
                tr = r.payload["transition"]
                header = ["v \\ c"] + ["/".join(",".join(map(str, row)) for row in t) for t in tr["order"]]
                rows = [["/".join(",".join(map(str, row)) for row in tr["phi"][i][1])] + [x.removesuffix("/1") for x in e]
                        for i, e in enumerate(tr["entries"])]
                parts.append(_emit(rows, "pretty", header).rstrip("\n"))
        oc = summary["outcomes"]
        parts.append("summary: " + ", ".join(f"{k}={v}" for k, v in oc.items()))
        text = "\n".join(parts) + "\n"
    if any(r.outcome == "fail" for r in reports):
        return text, EXIT_FAIL
    if any(r.outcome == "resource" for r in reports):
        return text, EXIT_RESOURCE
    return text, EXIT_OK


def _transition(args):
    shape = parse_shape(args.shape)
    b = args.b if args.b is not None else "0" * max(sum(shape) - 2, 0)
    _check_shape_word(shape, b)
    ws = Workspace()
    return ws.transition(shape, b), ws


def cmd_transition(args) -> tuple[str, int]:
    tm, _ = _transition(args)
    if args.format == "json":
        return _json(tm.to_dict()), EXIT_OK
    header, rows = _transition_rows(tm)
    return _emit(rows, args.format, header), EXIT_OK


def cmd_basis(args) -> tuple[str, int]:
    tm, ws = _transition(args)
    module = ws.module(tm.shape)
    fam = tm.family if not args.raw else ws.family(tm.shape, tm.word)
    if args.format == "json":
        return _json(family_to_json(fam, module.basis)), EXIT_OK
    header = ["v"] + [f"c[{_tab(t)}]" for t in module.basis]
    rows = [[_tab(t)] + [linalg.format_number(x).removesuffix("/1") for x in fam.vectors[t]] for t in module.basis]
    return _emit(rows, args.format, header), EXIT_OK


def cmd_phi(args) -> tuple[str, int]:
    shape = parse_shape(args.shape)
    _check_shape_word(shape, args.b)
    pairs = [(t, phi(shape, args.b, t)) for t in enumerate_syt(shape)]
    if args.format == "json":
        return _json([[t.to_list(), p.to_list()] for t, p in pairs]), EXIT_OK
    return _emit([[_tab(t), _tab(p)] for t, p in pairs], args.format, ["T", "phi(T)"]), EXIT_OK


def cmd_order(args) -> tuple[str, int]:
    shape = parse_shape(args.shape)
    _check_shape_word(shape, args.b)
    order = sorted_by_order(shape, args.b)
    total = all(leq(shape, args.b, s, t) or leq(shape, args.b, t, s) for s in order for t in order)
    if args.format == "json":
        return _json({"order": [t.to_list() for t in order], "total": total}), EXIT_OK
    rows = [[i, _tab(t)] for i, t in enumerate(order)]
    return _emit(rows, args.format, ["rank", "T"]) + ("" if args.format == "csv" else f"total: {total}\n"), EXIT_OK


def cmd_chain(args) -> tuple[str, int]:
    b = args.b if args.b is not None else "0" * max(args.n - 2, 0)
    if len(b) != max(args.n - 2, 0) or any(c not in "01" for c in b):
        raise UsageError(f"word must be a 0/1 string of length {args.n - 2}")
    chain = chain_from_bits(args.n, b)
    u = chain_permutation(args.n, b)
    if args.format == "json":
        return _json({"word": b, "intervals": chain.to_list(), "u": list(u)}), EXIT_OK
    if args.format == "csv":
        return _emit([[str(iv) for iv in chain.intervals] + [" ".join(map(str, u))]], "csv",
                     [f"I{m}" for m in range(1, args.n)] + ["u"]), EXIT_OK
    return "intervals: " + ",".join(str(iv) for iv in chain.intervals) + "\nu = " + " ".join(map(str, u)) + "\n", EXIT_OK


def cmd_klpoly(args) -> tuple[str, int]:
    x, w = parse_oneline(args.x), parse_oneline(args.w)
    if len(x) != len(w):
        raise UsageError("x and w must have the same rank")
    p = kl_polynomial(x, w, KLTable())
    if args.format == "json":
        return _json({"x": list(x), "w": list(w), "coefficients": list(p)}), EXIT_OK
    if args.format == "csv":
        return _emit([[format_oneline(x), format_oneline(w)] + list(p)], "csv"), EXIT_OK
    return poly_str(p) + "\n", EXIT_OK


def cmd_evac(args) -> tuple[str, int]:
    t = parse_tableau(args.tableau)
    e = evacuate(t)
    if args.format == "json":
        return _json(e.to_list()), EXIT_OK
    return _tab(e) + "\n", EXIT_OK


def cmd_rsk(args) -> tuple[str, int]:
    if args.perm:
        p, q = rsk(parse_oneline(args.perm))
        if args.format == "json":
            return _json({"P": p.to_list(), "Q": q.to_list()}), EXIT_OK
        return f"P = {p}\nQ = {q}\n", EXIT_OK
    if not (args.p and args.q):
        raise UsageError("rsk needs --perm, or both --p and --q")
    w = rsk_inverse(parse_tableau(args.p), parse_tableau(args.q))
    if args.format == "json":
        return _json(list(w)), EXIT_OK
    return " ".join(map(str, w)) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtkl", description="KL and generalized GT bases of Specht modules")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape=False, word=False):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
        if shape:
            p.add_argument("--shape", required=True, help="comma separated parts, e.g. 3,2")
        if word:
            p.add_argument("--b", required=True, help="binary word of length n-2")
        return p

    p = common(sub.add_parser("verify", help="run the verification suite"))
    p.add_argument("--n", required=True, help="rank N or range A..B")
    p.add_argument("--shape")
    p.add_argument("--b")
    p.add_argument("--out", help=f"output directory (default ${OUTPUT_ENV})")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="record timings in reports")
    p.add_argument("--large", action="store_true", help=f"allow n > {MAX_DESK_N}")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("basis", help="print a normalized GT basis in KL coordinates"), shape=True)
    p.add_argument("--b")
    p.add_argument("--raw", action="store_true", help="provisional primitive scaling")
    p.set_defaults(func=cmd_basis)

    p = common(sub.add_parser("transition", help="print the KL-to-GT transition matrix"), shape=True)
    p.add_argument("--b")
    p.set_defaults(func=cmd_transition)

    common(sub.add_parser("phi", help="print the relabeling bijection"), shape=True, word=True).set_defaults(func=cmd_phi)
    common(sub.add_parser("order", help="print the order on tableaux"), shape=True, word=True).set_defaults(func=cmd_order)

    p = common(sub.add_parser("chain", help="print a chain and its permutation"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b")
    p.set_defaults(func=cmd_chain)

    p = common(sub.add_parser("klpoly", help="print a KL polynomial"))
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_klpoly)

    p = common(sub.add_parser("evac", help="evacuate a tableau"))
    p.add_argument("--tableau", required=True, help='rows separated by "/", e.g. 1,3/2')
    p.set_defaults(func=cmd_evac)

    p = common(sub.add_parser("rsk", help="RSK of a permutation, or its inverse"))
    p.add_argument("--perm")
    p.add_argument("--p")
    p.add_argument("--q")
    p.set_defaults(func=cmd_rsk)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (UsageError, TableauError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"gtkl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError:
        print(f"gtkl {args.command}: resource limit exceeded", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
