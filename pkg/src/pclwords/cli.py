"""Command-line driver.

    pclwords bwt apartment
    pclwords factorize acbcbbcbc
    pclwords verify --claim prop2 --max-len 12 --format json

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Callable, Optional

from . import verification as V
from .bwt import bwt, clustering_report, is_perfectly_clustering
from .factorization import (
    general_palindromic_factorization,
    is_pcl,
    is_pcl_via_bwt,
    palindromic_special_factorization,
    product_of_two_palindromes,
)
from .morphisms import decompose, witness_from_directive
from .palindromes import directive_of, pal, palindromic_closure
from .words import ABC, AlphabetError, OrderedAlphabet, as_alphabet, is_lyndon

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# per-word subcommands: each returns (record, text line)


def _bwt(w, alphabet, args):
    b = bwt(w, alphabet)
    return {"word": w, "bwt": b}, b


def _cluster(w, alphabet, args):
    r = clustering_report(w, alphabet)
    rec = {
        "word": w,
        "bwt": r.bwt,
        "runs": [[x, n] for x, n in r.runs],
        "permutation": r.permutation_string,
        "perfect": r.perfect,
    }
    runs = " ".join(f"{x}{n}" for x, n in r.runs)
    text = f"{r.bwt}  runs={runs}  permutation={r.permutation_string or '-'}  perfect={str(r.perfect).lower()}"
    return rec, text


def _pal(u, alphabet, args):
    p = pal(u)
    return {"directive": u, "pal": p}, p


def _directive(w, alphabet, args):
    u = directive_of(w)
    return {"word": w, "directive": u}, "-" if u is None else (u or "ε")


def _closure(w, alphabet, args):
    c = palindromic_closure(w)
    return {"word": w, "closure": c}, c


def _factorize(w, alphabet, args):
    if set(w) == set("abc") and alphabet.symbols == "abc":
        f = palindromic_special_factorization(w)
    else:
        f = general_palindromic_factorization(w, alphabet)
    rec = {
        "word": w,
        "separators": None if f is None else list(f.separators),
        "parts": None if f is None else list(f.parts),
        "factorization": None if f is None else str(f),
    }
    return rec, "no palindromic special factorization" if f is None else str(f)


def _check(w, alphabet, args):
    split = product_of_two_palindromes(w)
    f = palindromic_special_factorization(w) if set(w) == set("abc") else None
    rec = {
        "word": w,
        "pcl": is_pcl(w),
        "pcl_via_bwt": is_pcl_via_bwt(w),
        "lyndon": is_lyndon(w, ABC),
        "perfectly_clustering": is_perfectly_clustering(w, ABC),
        "palindrome_pair": None if split is None else [split.left, split.right],
        "factorization": None if f is None else str(f),
    }
    text = f"{w}: pcl={str(rec['pcl']).lower()} pcl_via_bwt={str(rec['pcl_via_bwt']).lower()}"
    return rec, text


def _membership(w, alphabet, args):
    v = V.membership(args.side, w, args.max_len)
    rec = v.to_dict()
    if v.status is V.Status.MEMBER:
        text = f"{w} in {v.side.value}: member, witness {v.witness}"
    elif v.status is V.Status.NON_MEMBER:
        text = f"{w} in {v.side.value}: not a member, factors {{{', '.join(sorted(v.certificate))}}}"
    else:
        text = f"{w} in {v.side.value}: unknown up to length {v.bound}"
    return rec, text


def _decompose(w, alphabet, args):
    found = decompose(w)
    rec = {
        "word": w,
        "automorphism": None if found is None else found[0],
        "preimage": None if found is None else found[1],
    }
    text = "no decomposition" if found is None else f"{found[0]}({found[1]}) = {w}"
    return rec, text


def _witness(u, alphabet, args):
    side = V.Side(args.side)
    wit = witness_from_directive(u) if side is V.Side.P1 else V.p2_witness_from_directive(u)
    f = palindromic_special_factorization(wit)
    rec = {"directive": u, "side": side.value, "pal": pal(u), "witness": wit, "factorization": str(f)}
    return rec, f"{wit}  {f}"


WORD_COMMANDS: dict[str, tuple[Callable, bool, str]] = {
    # name: (handler, ternary only, help)
    "bwt": (_bwt, False, "Burrows-Wheeler transform"),
    "cluster": (_cluster, False, "transform runs, clustering permutation, perfect flag"),
    "pal": (_pal, False, "iterated palindrome of a directive word"),
    "directive": (_directive, False, "directive word of an iterated palindrome"),
    "closure": (_closure, False, "right palindromic closure"),
    "factorize": (_factorize, False, "palindromic special factorization"),
    "check": (_check, True, "both perfectly clustering Lyndon classifiers"),
    "membership": (_membership, True, "bounded membership of a palindrome in P1 or P2"),
    "decompose": (_decompose, True, "shorter preimage under one of the four automorphisms"),
    "witness": (_witness, True, "perfectly clustering Lyndon word built from a directive word"),
}


# ---------------------------------------------------------------------------
# output


def _csv(records: list[dict]) -> str:
    buf = io.StringIO()
    if not records:
        return ""
    fields = list(records[0])
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: _csv_cell(v) for k, v in rec.items()})
    return buf.getvalue()


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_cell(x) if not isinstance(x, (list, tuple)) else "".join(map(str, x)) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return v


def dump_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# input


def _read_words(args, alphabet: Optional[OrderedAlphabet]) -> list[tuple[str, str]]:
    """``(label, word)`` pairs from the positional words or ``--file``."""
    items = []
    if args.file is not None:
        try:
            if args.file == "-":
                lines = sys.stdin.read().splitlines()
            else:
                with open(args.file, encoding="utf-8") as fh:
                    lines = fh.read().splitlines()
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(f"cannot read {args.file}: {exc}") from exc
        for n, line in enumerate(lines, 1):
            line = line.rstrip()
            if not line or line.startswith("#"):
                continue
            items.append((f"line {n}", line))
    items += [(f"word {w!r}", w) for w in args.words]
    if not items:
        raise InputError("no input words; pass words as arguments or use --file")
    if alphabet is not None:
        for label, w in items:
            try:
                alphabet.word(w)
            except AlphabetError as exc:
                raise InputError(f"{label}: {exc}") from exc
    return items


def _alphabet_for(args, ternary: bool) -> Optional[OrderedAlphabet]:
    if ternary:
        if args.alphabet not in (None, "abc"):
            raise InputError(f"{args.command} works over the alphabet 'abc' only, got {args.alphabet!r}")
        return ABC
    if args.alphabet is None:
        return None
    try:
        return OrderedAlphabet(args.alphabet)
    except AlphabetError as exc:
        raise InputError(str(exc)) from exc


def _run_words(args, out) -> int:
    handler, ternary, _ = WORD_COMMANDS[args.command]
    alphabet = _alphabet_for(args, ternary)
    items = _read_words(args, alphabet)
    records, lines = [], []
    start = time.perf_counter()
    for label, w in items:
        try:
            rec, text = handler(w, alphabet or as_alphabet(None, w), args)
        except ValueError as exc:
            raise InputError(f"{label}: {exc}") from exc
        records.append(rec)
        lines.append(text)
    elapsed = (time.perf_counter() - start) * 1000
    if args.format == "json":
        bound = args.max_len if args.command == "membership" else None
        out.write(dump_json({
            "subcommand": args.command,
            "bound": bound,
            "status": "ok",
            "results": records,
            "stats": {"words_checked": len(records)},
            "timing": {"elapsed_ms": round(elapsed, 3)},
        }))
    elif args.format == "csv":
        out.write(_csv(records))
    else:
        for line in lines:
            out.write(line + "\n")
    return EXIT_OK


def _run_enumerate(args, out) -> int:
    _alphabet_for(args, True)
    start = time.perf_counter()
    cat = V.enumerate_pcl(args.max_len, args.workers)
    elapsed = (time.perf_counter() - start) * 1000
    records = [
        {"word": w, "pi1": f.pi1, "pi2": f.pi2, "factorization": str(f)}
        for w, f in cat.entries
    ]
    if args.format == "json":
        out.write(dump_json({
            "subcommand": "enumerate",
            "bound": args.max_len,
            "status": "ok",
            "results": records,
            "stats": {"words_checked": len(records)},
            "timing": {"elapsed_ms": round(elapsed, 3)},
        }))
    elif args.format == "csv":
        out.write(_csv(records))
    else:
        for rec in records:
            out.write(f"{rec['word']}  {rec['factorization']}\n")
    return EXIT_OK


def _run_sets(args, out) -> int:
    _alphabet_for(args, True)
    start = time.perf_counter()
    p1, p2 = V.compute_sets(V.enumerate_pcl(args.max_len, args.workers))
    elapsed = (time.perf_counter() - start) * 1000
    records = []
    for s in (p1, p2):
        for p in sorted(s.elements, key=lambda p: (len(p), p)):
            records.append({"side": s.side.value, "palindrome": p, "witness": s.elements[p]})
    if args.format == "json":
        out.write(dump_json({
            "subcommand": "sets",
            "bound": args.max_len,
            "status": "ok",
            "results": records,
            "stats": {"words_checked": len(records)},
            "timing": {"elapsed_ms": round(elapsed, 3)},
        }))
    elif args.format == "csv":
        out.write(_csv(records))
    else:
        for rec in records:
            out.write(f"{rec['side']}  {rec['palindrome'] or 'ε'}  {rec['witness']}\n")
    return EXIT_OK


def _run_verify(args, out) -> int:
    _alphabet_for(args, True)
    if args.claim is None:
        raise InputError("verify needs --claim (one of: all, " + ", ".join(V.CLAIMS) + ")")
    claims = list(V.CLAIMS) if args.claim == "all" else [args.claim]
    unknown = [c for c in claims if c not in V.CLAIMS]
    if unknown:
        raise InputError(f"unknown claim {unknown[0]!r}; expected one of: all, " + ", ".join(V.CLAIMS))
    reports = [V.verify_claim(c, args.max_len, args.workers, args.seed) for c in claims]
    failed = any(r.status == "counterexample" for r in reports)
    if args.format == "json":
        dicts = [dict(r.to_dict(), subcommand="verify") for r in reports]
        if len(dicts) == 1:
            out.write(dump_json(dicts[0]))
        else:
            statuses = {r.status for r in reports}
            status = "counterexample" if failed else ("pass" if statuses == {"pass"} else "unknown")
            out.write(dump_json({
                "subcommand": "verify",
                "claim": "all",
                "bound": args.max_len,
                "status": status,
                "results": dicts,
                "stats": {"words_checked": sum(r.words_checked for r in reports)},
                "timing": {"elapsed_ms": round(sum(r.elapsed_ms for r in reports), 3)},
            }))
    elif args.format == "csv":
        out.write(_csv([
            {
                "claim": r.claim,
                "bound": r.bound,
                "status": r.status,
                "counterexamples": r.counterexamples,
                "words_checked": r.words_checked,
            }
            for r in reports
        ]))
    else:
        for r in reports:
            out.write(f"{r.claim}  bound={r.bound}  status={r.status}  checked={r.words_checked}\n")
            for w in r.counterexamples:
                out.write(f"  counterexample: {w}\n")
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--alphabet", default=None,
                        help="ordered letters, e.g. 'abc' (default: code point order of the word)")
    common.add_argument("--file", default=None, help="one word per line; '-' reads stdin")
    common.add_argument("--max-len", type=int, default=V.DEFAULT_BOUND, help="length bound")
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="pclwords", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, _, help_) in WORD_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("words", nargs="*")
        if name in ("membership", "witness"):
            p.add_argument("--side", choices=("P1", "P2"), default="P1")
    sub.add_parser("enumerate", parents=[common], help="perfectly clustering Lyndon words up to --max-len")
    sub.add_parser("sets", parents=[common], help="palindromes in P1 and P2 up to --max-len")
    p = sub.add_parser("verify", parents=[common], help="bounded check of a claim")
    p.add_argument("--claim", default=None)
    p.add_argument("--seed", type=int, default=0, help="seed for sampled claims")
    return parser


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.max_len < 1:
            raise InputError(f"--max-len must be at least 1, got {args.max_len}")
        if args.workers < 1:
            raise InputError(f"--workers must be at least 1, got {args.workers}")
        if args.command in ("enumerate", "sets", "membership", "verify") and args.max_len < 3:
            raise InputError(f"{args.command} needs --max-len of at least 3")
        if args.command == "enumerate":
            return _run_enumerate(args, out)
        if args.command == "sets":
            return _run_sets(args, out)
        if args.command == "verify":
            return _run_verify(args, out)
        return _run_words(args, out)
    except InputError as exc:
        err.write(f"pclwords: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
