"""Command-line driver: ``hfold {sumset,normalize,inverse,classify,verify}``.

Exit codes: 0 success, 1 verification failures, 2 usage or parse error,
3 arithmetic guard (overflow or size limit). ``--format json`` output is
the stable contract; text output is for humans.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import normalize, parse_set_literal, read_set_file
from .errors import SumsetError
from .inverse import classify_by_cardinality, consistency_check
from .sumset import h_fold
from .verify import CHECK_IDS, FAMILY_CHECKS, EnumSpec, family_sweep, run_sweep

#: check ids verified by enumeration up to diameter k+1 under --max-diameter auto
_TIGHT_IDS = {"theorem1", "theorem2"}


def _int_range(text: str) -> range:
    """``"5"`` or ``"5..9"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = range(int(lo), int(hi) + 1)
        else:
            r = range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}") from None
    if not r:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return r


def _max_diameter(text: str):
    if text == "auto":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None


def _default_jobs() -> int:
    env = os.environ.get("SUMSET_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _add_set_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--set", dest="set_literal", help='comma-separated integers, e.g. "0,2,3,5"')
    g.add_argument("--set-file", help="file with one integer per line")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfold", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="compute hA and |hA|")
    _add_set_args(p)
    p.add_argument("--h", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("normalize", help="normal form, base and dilation of a set")
    _add_set_args(p)
    _add_format(p)

    p = sub.add_parser("inverse", help="admissible structures for (h, k, |hA|)")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--card", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("classify", help="consistency record for one set")
    _add_set_args(p)
    p.add_argument("--h", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("verify", help="exhaustive sweep of one or more checks")
    p.add_argument("--theorem", required=True,
                   help="comma-separated check ids: " + ", ".join(CHECK_IDS))
    p.add_argument("--k", type=_int_range, required=True, help="N or N..M")
    p.add_argument("--h", type=_int_range, required=True, help="N or N..M")
    p.add_argument("--max-diameter", type=_max_diameter, default="auto")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env SUMSET_JOBS)")
    p.add_argument("--dedup-reflections", action="store_true")
    p.add_argument("--out", help="report file, one JSON record per line")
    p.add_argument("--summary", help="summary file (JSON)")
    _add_format(p)
    return parser


def _load_set(args):
    if args.set_literal is not None:
        return parse_set_literal(args.set_literal)
    return read_set_file(args.set_file)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def _fmt_set(values) -> str:
    values = list(values)
    if len(values) > 40:
        return "{" + ",".join(map(str, values[:20])) + ",...," + ",".join(map(str, values[-5:])) + "}"
    return "{" + ",".join(map(str, values)) + "}"


def cmd_sumset(args) -> int:
    A = _load_set(args)
    res = h_fold(A, args.h)
    payload = {"set": A.tolist(), "h": args.h, "elements": res.elements.tolist(),
               "cardinality": res.cardinality}
    _emit(args, payload, f"{args.h}A = {_fmt_set(res.elements)}\n|{args.h}A| = {res.cardinality}")
    return 0


def cmd_normalize(args) -> int:
    A = _load_set(args)
    N = normalize(A)
    payload = {"set": A.tolist(), "normal": N.normal.tolist(), "base": N.base,
               "dilation": N.dilation}
    _emit(args, payload,
          f"normal form {_fmt_set(N.normal)}\nbase {N.base}\ndilation {N.dilation}")
    return 0


def cmd_inverse(args) -> int:
    pred = classify_by_cardinality(args.h, args.k, args.card)
    lines = [f"status: {pred.status.value}"]
    if pred.range_id:
        lines.append(f"range: {pred.range_id}")
    for s in pred.structures:
        lines.append("  " + json.dumps(s.to_dict()))
    lines += [f"caveat: {c}" for c in pred.caveats]
    _emit(args, pred.to_dict(), "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    rec = consistency_check(_load_set(args), args.h)
    text = "\n".join([
        f"normal form {_fmt_set(rec.set)}",
        f"|{rec.h}A| = {rec.cardinality}",
        f"structure {json.dumps(rec.structure.to_dict())}",
        f"predicted {rec.predicted}",
        *(f"{k}: {v}" for k, v in sorted(rec.checks.items())),
        *(f"caveat: {c}" for c in rec.caveats),
    ])
    _emit(args, rec.to_dict(), text)
    return 0 if rec.passed else 1


def _auto_diameter(k: int, ids) -> int:
    if ids and set(ids) <= _TIGHT_IDS:
        return k + 1
    return 2 * k + 2


def cmd_verify(args) -> int:
    ids = [t.strip() for t in args.theorem.split(",") if t.strip()]
    unknown = [t for t in ids if t not in CHECK_IDS]
    if unknown or not ids:
        print(f"hfold verify: unknown check id(s): {unknown}", file=sys.stderr)
        return 2
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    keep = args.out is not None
    family_ids = [t for t in ids if t in FAMILY_CHECKS]
    enum_ids = [t for t in ids if t not in FAMILY_CHECKS]
    reports = []
    if family_ids:
        kinds = [FAMILY_CHECKS[t] for t in family_ids]
        reports.append(family_sweep(args.h[-1], args.k[-1], h_min=args.h[0],
                                    k_min=args.k[0], kinds=kinds, keep_records=keep))
    if enum_ids:
        for k in args.k:
            md = args.max_diameter
            md = _auto_diameter(k, enum_ids) if md == "auto" else md
            spec = EnumSpec(k, md, tuple(args.h), tuple(enum_ids), args.dedup_reflections)
            reports.append(run_sweep(spec, jobs=jobs, keep_records=keep))
    failures = sum(r.failure_count for r in reports)
    summary = {"sweeps": [r.summary() for r in reports], "failure_count": failures}
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            for r in reports:
                fh.writelines(line + "\n" for line in r.lines)
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
    lines = []
    for r in reports:
        s = r.spec.to_dict()
        label = f"k={s['k']} max_diameter={s['max_diameter']}" if "k" in s else "families"
        gaps = {h: g for h, g in r.achievable_gaps.items() if g}
        lines.append(f"{label}: {r.total_sets} sets, {r.failure_count} failures"
                     + (f", gaps {gaps}" if gaps else ""))
    lines.append("PASS" if failures == 0 else f"FAIL ({failures} failures)")
    _emit(args, summary, "\n".join(lines))
    return 0 if failures == 0 else 1


_COMMANDS = {
    "sumset": cmd_sumset,
    "normalize": cmd_normalize,
    "inverse": cmd_inverse,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SumsetError as exc:
        print(f"hfold {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"hfold {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
