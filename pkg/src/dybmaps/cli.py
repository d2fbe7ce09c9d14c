"""Command-line surface.

Exit codes: 0 the input is valid / the property holds; 1 the property
fails (the JSON report carries the counterexample); 2 malformed input,
order mismatch or precondition failure.  Reports are JSON on stdout with
0-based element indices; diagnostics on stderr use 1-based labels.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .binary import (
    BinaryTable,
    Bijection,
    StructureFlags,
    classify_structure,
    validate_left_quasigroup,
)
from .correspondence import build_correspondence, is_constant_in_lambda, verify_irf_irf
from .engine import (
    DynamicalMap,
    Triple,
    build_dyb,
    check_D_class,
    extract_mu_L,
    reconstruct_G,
    verify_braiding,
    verify_invariance,
    verify_qdybe,
    verify_unitary,
)
from .errors import AlgebraError
from .search import census_theorem31, search_structures
from .ternary import TernaryTable

VERIFY_CHECKS = ("qdybe", "braid", "invariance", "unitary", "d1", "d2", "d3")


def _emit(doc, out: str | None = None) -> None:
    text = json.dumps(doc, indent=2)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _one_based(t) -> tuple:
    return tuple(x + 1 for x in t)


def _load_as(path: str, cls, what: str):
    obj = serialize.load(path)
    if not isinstance(obj, cls):
        raise ValueError(f"{path}: expected a {what} document")
    return obj


def _load_lq(path: str):
    return validate_left_quasigroup(_load_as(path, BinaryTable, "binary"))


def _flags_doc(flags: StructureFlags) -> dict:
    return {
        "is_left_quasigroup": flags.is_left_quasigroup,
        "is_quasigroup": flags.is_quasigroup,
        "is_loop": flags.is_loop,
        "is_group": flags.is_group,
        "is_right_distributive": flags.is_right_distributive,
        "identity": flags.identity,
    }


def _cmd_validate(args) -> int:
    table = _load_as(args.file, BinaryTable, "binary")
    validate_left_quasigroup(table)
    _emit(_flags_doc(classify_structure(table)))
    return 0


def _cmd_classify(args) -> int:
    table = _load_as(args.file, BinaryTable, "binary")
    _emit(_flags_doc(classify_structure(table)))
    return 0


def _cmd_build(args) -> int:
    triple = Triple(
        _load_lq(args.L),
        _load_as(args.M, TernaryTable, "ternary"),
        _load_as(args.pi, Bijection, "bijection"),
    )
    R = build_dyb(triple, checked=not args.unchecked)
    _emit(serialize.to_jsonable(R), args.output)
    return 0


def _cmd_verify(args) -> int:
    R = _load_as(args.file, DynamicalMap, "dynmap")
    if args.check == "qdybe":
        res = verify_qdybe(R)
    elif args.check == "braid":
        res = verify_braiding(R)
    elif args.check == "invariance":
        res = verify_invariance(R)
    elif args.check == "unitary":
        res = verify_unitary(R)
    else:
        res = check_D_class(R, args.check.upper())
    doc = {
        "check": args.check,
        "holds": res.holds,
        "counterexample": None if res.holds else list(res.witness),
    }
    if res.label and not res.holds:
        doc["condition"] = res.label
    _emit(doc)
    if not res.holds:
        print(
            f"check {args.check} fails at {_one_based(res.witness)} (1-based)",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_extract(args) -> int:
    R = _load_as(args.file, DynamicalMap, "dynmap")
    _emit(serialize.to_jsonable(extract_mu_L(R)), args.output)
    return 0


def _cmd_reconstruct(args) -> int:
    triple = Triple(
        _load_lq(args.L),
        _load_as(args.M, TernaryTable, "ternary"),
        _load_as(args.pi, Bijection, "bijection"),
    )
    G, pi_prime = reconstruct_G(triple, args.cls.upper(), args.basepoint)
    _emit(
        {
            "class": args.cls,
            "basepoint": args.basepoint,
            "G": serialize.to_jsonable(G),
            "pi_prime": serialize.to_jsonable(pi_prime),
        },
        args.output,
    )
    return 0


def _cmd_search(args) -> int:
    report = search_structures(
        args.target,
        args.order,
        mode=args.mode,
        limit=args.limit,
        deadline=args.deadline,
        up_to_iso=args.up_to_iso,
        jobs=args.jobs,
    )
    summary = {
        "target": report.target,
        "order": report.order,
        "mode": report.mode,
        "total": report.total,
        "complete": report.complete,
        "up_to_iso": report.up_to_iso,
        "elapsed": report.elapsed,
    }
    if args.emit:
        outdir = Path(args.emit)
        outdir.mkdir(parents=True, exist_ok=True)
        emitted = report.representatives if args.up_to_iso else report.tables
        for i, table in enumerate(emitted):
            serialize.dump(table, outdir / f"rep-{i:05d}.json")
        summary["emitted"] = len(emitted)
        (outdir / "summary.json").write_text(
            json.dumps(summary, indent=2) + "\n", encoding="utf-8"
        )
    _emit(summary)
    return 0


def _cmd_correspond(args) -> int:
    inst = build_correspondence(
        _load_lq(args.L1),
        _load_lq(args.L2),
        _load_as(args.M, TernaryTable, "ternary"),
        _load_as(args.pi1, Bijection, "bijection"),
        _load_as(args.pi2, Bijection, "bijection"),
    )
    res = verify_irf_irf(inst)
    doc = {
        "irf_irf": res.holds,
        "vertex": is_constant_in_lambda(inst.R2),
        "counterexample": None if res.holds else list(res.witness),
    }
    _emit(doc)
    if not res.holds:
        print(
            f"gauge identity fails at {_one_based(res.witness)} (1-based)",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_census(args) -> int:
    L = _load_lq(args.L) if args.L else None
    pi = _load_as(args.pi, Bijection, "bijection") if args.pi else None
    report = census_theorem31(
        args.order, L=L, pi=pi, jobs=args.jobs, sample=args.sample, seed=args.seed
    )
    doc = {
        "order": report.order,
        "mode": report.mode,
        "total": report.total,
        "num_m1m2": report.num_m1m2,
        "agree": report.agree,
        "disagreements": [
            {"table": list(t), "m1m2": a, "qdybe": b, "braid": c}
            for t, a, b, c in report.disagreements
        ],
        "elapsed": report.elapsed,
    }
    _emit(doc)
    return 0 if report.agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dybmaps",
        description="Construct, verify, search and relate dynamical Yang-Baxter maps on finite carriers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a table is a left quasigroup, print flags")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="print structure flags for any table")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("build", help="build the dynamical map of a triple")
    p.add_argument("--L", required=True, help="binary JSON for the left quasigroup")
    p.add_argument("--M", required=True, help="ternary JSON")
    p.add_argument("--pi", required=True, help="bijection JSON")
    p.add_argument("--unchecked", action="store_true", help="skip the identity guard on M")
    p.add_argument("-o", "--output", help="write the dynmap JSON here instead of stdout")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="run one exhaustive check on a dynmap")
    p.add_argument("--check", required=True, choices=VERIFY_CHECKS)
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extract", help="recover the ternary table of an invariant map")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("reconstruct", help="rebuild a generating structure from a class member")
    p.add_argument("--class", dest="cls", required=True, choices=("a1", "a2", "a3"))
    p.add_argument("--lambda", dest="basepoint", type=int, default=0,
                   help="basepoint element (default 0)")
    p.add_argument("--L", required=True)
    p.add_argument("--M", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("search", help="enumerate structures of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument(
        "--target",
        required=True,
        choices=("left-quasigroups", "quasigroups", "ternary-m1m2"),
    )
    p.add_argument("--mode", choices=("exhaustive", "backtracking"), default="exhaustive")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--deadline", type=float, default=None, help="soft time bound in seconds")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--emit", help="directory for per-representative JSON files")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("correspond", help="gauge-relate two triples over one ternary table")
    p.add_argument("--L1", required=True)
    p.add_argument("--L2", required=True)
    p.add_argument("--M", required=True)
    p.add_argument("--pi1", required=True)
    p.add_argument("--pi2", required=True)
    p.set_defaults(func=_cmd_correspond)

    p = sub.add_parser("census", help="columnwise identity/equation/braid census")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--L", help="binary JSON (default: cyclic table)")
    p.add_argument("--pi", help="bijection JSON (default: identity)")
    p.add_argument("--sample", type=int, default=None, help="sampled census size for larger orders")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AlgebraError, ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
