"""Command-line front end.

Subcommands:
    verify  run the case registry over random trials
    case    run one case on a JSON-serialized input
    gen     emit a seeded instance as JSON
    scan    residual statistics for the open positivity question

Exit codes: 0 success, 1 a checked statement failed, 2 usage or input error.
The BLOCKTRACE_THREADS environment variable caps verify parallelism.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import serialize
from .blocks import BlockMatrix
from .generate import KINDS, GenSpec, gen
from .orders import PSD_TOL, is_psd
from .suite import (
    REGISTRY,
    RunConfig,
    case_ids,
    check_case,
    run_suite,
    open_question_scan,
    total_failures,
)

USAGE_ERROR = 2


def _parse_range(token: str) -> range:
    if ".." in token:
        lo, hi = token.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(token)
    return range(v, v + 1)


def parse_dims(text: str) -> tuple:
    """Dimension list grammar: comma-separated MxN items where M and N are
    integers or LO..HI ranges; a range expands to its cartesian product.

    Examples: "2x3", "2x2,3x3", "2..4x2..4"."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            m_part, n_part = item.split("x", 1)
            ms, ns = _parse_range(m_part), _parse_range(n_part)
        except ValueError as exc:
            raise ValueError(f"bad dimension item {item!r}") from exc
        for m in ms:
            for n in ns:
                if m < 1 or n < 1:
                    raise ValueError(f"bad dimension item {item!r}")
                out.append((m, n))
    if not out:
        raise ValueError("empty dimension list")
    return tuple(out)


def _threads() -> int:
    raw = os.environ.get("BLOCKTRACE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _text_report(report: dict) -> str:
    lines = []
    for cid, entry in report["cases"].items():
        w = entry["worst_witness"]
        lines.append("{} {} {} {} {}".format(
            cid,
            entry["trials"],
            entry["failures"],
            "n/a" if w is None else f"{w:.12g}",
            "n/a" if entry["worst_seed"] is None else entry["worst_seed"],
        ))
    return "\n".join(lines)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_verify(args) -> int:
    try:
        dims = parse_dims(args.dims)
        cases = tuple(args.cases or case_ids())
        if cases == ("all",):
            cases = tuple(case_ids())
        config = RunConfig(cases, dims, args.trials, args.seed, args.tol)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    report = run_suite(config, threads=_threads())
    if args.format == "json":
        _emit(serialize.dump(report), args.out)
    else:
        _emit(_text_report(report), args.out)
    return 1 if total_failures(report) else 0


def _load_instance(case_id: str, path):
    cls = REGISTRY[case_id].input_class
    obj = serialize.load(path)
    if cls == "gram-pair":
        return serialize.pair_from_obj(obj)
    if cls == "real-int":
        return serialize.int_matrix_from_obj(obj)
    if cls == "fixed" and case_id == "abs-block-corollary":
        return serialize.matrix_from_obj(obj)
    return serialize.block_from_obj(obj)


def _check_preconditions(case_id: str, instance, tol: float) -> str | None:
    cls = REGISTRY[case_id].input_class
    if cls in ("psd", "psd-2x2", "ppt"):
        if not isinstance(instance, BlockMatrix):
            return "input is not a block matrix"
        if cls == "psd-2x2" and instance.m != 2:
            return "input must have 2x2 block structure"
        h = (instance.dense + instance.dense.conj().T) / 2
        if not is_psd(h, tol).holds:
            return "input matrix is not positive semidefinite"
        if cls == "ppt":
            from .blocks import partial_transpose

            tau = partial_transpose(instance).dense
            if not is_psd((tau + tau.conj().T) / 2, tol).holds:
                return "input matrix does not have a PSD partial transpose"
    return None


def _cmd_case(args) -> int:
    if args.id not in REGISTRY:
        print(f"error: unknown case id {args.id!r}", file=sys.stderr)
        return USAGE_ERROR
    try:
        instance = _load_instance(args.id, args.input)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return USAGE_ERROR
    problem = _check_preconditions(args.id, instance, args.tol)
    if problem is not None:
        print(f"error: {problem}", file=sys.stderr)
        return USAGE_ERROR
    report = check_case(args.id, instance, args.tol)
    obj = {
        "case": args.id,
        "holds": report.holds,
        "witness": report.witness if report.parts else None,
        "parts": [
            {"label": p.label, "witness": p.witness, "holds": p.holds}
            for p in report.parts
        ],
        "premise_misses": report.premise_misses,
    }
    _emit(serialize.dump(obj), args.out)
    return 0 if report.holds else 1


def _cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.kind, m=args.m, n=args.n, seed=args.seed)
        instance = gen(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if spec.kind == "gram-pair":
        obj = serialize.pair_to_obj(instance)
    elif spec.kind == "real-int":
        obj = serialize.int_matrix_to_obj(instance)
    else:
        obj = serialize.block_to_obj(instance)
    _emit(serialize.dump(obj), args.out)
    return 0


def _cmd_scan(args) -> int:
    try:
        dims = parse_dims(args.dims)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    report = open_question_scan(dims, args.trials, args.seed, args.tol)
    _emit(serialize.dump(report), args.out)
    return 1 if report["sanity_violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blocktrace",
        description="verify partial-trace inequalities for block matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the case registry over random trials")
    p.add_argument("--cases", nargs="*", metavar="ID",
                   help='case ids to run, or the literal "all" (default: all)')
    p.add_argument("--dims", default="2..4x2..4",
                   help="dimension list, e.g. 2x3,3x3 or 2..4x2..4")
    p.add_argument("--trials", type=int, default=100, help="trials per case")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=PSD_TOL)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("case", help="run one case on a JSON input")
    p.add_argument("--id", required=True, help="case id")
    p.add_argument("--input", required=True, help="path to the JSON instance")
    p.add_argument("--tol", type=float, default=PSD_TOL)
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(fn=_cmd_case)

    p = sub.add_parser("gen", help="emit a seeded instance as JSON")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the instance to a file")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("scan", help="residual statistics for the open question")
    p.add_argument("--dims", default="2..4x2..4")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=PSD_TOL)
    p.add_argument("--out", help="write the statistics to a file")
    p.set_defaults(fn=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
