"""Batch command-line front end: enumerate tableau data, print brute-force
invariant bases, and run the claim catalog, with JSON or CSV reports.

Exit codes: 0 all checks passed (errata records do not fail a run), 1 a
check failed, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .alphabet import IndexRange
from .claims import CLAIM_DEFAULTS, ClaimOptions, KNOWN_CLAIMS, run_claim
from .invariants import CapExceeded, algebra_for, invariant_space_bruteforce
from .liealgebras import build_family
from .tableaux import Partition, count_semistandard, enumerate_standard_tableaux

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _parse_ints(text: str, count: int, what: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers")
    if len(parts) != count or any(x < 0 for x in parts):
        raise argparse.ArgumentTypeError(
            f"{what} must be {count} nonnegative comma-separated integers"
        )
    return parts


def _emit(report: dict, fmt: str, output: str | None) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=1)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["id", "claim_ref", "status", "oracle", "generated", "witness", "errata"])
        for check in report.get("checks", []):
            dims = check.get("dims") or {}
            writer.writerow(
                [
                    check.get("id", ""),
                    check.get("claim_ref", ""),
                    check.get("status", ""),
                    dims.get("oracle", ""),
                    dims.get("generated", ""),
                    check.get("witness", ""),
                    json.dumps(check["errata"], sort_keys=True) if check.get("errata") else "",
                ]
            )
        text = buf.getvalue()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _finish(config: dict, checks: list[dict], args, started: float) -> int:
    report = {
        "config": config,
        "checks": checks,
        "timing_ms": None if args.no_timing else int((time.time() - started) * 1000),
    }
    _emit(report, args.format, args.output)
    if any(c["status"] == "fail" for c in checks):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_tableaux(args) -> int:
    started = time.time()
    try:
        parts = _parse_ints(args.shape, len(args.shape.split(",")), "--shape")
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parts = tuple(p for p in parts if p > 0)
    n, m = _parse_ints(args.range, 2, "--range")
    config = {"command": "tableaux", "shape": list(parts), "range": [n, m], "seed": args.seed}
    if not parts:
        return _finish(config, [], args, started)
    try:
        shape = Partition(parts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rng = IndexRange(n, m)
    standard = enumerate_standard_tableaux(shape)
    checks = [
        {
            "id": f"tableaux:{shape}",
            "claim_ref": "enumeration",
            "status": "pass",
            "dims": {
                "standard_tableaux": len(standard),
                "semistandard_sequences": count_semistandard(shape, rng),
            },
            "tableaux": [str(t) for t in standard],
        }
    ]
    return _finish(config, checks, args, started)


def cmd_invariants(args) -> int:
    started = time.time()
    dims = _parse_ints(args.dims, 2, "--dims")
    p, q, k, l = _parse_ints(args.pqkl, 4, "--pqkl")
    config = {
        "command": "invariants",
        "family": args.family,
        "dims": list(dims),
        "pqkl": [p, q, k, l],
        "degree": args.degree,
        "seed": args.seed,
    }
    try:
        family = build_family(args.family, IndexRange(*dims))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    algebra = algebra_for(family, p, q, k, l)
    try:
        space = invariant_space_bruteforce(
            family, algebra, args.degree, monomial_cap=args.cap
        )
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    checks = [
        {
            "id": f"invariants:{args.family}{dims}:deg{args.degree}",
            "claim_ref": "oracle",
            "status": "pass",
            "dims": {"oracle": space.dimension},
            "basis": [str(f) for f in space.basis],
        }
    ]
    return _finish(config, checks, args, started)


def cmd_verify(args) -> int:
    started = time.time()
    theorem = args.theorem
    key = theorem[: -len("(constructive)")] if theorem.endswith("(constructive)") else theorem
    if key not in KNOWN_CLAIMS:
        print(
            f"error: unknown claim id {theorem!r}; known ids: {', '.join(KNOWN_CLAIMS)}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    defaults = CLAIM_DEFAULTS[key]
    opts = ClaimOptions(
        family=args.family or defaults.family,
        dims=_parse_ints(args.dims, 2, "--dims") if args.dims else defaults.dims,
        pqkl=_parse_ints(args.pqkl, 4, "--pqkl") if args.pqkl else defaults.pqkl,
        udims=_parse_ints(args.udims, 2, "--udims") if args.udims else defaults.udims,
        wdims=_parse_ints(args.wdims, 2, "--wdims") if args.wdims else defaults.wdims,
        max_degree=args.max_degree if args.max_degree is not None else defaults.max_degree,
        n=args.n if args.n is not None else defaults.n,
        k=args.k if args.k is not None else defaults.k,
        monomial_cap=args.cap,
    )
    config = {
        "command": "verify",
        "theorem": key,
        "family": opts.family,
        "dims": list(opts.dims),
        "pqkl": list(opts.pqkl),
        "udims": list(opts.udims),
        "wdims": list(opts.wdims),
        "max_degree": opts.max_degree,
        "n": opts.n,
        "k": opts.k,
        "seed": args.seed,
    }
    try:
        records = run_claim(key, opts)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    return _finish(config, [r.as_dict() for r in records], args, started)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superinv",
        description="Exact verification toolkit for invariant rings of matrix "
        "Lie superalgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", default=None, help="write the report to a file")
        p.add_argument("--seed", type=int, default=0, help="seed echoed into the config")
        p.add_argument(
            "--cap",
            type=int,
            default=int(os.environ.get("SUPERINV_MONOMIAL_CAP", 20_000)),
            help="monomial basis cap",
        )
        p.add_argument(
            "--no-timing",
            action="store_true",
            help="omit wall-clock timing for byte-identical reports",
        )

    p = sub.add_parser("tableaux", help="standard and semistandard enumeration")
    p.add_argument("--shape", required=True, help="partition, e.g. 2,1 (0 for empty)")
    p.add_argument("--range", default="1,1", help="even,odd letter counts")
    common(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("invariants", help="brute-force invariant space")
    p.add_argument("--family", default="gl", choices=["gl", "sl", "osp", "pe", "spe"])
    p.add_argument("--dims", default="1,1", help="even,odd dimensions of the space")
    p.add_argument("--pqkl", default="1,0,0,0", help="w-even,w-odd,u-even,u-odd")
    p.add_argument("--degree", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run a claim from the catalog")
    p.add_argument("--theorem", required=True, help="claim id, e.g. T2.1")
    p.add_argument("--family", default=None, choices=["gl", "sl", "osp", "pe", "spe"])
    p.add_argument("--dims", default=None)
    p.add_argument("--pqkl", default=None)
    p.add_argument("--udims", default=None)
    p.add_argument("--wdims", default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
