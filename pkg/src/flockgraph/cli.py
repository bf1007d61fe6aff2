"""Command-line interface.

Exit codes: 0 success, 1 failed self-check, 2 usage or parse error,
3 domain error (not conjugate, flock mismatch), 4 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .configurations import (
    FlockMismatchError,
    ResourceGuardError,
    atlas,
    build_configuration,
    forward_orbit,
)
from .conjugacy import NotConjugateError, all_conjugators, count_conjugators
from .flocks import all_flocks, flock_of
from .perm import Partition, ParseError, cyclic_type, format_perm, parse
from .report import atlas_report, atlas_text, config_text, to_dot, to_json
from .verify import run_checks

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_GUARD = 4


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.of([int(tok) for tok in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"bad --type {text!r}: {exc}") from None


def _stem_for(args, phi=None, partition=None):
    if args.sigma is not None:
        return parse(args.sigma, args.n)
    if partition is None:
        partition = cyclic_type(phi)
    return flock_of(partition).stem


def cmd_flocks(args) -> str:
    rows = []
    for f in all_flocks(args.n):
        rows.append(
            {
                "partition": list(f.partition.parts),
                "stem": format_perm(f.stem),
                "size": f.size,
                "conjugators": count_conjugators(f.partition.to_cycle_type()),
            }
        )
    if args.format == "json":
        return json.dumps({"n": args.n, "flocks": rows}, indent=2) + "\n"
    lines = [f"{'partition':<24} {'stem':<24} {'size':>20} {'N':>20}"]
    for row in rows:
        part = "+".join(map(str, row["partition"]))
        lines.append(f"{part:<24} {row['stem']:<24} {row['size']:>20} {row['conjugators']:>20}")
    return "\n".join(lines) + "\n"


def cmd_orbit(args) -> str:
    start = parse(args.start, args.n)
    sigma = _stem_for(args, phi=start)
    trace = forward_orbit(start, sigma)
    path = " → ".join(format_perm(p) for p in trace.tail + trace.cycle)
    return f"{path} → back to {format_perm(trace.cycle[0])}\n"


def cmd_config(args) -> str:
    start = parse(args.start, args.n)
    sigma = _stem_for(args, phi=start)
    graph = build_configuration(start, sigma)
    if args.format == "dot":
        return to_dot(graph)
    if args.format == "json":
        return to_json(atlas_report(graph, flock_of(cyclic_type(sigma)), members=True))
    return config_text(graph)


def cmd_atlas(args) -> str:
    partition = _partition_arg(args.type)
    if partition.n != args.n:
        raise UsageError(f"--type {args.type} does not sum to --n {args.n}")
    flock = flock_of(partition)
    sigma = _stem_for(args, partition=partition)
    graph = atlas(flock, sigma, threads=args.threads)
    if args.format == "dot":
        return to_dot(graph, name="atlas")
    report = atlas_report(graph, flock, members=args.members)
    if args.format == "json":
        return to_json(report)
    return atlas_text(report)


def cmd_conjugators(args) -> str:
    phi = parse(args.phi, args.n)
    psi = parse(args.psi, args.n)
    family = all_conjugators(phi, psi)
    lines = [f"N = {family.total}"]
    if not args.count_only:
        lines.extend(format_perm(rho) for rho in family)
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    if not 1 <= args.max_n <= 7:
        raise UsageError(f"--max-n must be in 1..7, got {args.max_n}")
    results = list(run_checks(args.max_n))
    text = "\n".join(r.line() for r in results) + "\n"
    failed = sum(not r.passed for r in results)
    text += f"{len(results) - failed}/{len(results)} checks passed\n"
    return text, EXIT_CHECK_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flockgraph",
        description="Conjugacy classes of S_n and the graphs of phi -> phi sigma phi^-1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json")):
        p.add_argument("--n", type=int, required=True, help="degree (1..20)")
        p.add_argument("--format", choices=fmt, default="text")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("flocks", help="list every flock of S_n")
    common(p)

    p = sub.add_parser("orbit", help="forward orbit of a start permutation")
    common(p, fmt=("text",))
    p.add_argument("--sigma", help="stem permutation (default: canonical stem)")
    p.add_argument("--start", required=True)

    p = sub.add_parser("config", help="configuration containing a start permutation")
    common(p, fmt=("text", "json", "dot"))
    p.add_argument("--sigma")
    p.add_argument("--start", required=True)

    p = sub.add_parser("atlas", help="all configurations of a flock")
    common(p, fmt=("text", "json", "dot"))
    p.add_argument("--type", required=True, help="partition as a comma list, e.g. 1,2,3")
    p.add_argument("--sigma")
    p.add_argument("--members", action="store_true", help="include member lists")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("conjugators", help="all rho with rho phi rho^-1 = psi")
    common(p, fmt=("text",))
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("verify", help="run the brute-force self-checks")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--out")
    return parser


COMMANDS = {
    "flocks": cmd_flocks,
    "orbit": cmd_orbit,
    "config": cmd_config,
    "atlas": cmd_atlas,
    "conjugators": cmd_conjugators,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text = COMMANDS[args.command](args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotConjugateError, FlockMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        # degree range and similar argument problems
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
