"""Command-line interface.

Every operation is exposed as a subcommand with script-friendly output:
plain values or CSV on stdout, diagnostics on stderr.  Exit status 0 on
success, 1 on usage errors, 2 when a configured resource cap is hit.

Partition arguments are comma-separated weakly decreasing parts
(e.g. 6,5,3,2,1,1); sweep ranges use a:b[:step] or comma lists.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .census import count_t_cores, count_type1, full_table_scan
from .errors import ResourceLimit, SnZerosError
from .mn import character, classify
from .montecarlo import (
    CSV_HEADER,
    EstimateRequest,
    request_metadata,
    sweep,
    write_csv,
)
from .partitions import Partition, decode, encode, from_parts, parse_code
from .ptable import build_p_table, load_p_table, save_p_table
from .sampler import RNG_NAME, SampleStream, random_partition


class _Parser(argparse.ArgumentParser):
    """argparse with usage-error exit status 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def parse_partition(text: str) -> Partition:
    """Comma-separated parts; the empty string is the partition of 0."""
    if text.strip() == "":
        return Partition(())
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from exc
    try:
        return from_parts(parts)
    except SnZerosError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from exc


def parse_range(text: str) -> list[int]:
    """a:b[:step] (inclusive endpoints) or a comma-separated list."""
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) not in (2, 3):
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        a, b = int(pieces[0]), int(pieces[1])
        step = int(pieces[2]) if len(pieces) == 3 else 1
        if step < 1:
            raise argparse.ArgumentTypeError("range step must be >= 1")
        return list(range(a, b + 1, step))
    return [int(x) for x in text.split(",")]


def _auto_workers(value: str) -> int:
    if value == "auto":
        return os.cpu_count() or 1
    return int(value)


def _scan_csv_row(res, seed_field: str = "") -> str:
    return (
        f"{res.n},exact,exact,{res.zero_count},{res.type1_count},{res.type2_count},"
        f"{res.z()},{res.z1()},{res.z2()},{seed_field},,"
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="snzeros", description=__doc__)
    parser.add_argument("--version", action="version", version=f"snzeros {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="exact character value")
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True,
                   metavar="PARTS", help="row shape, e.g. 3,1")
    p.add_argument("--mu", type=parse_partition, required=True,
                   metavar="PARTS", help="cycle type, e.g. 2,2")

    p = sub.add_parser("classify",
                       help="zero classification of one entry")
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True, metavar="PARTS")
    p.add_argument("--mu", type=parse_partition, required=True, metavar="PARTS")
    p.add_argument("--no-eval", action="store_true",
                   help="skip exact evaluation; zero is then reported as the type-2 lower bound")

    p = sub.add_parser("sample", help="uniform random partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--index-start", type=int, default=0,
                   help="first stream index (default 0)")
    p.add_argument("--ptable", help="partition-count cache file to load or create")

    p = sub.add_parser("sweep",
                       help="Monte Carlo density estimates over a range of n")
    p.add_argument("--n", type=parse_range, required=True, metavar="RANGE",
                   help="n values, e.g. 1:150 or 100:50000:100 or 10,20,50")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["full-eval", "types-only", "auto"], default="auto",
                   help="auto = full-eval for n <= 300, types-only above")
    p.add_argument("--threads", type=_auto_workers, default=1, metavar="N|auto",
                   help="worker processes; does not affect results")
    p.add_argument("--out", help="write CSV here (plus a .meta.json sidecar) instead of stdout")

    p = sub.add_parser("scan",
                       help="exact full-table zero census for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ratio", action="store_true",
                   help="also print the type1/zero ratio to 3 decimals on stderr")

    p = sub.add_parser("count-type1",
                       help="exact number of type-1 zeros via generating functions")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("cores",
                       help="number of partitions of n with no hook divisible by t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("pn", help="exact partition count p(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ptable", help="partition-count cache file to load or create")

    p = sub.add_parser("encode", help="boundary word of a partition")
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True, metavar="PARTS")

    p = sub.add_parser("decode", help="partition of a boundary word")
    p.add_argument("--code", required=True, metavar="BITS",
                   help="walk-order bit string, optionally 0b-prefixed")

    return parser


def _load_or_build_table(max_n: int, cache_path: str | None):
    if cache_path and os.path.exists(cache_path):
        table = load_p_table(cache_path)
        if table.max_n >= max_n:
            return table
        print(f"cache {cache_path} only covers {table.max_n}; rebuilding", file=sys.stderr)
    table = build_p_table(max_n)
    if cache_path:
        save_p_table(table, cache_path)
    return table


def run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "eval":
        print(character(args.lam, args.mu))

    elif args.command == "classify":
        zc = classify(args.lam, args.mu, evaluate=not args.no_eval)
        print(
            f"zero={int(zc.is_zero)} type1={int(zc.is_type1)} "
            f"type2={int(zc.is_type2)} evaluated={int(zc.evaluated)}"
        )

    elif args.command == "sample":
        table = _load_or_build_table(args.n, args.ptable)
        for i in range(args.index_start, args.index_start + args.count):
            lam = random_partition(args.n, SampleStream(args.seed, i), table)
            print(",".join(str(p) for p in lam.parts))

    elif args.command == "sweep":
        request = EstimateRequest(
            n_values=tuple(args.n),
            samples_per_n=args.samples,
            master_seed=args.seed,
            mode=args.mode,
            workers=args.threads,
        )
        if args.out:
            with open(args.out, "w") as fh:
                write_csv(sweep(request), fh)
            with open(args.out + ".meta.json", "w") as fh:
                fh.write(request_metadata(request, __version__) + "\n")
        else:
            write_csv(sweep(request), sys.stdout)

    elif args.command == "scan":
        res = full_table_scan(args.n)
        print(CSV_HEADER)
        print(_scan_csv_row(res))
        if args.ratio:
            print(f"type1/zero = {res.type1_over_zero()}", file=sys.stderr)

    elif args.command == "count-type1":
        print(count_type1(args.n))

    elif args.command == "cores":
        print(count_t_cores(args.n, args.t))

    elif args.command == "pn":
        table = _load_or_build_table(args.n, args.ptable)
        print(table.counts[args.n])

    elif args.command == "encode":
        print(encode(args.lam).text())

    elif args.command == "decode":
        try:
            code = parse_code(args.code)
        except ValueError as exc:
            print(f"snzeros decode: error: {exc}", file=sys.stderr)
            return 1
        print(str(decode(code)))

    return 0


def main() -> None:
    try:
        raise SystemExit(run(sys.argv[1:]))
    except ResourceLimit as exc:
        print(f"snzeros: resource limit: {exc}", file=sys.stderr)
        raise SystemExit(2)
    except SnZerosError as exc:
        print(f"snzeros: error: {exc}", file=sys.stderr)
        raise SystemExit(1)


if __name__ == "__main__":
    main()
