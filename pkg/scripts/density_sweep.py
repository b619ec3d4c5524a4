#!/usr/bin/env python3
"""Monte Carlo density sweep, streamed to CSV.

Reproduction presets (pass --preset):
  small-full   n=1..150,   10^6 samples, full evaluation
  mid-types    n=1..200,   10^6 samples, types only
  large-types  n=100..50000 step 100, 2*10^4 samples, types only

Presets describe the published experiment grids; expect long runtimes at
the published sample counts.  Any preset field can be overridden.
"""

import argparse
import sys

from snzeros import __version__
from snzeros.cli import parse_range
from snzeros.montecarlo import EstimateRequest, request_metadata, sweep, write_csv

PRESETS = {
    "small-full": ("1:150", 1_000_000, "full-eval"),
    "mid-types": ("1:200", 1_000_000, "types-only"),
    "large-types": ("100:50000:100", 20_000, "types-only"),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--preset", choices=sorted(PRESETS))
    ap.add_argument("--n", type=parse_range, help="override n values, e.g. 10:100:10")
    ap.add_argument("--samples", type=int, help="override samples per n")
    ap.add_argument("--mode", choices=["full-eval", "types-only", "auto"])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", help="CSV path; stdout if omitted")
    args = ap.parse_args()

    n_values, samples, mode = PRESETS.get(args.preset, (None, None, "auto"))
    if args.n is not None:
        n_values = args.n
    elif n_values is not None:
        n_values = parse_range(n_values)
    if args.samples is not None:
        samples = args.samples
    if args.mode is not None:
        mode = args.mode
    if n_values is None or samples is None:
        ap.error("need --preset or both --n and --samples")

    request = EstimateRequest(
        n_values=tuple(n_values),
        samples_per_n=samples,
        master_seed=args.seed,
        mode=mode,
        workers=args.threads,
    )
    if args.out:
        with open(args.out, "w") as fh:
            write_csv(sweep(request), fh)
        with open(args.out + ".meta.json", "w") as fh:
            fh.write(request_metadata(request, __version__) + "\n")
    else:
        write_csv(sweep(request), sys.stdout)


if __name__ == "__main__":
    main()
