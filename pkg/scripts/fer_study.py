#!/usr/bin/env python3
"""Run the two error-rate experiments and write plot-ready CSVs.

``quantization``: N=1024 rate-1/2 under float min-sum and 4/5-bit words, on a
shared SNR grid, one CSV per decoder. ``waterfall``: float min-sum curves for
(256,1/2), (1024,1/2), (1024,5/6) down to the 1e-4 region.
"""

import argparse
import sys
import time

from polarsc import CodeSpec, DecoderKernel, QFormat, SimConfig, run_sweep, write_csv


def sweep(tag, spec, kernel, snrs, max_trials, min_errors, seed, jobs, outdir):
    config = SimConfig(
        code=spec,
        kernel=kernel,
        snr_db=snrs,
        max_trials=max_trials,
        min_frame_errors=min_errors,
        seed=seed,
    )
    t0 = time.time()
    points = run_sweep(config, jobs=jobs)
    path = f"{outdir}/{tag}.csv"
    with open(path, "w") as fh:
        write_csv(points, fh)
    fers = " ".join(f"{p.fer:.2e}" for p in points)
    print(f"{tag}: {path} [{fers}] ({time.time() - t0:.0f}s)", file=sys.stderr)


def run_quantization_study(args):
    spec = CodeSpec.construct(1024, 512)
    snrs = (1.5, 2.0, 2.5, 3.0, 3.5)
    decoders = {
        "float": DecoderKernel.min_sum(),
        "q5": DecoderKernel.quantized(QFormat(5, args.scale)),
        "q4": DecoderKernel.quantized(QFormat(4, args.scale)),
    }
    for tag, kernel in decoders.items():
        sweep(
            f"quantization_{tag}", spec, kernel, snrs,
            args.max_trials, args.min_errors, args.seed, args.jobs, args.outdir,
        )


def run_waterfall_study(args):
    codes = {
        "n256_r12": (CodeSpec.construct(256, 128), (2.0, 2.5, 3.0, 3.5, 4.0, 4.85)),
        "n1024_r12": (CodeSpec.construct(1024, 512), (2.0, 2.5, 3.0, 3.5, 4.4)),
        "n1024_r56": (CodeSpec.construct(1024, 853), (4.0, 4.5, 5.0, 5.5, 5.9)),
    }
    for tag, (spec, snrs) in codes.items():
        sweep(
            f"waterfall_{tag}", spec, DecoderKernel.min_sum(), snrs,
            args.max_trials, args.min_errors, args.seed, args.jobs, args.outdir,
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("study", choices=["quantization", "waterfall", "all"])
    parser.add_argument("--outdir", default=".")
    parser.add_argument("--jobs", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--scale", type=float, default=1.0)
    parser.add_argument("--max-trials", type=int, default=2_500_000)
    parser.add_argument("--min-errors", type=int, default=200)
    args = parser.parse_args()
    if args.study in ("quantization", "all"):
        run_quantization_study(args)
    if args.study in ("waterfall", "all"):
        run_waterfall_study(args)


if __name__ == "__main__":
    main()
