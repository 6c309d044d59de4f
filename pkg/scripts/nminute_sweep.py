#!/usr/bin/env python3
"""Sweep the protection lifetime N over a synthetic workload.

Generates one Zipf trace, runs the pool across a ladder of N values for
both base policies, and prints a CSV of hit ratios and flush counts.
The economically recommended N (the break-even interval for the 1997
reference disk/RAM prices) is marked in a trailing comment line.
"""
import argparse
import sys

from storage_rules.bufferpool import PoolConfig, generate_trace, recommended_n, simulate
from storage_rules.rules import EconomicParams, TechnologyParams


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260809)
    parser.add_argument("--ops", type=int, default=200_000)
    parser.add_argument("--pages", type=int, default=16384)
    parser.add_argument("--frames", type=int, default=1024)
    parser.add_argument("--zipf-s", type=float, default=0.8)
    parser.add_argument("--write-fraction", type=float, default=0.25)
    parser.add_argument("--ops-per-second", type=float, default=20.0)
    parser.add_argument("--checkpoint", type=float, default=300.0)
    parser.add_argument("--n-values", default="0,15,30,60,120,180,240,300")
    args = parser.parse_args()

    trace = generate_trace(args.seed, args.ops, args.pages, args.zipf_s,
                           args.write_fraction, args.ops_per_second)
    n_values = [float(v) for v in args.n_values.split(",")]

    out = sys.stdout
    out.write("policy,n_seconds,hit_ratio,physical_reads,contention_flushes,"
              "checkpoint_flushes,fallbacks\n")
    for policy in ("lru", "clock2"):
        for n in n_values:
            config = PoolConfig(frames=args.frames, base_policy=policy,
                                n_minute_s=n,
                                checkpoint_interval_s=args.checkpoint)
            rep = simulate(trace, config)
            out.write(f"{policy},{n:g},{rep.hit_ratio:.6g},{rep.physical_reads},"
                      f"{rep.contention_flushes},{rep.checkpoint_flushes},"
                      f"{rep.protected_eviction_fallbacks}\n")

    advised = recommended_n(TechnologyParams(128, 64), EconomicParams(2000, 15))
    out.write(f"# recommended N for the 1997 reference economics: {advised:.6g} s\n")


if __name__ == "__main__":
    main()
