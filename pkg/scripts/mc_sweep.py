#!/usr/bin/env python3
"""Sweep the Monte-Carlo Erlang moment estimator over (r, k) and report the
z-score against the exact rising-factorial moment."""

import argparse

from derange.stochastic import erlang_moment_exact, mc_moment


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--rmax", type=int, default=5)
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--samples", type=int, default=10 ** 6)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    print(f"{'r':>2} {'k':>2} {'exact':>12} {'estimate':>16} "
          f"{'stderr':>12} {'z':>8}")
    for r in range(1, args.rmax + 1):
        for k in range(args.kmax + 1):
            est = mc_moment(r, k, args.samples, args.seed)
            exact = erlang_moment_exact(r, k)
            z = 0.0 if est.stderr == 0 else (est.mean - exact) / est.stderr
            print(f"{r:>2} {k:>2} {exact:>12} {est.mean:>16.6f} "
                  f"{est.stderr:>12.6f} {z:>8.2f}")


if __name__ == "__main__":
    main()
