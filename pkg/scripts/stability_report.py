#!/usr/bin/env python3
"""Emit the seed-stability report for a workspace.

Retrains once per seed, so expect minutes on full-size corpora. Example:

    python3 scripts/stability_report.py WORKSPACE --out reports \\
        --seeds 1,2,3,4,5,6,7,8,9,10 --theta 0.5 --k 2 \\
        --seed-label mother --probes brother,know
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from valuescope.embedding.model import Hyperparams
from valuescope.generalize import Strategy
from valuescope.stability import report_csv, report_markdown, seed_stability
from valuescope.workspace import open_workspace


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("workspace", type=Path)
    parser.add_argument("--out", type=Path, required=True)
    parser.add_argument("--strategy", default="snowball")
    parser.add_argument("--seeds", default="1,2,3,4,5,6,7,8,9,10")
    parser.add_argument("--theta", type=float, default=0.5)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--seed-label", default="mother")
    parser.add_argument("--probes", default=None,
                        help="comma list; default reports every observed companion")
    parser.add_argument("--dimension", type=int, default=24)
    parser.add_argument("--window", type=int, default=3)
    parser.add_argument("--epochs", type=int, default=60)
    parser.add_argument("--min-count", type=int, default=2)
    parser.add_argument("--subsample", type=float, default=0.01)
    args = parser.parse_args()

    workspace = open_workspace(args.workspace)
    hyperparams = Hyperparams(
        dimension=args.dimension,
        window=args.window,
        epochs_compass=args.epochs,
        epochs_slice=args.epochs,
        min_count=args.min_count,
        subsample=args.subsample,
    )
    seeds = [int(s) for s in args.seeds.split(",")]
    probes = args.probes.split(",") if args.probes else None
    report = seed_stability(
        workspace,
        Strategy(args.strategy),
        hyperparams,
        seeds,
        theta=args.theta,
        k=args.k,
        seed_label=args.seed_label,
        probes=probes,
        log=lambda message: print(message, file=sys.stderr),
    )
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "stability.csv").write_text(report_csv(report), encoding="utf-8")
    (args.out / "stability.md").write_text(report_markdown(report), encoding="utf-8")
    print(f"wrote {args.out / 'stability.csv'}")
    print(f"wrote {args.out / 'stability.md'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
