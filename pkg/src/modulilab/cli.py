"""Command line entry point: `moduli-lab run <experiment> [options]`.

Exit status 0 when the experiment's internal checks pass, 1 when they
fail, 2 on usage errors.  With the same seed two runs produce byte
identical reports.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .experiments import (
    DEFAULT_SEED,
    REGISTRY,
    ExperimentOptions,
    render_report,
    run_experiment,
)

SEED_ENV_VAR = "MODULI_LAB_SEED"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moduli-lab",
        description="reproducible experiments over the moduli models",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run one named experiment")
    run.add_argument("experiment", choices=sorted(REGISTRY),
                     help="which experiment to run")
    run.add_argument("--tol", type=float, default=1e-9,
                     help="numerical tolerance (default 1e-9)")
    run.add_argument("--bound", type=int, default=2,
                     help="max |entry| in lattice witness searches (default 2)")
    run.add_argument("--grid", type=int, default=41,
                     help="sampling resolution knob (default 41)")
    run.add_argument("--seed", type=int, default=None,
                     help=f"RNG seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})")
    run.add_argument("--out", type=str, default=None,
                     help="write the report to this path instead of stdout")
    run.add_argument("--format", choices=("structured", "table"),
                     default="structured", help="report rendering")
    run.add_argument("--variant",
                     choices=("transpose_split", "interval_alternating"),
                     default="transpose_split",
                     help="torus gluing pattern (torus-counterexample only)")
    run.add_argument("--n", type=int, default=None,
                     help="covering degree parameter (jets/density experiments)")
    run.add_argument("--m", type=int, default=None,
                     help="second degree parameter (jets/density experiments)")
    run.add_argument("--model",
                     choices=("all", "hopf", "torus", "hirzebruch-f2"),
                     default="all", help="which model to stratify")
    return parser


def _resolve_seed(cli_seed: Optional[int]) -> int:
    if cli_seed is not None:
        return cli_seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise SystemExit(f"moduli-lab: bad {SEED_ENV_VAR}={env!r}: {exc}")
    return DEFAULT_SEED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = ExperimentOptions(
        tol=args.tol,
        bound=args.bound,
        grid=args.grid,
        seed=_resolve_seed(args.seed),
        variant=args.variant,
        n=args.n,
        m=args.m,
        model=args.model,
    )
    report = run_experiment(args.experiment, opts)
    text = render_report(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
