"""Command-line front end.

Subcommands: check-cqc, check-ecqc, sweep-isotropic, suffcond-scatter,
dump-mubs, bound-audit.  Exit codes: 0 all trials HOLD (WARNs are
summarised on stderr), 1 any VIOLATION, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys

from .harness import (
    ConfigError,
    ExperimentConfig,
    HOLD_TOL_DEFAULT,
    STATE_KINDS,
    WARN_TOL_DEFAULT,
    run,
)


def _add_common(parser: argparse.ArgumentParser, with_trials: bool = True) -> None:
    parser.add_argument("--dim", type=int, required=True, help="prime local dimension")
    if with_trials:
        parser.add_argument(
            "--n-trials", "--n", dest="n_trials", type=int, default=None,
            help="number of trials (default: desk scale for the dimension)",
        )
        parser.add_argument(
            "--state-kind", "--state", dest="state_kind", choices=STATE_KINDS,
            default="mixed", help="state ensemble to sample",
        )
        parser.add_argument("--p-min", type=float, default=None, help="isotropic p lower bound")
        parser.add_argument("--p-max", type=float, default=None, help="isotropic p upper bound")
        parser.add_argument("--seed", type=int, default=None,
                            help="64-bit seed (omitted: drawn from OS entropy and printed)")
        parser.add_argument("--threads", type=int, default=0, help="worker threads, 0 = auto")
        parser.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        parser.add_argument("--hold-tol", type=float, default=HOLD_TOL_DEFAULT)
        parser.add_argument("--warn-tol", type=float, default=WARN_TOL_DEFAULT)
        parser.add_argument("--full", action="store_true", help="paper-scale trial counts")
        parser.add_argument("--alt-sanchez-constant", action="store_true",
                            help="use the weaker (d+1)(log2 d - 1) entropy-sum constant")
        parser.add_argument("--plot", action="store_true",
                            help="also write an SVG scatter next to the output file")
    parser.add_argument("--out-path", "--out", dest="out_path", default=None,
                        help="output file (default: <command>-d<dim>.<ext>)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mubcorr",
        description="Monte-Carlo and analytic checks of classical-vs-quantum "
                    "mutual-information inequalities under MUB measurements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("check-cqc", "two-basis inequality on random states"),
        ("check-ecqc", "full-family inequality on random states"),
        ("bound-audit", "verify the proven entropic bounds on random states"),
    ):
        _add_common(sub.add_parser(name, help=helptext))

    sweep = sub.add_parser("sweep-isotropic", help="analytic isotropic sweep over p")
    _add_common(sweep)
    sweep.add_argument("--p-steps", type=int, default=200, help="grid points in [p-min, p-max]")

    scatter = sub.add_parser("suffcond-scatter",
                             help="filtered separable d=2 states satisfying the sufficient condition")
    _add_common(scatter)

    dump = sub.add_parser("dump-mubs", help="print a MUB family as re,im CSV blocks")
    _add_common(dump, with_trials=False)
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    kwargs = {
        "command": args.command,
        "dim": args.dim,
        "out_path": args.out_path,
    }
    for name in ("n_trials", "state_kind", "p_min", "p_max", "p_steps", "seed", "threads",
                 "format", "hold_tol", "warn_tol", "full", "alt_sanchez_constant", "plot"):
        if hasattr(args, name):
            kwargs[name] = getattr(args, name)
    return ExperimentConfig(**kwargs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = run(config_from_args(args))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
