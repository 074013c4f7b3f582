"""Command-line interface.

Subcommands:
  run      execute an (algorithm x problem x seeds) grid and write results
  compare  recompute statistics over an existing output directory
  list     show the problem and algorithm registries

A config file (INI, section [run]) can supply any `run` option; explicit
flags win over the file.
"""

from __future__ import annotations

import argparse
import configparser
import sys

from .harness import (ALGORITHMS, ExperimentSpec, compare_directory,
                      run_experiment)
from .problems import available_problems


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="famv",
                                     description="Mixed-variable firefly optimization harness")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment grid")
    run.add_argument("--problem", action="append", default=None,
                     help="problem name (repeatable)")
    run.add_argument("--algo", action="append", default=None,
                     help="algorithm name (repeatable)")
    run.add_argument("--runs", type=int, default=None)
    run.add_argument("--budget", type=int, default=None,
                     help="FE budget; defaults depend on the problem class")
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--out", default=None, help="output directory")
    run.add_argument("--config", default=None, help="INI config file")
    run.add_argument("--stride", type=int, default=None, help="trace sampling stride")
    run.add_argument("--dim", type=int, default=None, help="synthetic problem dimension")

    cmp_cmd = sub.add_parser("compare", help="stats over existing summaries")
    cmp_cmd.add_argument("--in", dest="in_dir", required=True)

    sub.add_parser("list", help="list problems and algorithms")
    return parser


def _spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
    settings = {
        "problem": None, "algo": None, "runs": 30, "budget": None,
        "seed": 0, "out": None, "stride": 250, "dim": 50,
    }
    if args.config:
        cfg = configparser.ConfigParser()
        if not cfg.read(args.config):
            raise ValueError(f"cannot read config file {args.config!r}")
        section = cfg["run"] if cfg.has_section("run") else cfg["DEFAULT"]
        for key in settings:
            if key in section:
                value = section[key]
                if key in ("problem", "algo"):
                    settings[key] = [v.strip() for v in value.split(",") if v.strip()]
                elif key == "out":
                    settings[key] = value
                else:
                    settings[key] = int(value)
    for key, arg_name in (("problem", "problem"), ("algo", "algo"),
                          ("runs", "runs"), ("budget", "budget"),
                          ("seed", "seed"), ("out", "out"),
                          ("stride", "stride"), ("dim", "dim")):
        value = getattr(args, arg_name)
        if value is not None:
            settings[key] = value
    if not settings["problem"]:
        raise ValueError("no problems given (use --problem or a config file)")
    if not settings["algo"]:
        raise ValueError("no algorithms given (use --algo or a config file)")
    if not settings["out"]:
        raise ValueError("no output directory given (use --out or a config file)")
    return ExperimentSpec(problems=settings["problem"],
                          algorithms=settings["algo"],
                          out_dir=settings["out"],
                          runs=settings["runs"],
                          budget=settings["budget"],
                          base_seed=settings["seed"],
                          stride=settings["stride"],
                          dim=settings["dim"])


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            spec = _spec_from_args(args)
            run_experiment(spec)
            print(f"wrote results to {spec.out_dir}")
        elif args.command == "compare":
            compare_directory(args.in_dir)
            print(f"wrote results to {args.in_dir}")
        elif args.command == "list":
            print("problems:")
            for name in available_problems():
                print(f"  {name}")
            print("algorithms:")
            for name in ALGORITHMS:
                print(f"  {name}")
    except (KeyError, ValueError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
