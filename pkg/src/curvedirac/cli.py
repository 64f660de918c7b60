"""Batch command-line interface.

Subcommands:
    run <config> [--out DIR]                 propagate a config file
    preset <exp1..exp6> [--scale ci|paper] [--out DIR]
    converge <config> --sweep h|dt --values v1,v2,... [--out FILE]
    norms <config>                           diagnostics only, no snapshots
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigurationError, SimulationError
from . import harness


def _load(path) -> harness.RunConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return harness.parse_config(fh.read())


def _print_summary(res):
    first, last = res.diagnostics[0], res.diagnostics[-1]
    print(f"steps: {last.step}   t: {last.t:g}")
    print(f"l2:       {first.l2:.9e} -> {last.l2:.9e}")
    print(f"l2_gamma: {first.l2_gamma:.9e} -> {last.l2_gamma:.9e}")
    if res.snapshots:
        print(f"snapshots: {len(res.snapshots)} files")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="curvedirac",
        description="Pseudospectral Dirac propagation on static curved backgrounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="propagate a config file")
    p_run.add_argument("config")
    p_run.add_argument("--out", default=None, help="output directory override")

    p_pre = sub.add_parser("preset", help="run a shipped experiment preset")
    p_pre.add_argument("name", choices=harness.PRESET_NAMES)
    p_pre.add_argument("--scale", choices=("ci", "paper"), default="ci")
    p_pre.add_argument("--out", default=None)

    p_con = sub.add_parser("converge", help="resolution sweep against a fine reference")
    p_con.add_argument("config")
    p_con.add_argument("--sweep", choices=("h", "dt"), required=True)
    p_con.add_argument("--values", required=True, help="comma-separated, descending")
    p_con.add_argument("--out", default=None, help="CSV output path")

    p_nrm = sub.add_parser("norms", help="run and print diagnostics only")
    p_nrm.add_argument("config")

    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            cfg = _load(args.config)
            if args.out:
                cfg = cfg.replace(out_dir=args.out)
            _print_summary(harness.run_simulation(cfg))
        elif args.command == "preset":
            cfg = harness.preset_config(args.name, args.scale)
            if args.out:
                cfg = cfg.replace(out_dir=args.out)
            _print_summary(harness.run_simulation(cfg))
        elif args.command == "converge":
            cfg = _load(args.config)
            values = [float(v) for v in args.values.split(",")]
            rows = harness.convergence_sweep(cfg, args.sweep, values,
                                             out_path=args.out or "")
            print("param,error")
            for p, e in rows:
                print(f"{p!r},{e!r}")
        elif args.command == "norms":
            cfg = _load(args.config).replace(out_dir="", stride=0)
            res = harness.run_simulation(cfg)
            print("step,t,l2,l2_gamma,krylov_iters")
            for r in res.diagnostics:
                k = "" if r.krylov_iters is None else r.krylov_iters
                print(f"{r.step},{r.t!r},{r.l2!r},{r.l2_gamma!r},{k}")
    except (ConfigurationError, SimulationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
