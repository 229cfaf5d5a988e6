"""Regenerate the standard data tables (no plotting) into a directory."""

import argparse
import logging
from pathlib import Path

from src.constants import Command, Engine, OutputFormat
from src.schemas.run import GraphSource, RunConfig
from src.storage import ResultStore
from src.workflow import run_command

NETWORK9 = Path(__file__).resolve().parent.parent / "networks" / "network9.txt"

TABLES = {
    "chain9_exact_vs_analytic": dict(
        command=Command.CORRELATE, graph="chain:9", engine=Engine.COMPARE,
        tmin=1e-3, tmax=1.0, tsteps=60, tlog=True,
    ),
    "chain9_exact_vs_analytic_delta5": dict(
        command=Command.CORRELATE, graph="chain:9", engine=Engine.COMPARE, delta=5.0,
        tmin=1e-3, tmax=1.0, tsteps=60, tlog=True,
    ),
    "network9_analytic": dict(
        command=Command.CORRELATE, graph=f"file:{NETWORK9}", engine=Engine.ANALYTIC,
        tmin=1e-2, tmax=1.0, tsteps=60, tlog=True,
    ),
    "network9_leading": dict(command=Command.LEADING, graph=f"file:{NETWORK9}"),
    "chain_front_far": dict(
        command=Command.FRONT, graph="chain:10450", sites="10250-10450",
        tmin=1360.0, tmax=1400.0, tsteps=21, asymptotic=True,
    ),
    "lattice2d_snapshot": dict(command=Command.FRONT, graph="lattice2d:40", tmin=11.0, tsteps=1),
    "chain_velocity_saturation": dict(command=Command.VELOCITY, graph="chain:200", cthresh=1e-25),
    "chain9_velocity_exact": dict(
        command=Command.VELOCITY, graph="chain:9", engine=Engine.EXACT, targets="1-9",
        cthresh=1e-25, tmax=0.1,
    ),
    "velocity_profile_2d": dict(command=Command.VELOCITY, graph="chain:1", profile="2d", steps=64),
    "velocity_profile_3d": dict(command=Command.VELOCITY, graph="chain:1", profile="3d", steps=16),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", nargs="?", default="figure-data")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    store = ResultStore(args.out_dir)
    fmt = OutputFormat(args.format)
    for name, options in TABLES.items():
        options = dict(options)
        graph = GraphSource.from_text(options.pop("graph"))
        table = run_command(RunConfig(graph=graph, format=fmt, **options))
        path = store.write_table(table, f"{name}.{fmt.value}", fmt)
        print(f"Wrote {path}")


if __name__ == "__main__":
    main()
