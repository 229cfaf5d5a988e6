"""Command-line front end for Lieb-Robinson correlation fronts.

    lrfront <correlate|front|velocity|leading> [--graph chain:N | lattice2d:N | lattice3d:N | file:PATH]
            [--delta D] [--ref J] [--target K | --targets LIST] [--tmin T --tmax T --tsteps N --tlog]
            [--engine exact|series|analytic|compare] [--order NMAX] [--cthresh C] [--clip LOG10]
            [--format csv|json] [--out PATH]
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .config import get_settings
from .constants import DEFAULT_CLIP_LOG10, EXIT_PARSE_ERROR, Command, Engine, OutputFormat
from .errors import LRFrontError
from .schemas.run import GraphSource, RunConfig
from .storage.results import ResultStore, render
from .workflow.commands import run_command

logger = logging.getLogger("lrfront")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrfront",
        description="Lieb-Robinson correlations of ZZ-coupled qubit arrays (times in units of tau = pi*hbar/gamma).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--graph", default="chain:9", help="chain:N | lattice2d:N | lattice3d:N | file:PATH")
    parser.add_argument("--delta", type=float, default=1.0, help="Delta/gamma for builtin graphs")
    parser.add_argument("--ref", type=int, default=1, help="Reference qubit j (lattices use the origin)")

    targets = parser.add_mutually_exclusive_group()
    targets.add_argument("--target", type=str, help="Single target qubit (or n:m[:p] on lattices)")
    targets.add_argument("--targets", type=str, help="Target list, e.g. 1,3,5-9 or 2:1,3:3")

    parser.add_argument("--tmin", type=float, default=0.0)
    parser.add_argument("--tmax", type=float, default=0.1)
    parser.add_argument("--tsteps", type=int, default=50)
    parser.add_argument("--tlog", action="store_true", help="Log-spaced time grid")
    parser.add_argument("--engine", choices=[e.value for e in Engine], default=None)
    parser.add_argument("--order", type=int, default=12, help="Series truncation order")
    parser.add_argument("--cthresh", type=float, default=1e-25, help="Threshold correlation")
    parser.add_argument("--clip", type=float, default=DEFAULT_CLIP_LOG10, help="Snapshot clip level (log10)")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--out", type=str, default=None, help="Output path (standard output when absent)")

    scale = parser.add_mutually_exclusive_group()
    scale.add_argument("--log10", dest="log10", action="store_true", default=None, help="Emit log10 values")
    scale.add_argument("--linear", dest="log10", action="store_false", help="Emit linear values")

    parser.add_argument("--profile", choices=["2d", "3d"], default=None, help="Angular velocity profile")
    parser.add_argument("--steps", type=int, default=64, help="Angle steps for --profile")
    parser.add_argument("--angles", type=str, default=None, help="Directions theta[:phi],... for --profile")
    parser.add_argument("--degrees", action="store_true", help="Angles in degrees instead of radians")
    parser.add_argument("--ray", type=str, default=None, help="Lattice step of a velocity ray, e.g. 1:1")
    parser.add_argument("--sites", type=str, default=None, help="Chain sites for snapshots, e.g. 10250-10450")
    parser.add_argument("--asymptotic", action="store_true", help="Add large-k comparison columns to chain snapshots")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments into a RunConfig."""
    return RunConfig(
        command=Command(args.command),
        graph=GraphSource.from_text(args.graph),
        engine=Engine(args.engine) if args.engine else None,
        delta=args.delta,
        ref=args.ref,
        targets=args.targets if args.targets is not None else args.target,
        tmin=args.tmin,
        tmax=args.tmax,
        tsteps=args.tsteps,
        tlog=args.tlog,
        order=args.order,
        cthresh=args.cthresh,
        clip=args.clip,
        format=OutputFormat(args.format),
        out=args.out,
        log10=args.log10,
        profile=args.profile,
        steps=args.steps,
        angles=args.angles,
        degrees=args.degrees,
        ray=args.ray,
        sites=args.sites,
        asymptotic=args.asymptotic,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit status."""
    args = build_parser().parse_args(argv)
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = config_from_args(args)
        table = run_command(config)
        text = render(table, config.format)
        if config.out:
            ResultStore().write_text(config.out, text)
        else:
            sys.stdout.write(text)
        return table.exit_code
    except ValidationError as exc:
        logger.error("invalid options: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except LRFrontError as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
