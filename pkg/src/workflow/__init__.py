"""Workflow package: command implementations behind the CLI."""

from .commands import (
    COMMANDS,
    cmd_correlate,
    cmd_front,
    cmd_leading,
    cmd_velocity,
    resolve_graph,
    run_command,
)

__all__ = [
    "COMMANDS",
    "cmd_correlate",
    "cmd_front",
    "cmd_leading",
    "cmd_velocity",
    "resolve_graph",
    "run_command",
]
