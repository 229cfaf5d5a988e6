"""Network package: coupling graphs, lattices, file ingestion and minimum paths."""

from .builders import build_chain, build_lattice, hamiltonian, lattice_coordinates, sigma_z
from .loader import load_network, to_network_json, to_network_text
from .paths import (
    enumerate_min_paths,
    group_degenerate_targets,
    min_path_summaries,
    min_path_summary,
    path_weight,
    to_networkx,
)

__all__ = [
    "build_chain",
    "build_lattice",
    "hamiltonian",
    "lattice_coordinates",
    "sigma_z",
    "load_network",
    "to_network_json",
    "to_network_text",
    "enumerate_min_paths",
    "group_degenerate_targets",
    "min_path_summaries",
    "min_path_summary",
    "path_weight",
    "to_networkx",
]
