"""Certifying 3-edge-connectivity via chain decompositions and Mader sequences."""

from .cactus import Cactus, NotTwoEdgeConnected, build_cactus, three_edge_components, verify_cactus
from .certificate import Certificate
from .chains import chain_decomposition
from .graph import GraphFormatError, MultiGraph, load_graph, parse_graph, read_graph_file
from .greedy import run_greedy
from .linear import run as run_linear
from .verify import verify_certificate


def certify(g: MultiGraph, algo: str = "linear", root: int = 0) -> Certificate:
    """Mader sequence if ``g`` is 3-edge-connected, else a cut of size at most two."""
    if algo == "greedy":
        return run_greedy(g, root)
    if algo != "linear":
        raise ValueError(f"unknown algorithm {algo!r}")
    return run_linear(g, root)


__all__ = [
    "Cactus",
    "Certificate",
    "GraphFormatError",
    "MultiGraph",
    "NotTwoEdgeConnected",
    "build_cactus",
    "certify",
    "chain_decomposition",
    "load_graph",
    "parse_graph",
    "read_graph_file",
    "run_greedy",
    "run_linear",
    "three_edge_components",
    "verify_cactus",
    "verify_certificate",
]
