"""Exact solver for pumpkin vertex deletion.

A pumpkin is a directed graph that is a union of induced s->t paths whose
internal vertices are pairwise disjoint.  The solver decides whether at most
k vertex deletions leave a pumpkin, returns the deletion set when the answer
is yes, and ships a brute-force oracle and instance generators for testing.
"""

from ._core import (
    Digraph,
    GraphError,
    MixedDirectEdgeError,
    ParseError,
    PumpkinVerdict,
    TooLargeError,
    brute_force_pvds,
    brute_force_rpvds,
    check_pumpkin,
    is_pumpkin,
    make_planted,
    make_pumpkin,
    random_digraph,
    read_edge_list,
    solve_pvds,
    solve_rpvds,
    write_edge_list,
)

__all__ = [
    "Digraph",
    "GraphError",
    "MixedDirectEdgeError",
    "ParseError",
    "PumpkinVerdict",
    "TooLargeError",
    "brute_force_pvds",
    "brute_force_rpvds",
    "check_pumpkin",
    "is_pumpkin",
    "make_planted",
    "make_pumpkin",
    "random_digraph",
    "read_edge_list",
    "solve_pvds",
    "solve_rpvds",
    "write_edge_list",
]
