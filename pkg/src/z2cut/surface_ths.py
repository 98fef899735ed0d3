"""Polynomial-time topological hitting set on closed surfaces.

Minimal solutions on surfaces are nontrivial cocycles that trace a circle
in the dual graph, so it suffices to compute a minimum-weight cocycle
basis and pick the lightest element with odd pairing against the input
cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .complexes import Chain, Complex, boundary_matrix, dual_graph, evaluate
from .errors import InputError, InternalError
from .feasibility import FeasibilityReport, is_ths_feasible, _require_nonbounding
from .gf2 import in_colspace
from .homology import WeightedChain, _coboundary0, min_cohomology_basis

__all__ = [
    "SurfaceTHSResult",
    "solve_ths_surface",
    "is_connected_cocycle",
    "classify_cocycle",
]


@dataclass(frozen=True)
class SurfaceTHSResult:
    solution: Chain
    weight: float
    basis_index: int
    certificate: FeasibilityReport


def _delta1_applied(K: Complex, eta: Chain) -> bool:
    """True iff the coboundary of eta vanishes (eta is a 1-cocycle)."""
    bits = eta.support.bits
    for col in boundary_matrix(K, 2).cols:
        if (col & bits).bit_count() & 1:
            return False
    return True


def is_connected_cocycle(K: Complex, eta: Chain) -> bool:
    """A nonempty 1-cocycle whose edges induce a connected dual subgraph."""
    if eta.dimension != 1:
        raise InputError("connected cocycles live in dimension 1")
    if eta.support.bits == 0 or not _delta1_applied(K, eta):
        return False
    _, dedges = dual_graph(K)
    nodes: set = set()
    adj: Dict[int, set] = {}
    for a, b, ei in dedges:
        if eta.support.get(ei):
            nodes.update((a, b))
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    start = next(iter(nodes))
    seen = {start}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen == nodes


def classify_cocycle(K: Complex, eta: Chain) -> str:
    """One of 'not-cocycle', 'trivial-cocycle', 'nontrivial-cocycle'."""
    if eta.dimension != 1:
        raise InputError("classification is for 1-cochains")
    if not _delta1_applied(K, eta):
        return "not-cocycle"
    if in_colspace(_coboundary0(K), eta.support):
        return "trivial-cocycle"
    return "nontrivial-cocycle"


def solve_ths_surface(K: Complex, zeta: Chain) -> SurfaceTHSResult:
    """Smallest-weight basis cocycle pairing oddly with the input class."""
    if zeta.dimension != 1:
        raise InputError("surface hitting set runs in dimension 1")
    _require_nonbounding(K, zeta)
    basis = min_cohomology_basis(K)
    for i, wc in enumerate(basis):
        if evaluate(wc.chain, zeta):
            cert = is_ths_feasible(K, zeta, wc.chain)
            if not cert.verdict:
                raise InternalError("selected basis cocycle is not feasible")
            return SurfaceTHSResult(wc.chain, wc.weight, i, cert)
    raise InternalError("no basis cocycle pairs oddly with a nontrivial cycle")
