"""Brute-force ground truth: homologous-cycle/coset enumeration and the
definition-level hitting-set searches that certify every solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set

from .complexes import Chain, Complex, boundary_matrix, dual_graph
from .errors import InputError, ResourceError
from .feasibility import is_ths_feasible
from .gf2 import column_space_pivots, kernel_basis, solve
from .homology import _boundary_or_zero

__all__ = [
    "OracleBudget",
    "enumerate_homologous",
    "enumerate_boundary_chains",
    "brute_ths",
    "brute_bnt",
    "brute_ths_surface",
]


@dataclass(frozen=True)
class OracleBudget:
    max_enumeration: int = 1 << 22
    max_subset_size: int = 16


def enumerate_homologous(K: Complex, zeta: Chain, budget: OracleBudget = OracleBudget()) -> List[Chain]:
    """All cycles homologous to zeta: one representative per boundary."""
    r = zeta.dimension
    B = _boundary_or_zero(K, r + 1)
    pivots = column_space_pivots(B)
    if 1 << len(pivots) > budget.max_enumeration:
        raise ResourceError(f"2^{len(pivots)} homologous cycles exceed budget")
    reps = [0]
    for j in pivots:
        reps += [b ^ B.cols[j] for b in reps]
    return [K.chain_from_bits(r, zeta.support.bits ^ b) for b in reps]


def enumerate_boundary_chains(K: Complex, zeta: Chain, budget: OracleBudget = OracleBudget()) -> List[Chain]:
    """The full solution coset {x : boundary(x) = zeta} in dimension r+1."""
    r = zeta.dimension
    B = _boundary_or_zero(K, r + 1)
    x0 = solve(B, zeta.support)
    if x0 is None:
        raise InputError("chain does not bound in this complex")
    ker = kernel_basis(B)
    if 1 << ker.ncols > budget.max_enumeration:
        raise ResourceError(f"2^{ker.ncols} bounding chains exceed budget")
    out = [x0.bits]
    for z in ker.cols:
        out += [x ^ z for x in out]
    return [K.chain_from_bits(r + 1, x) for x in out]


def _min_hitting_set(K: Complex, dim: int, targets: List[int], kmax: int, budget: OracleBudget) -> Optional[Chain]:
    """Smallest (size, then lexicographic) index subset intersecting every target."""
    n = K.n(dim)
    if kmax > budget.max_subset_size:
        raise ResourceError(f"subset size {kmax} exceeds budget")
    for size in range(kmax + 1):
        for combo in combinations(range(n), size):
            bits = 0
            for i in combo:
                bits |= 1 << i
            if all(t & bits for t in targets):
                return K.chain_from_bits(dim, bits)
    return None


def brute_ths(K: Complex, zeta: Chain, kmax: int, budget: OracleBudget = OracleBudget()) -> Optional[Chain]:
    """Definition-level THS: hit every cycle homologous to zeta."""
    cycles = enumerate_homologous(K, zeta, budget)
    targets = [c.support.bits for c in cycles]
    if any(t == 0 for t in targets):
        raise InputError("zeta is bounding; the zero cycle cannot be hit")
    return _min_hitting_set(K, zeta.dimension, targets, kmax, budget)


def brute_bnt(K: Complex, zeta: Chain, kmax: int, budget: OracleBudget = OracleBudget()) -> Optional[Chain]:
    """Definition-level BNT: hit every chain whose boundary is zeta."""
    if zeta.support.bits == 0:
        return None  # the empty chain always bounds zero; unsatisfiable
    chains = enumerate_boundary_chains(K, zeta, budget)
    targets = [c.support.bits for c in chains]
    if any(t == 0 for t in targets):
        return None
    return _min_hitting_set(K, zeta.dimension + 1, targets, kmax, budget)


def _simple_cycles_upto(adj: Dict[int, Set[int]], max_len: int) -> List[frozenset]:
    """All simple cycles of a graph, as frozensets of (u,v) node pairs,
    with at most max_len edges."""
    out: Set[frozenset] = set()
    nodes = sorted(adj)
    for start in nodes:
        stack = [(start, [start])]
        while stack:
            u, path = stack.pop()
            for v in sorted(adj[u]):
                if v == start and len(path) >= 3:
                    out.add(frozenset((min(a, b), max(a, b)) for a, b in zip(path, path[1:] + [start])))
                elif v > start and v not in path and len(path) < max_len:
                    stack.append((v, path + [v]))
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def brute_ths_surface(K: Complex, zeta: Chain, wmax: Optional[int] = None) -> Optional[Chain]:
    """Exact THS optimum on a closed surface by exhausting circle subgraphs
    of the dual graph (minimal solutions have that shape) in weight order.

    Tractable where full subset enumeration is not; unit weights assumed.
    """
    adj, dedges = dual_graph(K)
    pair_to_edge = {(min(a, b), max(a, b)): ei for a, b, ei in dedges}
    limit = wmax if wmax is not None else K.n(1)
    best: Optional[Chain] = None
    for cyc in _simple_cycles_upto(adj, limit):
        if best is not None and len(cyc) >= len(best):
            continue
        bits = 0
        for pair in cyc:
            bits |= 1 << pair_to_edge[pair]
        S = K.chain_from_bits(1, bits)
        if is_ths_feasible(K, zeta, S).verdict:
            best = S
    return best
