"""Simplicial complexes with dimension windowing.

A complex stores only the simplices whose dimension lies in an inclusive
window [lo, hi]; that is all degree-r homology needs (window [r-1, r+1])
and it keeps the hardness-gadget complexes, whose full face posets are
exponential, at desk scale.  Simplices are sorted vertex tuples; within
each dimension indices follow lexicographic vertex order, so chains and
matrices serialize stably.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InputError
from .gf2 import GF2Matrix, GF2Vector

__all__ = [
    "Simplex",
    "Chain",
    "Complex",
    "build_complex",
    "boundary_matrix",
    "evaluate",
    "remove_closure",
    "r_adjacency",
    "dual_graph",
    "is_closed_surface",
]

Simplex = Tuple[int, ...]


def _check_simplex(s: Sequence[int]) -> Simplex:
    t = tuple(s)
    if any(v < 0 for v in t):
        raise InputError(f"negative vertex id in simplex {t}")
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        raise InputError(f"simplex vertices not strictly increasing: {t}")
    return t


@dataclass(frozen=True)
class Chain:
    """A set of same-dimension simplices of one complex, as an index bitset."""

    dimension: int
    support: GF2Vector

    def __xor__(self, other: "Chain") -> "Chain":
        if self.dimension != other.dimension:
            raise InputError("chain dimension mismatch")
        return Chain(self.dimension, self.support ^ other.support)

    def __len__(self) -> int:
        return self.support.weight()


class Complex:
    """Immutable windowed simplicial complex.

    Construct via :func:`build_complex`; the raw constructor expects
    already-closed per-dimension simplex lists.
    """

    __slots__ = ("lo", "hi", "simplices", "index", "weights")

    def __init__(
        self,
        lo: int,
        hi: int,
        simplices: Dict[int, List[Simplex]],
        weights: Optional[Dict[Simplex, float]] = None,
    ):
        if lo < 0 or hi < lo:
            raise InputError(f"bad dimension window [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.simplices: Dict[int, Tuple[Simplex, ...]] = {}
        self.index: Dict[int, Dict[Simplex, int]] = {}
        for p in range(lo, hi + 1):
            lst = sorted(set(simplices.get(p, ())))
            self.simplices[p] = tuple(lst)
            self.index[p] = {s: i for i, s in enumerate(lst)}
        # closure check within the window
        for p in range(lo + 1, hi + 1):
            below = self.index[p - 1]
            for s in self.simplices[p]:
                for f in combinations(s, p):
                    if f not in below:
                        raise InputError(f"missing face {f} of {s}")
        self.weights: Dict[Simplex, float] = {}
        if weights:
            if not (lo <= 1 <= hi):
                raise InputError("edge weights given but dimension 1 not in window")
            for e, w in weights.items():
                e = _check_simplex(e)
                if e not in self.index[1]:
                    raise InputError(f"weight given for non-edge {e}")
                if w < 0:
                    raise InputError(f"negative weight on edge {e}")
                self.weights[e] = w

    def n(self, p: int) -> int:
        """Number of p-simplices (0 outside the window)."""
        return len(self.simplices.get(p, ()))

    def edge_weight(self, e: Simplex) -> float:
        return self.weights.get(e, 1)

    def chain(self, dimension: int, members: Iterable[Sequence[int]]) -> Chain:
        """Chain from explicit simplices (must exist in this complex)."""
        if dimension not in self.simplices:
            raise InputError(f"dimension {dimension} outside window")
        bits = 0
        idx = self.index[dimension]
        for m in members:
            s = _check_simplex(m)
            if s not in idx:
                raise InputError(f"simplex {s} not in complex")
            bits |= 1 << idx[s]
        return Chain(dimension, GF2Vector(self.n(dimension), bits))

    def chain_from_bits(self, dimension: int, bits: int) -> Chain:
        return Chain(dimension, GF2Vector(self.n(dimension), bits))

    def members(self, c: Chain) -> List[Simplex]:
        """The simplices in a chain's support, in index order."""
        out = []
        bits = c.support.bits
        simp = self.simplices[c.dimension]
        while bits:
            i = (bits & -bits).bit_length() - 1
            out.append(simp[i])
            bits &= bits - 1
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Complex)
            and self.lo == other.lo
            and self.hi == other.hi
            and self.simplices == other.simplices
            and self.weights == other.weights
        )

    def __repr__(self) -> str:
        counts = ", ".join(f"n_{p}={self.n(p)}" for p in range(self.lo, self.hi + 1))
        return f"Complex([{self.lo},{self.hi}]; {counts})"


def build_complex(
    top_simplices: Iterable[Sequence[int]],
    window: Tuple[int, int],
    weights: Optional[Dict[Simplex, float]] = None,
) -> Complex:
    """Complex containing the given simplices and all their in-window faces."""
    lo, hi = window
    tops = [_check_simplex(s) for s in top_simplices]
    if len(set(tops)) != len(tops):
        raise InputError("duplicate top simplices")
    per_dim: Dict[int, set] = {p: set() for p in range(lo, hi + 1)}
    for s in tops:
        d = len(s) - 1
        if d > hi:
            raise InputError(f"top simplex {s} above window [{lo},{hi}]")
        for p in range(lo, d + 1):
            per_dim[p].update(combinations(s, p + 1))
    return Complex(lo, hi, {p: sorted(v) for p, v in per_dim.items()}, weights)


def boundary_matrix(K: Complex, p: int) -> GF2Matrix:
    """The p-th boundary operator; the zero map (0 rows) at the window floor."""
    if not (K.lo <= p <= K.hi):
        raise InputError(f"dimension {p} outside window [{K.lo},{K.hi}]")
    if p == K.lo:
        return GF2Matrix(0, [0] * K.n(p))
    rows = K.index[p - 1]
    cols = []
    for s in K.simplices[p]:
        bits = 0
        for f in combinations(s, p):
            bits |= 1 << rows[f]
        cols.append(bits)
    return GF2Matrix(K.n(p - 1), cols)


def evaluate(eta: Chain, zeta: Chain) -> int:
    """Cochain-on-chain evaluation: parity of the common support."""
    if eta.dimension != zeta.dimension:
        raise InputError("evaluate: dimension mismatch")
    if eta.support.length != zeta.support.length:
        raise InputError("evaluate: chains from different complexes")
    return (eta.support.bits & zeta.support.bits).bit_count() & 1


def remove_closure(K: Complex, S: Chain) -> Tuple[Complex, Dict[int, Dict[int, int]]]:
    """K minus the simplices of S and all their in-window cofaces.

    Returns (K_S, old index -> new index per dimension); removed simplices
    have no entry in the map.
    """
    p = S.dimension
    if p not in K.simplices:
        raise InputError(f"dimension {p} outside window")
    doomed = [frozenset(s) for s in K.members(S)]
    survivors: Dict[int, List[Simplex]] = {}
    mapping: Dict[int, Dict[int, int]] = {}
    for q in range(K.lo, K.hi + 1):
        kept = []
        remap = {}
        for i, s in enumerate(K.simplices[q]):
            if q >= p:
                fs = frozenset(s)
                if any(d <= fs for d in doomed):
                    continue
            remap[i] = len(kept)
            kept.append(s)
        survivors[q] = kept
        mapping[q] = remap
    weights = {e: w for e, w in K.weights.items() if e in set(survivors.get(1, ()))}
    return Complex(K.lo, K.hi, survivors, weights or None), mapping


def r_adjacency(K: Complex, r: int) -> Dict[int, set]:
    """Share-a-cofacet adjacency on r-simplex indices.

    One hop here equals distance 2 in the Hasse graph (facet-cofacet graph).
    """
    if not (K.lo <= r <= K.hi):
        raise InputError(f"dimension {r} outside window")
    adj: Dict[int, set] = {i: set() for i in range(K.n(r))}
    if r + 1 > K.hi:
        return adj
    idx = K.index[r]
    for s in K.simplices[r + 1]:
        facets = [idx[f] for f in combinations(s, r + 1)]
        for a, b in combinations(facets, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def is_closed_surface(K: Complex) -> bool:
    """Every edge has exactly two triangles and every vertex link is a circle."""
    if K.lo > 0 or K.hi < 2:
        return False
    edge_cofacets: Dict[Simplex, List[Simplex]] = {e: [] for e in K.simplices[1]}
    for t in K.simplices[2]:
        for e in combinations(t, 2):
            if e not in edge_cofacets:
                return False
            edge_cofacets[e].append(t)
    if any(len(ts) != 2 for ts in edge_cofacets.values()):
        return False
    for (v,) in K.simplices[0]:
        link_edges = []
        for t in K.simplices[2]:
            if v in t:
                link_edges.append(tuple(u for u in t if u != v))
        if not link_edges:
            return False
        deg: Dict[int, int] = {}
        for a, b in link_edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(d != 2 for d in deg.values()):
            return False
        # connected check on the link graph
        nodes = list(deg)
        seen = {nodes[0]}
        frontier = [nodes[0]]
        neigh: Dict[int, List[int]] = {u: [] for u in nodes}
        for a, b in link_edges:
            neigh[a].append(b)
            neigh[b].append(a)
        while frontier:
            u = frontier.pop()
            for w in neigh[u]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != len(nodes):
            return False
    return True


def dual_graph(K: Complex):
    """Dual graph of a closed surface: one node per triangle, one graph edge
    per primal edge.  Returns (adjacency dict, list of (t1, t2, primal edge
    index) triples aligned with the primal edge indexing).
    """
    if not is_closed_surface(K):
        raise InputError("dual_graph requires a closed surface")
    tri_idx = K.index[2]
    adj: Dict[int, set] = {i: set() for i in range(K.n(2))}
    edges = []
    cof: Dict[Simplex, List[int]] = {e: [] for e in K.simplices[1]}
    for t in K.simplices[2]:
        for e in combinations(t, 2):
            cof[e].append(tri_idx[t])
    for ei, e in enumerate(K.simplices[1]):
        a, b = cof[e]
        adj[a].add(b)
        adj[b].add(a)
        edges.append((a, b, ei))
    return adj, edges
