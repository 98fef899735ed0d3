"""Hardness-instance generators from properly colored graphs.

For a k-colored graph G on |V| = r+1 vertices, the hitting-set gadget is an
(r+1)-dimensional windowed complex whose small solutions for the input
cycle pick one vertex per color and one edge per color pair; the
boundary-nontrivialization gadget plays the same game one dimension down,
gluing subdivided simplex boundaries along distinguished faces.  In both,
"undesirable" simplices receive m-fold penalty structures that make them
uneconomical inside small solutions.
"""

from __future__ import annotations

import warnings

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .complexes import Chain, Complex, Simplex, build_complex
from .errors import InputError, InternalError

__all__ = [
    "ColoredGraph",
    "GadgetInstance",
    "gen_ths_gadget",
    "gen_bnt_gadget",
    "s_subdivide",
    "has_multicolored_clique",
    "ths_clique_solution",
    "bnt_clique_solution",
    "verify_gadget_answer",
]


@dataclass(frozen=True)
class ColoredGraph:
    """Properly colored graph; colors must be contiguous 1..k."""

    colors: Dict[int, int]
    edges: FrozenSet[FrozenSet[int]]

    def __post_init__(self) -> None:
        k = self.k
        if sorted(set(self.colors.values())) != list(range(1, k + 1)):
            raise InputError("colors must be contiguous 1..k")
        for e in self.edges:
            u, v = sorted(e)
            if u not in self.colors or v not in self.colors:
                raise InputError(f"edge {u},{v} uses an unknown vertex")
            if self.colors[u] == self.colors[v]:
                raise InputError(f"edge {u},{v} is monochromatic")

    @property
    def k(self) -> int:
        return max(self.colors.values(), default=0)

    def color_class(self, i: int) -> List[int]:
        return sorted(v for v, c in self.colors.items() if c == i)


@dataclass
class GadgetInstance:
    complex: Complex
    input_chain: Chain
    parameter: int
    legend: Dict[str, object] = field(default_factory=dict)


def has_multicolored_clique(G: ColoredGraph) -> Optional[Tuple[int, ...]]:
    """A clique with one vertex of each color, or None (exhaustive search)."""
    classes = [G.color_class(i) for i in range(1, G.k + 1)]
    if any(not c for c in classes):
        return None
    for combo in product(*classes):
        if all(frozenset((a, b)) in G.edges for a, b in combinations(combo, 2)):
            return tuple(combo)
    return None


# ---------------------------------------------------------------- THS gadget


def gen_ths_gadget(G: ColoredGraph, m: int) -> GadgetInstance:
    """Hitting-set gadget: windowed complex, input cycle, parameter.

    The intended small solutions consist of the full vertex-set simplex,
    one alpha facet per color and one beta facet per color pair.
    """
    if m < 1:
        raise InputError("penalty multiplicity m must be >= 1")
    k = G.k
    verts = sorted(G.colors)
    r = len(verts) - 1
    vid = {v: i for i, v in enumerate(verts)}  # graph vertices -> 0..r
    cid = {i: r + 1 + (i - 1) for i in range(1, k + 1)}  # colors
    d = r + k + 1  # dummy vertex
    next_free = d + 1
    Vset = frozenset(range(r + 1))

    def simplex(s: Set[int]) -> Simplex:
        return tuple(sorted(s))

    top_up: List[Simplex] = []  # (r+1)-simplices
    legend: Dict[str, object] = {
        "V": simplex(Vset),
        "alpha": {},
        "beta": {},
        "sigma": {},
        "tau": {},
        "zeta_d": [],
        "undesirable": [],
        "penalty": {},
        "m_recommended": (r + 1) ** 3,
        "m": m,
    }
    admissible: Set[Simplex] = {simplex(Vset)}
    undesirable: Set[Simplex] = set()

    for i in range(1, k + 1):
        sigma = Vset | {cid[i]}
        top_up.append(simplex(sigma))
        legend["sigma"][i] = simplex(sigma)
        Vi = set(G.color_class(i))
        for v in verts:
            facet = simplex(sigma - {vid[v]})
            if v in Vi:
                admissible.add(facet)
                legend["alpha"][(i, v)] = facet
            else:
                undesirable.add(facet)

    for i in range(1, k + 1):
        for v in G.color_class(i):
            for j in range(1, k + 1):
                if j == i:
                    continue
                tau = (Vset - {vid[v]}) | {cid[i], cid[j]}
                top_up.append(simplex(tau))
                legend["tau"][(i, j, v)] = simplex(tau)
                for w in tau:
                    facet = simplex(tau - {w})
                    if w == cid[j]:
                        continue  # alpha_i^v, already admissible
                    if w == cid[i]:
                        undesirable.add(facet)
                    else:  # w is a graph vertex u != v
                        u = verts[w]
                        if G.colors[u] == j and frozenset((u, v)) in G.edges:
                            admissible.add(facet)
                            legend["beta"][(i, j, v, u)] = facet
                        else:
                            undesirable.add(facet)

    zeta_members: List[Simplex] = [simplex(Vset)]
    for u in verts:
        ds = simplex((Vset - {vid[u]}) | {d})
        zeta_members.append(ds)
        legend["zeta_d"].append(ds)
        undesirable.add(ds)  # only V is an admissible member of the cycle

    undesirable -= admissible
    legend["undesirable"] = sorted(undesirable)
    for omega in sorted(undesirable):
        cofacets = []
        for _ in range(m):
            cofacets.append(simplex(set(omega) | {next_free}))
            next_free += 1
        legend["penalty"][omega] = cofacets
        top_up.extend(cofacets)

    window = (max(r - 1, 0), r + 1)
    K = build_complex(top_up + zeta_members, window)
    zeta = K.chain(r, zeta_members)
    parameter = comb(k + 1, 2) + 1
    if m < parameter + 1:
        warnings.warn(f"penalty multiplicity {m} < parameter+1 = {parameter + 1}; "
                      "small solutions may dodge penalties", stacklevel=2)
    inst = GadgetInstance(K, zeta, parameter, legend)
    # closed-form size check: sigmas + taus + penalties
    expected_up = k + sum(len(G.color_class(i)) for i in range(1, k + 1)) * (k - 1) + m * len(undesirable)
    if K.n(r + 1) != expected_up:
        raise InternalError("gadget top-simplex count disagrees with closed form")
    return inst


# ------------------------------------------------------------- S-subdivision


def _s_subdivide_sets(
    ordered: Sequence[int], alloc_start: int
) -> Tuple[Set[FrozenSet[int]], List[int], List[int]]:
    """Iterated stellar subdivision of the simplex on ``ordered`` vertices.

    ``ordered`` lists vertices in increasing rank; each of the 2(d+1) new
    vertices (ids alloc_start, alloc_start+1, ...) outranks everything
    before it.  Returns (d-simplices, distinguished simplex as a
    rank-ordered vertex list, list of created vertex ids).
    """
    d = len(ordered) - 1
    rank = {v: i for i, v in enumerate(ordered)}
    simplices: Set[FrozenSet[int]] = {frozenset(ordered)}
    created: List[int] = []

    def top_simplex() -> FrozenSet[int]:
        tops = sorted(rank, key=lambda v: -rank[v])[: d + 1]
        omega = frozenset(tops)
        if omega not in simplices:
            raise InternalError("highest-ranked vertices do not span a simplex")
        return omega

    for step in range(2 * (d + 1)):
        omega = top_simplex()
        z = alloc_start + step
        created.append(z)
        rank[z] = len(rank)
        simplices.remove(omega)
        for w in omega:
            simplices.add((omega - {w}) | {z})
    distinguished = sorted(top_simplex(), key=lambda v: rank[v])
    return simplices, distinguished, created


def s_subdivide(d: int, order: Optional[Sequence[int]] = None) -> Tuple[Complex, Simplex]:
    """Standalone S-subdivision of a d-simplex; returns (complex,
    distinguished d-simplex whose vertex stars avoid the original vertices)."""
    if d < 1:
        raise InputError("dimension must be >= 1")
    ordered = list(order) if order is not None else list(range(d + 1))
    if len(set(ordered)) != d + 1:
        raise InputError("order must list d+1 distinct vertices")
    simplices, dist, _ = _s_subdivide_sets(ordered, max(ordered) + 1)
    K = build_complex([tuple(sorted(s)) for s in sorted(simplices, key=sorted)], (0, d))
    return K, tuple(sorted(dist))


# ---------------------------------------------------------------- BNT gadget


class _UnionFind:
    def __init__(self) -> None:
        self.parent: Dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _penalize(omega: Simplex, m: int, next_free: int) -> Tuple[List[Simplex], int]:
    """The m(r+1) replacement r-simplices for an undesirable r-simplex:
    all facets of omega+{u_l} other than omega itself, for m fresh u_l."""
    out: List[Simplex] = []
    for _ in range(m):
        u = next_free
        next_free += 1
        for w in omega:
            out.append(tuple(sorted((set(omega) - {w}) | {u})))
    return out, next_free


def gen_bnt_gadget(G: ColoredGraph, m: int) -> GadgetInstance:
    """Boundary-nontrivialization gadget for the boundary of the full
    vertex-set simplex (which is itself absent from the complex)."""
    if m < 1:
        raise InputError("penalty multiplicity m must be >= 1")
    k = G.k
    verts = sorted(G.colors)
    r = len(verts) - 1
    if r < 2:
        raise InputError("gadget needs at least three graph vertices (r >= 2)")
    vid = {v: i for i, v in enumerate(verts)}
    cid = {i: r + 1 + (i - 1) for i in range(1, k + 1)}
    next_free = r + k + 1
    Vset = frozenset(range(r + 1))

    legend: Dict[str, object] = {
        "alpha": {},  # (i, v) -> identified simplex
        "beta": {},  # (i, j, v, u) with i < j -> identified simplex
        "sigma_chain": {},  # i -> r-simplices of the subdivided sigma boundary
        "tau_chain": {},  # (i, j, v) -> r-simplices of the tau sphere
        "undesirable": [],
        "m_recommended": (r + 1) ** 3,
        "m": m,
    }
    uf = _UnionFind()
    all_r: List[Tuple[int, ...]] = []  # r-simplices before identification
    # distinguished simplices as rank-ordered vertex lists, keyed by role
    alpha_sides: Dict[Tuple[int, int], List[List[int]]] = {}
    beta_sides: Dict[Tuple[int, int, int, int], List[List[int]]] = {}

    def run_gadget(
        pre_adm: Dict[Tuple, List[int]],
        w_facets: List[Tuple[int, ...]],
        chain_slot: Tuple[str, object],
    ) -> None:
        """Subdivide each pre-admissible facet (given in rank order);
        record penalty structures for everything non-distinguished."""
        nonlocal next_free
        members: List[Tuple[int, ...]] = []
        undes: List[Tuple[int, ...]] = []
        for key, facet_order in pre_adm.items():
            simplices, dist, created = _s_subdivide_sets(facet_order, next_free)
            next_free += len(created)
            for s in simplices:
                t = tuple(sorted(s))
                members.append(t)
                if set(t) != set(dist):
                    undes.append(t)
            if key[0] == "alpha":
                alpha_sides.setdefault(key[1:], []).append(dist)
            else:
                i, j, v, u = key[1:]
                beta_sides.setdefault((i, j, v, u) if i < j else (j, i, u, v), []).append(dist)
        # non-pre-admissible facets stay unsubdivided and are undesirable
        for w_simplex in w_facets:
            members.append(w_simplex)
            undes.append(w_simplex)
        legend[chain_slot[0]][chain_slot[1]] = list(members)
        all_r.extend(members)
        legend["undesirable"].extend(undes)
        for omega in undes:
            pen, next_free2 = _penalize(omega, m, next_free)
            next_free = next_free2
            all_r.extend(pen)

    # type-1 gadgets: subdivided boundaries of sigma_i minus the face V
    for i in range(1, k + 1):
        sigma = sorted(Vset | {cid[i]})
        w_facets: List[Tuple[int, ...]] = []
        pre: Dict[Tuple, List[int]] = {}
        for v in verts:
            facet = sorted(set(sigma) - {vid[v]})
            if G.colors[v] == i:
                pre[("alpha", i, v)] = facet  # rank order = id order here
            else:
                w_facets.append(tuple(facet))
        run_gadget(pre, w_facets, ("sigma_chain", i))

    # type-2 gadgets: full simplex boundaries on fresh vertex copies
    for i in range(1, k + 1):
        for v in G.color_class(i):
            for j in range(1, k + 1):
                if j == i:
                    continue
                # fresh copies of (V \ v) then colors i, j (colors outrank)
                base = sorted(Vset - {vid[v]})
                copy = {}
                for b in base:
                    copy[b] = next_free
                    next_free += 1
                copy_color = {min(i, j): next_free, max(i, j): next_free + 1}
                next_free += 2
                order = [copy[b] for b in base] + [copy_color[min(i, j)], copy_color[max(i, j)]]
                pre: Dict[Tuple, List[int]] = {}
                w_facets = []
                drop_j = copy_color[j]
                pre[("alpha", i, v)] = [x for x in order if x != drop_j]
                b_keys = {}
                for u in G.color_class(j):
                    if frozenset((u, v)) in G.edges:
                        b_keys[copy[vid[u]]] = ("beta", i, j, v, u)
                for w in order:
                    facet = [x for x in order if x != w]
                    if w == drop_j:
                        continue  # the alpha facet, added above
                    if w in b_keys:
                        pre[b_keys[w]] = facet
                    else:
                        w_facets.append(tuple(sorted(facet)))
                run_gadget(pre, w_facets, ("tau_chain", (i, j, v)))

    # attachments: identify distinguished simplices, matching rank order
    for key, sides in list(alpha_sides.items()) + list(beta_sides.items()):
        anchor = sides[0]
        for other in sides[1:]:
            for a, b in zip(anchor, other):
                uf.union(a, b)

    def canon(s: Tuple[int, ...]) -> Simplex:
        out = tuple(sorted(uf.find(x) for x in s))
        if len(set(out)) != len(s):
            raise InternalError("identification collapsed a simplex")
        return out

    final_r = [canon(s) for s in all_r]
    if len(set(final_r)) != len(final_r) - sum(len(v) - 1 for v in alpha_sides.values()) - sum(
        len(v) - 1 for v in beta_sides.values()
    ):
        raise InternalError("identification merged unintended simplices")
    legend["undesirable"] = sorted({canon(s) for s in legend["undesirable"]})
    for i in list(legend["sigma_chain"]):
        legend["sigma_chain"][i] = sorted({canon(s) for s in legend["sigma_chain"][i]})
    for t in list(legend["tau_chain"]):
        legend["tau_chain"][t] = sorted({canon(s) for s in legend["tau_chain"][t]})
    for key, sides in alpha_sides.items():
        legend["alpha"][key] = canon(tuple(sides[0]))
    for key, sides in beta_sides.items():
        legend["beta"][key] = canon(tuple(sides[0]))

    window = (max(r - 2, 0), r)
    K = build_complex(sorted(set(final_r)), window)
    xi = K.chain(r - 1, [tuple(sorted(Vset - {x})) for x in Vset])
    parameter = comb(k + 1, 2)
    if m < parameter + 1:
        warnings.warn(f"penalty multiplicity {m} < parameter+1 = {parameter + 1}; "
                      "small solutions may dodge penalties", stacklevel=2)
    return GadgetInstance(K, xi, parameter, legend)


# ----------------------------------------------------------------- verifiers


def ths_clique_solution(inst: GadgetInstance, clique: Sequence[int], G: ColoredGraph) -> Chain:
    """The hitting set derived from a multicolored clique."""
    members = [inst.legend["V"]]
    for v in clique:
        members.append(inst.legend["alpha"][(G.colors[v], v)])
    for u, v in combinations(clique, 2):
        i, j = G.colors[u], G.colors[v]
        key = (i, j, u, v) if (i, j, u, v) in inst.legend["beta"] else (j, i, v, u)
        members.append(inst.legend["beta"][key])
    r = inst.input_chain.dimension
    return inst.complex.chain(r, members)


def bnt_clique_solution(inst: GadgetInstance, clique: Sequence[int], G: ColoredGraph) -> Chain:
    """The boundary cut derived from a multicolored clique."""
    members = []
    for v in clique:
        members.append(inst.legend["alpha"][(G.colors[v], v)])
    for u, v in combinations(clique, 2):
        i, j = G.colors[u], G.colors[v]
        key = (i, j, u, v) if i < j else (j, i, v, u)
        members.append(inst.legend["beta"][key])
    r = inst.input_chain.dimension + 1
    return inst.complex.chain(r, members)


def verify_gadget_answer(G: ColoredGraph, m: int, solver_result: Optional[Chain]) -> bool:
    """True iff the solver's small-solution verdict matches the exhaustive
    clique decision (the gadget mimics the graph)."""
    has = has_multicolored_clique(G) is not None
    found = solver_result is not None
    return has == found
