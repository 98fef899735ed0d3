"""Polynomial-time verifiers for both cut problems and their global variants.

The hitting-set check reduces to one column-space membership test: collect a
homology basis of the complex with S's closure removed, lift it back, and
ask whether zeta lies in the span of those cycles together with the
boundaries.  If it does, some surviving cycle is homologous to zeta and S
misses it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict

from .complexes import Chain, Complex, remove_closure
from .errors import InputError, InternalError
from .gf2 import GF2Matrix, in_colspace, rank, relative_rank, solve
from .homology import _boundary_or_zero, betti, homology_basis

__all__ = [
    "FeasibilityReport",
    "is_ths_feasible",
    "is_bnt_feasible",
    "is_global_ths_solution",
    "is_global_bnt_solution",
]


@dataclass(frozen=True)
class FeasibilityReport:
    verdict: bool
    method: str
    ranks: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    def __bool__(self) -> bool:
        return self.verdict


def _require_cycle(K: Complex, zeta: Chain) -> None:
    from .complexes import boundary_matrix

    d = boundary_matrix(K, zeta.dimension)
    if d.matvec(zeta.support).bits != 0:
        raise InputError("input chain is not a cycle")


def _require_nonbounding(K: Complex, zeta: Chain) -> None:
    _require_cycle(K, zeta)
    B = _boundary_or_zero(K, zeta.dimension + 1)
    if in_colspace(B, zeta.support):
        raise InputError("input cycle bounds; a non-bounding cycle is required")


def _lift(K: Complex, KS: Complex, mapping: Dict[int, Dict[int, int]], c: Chain) -> int:
    """Re-index a K_S chain's support bits into K's index space."""
    inv = {new: old for old, new in mapping[c.dimension].items()}
    bits, out = c.support.bits, 0
    while bits:
        i = (bits & -bits).bit_length() - 1
        out |= 1 << inv[i]
        bits &= bits - 1
    return out


def is_ths_feasible(K: Complex, zeta: Chain, S: Chain) -> FeasibilityReport:
    """Does S meet every cycle homologous to zeta?

    True iff zeta is outside the span of (surviving homology basis cycles,
    lifted) and the boundaries of K.
    """
    t0 = time.perf_counter()
    r = zeta.dimension
    if S.dimension != r:
        raise InputError("solution set must consist of simplices of zeta's dimension")
    _require_nonbounding(K, zeta)
    KS, mapping = remove_closure(K, S)
    hb = homology_basis(KS, r)
    lifted = [_lift(K, KS, mapping, c) for c in hb.cycles]
    B = _boundary_or_zero(K, r + 1)
    M = GF2Matrix(K.n(r), lifted + B.cols)
    verdict = not in_colspace(M, zeta.support)
    return FeasibilityReport(
        verdict,
        "surviving-basis-colspace",
        {"beta_KS": len(lifted), "rank_M": rank(M)},
        time.perf_counter() - t0,
    )


def is_bnt_feasible(K: Complex, zeta: Chain, S: Chain) -> FeasibilityReport:
    """Does removing S in dimension r+1 make zeta non-bounding?"""
    t0 = time.perf_counter()
    r = zeta.dimension
    if S.dimension != r + 1:
        raise InputError("solution set must consist of (r+1)-simplices")
    B = _boundary_or_zero(K, r + 1)
    if solve(B, zeta.support) is None:
        raise InputError("input cycle does not bound; a bounding cycle is required")
    kept = [c for i, c in enumerate(B.cols) if not S.support.get(i)]
    BS = GF2Matrix(K.n(r), kept)
    verdict = solve(BS, zeta.support) is None
    return FeasibilityReport(
        verdict,
        "restricted-solve",
        {"rank_full": rank(B), "rank_rest": rank(BS)},
        time.perf_counter() - t0,
    )


def is_global_ths_solution(K: Complex, r: int, S: Chain) -> FeasibilityReport:
    """Is the inclusion-induced map H_r(K_S) -> H_r(K) non-surjective?"""
    t0 = time.perf_counter()
    if S.dimension != r:
        raise InputError("solution set must consist of r-simplices")
    beta = betti(K, r)
    KS, mapping = remove_closure(K, S)
    hb = homology_basis(KS, r)
    lifted = [_lift(K, KS, mapping, c) for c in hb.cycles]
    B = _boundary_or_zero(K, r + 1)
    image_dim = relative_rank(B, GF2Matrix(K.n(r), lifted))
    verdict = image_dim < beta
    if len(hb) < beta and not verdict:
        raise InternalError("fewer surviving classes yet surjective image")
    return FeasibilityReport(
        verdict,
        "image-rank",
        {"beta_K": beta, "beta_KS": len(hb), "image_dim": image_dim},
        time.perf_counter() - t0,
    )


def is_global_bnt_solution(K: Complex, r: int, S: Chain) -> FeasibilityReport:
    """Does removing S strictly shrink the boundary space in dimension r?"""
    t0 = time.perf_counter()
    if S.dimension != r + 1:
        raise InputError("solution set must consist of (r+1)-simplices")
    B = _boundary_or_zero(K, r + 1)
    kept = [c for i, c in enumerate(B.cols) if not S.support.get(i)]
    BS = GF2Matrix(K.n(r), kept)
    full, rest = rank(B), rank(BS)
    if relative_rank(B, BS) != 0:
        raise InternalError("restricted boundary space escaped the full one")
    verdict = rest < full
    return FeasibilityReport(
        verdict,
        "boundary-rank-drop",
        {"rank_full": full, "rank_rest": rest},
        time.perf_counter() - t0,
    )
