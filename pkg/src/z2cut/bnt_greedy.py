"""Greedy boundary nontrivialization (log-factor approximation).

Repeatedly re-solve the restricted boundary system: each surviving
preimage chain yields a fresh particular solution x; every chain with the
right boundary is an odd combination of the x's collected so far, so a
greedy set cover over those combinations kills the whole coset a few
simplices at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

from .complexes import Chain, Complex
from .errors import InputError, InternalError, ResourceError
from .feasibility import is_bnt_feasible
from .gf2 import GF2Matrix, GF2Vector, solve
from .homology import _boundary_or_zero, betti

__all__ = ["CoverInstance", "greedy_set_cover", "solve_bnt_greedy", "BETA_CAP"]

BETA_CAP = 20


@dataclass
class CoverInstance:
    """Rows are (r+1)-simplex ids, columns chain ids; entry 1 = membership."""

    universe: List[int]
    sets: List[int]
    incidence: GF2Matrix  # one column per universe element, bits over sets


def greedy_set_cover(inst: CoverInstance) -> List[int]:
    """Max-coverage greedy, lowest row index on ties; returns chosen rows."""
    nrows = len(inst.sets)
    row_masks = [0] * nrows
    for j, col in enumerate(inst.incidence.cols):
        bits = col
        while bits:
            i = (bits & -bits).bit_length() - 1
            row_masks[i] |= 1 << j
            bits &= bits - 1
    uncovered = (1 << len(inst.universe)) - 1
    covered_by_any = 0
    for m in row_masks:
        covered_by_any |= m
    if uncovered & ~covered_by_any:
        raise InputError("some chain contains no available simplex")
    chosen = []
    while uncovered:
        gains = [(mask & uncovered).bit_count() for mask in row_masks]
        best = max(range(nrows), key=lambda i: (gains[i], -i))
        chosen.append(inst.sets[best])
        uncovered &= ~row_masks[best]
    return chosen


def solve_bnt_greedy(K: Complex, zeta: Chain, beta_cap: int = BETA_CAP) -> Chain:
    """Smallest-ish set of (r+1)-simplices making zeta non-bounding."""
    r = zeta.dimension
    B = _boundary_or_zero(K, r + 1)
    n = K.n(r + 1)
    if solve(B, zeta.support) is None:
        raise InputError("input cycle does not bound; nothing to nontrivialize")
    beta_up = betti(K, r + 1) if r + 1 <= K.hi else 0
    if beta_up > beta_cap:
        raise ResourceError(f"beta_(r+1) = {beta_up} exceeds the cap {beta_cap}")
    removed = 0  # bitmask over (r+1)-simplex indices
    X: List[int] = []  # particular solutions, original index space
    iterations = 0
    while True:
        keep_idx = [j for j in range(n) if not (removed >> j) & 1]
        BS = GF2Matrix(K.n(r), [B.cols[j] for j in keep_idx])
        x = solve(BS, zeta.support)
        if x is None:
            break
        iterations += 1
        if iterations > beta_up + 1:
            raise InternalError("cover loop exceeded the termination bound")
        bits = 0
        for pos, j in enumerate(keep_idx):
            if x.get(pos):
                bits |= 1 << j
        X.append(bits)
        # all odd-size subset XORs of X, minus chains already hit
        ys: List[int] = []
        for mask in range(1, 1 << len(X)):
            if mask.bit_count() & 1 == 0:
                continue
            acc = 0
            m = mask
            while m:
                acc ^= X[(m & -m).bit_length() - 1]
                m &= m - 1
            if acc & removed:
                continue  # already covered by an earlier pick
            ys.append(acc)
        ys = sorted(set(ys))
        # incidence: rows = surviving simplices, columns = chains in Y
        rows_cols = []
        for y in ys:
            col = 0
            for pos, j in enumerate(keep_idx):
                if (y >> j) & 1:
                    col |= 1 << pos
            rows_cols.append(col)
        inst = CoverInstance(list(range(len(ys))), keep_idx, GF2Matrix(len(keep_idx), rows_cols))
        for j in greedy_set_cover(inst):
            removed |= 1 << j
    S = K.chain_from_bits(r + 1, removed)
    if not is_bnt_feasible(K, zeta, S).verdict:
        raise InternalError("greedy cover output failed the feasibility check")
    return S
