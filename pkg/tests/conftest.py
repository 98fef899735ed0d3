"""Shared fixtures: canonical complexes and a small random-complex pool."""

import random

import pytest

from z2cut.canonical import gen_canonical
from z2cut.complexes import build_complex


@pytest.fixture(scope="session")
def torus():
    return gen_canonical("csaszar-torus")


@pytest.fixture(scope="session")
def tetra():
    return gen_canonical("tetra-sphere")


@pytest.fixture(scope="session")
def octa():
    return gen_canonical("octa-sphere")


def random_complex(seed, nv=6, ntri=5, window=(0, 2)):
    """Deterministic small 2-complex from random triangles."""
    rng = random.Random(seed)
    tris = set()
    while len(tris) < ntri:
        tris.add(tuple(sorted(rng.sample(range(nv), 3))))
    # keep every vertex present so dimension 0 is never empty
    tops = sorted(tris) + [(v,) for v in range(nv)]
    return build_complex(tops, window)
