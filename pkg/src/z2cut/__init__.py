"""z2cut: topological hitting set and boundary nontrivialization over Z2."""

__version__ = "0.1.0"
