"""Error taxonomy shared by the package; the CLI maps these to exit codes."""

__all__ = ["InputError", "ResourceError", "InternalError"]


class InputError(ValueError):
    """Bad user input or violated operation precondition (CLI exit 2)."""


class ResourceError(RuntimeError):
    """An enumeration or size budget would be exceeded (CLI exit 3)."""


class InternalError(AssertionError):
    """An invariant the theory guarantees failed to hold; a bug, not bad input."""
