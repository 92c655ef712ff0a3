"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid input data or arguments (maps to CLI exit code 2)."""


class ResourceLimitError(RuntimeError):
    """A configured brute-force cap or enumeration budget was exceeded
    (maps to CLI exit code 3)."""
