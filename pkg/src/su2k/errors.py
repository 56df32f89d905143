"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was asked about labels outside its admissible domain."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed; indicates an implementation bug."""
