"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed edge-list, ordering, or forest input."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class SizeLimitError(ValueError):
    """An exhaustive oracle was asked to run above its vertex cap."""

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"{what}: {n} vertices exceeds limit {limit}")
        self.n = n
        self.limit = limit


class ValidationError(ValueError):
    """A structure failed its own invariant check (indicates a bug upstream)."""
