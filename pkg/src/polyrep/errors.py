"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the range where a construction is proved to work."""


class ResourceLimitError(MemoryError):
    """A table would not fit in the configured memory budget."""

    def __init__(self, required_bytes: int, limit_bytes: int):
        self.required_bytes = required_bytes
        self.limit_bytes = limit_bytes
        super().__init__(
            f"table needs about {required_bytes} bytes, limit is {limit_bytes} bytes"
        )


class InvariantError(RuntimeError):
    """A certificate failed self-verification. This indicates a bug."""
