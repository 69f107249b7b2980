class HKError(Exception):
    """Base class for domain errors (bad input data, violated preconditions)."""


class GraphError(HKError):
    pass


class GraphParseError(GraphError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class WordError(HKError):
    pass


class CapExceeded(HKError):
    """Raised when monoid enumeration outgrows its element cap."""

    def __init__(self, cap, live):
        super().__init__(f"element cap {cap} exceeded ({live} live states when stopped)")
        self.cap = cap
        self.live = live


class SandwichDataError(HKError):
    pass


class RepresentationError(HKError):
    pass
