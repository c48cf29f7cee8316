class LatframeError(Exception):
    """Base class for all errors raised by latframe."""


class ParseError(LatframeError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationError(LatframeError):
    pass


class RouteLimitError(LatframeError):
    pass


class InvariantError(LatframeError):
    """A structural property that must hold failed; always signals a bug or a counterexample."""
