"""Exception types shared across the package."""

from __future__ import annotations


class TreeproofError(Exception):
    """Base class for all package errors."""


class FormulaSyntaxError(TreeproofError):
    def __init__(self, message: str, position: int = -1):
        super().__init__(message if position < 0 else f"{message} (at position {position})")
        self.position = position


class SortError(TreeproofError):
    def __init__(self, symbol: str, expected, found):
        super().__init__(f"sort mismatch for {symbol!r}: expected {expected}, found {found}")
        self.symbol = symbol
        self.expected = expected
        self.found = found


class PlaceholderInClosedFormula(TreeproofError):
    pass


class IllFormedReplacement(TreeproofError):
    pass


class DialectUnsupportedConstruct(TreeproofError):
    pass


class TemplateParseError(TreeproofError):
    pass


class StageViolation(TreeproofError):
    def __init__(self, stage: str, detail: str):
        super().__init__(f"stage {stage}: {detail}")
        self.stage = stage
        self.detail = detail


class LlmUnavailable(TreeproofError):
    pass


class UnparseableResponse(TreeproofError):
    def __init__(self, message: str, excerpt: str = ""):
        super().__init__(f"{message}: {excerpt[:200]!r}" if excerpt else message)
        self.excerpt = excerpt


class MissingSlot(TreeproofError):
    pass


class ScorerUnavailable(TreeproofError):
    pass


class MalformedTreeResponse(TreeproofError):
    pass


class CycleDetected(TreeproofError):
    pass


class UnknownNode(TreeproofError):
    pass


class UnformalisedAtom(TreeproofError):
    pass


class NotProved(TreeproofError):
    pass


class BudgetInvalid(TreeproofError):
    pass


class UnsupportedConstruct(TreeproofError):
    pass


class NameCollision(TreeproofError):
    pass


class FormatError(TreeproofError):
    def __init__(self, message: str, line: int = -1):
        super().__init__(message if line < 0 else f"line {line}: {message}")
        self.line = line


class UnknownFormat(TreeproofError):
    pass


class ConfigError(TreeproofError):
    pass
