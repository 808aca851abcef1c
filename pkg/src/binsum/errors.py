"""Exception types shared across the package."""

from __future__ import annotations


class UnsupportedParameterError(ValueError):
    """A parameter is outside the domain a formula is derived for.

    Typical case: a generating-function construction that only exists for
    integer q being handed a proper fraction.
    """


class NonTerminatingSeriesError(ValueError):
    """No numerator parameter truncates the hypergeometric series."""


class SeriesPoleError(ArithmeticError):
    """A denominator Pochhammer product vanished in strict evaluation mode."""

    def __init__(self, term_index: int) -> None:
        super().__init__(f"denominator Pochhammer product is zero at term {term_index}")
        self.term_index = term_index


class NotAPowerSeriesError(ValueError):
    """The denominator constant coefficient is zero, so no Taylor expansion at 0."""


class NoRationalFitError(ValueError):
    """No rational function of the requested degrees reproduces the series."""


class NeedsMoreTermsError(ValueError):
    """The series prefix is too short to determine a fit of the requested degrees."""


class BFileParseError(ValueError):
    """A b-file line is not `index value`."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(message)
        self.line_number = line_number


class FixtureMissingError(FileNotFoundError):
    """Offline lookup found neither a cached b-file nor a bundled fixture."""


class TransportError(OSError):
    """A network fetch failed; never silently treated as success."""
