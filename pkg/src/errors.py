"""
WHQ Engine - Exceptions

Misuse and internal-consistency errors. Mathematical failures found while
checking a structure are reported as verdicts, not raised.
"""
from typing import Iterable, Optional


class WHQError(Exception):
    """Base class for every error raised by the engine."""


class DivisionByZero(WHQError, ZeroDivisionError):
    """Division by the zero scalar."""


class MixedFields(WHQError):
    """Operands live in different fields."""


class ArityMismatch(WHQError):
    """Morphism arities do not fit together."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        super().__init__(f"{message} in `{path}`" if path else message)


class PositionOutOfRange(WHQError):
    """Swap position outside 1 <= pos < total."""


class NotIdempotent(WHQError):
    """A map handed to the splitter is not idempotent."""


class Singular(WHQError):
    """A square map that has no inverse."""

    def __init__(self, rank: int, size: int, label: str = "map"):
        self.rank = rank
        self.size = size
        self.deficiency = size - rank
        super().__init__(f"{label} is singular: rank {rank} of {size} (deficiency {self.deficiency})")


class NotAGroup(WHQError):
    """Multiplication table is not a group."""


class NotAGroupoid(WHQError):
    """Arrow data does not form a groupoid."""


class NotAUnitalMagma(WHQError):
    """Multiplication table has no two-sided identity."""


class NotIPLoop(WHQError):
    """Latin square is not an inverse-property loop."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition} fails{': ' + detail if detail else ''}")


class MissingAntipode(WHQError):
    """Operation needs λ but the structure carries none."""


class MonoidAxiomFailure(WHQError):
    """Base object failed its monoid or module laws although premises hold."""


class ModuleLawFailure(WHQError):
    """Supplied action is not a module over the base monoid."""


class CrossCheckMismatch(WHQError):
    """Two independent routes to the same result disagree."""


class StructureFormatError(WHQError):
    """Malformed structure file."""


class ExpressionSyntaxError(WHQError, SyntaxError):
    """Morphism expression does not parse.

    ``offset`` is the 1-based byte position of the offending token.
    """

    def __init__(self, offset: int, expected: Iterable[str], found: str = ""):
        self.expected = tuple(expected)
        self.found = found
        message = f"expected {' or '.join(self.expected)} at offset {offset}"
        if found:
            message += f", found {found!r}"
        SyntaxError.__init__(self, message)
        self.offset = offset
