"""Exception types shared across the toolkit.

Every error carries a stable ``code`` string (its class name) so that the
command line and the HTTP service can emit machine-parsable diagnostics.
"""


class MigcError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NonPositiveMass(MigcError):
    """A probability is zero or negative where positive mass is required."""


class MassSumError(MigcError):
    """Probabilities do not sum to 1 within tolerance."""


class DuplicateLabel(MigcError):
    """Two symbols share the same label."""


class OutOfRangeIndex(MigcError):
    """A symbol index falls outside the universe."""


class OverlappingCells(MigcError):
    """Cells of a partition or query are not pairwise disjoint."""


class TooManyCells(MigcError):
    """A query needs more than D cells once the complement is appended."""


class EmptyCandidates(MigcError):
    """An operation received an empty candidate set."""


class InvalidTree(MigcError):
    """A decision tree violates its structural invariants."""


class BudgetExceeded(MigcError):
    """Exact partition search would exceed the configured state budget."""


class InfeasibleQuerySet(MigcError):
    """No admissible query can split some multi-symbol candidate set."""


class TooLarge(MigcError):
    """Instance exceeds the size supported by exhaustive search."""


class KraftViolation(MigcError):
    """Code lengths violate the Kraft inequality (signals an internal bug)."""


class UnsupportedQuerySet(MigcError):
    """The selected coder cannot honor the given query set."""


class ImpossibleFleet(MigcError):
    """No legal ship layout exists for the requested board and fleet."""


class ContradictoryAnswer(MigcError):
    """A reported answer is inconsistent with every surviving candidate."""


class UnknownSession(MigcError):
    """No session with the given id exists (or it expired)."""


class SessionComplete(MigcError):
    """The session already identified its symbol."""


class Solved(MigcError):
    """The game state is already fully identified."""
