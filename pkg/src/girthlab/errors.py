"""Exception hierarchy.

Every failure mode that a caller is expected to handle gets its own class;
plain ValueError is reserved for malformed arguments (wrong types, negative
counts and the like).
"""


class GirthLabError(Exception):
    """Base class for all girthlab-specific errors."""


class NotBipartiteError(GirthLabError):
    """Input graph is not bipartite, or the supplied classes are invalid."""


class NotLinearError(GirthLabError):
    """Two hyperedges share more than one vertex where linearity is required."""


class NotConnectedError(GirthLabError):
    """Input must be connected."""


class MinDegreeError(GirthLabError):
    """Input violates a minimum-degree precondition."""


class UniformityError(GirthLabError):
    """Hyperedge size does not match what the operation requires."""


class DensityTooHighError(GirthLabError):
    """Requested hyperedge count exceeds half the number of possible hyperedges."""


class SearchBudgetExceededError(GirthLabError):
    """A search hit its node or time budget before producing a certified answer."""


class StateSpaceTooLargeError(GirthLabError):
    """Exhaustive enumeration was requested but the state space exceeds the cap."""


class InfeasibleError(GirthLabError):
    """Randomized construction could not meet its constraints within the retry budget."""
