"""Exception hierarchy shared by the whole package."""


class GroupLabError(Exception):
    """Base class for every error raised by grouplab."""


class PermutationError(GroupLabError, ValueError):
    """Invalid permutation data (bad degree, not a bijection, degree mismatch)."""


class CycleParseError(PermutationError):
    """Malformed or inconsistent cycle notation."""


class PointRangeError(CycleParseError):
    """A point in cycle notation lies outside 1..degree."""


class CapExceededError(GroupLabError):
    """Group closure produced more elements than the configured order cap."""

    def __init__(self, cap, partial, true_order=None):
        self.cap = cap
        self.partial = partial
        self.true_order = true_order
        msg = f"group order exceeds cap {cap} (closure reached {partial} elements"
        if true_order is not None:
            msg += f"; stabilizer chain gives order {true_order}"
        super().__init__(msg + ")")


class BudgetError(GroupLabError):
    """Subgroup enumeration exceeded the lattice-size budget."""


class HypothesisError(GroupLabError, ValueError):
    """A query (p, k) that violates p <= p^k <= |G|_p."""


class PreconditionError(GroupLabError, ValueError):
    """An operation was called outside the situation it is defined for."""


class GroupFileError(GroupLabError, ValueError):
    """Syntax or content error in a group definition file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
