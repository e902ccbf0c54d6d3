"""Exception types shared across the library."""


class LGroupError(Exception):
    """Base class for every error raised by this library."""


# lattice construction / use
class NotALattice(LGroupError):
    """Some pair of elements lacks a unique least upper or greatest lower bound."""


class NoBounds(LGroupError):
    """The poset has no global top or no global bottom."""


class DuplicateName(LGroupError):
    pass


class DanglingCover(LGroupError):
    pass


class ForeignElement(LGroupError):
    """An element was used with a structure it does not belong to."""


class EmptySubset(LGroupError):
    pass


# groups
class NotAPermutation(LGroupError):
    pass


class SizeBudgetExceeded(LGroupError):
    """Generated group closure exceeded the configured size cap."""


class NotASubgroup(LGroupError):
    pass


class NotNested(LGroupError):
    """An operation required H to be contained in K and it was not."""


class NotAHomomorphism(LGroupError):
    pass


class IncompleteGenerators(LGroupError):
    pass


# L-subsets and the classification layer
class MismatchedCarriers(LGroupError):
    """Operands live over different groups or different lattices."""


class NotAnLSubgroup(LGroupError):
    pass


class NotContained(LGroupError):
    pass


class PointNotInParent(LGroupError):
    """The point a_z is not a point of the parent: a > mu(z)."""


class NotProper(LGroupError):
    pass


class BudgetExceeded(LGroupError):
    """Search node budget exhausted before the enumeration completed."""


# front door
class ParseError(LGroupError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno
        self.message = message


class ValidationError(LGroupError):
    """An input file parsed but violates a structural invariant."""


class InternalInconsistency(LGroupError):
    """Two redundant computations of the same quantity disagreed.

    This is never expected; it indicates a bug, not bad input.
    """
