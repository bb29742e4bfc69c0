"""Exception types shared across the package.

Every error raised on bad input derives from :class:`SpaceError`, which the
CLI maps to exit status 1.  :class:`TheoremViolation` means the library
disagrees with itself and maps to exit status 2; :class:`ResourceGuard` and
:class:`CarrierTooLarge` are refusals to start work that would not finish.
"""

from __future__ import annotations


class SpaceError(ValueError):
    """Invalid space description."""


class ParseError(SpaceError):
    pass


class PointOutOfRange(SpaceError):
    pass


class IndexOutOfRange(SpaceError, IndexError):
    pass


class MissingEmptySet(SpaceError):
    def __init__(self) -> None:
        super().__init__("closed family does not contain the empty set")


class MissingFullSet(SpaceError):
    def __init__(self) -> None:
        super().__init__("closed family does not contain the full point set")


class _PairViolation(SpaceError):
    operation = ""

    def __init__(self, b: int, c: int, describe=None) -> None:
        self.b = b
        self.c = c
        fmt = describe or bin
        super().__init__(
            f"closed family is not closed under {self.operation}: "
            f"{fmt(b)} and {fmt(c)}"
        )


class NotClosedUnderUnion(_PairViolation):
    operation = "union"


class NotClosedUnderIntersection(_PairViolation):
    operation = "intersection"


class NotReflexive(SpaceError):
    def __init__(self, x: int, label: str | None = None) -> None:
        self.x = x
        super().__init__(f"relation is not reflexive at {label or x}")


class NotTransitive(SpaceError):
    """``x <= y`` and ``y <= z`` hold but ``x <= z`` does not."""

    def __init__(self, x: int, y: int, z: int, labels=None) -> None:
        self.witness = (x, y, z)
        if labels is not None:
            x, y, z = labels[x], labels[y], labels[z]
        super().__init__(
            f"relation is not transitive: {x} <= {y} and {y} <= {z} but not {x} <= {z}"
        )


class EmptySetNotEligible(SpaceError):
    def __init__(self) -> None:
        super().__init__("irreducibility is only defined for non-empty sets")


class NotClosed(SpaceError):
    pass


class CarrierTooLarge(ValueError):
    pass


class ResourceGuard(RuntimeError):
    pass


class TheoremViolation(AssertionError):
    """Two independent dimension computations disagreed on some space."""

    def __init__(self, message: str, space=None) -> None:
        self.space = space
        super().__init__(message)
