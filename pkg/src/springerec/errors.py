"""Exception types shared across the package."""


class SpringerError(Exception):
    """Base class for all package-specific errors."""


class InvalidLabel(SpringerError):
    """Partition does not label a nilpotent orbit of the requested group."""


class MissingPart(SpringerError):
    """A removal was requested at a part size the partition does not have."""


class PartTooSmall(SpringerError):
    """Horizontal domino removal needs a part of size at least 2."""


class EmptyPartition(SpringerError):
    """Operation undefined on the empty partition."""


class InvalidElement(SpringerError):
    """Component-group element is not supported on the label's generators."""


class NonIntegralMultiplicity(SpringerError):
    """A character multiplicity came out non-integral or negative.

    This always signals an internal inconsistency upstream, never bad input.
    """


class OutOfScope(SpringerError):
    """The graded recursion does not cover this label (or a dependency)."""

    def __init__(self, group, parts, message=None):
        self.group = group
        self.parts = tuple(parts)
        if message is None:
            message = "no graded recursion for %s label %s" % (group, (self.parts,))
        super().__init__(message)


class RankTooSmall(SpringerError):
    """The group has no next-lower classical group to restrict to."""


class UnknownOrbit(SpringerError):
    """Orbit label not present in the exceptional-type tables."""


class DegreeMismatch(SpringerError):
    """Symmetric-function pairing of mismatched homogeneous degrees."""


class BadLabel(SpringerError):
    """Malformed irreducible-character label."""
