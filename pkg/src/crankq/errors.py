"""Exception types shared across the package."""

from __future__ import annotations


class OrderExceeded(IndexError):
    """A coefficient beyond the truncation order was requested.

    Coefficients past the order are unknown, not zero, so reading them is
    an error rather than a silent 0.
    """


class EmptyPartition(ValueError):
    """Crank or rank was requested for the empty partition."""


class SoftLimitExceeded(ValueError):
    """Brute-force enumeration was requested above the configured cap."""


class InvalidK(ValueError):
    """Family parameter k outside the family's validity range."""


class UnknownIdentity(KeyError):
    """Identity id not present in the registry."""


class InvalidParams(ValueError):
    """Identity or series parameters outside their declared ranges."""


class UnknownTheorem(KeyError):
    """Theorem id not present in the registry."""


class RangeError(ValueError):
    """Requested scan range is empty or inconsistent."""
