"""Exception types shared across the package."""

from __future__ import annotations


class CircmixError(Exception):
    """Base class for errors raised by this package."""


class CapExceededError(CircmixError):
    """A search or enumeration hit its configured budget before finishing.

    Nothing partial is returned: callers either get a complete, exact answer
    or this error.
    """

    def __init__(self, cap: int, detail: str = ""):
        self.cap = cap
        msg = f"budget of {cap} exceeded"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NoColouringsError(CircmixError):
    """The homomorphism set in question is empty."""


class DisconnectedError(CircmixError):
    """A radius or centre was requested for a disconnected homomorphism graph."""


class RingHypothesisError(CircmixError):
    """Pinned groups sit too close together for the ring construction.

    ``pair`` names the offending groups (indices into the instance's group
    list), ``required`` the separation the construction needs and ``actual``
    the separation found in the host graph.
    """

    def __init__(self, pair: tuple[int, int], required: int, actual: int):
        self.pair = pair
        self.required = required
        self.actual = actual
        super().__init__(
            f"groups {pair[0]} and {pair[1]} need host distance >= {required}, have {actual}"
        )


class GraphFormatError(CircmixError):
    """The text form of a graph could not be parsed."""
