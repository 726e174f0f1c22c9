"""Exceptions shared by every module.

Both are ValueError subclasses so callers that only care about "bad input"
can catch the base class.
"""

import os

# Default ceiling on orientation*coloring (and brute-force coloring) state
# counts.  Overridable through the environment for bigger desk experiments.
DEFAULT_MAX_STATES = 10**7

# Edge-subset enumeration bound (2^|E| walks); fixed, not env-tunable.
MAX_EDGE_SUBSETS = 2**20


class PreconditionError(ValueError):
    """An operation's stated precondition was violated."""


class StateLimitError(PreconditionError):
    """An enumeration would exceed the configured state budget."""


def max_states() -> int:
    """Current enumeration budget; PLETHORA_MAX_STATES overrides the default."""
    raw = os.environ.get("PLETHORA_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        value = int(raw)
    except ValueError as exc:
        raise PreconditionError(f"PLETHORA_MAX_STATES is not an integer: {raw!r}") from exc
    if value <= 0:
        raise PreconditionError("PLETHORA_MAX_STATES must be positive")
    return value


def check_states(count: int, what: str) -> None:
    """Reject an enumeration of `count` states if it exceeds the budget."""
    limit = max_states()
    if count > limit:
        raise StateLimitError(f"{what} needs {count} states, over the limit of {limit}")
