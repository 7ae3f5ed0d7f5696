"""Multi-tape finite-state automata."""

from mta.core import (
    LEFT,
    PAD,
    RIGHT,
    Alphabet,
    AutomatonError,
    MultiTapeAutomaton,
    TapedAutomaton,
    accepts,
    from_taped_model,
    simulate,
    simulate_taped,
    to_taped_model,
    validate,
)

__all__ = [
    "LEFT",
    "PAD",
    "RIGHT",
    "Alphabet",
    "AutomatonError",
    "MultiTapeAutomaton",
    "TapedAutomaton",
    "accepts",
    "from_taped_model",
    "simulate",
    "simulate_taped",
    "to_taped_model",
    "validate",
]
