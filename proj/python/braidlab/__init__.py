"""Closed-braid word engine: invariants, Markov/exchange move calculus,
cabling, HOMFLY, and bounded reduction search."""

try:
    from braidlab._core import *  # noqa: F401,F403
    from braidlab._core import BraidWord  # noqa: F401
except ImportError:  # in-tree build: extension lives next to the build dir
    from _core import *  # noqa: F401,F403
    from _core import BraidWord  # noqa: F401

__all__ = [
    "BraidWord", "parse_word", "print_word", "exponent_sum",
    "component_count", "bennequin", "link_bennequin", "free_cyclic_reduce",
    "conjugate", "equal_as_braids", "conjugate_closed", "homfly", "mfw",
    "iterated_word", "torus_braid", "cable_invariants", "verify_cable",
    "reduce", "is_unlink_reducible", "replay_transcript", "BadWord",
]
