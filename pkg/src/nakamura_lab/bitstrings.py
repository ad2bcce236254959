"""Finite 0/1 strings and the prefix algebra used by prefix-classified games.

A string of length ``k`` stands for the first ``k`` membership bits of a set
of players: bit ``i`` says whether player ``i`` belongs. Strings are plain
``str`` values over the alphabet ``"01"``; the empty string is allowed
everywhere. Conversion to a :class:`~nakamura_lab.coalitions.Coalition` is
explicit because a string and the set of its one-positions are different
things (the flipped string is *not* the set complement of those positions).
"""

from __future__ import annotations

from .coalitions import Coalition

_ALPHABET = frozenset("01")
_FLIP = str.maketrans("01", "10")


def validate_bits(alpha: str) -> str:
    """Reject anything that is not a 0/1 string."""
    if not _ALPHABET.issuperset(alpha):
        raise ValueError(f"not a 0/1 string: {alpha!r}")
    return alpha


def complement(alpha: str) -> str:
    """Flip every bit, keeping the length."""
    validate_bits(alpha)
    return alpha.translate(_FLIP)


def is_initial_segment(alpha: str, beta: str) -> bool:
    """True iff ``beta`` restricted to ``len(alpha)`` equals ``alpha``."""
    validate_bits(alpha)
    validate_bits(beta)
    return beta.startswith(alpha)


def incompatible(alpha: str, beta: str) -> bool:
    """True iff neither string is an initial segment of the other.

    Equivalently: the strings disagree at some position below both lengths.
    """
    validate_bits(alpha)
    validate_bits(beta)
    return not (beta.startswith(alpha) or alpha.startswith(beta))


def ones_mask(alpha: str) -> int:
    """Bitmask of the positions carrying a 1 (bit ``i`` set iff ``alpha[i] == '1'``)."""
    validate_bits(alpha)
    return int(alpha[::-1], 2) if alpha else 0


def ones_coalition(alpha: str, universe: int) -> Coalition:
    """Read the string as the coalition ``{i : alpha(i) = 1}``.

    Positions beyond ``len(alpha)`` are absent, i.e. the string is extended
    by zeros up to the universe. The universe must cover the whole string.
    """
    if universe < len(alpha):
        raise ValueError(f"universe {universe} shorter than string of length {len(alpha)}")
    return Coalition(ones_mask(alpha), universe)
