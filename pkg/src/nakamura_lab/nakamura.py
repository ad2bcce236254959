"""Exact Nakamura numbers for finite games; bounded witnesses for prefix games.

The Nakamura number of a game is the size of the smallest family of winning
coalitions whose intersection is empty, or infinity when every winning
coalition shares a veto player (the weak case). For a finite game it is
enough to search among the minimal winning coalitions; that reduction is
*not* applied to prefix games, where minimal winning coalitions need not
exist, so those only get bounded upper witnesses here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bitstrings import ones_mask
from .coalitions import Coalition
from .games import (
    Determination,
    FiniteGame,
    PrefixGame,
    intersection_of_winning,
)

INFINITE = math.inf


class SignatureContradiction(ValueError):
    """The axiom flags of a signature cannot coexist; something upstream is wrong."""


@dataclass(frozen=True)
class NakamuraResult:
    """Value plus a certificate.

    When finite, ``witness`` holds exactly ``value`` winning coalitions with
    empty intersection and no smaller winning subfamily does better. The
    ``empty_winning`` flag marks the degenerate value 1, which only occurs
    when the standing empty-coalition-loses convention is violated.
    """

    value: int | float
    witness: tuple[Coalition, ...] | None = None
    empty_winning: bool = False

    @property
    def is_finite(self) -> bool:
        return self.value != INFINITE


@dataclass(frozen=True)
class NakamuraConstraint:
    """An interval certificate derived from a game's type alone.

    ``upper_finite`` records that the value is finite even when no numeric
    bound applies (every nonweak game with a decidable membership question
    has a finite Nakamura number).
    """

    lower: int | float
    upper: int | float
    upper_finite: bool = False
    provenance: tuple[str, ...] = ()

    def contains(self, value: int | float) -> bool:
        if value == INFINITE:
            return self.upper == INFINITE and not self.upper_finite
        return self.lower <= value <= self.upper


def nakamura_number(game: FiniteGame) -> NakamuraResult:
    """Exact value with a lexicographically least minimum witness.

    Weak games report infinity. If the empty coalition wins, the value is 1
    and the result is flagged.
    """
    n = game.universe
    if not game.winning:
        return NakamuraResult(INFINITE)
    if 0 in game.winning:
        return NakamuraResult(1, (Coalition(0, n),), empty_winning=True)
    if intersection_of_winning(game) != 0:
        return NakamuraResult(INFINITE)
    minimal = minimal_masks(sorted(game.winning))
    witness = smallest_empty_intersection(minimal)
    assert witness is not None  # the whole minimal family already intersects to nothing
    return NakamuraResult(len(witness), tuple(Coalition(m, n) for m in witness))


def minimal_masks(masks: list[int]) -> list[int]:
    """Drop masks that contain another mask of the family; input sorted ascending."""
    out: list[int] = []
    for m in masks:
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def smallest_empty_intersection(masks: list[int], limit: int | None = None) -> list[int] | None:
    """Lexicographically least minimum-size subfamily with empty intersection.

    Iterative deepening over the family size; branches only on masks that
    shrink the running intersection (a member of a minimum witness always
    does), and prunes a branch once even the conjunction of every remaining
    mask cannot empty it.
    """
    masks = sorted(set(masks))
    if not masks:
        return None
    if masks[0] == 0:
        return [0]
    count = len(masks)
    suffix = [0] * (count + 1)
    suffix[count] = -1  # all ones
    for i in range(count - 1, -1, -1):
        suffix[i] = suffix[i + 1] & masks[i]
    top = count if limit is None else min(limit, count)
    for size in range(2, top + 1):
        found = _search_fixed_size(masks, suffix, size)
        if found is not None:
            return found
    return None


def _search_fixed_size(masks: list[int], suffix: list[int], size: int) -> list[int] | None:
    count = len(masks)
    chosen: list[int] = []

    def recurse(start: int, inter: int) -> list[int] | None:
        remaining = size - len(chosen)
        if remaining == 0:
            return list(chosen) if inter == 0 else None
        for i in range(start, count - remaining + 1):
            if inter & suffix[i]:
                return None  # even taking every later mask leaves a common player
            nxt = inter & masks[i]
            if nxt == inter:
                continue  # members of a minimum witness must shrink the intersection
            chosen.append(masks[i])
            got = recurse(i + 1, nxt)
            if got is not None:
                return got
            chosen.pop()
        return None

    return recurse(0, -1)


def signature_constraints(sig, empty_losing: bool = True) -> NakamuraConstraint:
    """Interval implied by a type signature, assuming the empty coalition loses.

    Rules applied (each independently sound, intersected):

    * empty coalition losing: value at least 2;
    * weak: value infinite by definition;
    * nonweak: value finite (no numeric bound);
    * nonproper: two complementary winners exist, value exactly 2;
    * strong and nonweak: value 2 or 3;
    * monotonic and proper: value at least 3;
    * nonmonotonic and strong: value exactly 2.

    An empty resulting interval means the flags contradict each other, which
    is a bug in whatever produced the signature.
    """
    if not empty_losing:
        raise ValueError("constraints are only derived under the empty-coalition-loses convention")
    intervals: list[tuple[int | float, int | float, bool, str]] = [
        (2, INFINITE, False, "empty-coalition-losing"),
    ]
    if not sig.nonweak:
        intervals.append((INFINITE, INFINITE, False, "weak-by-definition"))
    else:
        intervals.append((2, INFINITE, True, "nonweak-finite-value"))
    if not sig.proper:
        intervals.append((2, 2, False, "complementary-winners"))
    if sig.strong and sig.nonweak:
        intervals.append((2, 3, False, "strong-nonweak-split"))
    if sig.monotonic and sig.proper:
        intervals.append((3, INFINITE, False, "monotone-proper-floor"))
    if not sig.monotonic and sig.strong:
        intervals.append((2, 2, False, "nonmonotone-strong-pair"))

    lower: int | float = max(v[0] for v in intervals)
    upper: int | float = min(v[1] for v in intervals)
    upper_finite = any(v[2] for v in intervals)
    provenance = tuple(v[3] for v in intervals)
    if lower > upper or (upper_finite and lower == INFINITE):
        raise SignatureContradiction(
            f"signature {sig!r} admits no Nakamura number (rules: {', '.join(provenance)})"
        )
    return NakamuraConstraint(lower, upper, upper_finite, provenance)


def bounded_nakamura_witness(
    game: PrefixGame, depth: int, family_limit: int = 8
) -> tuple[Coalition, ...] | None:
    """A sound upper-bound certificate for a prefix game.

    Enumerates the frontier of winning-determining strings up to ``depth``,
    reads each as the coalition of its one-positions (zero-extended, hence
    genuinely winning), and returns the smallest family with empty
    intersection, capped at ``family_limit`` members. ``None`` means no such
    family exists at this depth, which bounds nothing.
    """
    if depth > game.max_depth:
        raise ValueError(f"depth {depth} exceeds the game's evaluation bound {game.max_depth}")
    if depth < 0 or depth > 63:
        raise ValueError("depth must lie in 0..63 so witnesses fit a coalition universe")
    winners = winning_frontier(game, depth)
    masks = sorted({ones_mask(alpha) for alpha in winners})
    if not masks:
        return None
    if masks[0] == 0:
        return (Coalition(0, depth),)
    family = smallest_empty_intersection(minimal_masks(masks), limit=family_limit)
    if family is None:
        return None
    return tuple(Coalition(m, depth) for m in family)


def winning_frontier(game: PrefixGame, depth: int) -> list[str]:
    """Shortest winning-determining strings up to ``depth``, in breadth-first order."""
    out: list[str] = []
    layer = [""]
    for _ in range(depth + 1):
        next_layer: list[str] = []
        for alpha in layer:
            status = game.classify(alpha)
            if status is Determination.WINNING:
                out.append(alpha)
            elif status is Determination.NONDETERMINING and len(alpha) < depth:
                next_layer.append(alpha + "0")
                next_layer.append(alpha + "1")
        layer = next_layer
        if not layer:
            break
    return out
