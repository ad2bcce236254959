"""Axiom checks, certifying witnesses, carriers, and the sixteen-way typing.

The four conventional axioms are evaluated with complements taken inside the
game's universe, which is sound because the universe is a carrier:

* monotonic: supersets of winning coalitions win;
* proper: no coalition wins together with its complement;
* strong: no coalition loses together with its complement;
* weak: the winning family is empty or shares a common (veto) player.

A game's type index encodes (monotonic, proper, strong, nonweak) as four
bits, ``+`` = satisfied = 0, read as a binary number plus one. Type 1 is
``++++`` and type 16 is ``----``. Five indices (6, 8, 10, 14, 16) are
impossible for any game, weak or not, because weakness already implies
properness and the combination of strongness and weakness forces a dictator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalitions import Coalition
from .games import FiniteGame, intersection_of_winning

IMPOSSIBLE_TYPES = frozenset({6, 8, 10, 14, 16})


class EmptyGameError(ValueError):
    """Raised when an operation needs at least one winning coalition."""


@dataclass(frozen=True)
class TypeSignature:
    monotonic: bool
    proper: bool
    strong: bool
    nonweak: bool
    finite: bool = True

    @property
    def type_index(self) -> int:
        return (
            1
            + 8 * (not self.monotonic)
            + 4 * (not self.proper)
            + 2 * (not self.strong)
            + (not self.nonweak)
        )

    @property
    def signature(self) -> str:
        return "".join(
            "+" if flag else "-"
            for flag in (self.monotonic, self.proper, self.strong, self.nonweak)
        )

    def __repr__(self) -> str:
        return f"TypeSignature({self.signature}, type={self.type_index})"


@dataclass(frozen=True)
class AxiomWitness:
    """Certifying coalitions for every failed axiom.

    ``nonmonotonic`` is a pair ``(S, T)`` with ``S`` winning, ``T ⊇ S``
    losing; ``nonproper`` a winning ``S`` whose complement also wins;
    ``nonstrong`` a losing ``S`` whose complement also loses; ``veto`` the
    set of veto players when the game is weak and nonempty.
    """

    nonmonotonic: tuple[Coalition, Coalition] | None = None
    nonproper: Coalition | None = None
    nonstrong: Coalition | None = None
    veto: Coalition | None = None
    empty_family: bool = False

    def verify(self, game: FiniteGame) -> bool:
        """Re-check every witness against the game."""
        if self.nonmonotonic is not None:
            small, large = self.nonmonotonic
            if not (small.issubset(large) and game.is_winning(small) and not game.is_winning(large)):
                return False
        if self.nonproper is not None:
            if not (game.is_winning(self.nonproper) and game.is_winning(self.nonproper.complement())):
                return False
        if self.nonstrong is not None:
            if game.is_winning(self.nonstrong) or game.is_winning(self.nonstrong.complement()):
                return False
        if self.veto is not None:
            if not game.winning:
                return False
            if self.veto.mask == 0 or self.veto.mask != intersection_of_winning(game):
                return False
        if self.empty_family and game.winning:
            return False
        return True


def classify(game: FiniteGame) -> tuple[TypeSignature, AxiomWitness]:
    """Decide the four axioms by exhaustive check, returning witnesses for failures.

    Witnesses are deterministic: the first violation in ascending bitmask
    order is reported.
    """
    n = game.universe
    full = game.full_mask
    winning = game.winning

    nonmono: tuple[Coalition, Coalition] | None = None
    for mask in sorted(winning):
        for i in range(n):
            bit = 1 << i
            if mask & bit:
                continue
            above = mask | bit
            # a superset violation always shows up one added player at a time
            if above not in winning:
                nonmono = (Coalition(mask, n), Coalition(above, n))
                break
        if nonmono:
            break

    nonproper: Coalition | None = None
    for mask in sorted(winning):
        if (full ^ mask) in winning:
            nonproper = Coalition(mask, n)
            break

    nonstrong: Coalition | None = None
    for mask in range(full + 1):
        if mask not in winning and (full ^ mask) not in winning:
            nonstrong = Coalition(mask, n)
            break

    if not winning:
        weak = True
        veto: Coalition | None = None
        empty_family = True
    else:
        inter = intersection_of_winning(game)
        weak = inter != 0
        veto = Coalition(inter, n) if weak else None
        empty_family = False

    sig = TypeSignature(
        monotonic=nonmono is None,
        proper=nonproper is None,
        strong=nonstrong is None,
        nonweak=not weak,
    )
    if sig.type_index in IMPOSSIBLE_TYPES:
        raise AssertionError(f"classifier produced an impossible type {sig.type_index}: {game!r}")
    witness = AxiomWitness(
        nonmonotonic=nonmono,
        nonproper=nonproper,
        nonstrong=nonstrong,
        veto=veto,
        empty_family=empty_family,
    )
    return sig, witness


def veto_players(game: FiniteGame) -> Coalition:
    """The players common to every winning coalition."""
    if not game.winning:
        raise EmptyGameError("an empty game has no well-defined veto set")
    return Coalition(intersection_of_winning(game), game.universe)


def is_dictatorial(game: FiniteGame) -> int | None:
    """The dictator's id when the winning family is exactly the sets containing them."""
    n = game.universe
    if len(game.winning) != 1 << max(n - 1, 0):
        return None
    for i in range(n):
        if all(mask >> i & 1 for mask in game.winning):
            # sizes match and i is a veto player, so the families coincide
            return i
    return None


def minimal_carrier(game: FiniteGame) -> Coalition:
    """The smallest coalition outside which players never matter.

    Detected as the set of relevant players (those whose presence flips some
    coalition's status), then verified against the carrier biconditional for
    every subset of the universe, with an exhaustive search fallback.
    """
    n = game.universe
    full = game.full_mask
    winning = game.winning

    relevant = 0
    for i in range(n):
        bit = 1 << i
        for rest in range(full + 1):
            if rest & bit:
                continue
            if ((rest | bit) in winning) != (rest in winning):
                relevant |= bit
                break

    if _is_carrier(game, relevant):
        return Coalition(relevant, n)

    # fall back to the smallest carrier by (size, mask); the universe always qualifies
    candidates = sorted(range(full + 1), key=lambda m: (m.bit_count(), m))
    for mask in candidates:
        if _is_carrier(game, mask):
            return Coalition(mask, n)
    return Coalition(full, n)


def _is_carrier(game: FiniteGame, carrier_mask: int) -> bool:
    winning = game.winning
    return all(
        ((mask in winning) == ((mask & carrier_mask) in winning))
        for mask in range(game.full_mask + 1)
    )


def exhaustive_census(universe: int) -> dict[int, int]:
    """Classify every game over the universe in which the empty coalition loses.

    Returns a mapping from type index to the number of games realizing it.
    """
    if universe > 4:
        raise ValueError("census over more than 4 players is out of reach by design")
    nonempty = list(range(1, 1 << universe))
    counts: dict[int, int] = {}
    for code in range(1 << len(nonempty)):
        family = frozenset(m for b, m in enumerate(nonempty) if code >> b & 1)
        sig, _ = classify(FiniteGame(universe, family))
        counts[sig.type_index] = counts.get(sig.type_index, 0) + 1
    return counts
