"""Game representations and the membership-evaluation contract.

A :class:`FiniteGame` lists its winning coalitions explicitly over a bounded
universe. The universe doubles as a carrier: a set of players wins iff its
restriction to the universe does, so every axiom below is decided within it.

A :class:`PrefixGame` answers, for any finite 0/1 string, whether every set
of players extending that string is winning, losing, or not yet forced. That
is the operational form of a game whose membership question is decidable:
feeding a set to the game means scanning its initial segments until one of
them settles the answer.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Callable, Iterable

from .bitstrings import validate_bits
from .coalitions import MAX_UNIVERSE, Coalition


class Determination(Enum):
    """Status of a 0/1 string under a prefix classifier."""

    WINNING = "winning-determining"
    LOSING = "losing-determining"
    NONDETERMINING = "nondetermining"


@dataclass(frozen=True)
class FiniteGame:
    """An explicit winning family over the universe ``{0, ..., universe - 1}``.

    ``winning`` holds coalition bitmasks. Constructing a game in which the
    empty coalition wins is legal but emits a warning: the standing
    convention everywhere in this package is that the empty coalition loses
    (otherwise the Nakamura number degenerates to 1).
    """

    universe: int
    winning: frozenset[int]

    def __post_init__(self) -> None:
        if not 0 <= self.universe <= MAX_UNIVERSE:
            raise ValueError(f"universe must lie in 0..{MAX_UNIVERSE}, got {self.universe}")
        object.__setattr__(self, "winning", frozenset(self.winning))
        limit = 1 << self.universe
        for mask in self.winning:
            if not 0 <= mask < limit:
                raise ValueError(f"winning mask {mask:#b} outside universe of {self.universe}")
        if 0 in self.winning:
            warnings.warn(
                "empty coalition is winning; the Nakamura number of this game is 1",
                stacklevel=2,
            )

    @classmethod
    def from_coalitions(cls, universe: int, winning: Iterable[Iterable[int]]) -> FiniteGame:
        masks = frozenset(Coalition.from_members(members, universe).mask for members in winning)
        return cls(universe, masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.universe) - 1

    @property
    def empty_winning(self) -> bool:
        return 0 in self.winning

    def is_winning(self, coalition: Coalition) -> bool:
        if coalition.universe != self.universe:
            raise ValueError(
                f"universe mismatch: game over {self.universe}, coalition over {coalition.universe}"
            )
        return coalition.mask in self.winning

    def winning_coalitions(self) -> tuple[Coalition, ...]:
        return tuple(Coalition(m, self.universe) for m in sorted(self.winning))

    def __repr__(self) -> str:
        return f"FiniteGame(universe={self.universe}, winning={sorted(self.winning)})"


class MembershipStream:
    """A total 0/1 membership sequence standing in for a decidable set of players.

    The canonical constructors are eventually periodic streams (closed under
    complement and cheap to compare) and zero-extensions of finite coalitions.
    Arbitrary bit functions are accepted for callers that need them.
    """

    __slots__ = ("_bit", "prefix", "period")

    def __init__(
        self,
        bit: Callable[[int], int],
        prefix: str | None = None,
        period: str | None = None,
    ) -> None:
        self._bit = bit
        self.prefix = prefix
        self.period = period

    @classmethod
    def eventually_periodic(cls, prefix: str, period: str) -> MembershipStream:
        validate_bits(prefix)
        validate_bits(period)
        if not period:
            raise ValueError("period must be nonempty")

        def bit(i: int) -> int:
            if i < len(prefix):
                return int(prefix[i])
            return int(period[(i - len(prefix)) % len(period)])

        return cls(bit, prefix=prefix, period=period)

    @classmethod
    def from_function(cls, bit: Callable[[int], int]) -> MembershipStream:
        return cls(bit)

    @classmethod
    def from_coalition(cls, coalition: Coalition) -> MembershipStream:
        bits = "".join("1" if i in coalition else "0" for i in range(coalition.universe))
        return cls.eventually_periodic(bits, "0")

    def bit(self, i: int) -> int:
        value = self._bit(i)
        if value not in (0, 1):
            raise ValueError(f"stream produced a non-bit value {value!r} at index {i}")
        return value

    def initial_segment(self, k: int) -> str:
        return "".join(str(self.bit(i)) for i in range(k))

    def complement(self) -> MembershipStream:
        if self.prefix is not None and self.period is not None:
            flipped_prefix = self.prefix.translate(_FLIP)
            flipped_period = self.period.translate(_FLIP)
            return MembershipStream.eventually_periodic(flipped_prefix, flipped_period)
        return MembershipStream.from_function(lambda i: 1 - self.bit(i))

    def __repr__(self) -> str:
        if self.prefix is not None:
            return f"MembershipStream({self.prefix!r} + {self.period!r}*)"
        return "MembershipStream(<procedural>)"


_FLIP = str.maketrans("01", "10")


@dataclass(frozen=True)
class Verdict:
    """Outcome of evaluating a stream against a prefix game.

    ``witness`` is the first determining initial segment when the game
    settles; ``depth`` records the bound reached when it does not. Reaching
    the bound is a value, not an error: it is how a bounded evaluator makes
    a non-terminating membership question observable.
    """

    outcome: str  # "winning" | "losing" | "undetermined"
    witness: str | None = None
    depth: int | None = None

    @classmethod
    def winning(cls, witness: str) -> Verdict:
        return cls("winning", witness=witness)

    @classmethod
    def losing(cls, witness: str) -> Verdict:
        return cls("losing", witness=witness)

    @classmethod
    def undetermined(cls, depth: int) -> Verdict:
        return cls("undetermined", depth=depth)

    @property
    def is_determined(self) -> bool:
        return self.outcome != "undetermined"

    @property
    def is_winning(self) -> bool:
        return self.outcome == "winning"

    @property
    def is_losing(self) -> bool:
        return self.outcome == "losing"


@dataclass(frozen=True)
class PrefixGame:
    """A game given by a total classifier of 0/1 strings.

    The classifier must be pure and prefix-consistent: no string may admit
    both a winning-determining and a losing-determining string among its
    prefixes and extensions.
    """

    classify: Callable[[str], Determination]
    max_depth: int = 64
    label: str = ""

    def __repr__(self) -> str:
        return f"PrefixGame({self.label or 'anonymous'}, max_depth={self.max_depth})"


def eval_stream(game: PrefixGame, stream: MembershipStream) -> Verdict:
    """Scan initial segments of the stream until one of them determines.

    Returns ``Verdict.undetermined`` once ``game.max_depth`` segments have
    been inspected without a decision.
    """
    for k in range(game.max_depth + 1):
        segment = stream.initial_segment(k)
        status = game.classify(segment)
        if status is Determination.WINNING:
            return Verdict.winning(segment)
        if status is Determination.LOSING:
            return Verdict.losing(segment)
    return Verdict.undetermined(game.max_depth)


def finite_as_prefix(game: FiniteGame) -> PrefixGame:
    """View a finite game as a prefix classifier.

    A string at least as long as the universe is always determining (players
    beyond the universe never matter). A shorter string is determining only
    when forced, i.e. when all of its completions agree.
    """
    n = game.universe
    winning = game.winning
    memo: dict[str, Determination] = {}

    def classify(alpha: str) -> Determination:
        validate_bits(alpha)
        if len(alpha) >= n:
            head = alpha[:n]
            mask = int(head[::-1], 2) if head else 0
            return Determination.WINNING if mask in winning else Determination.LOSING
        got = memo.get(alpha)
        if got is None:
            zero = classify(alpha + "0")
            one = classify(alpha + "1")
            got = zero if zero == one else Determination.NONDETERMINING
            memo[alpha] = got
        return got

    return PrefixGame(classify, max_depth=max(64, n), label=f"finite(universe={n})")


def monotone_closure(game: FiniteGame) -> FiniteGame:
    """The smallest monotonic game containing the winning family."""
    closed: set[int] = set()
    full = game.full_mask
    for mask in game.winning:
        free = full & ~mask
        sub = free
        # enumerate supersets of mask by walking submasks of the free positions
        while True:
            closed.add(mask | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return FiniteGame(game.universe, frozenset(closed))


def extend_universe(game: FiniteGame, universe: int) -> FiniteGame:
    """Embed a game into a larger universe, keeping the old universe a carrier."""
    if universe < game.universe:
        raise ValueError("cannot shrink a universe; restrict the winning family instead")
    small_full = game.full_mask
    extra = [m << game.universe for m in range(1 << (universe - game.universe))]
    winning = frozenset(
        base | high for base in game.winning for high in extra
    )
    # membership of any mask over the larger universe is decided by mask & small_full
    assert all((m & small_full) in game.winning for m in winning)
    return FiniteGame(universe, winning)


def intersection_of_winning(game: FiniteGame) -> int:
    """Bitmask of the players common to every winning coalition (full mask if none)."""
    return reduce(lambda a, b: a & b, game.winning, game.full_mask)
