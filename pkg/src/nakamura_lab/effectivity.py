"""Game forms and the simple games they induce through effectivity.

A game form maps joint strategy choices to outcomes. A coalition is
alpha-effective for a set of outcomes when it can force the outcome into
that set whatever the outsiders do, and exactly effective when some joint
strategy of the coalition makes the outsiders' reachable outcomes equal
that set. Calling a coalition winning when it is effective for every
nonempty outcome set (either notion) turns a game form into a simple game.

Only nonempty outcome sets are quantified over: no coalition is ever
effective for the empty set, so the literal all-subsets reading would leave
both derived games empty.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .coalitions import Coalition
from .games import FiniteGame

PROFILE_CAP = 1 << 20  # joint strategy spaces beyond this are refused


@dataclass(frozen=True)
class GameForm:
    """A total map from joint strategies to outcomes."""

    strategies: tuple[tuple[object, ...], ...]
    outcomes: tuple[object, ...]
    table: Mapping[tuple, object] = field(hash=False)

    def __post_init__(self) -> None:
        size = 1
        for options in self.strategies:
            if not options:
                raise ValueError("every player needs at least one strategy")
            size *= len(options)
            if size > PROFILE_CAP:
                raise ValueError(f"joint strategy space larger than {PROFILE_CAP}")
        pool = set(self.outcomes)
        for profile in itertools.product(*self.strategies):
            if profile not in self.table:
                raise ValueError(f"outcome map is not total: missing {profile}")
            if self.table[profile] not in pool:
                raise ValueError(f"outcome {self.table[profile]!r} not among the outcomes")

    @property
    def players(self) -> int:
        return len(self.strategies)

    def outcome(self, profile: tuple) -> object:
        return self.table[profile]


def veto_free_form(k: int) -> GameForm:
    """Binary voting among ``k`` players: outcome 1 iff at most one player votes 0."""
    if k < 2:
        raise ValueError("need at least 2 players")
    table = {
        profile: 1 if sum(profile) >= k - 1 else 0
        for profile in itertools.product((0, 1), repeat=k)
    }
    return GameForm(((0, 1),) * k, (0, 1), table)


def alpha_effective(form: GameForm, coalition: Coalition, targets: Iterable[object]) -> bool:
    """Can the coalition force the outcome into ``targets`` whatever outsiders play?"""
    members, outsiders, wanted = _setup(form, coalition, targets)
    for own in itertools.product(*(form.strategies[i] for i in members)):
        if all(
            form.outcome(_merge(form.players, members, own, outsiders, other)) in wanted
            for other in itertools.product(*(form.strategies[i] for i in outsiders))
        ):
            return True
    return False


def exactly_effective(form: GameForm, coalition: Coalition, targets: Iterable[object]) -> bool:
    """Can the coalition pin the outsiders' reachable outcomes to exactly ``targets``?"""
    members, outsiders, wanted = _setup(form, coalition, targets)
    for own in itertools.product(*(form.strategies[i] for i in members)):
        reachable = {
            form.outcome(_merge(form.players, members, own, outsiders, other))
            for other in itertools.product(*(form.strategies[i] for i in outsiders))
        }
        if reachable == wanted:
            return True
    return False


def _setup(form: GameForm, coalition: Coalition, targets: Iterable[object]):
    if coalition.universe != form.players:
        raise ValueError(
            f"coalition universe {coalition.universe} does not match {form.players} players"
        )
    wanted = set(targets)
    if not wanted.issubset(set(form.outcomes)):
        raise ValueError("target set contains unknown outcomes")
    members = list(coalition.members)
    outsiders = [i for i in range(form.players) if i not in coalition]
    return members, outsiders, wanted


def _merge(
    players: int,
    members: list[int],
    own: tuple,
    outsiders: list[int],
    other: tuple,
) -> tuple:
    joint: list = [None] * players
    for i, choice in zip(members, own):
        joint[i] = choice
    for i, choice in zip(outsiders, other):
        joint[i] = choice
    return tuple(joint)


def derive_alpha_game(form: GameForm) -> FiniteGame:
    """Winners are the coalitions alpha-effective for every nonempty outcome set."""
    return _derive(form, alpha_effective)


def derive_exact_game(form: GameForm) -> FiniteGame:
    """Winners are the coalitions exactly effective for every nonempty outcome set."""
    return _derive(form, exactly_effective)


def _derive(form: GameForm, effective) -> FiniteGame:
    n = form.players
    distinct = sorted(set(form.outcomes), key=repr)
    subsets = [
        set(combo)
        for size in range(1, len(distinct) + 1)
        for combo in itertools.combinations(distinct, size)
    ]
    winning = set()
    for mask in range(1 << n):
        coalition = Coalition(mask, n)
        if all(effective(form, coalition, subset) for subset in subsets):
            winning.add(mask)
    return FiniteGame(n, frozenset(winning))
