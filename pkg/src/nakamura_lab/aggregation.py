"""Preference profiles, the dominance relation, and core checks.

Alternatives are labelled strings; an individual preference is an acyclic
strict relation given as a set of ordered pairs. An alternative ``x``
dominates ``y`` when some winning coalition unanimously prefers ``x``; the
core is the set of undominated alternatives.

For a nonweak game whose empty coalition loses, the core is nonempty for
every profile exactly when the number of alternatives stays below the
game's Nakamura number. :func:`verify_core_threshold` checks both sides of
that threshold at desk scale: exhaustive or sampled profile sweeps below
it, and an explicitly constructed (then re-verified) empty-core profile at
or above it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .games import FiniteGame
from .nakamura import nakamura_number

Relation = frozenset  # of (str, str) pairs


class StandingAssumptionError(ValueError):
    """The game lets the empty coalition win, which the core machinery forbids."""


def is_acyclic(relation: Iterable[tuple[str, str]]) -> bool:
    """True iff the directed graph of the relation has no cycle.

    Self-loops and two-cycles count as cycles, so acyclicity subsumes
    irreflexivity and asymmetry.
    """
    pairs = set(relation)
    succ: dict[str, set[str]] = {}
    for x, y in pairs:
        succ.setdefault(x, set()).add(y)
        succ.setdefault(y, set())
    state: dict[str, int] = {}  # 1 = on stack, 2 = done

    def dfs(node: str) -> bool:
        state[node] = 1
        for nxt in succ[node]:
            mark = state.get(nxt)
            if mark == 1:
                return False
            if mark is None and not dfs(nxt):
                return False
        state[node] = 2
        return True

    return all(state.get(node) == 2 or dfs(node) for node in succ)


@dataclass(frozen=True)
class Profile:
    """One acyclic strict relation per player of the game's universe."""

    relations: tuple[Relation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "relations", tuple(frozenset(r) for r in self.relations))
        for i, relation in enumerate(self.relations):
            if not is_acyclic(relation):
                raise ValueError(f"relation of player {i} has a cycle")

    def __len__(self) -> int:
        return len(self.relations)


def dominance(
    game: FiniteGame, alternatives: Sequence[str], profile: Profile
) -> frozenset[tuple[str, str]]:
    """Pairs ``(x, y)`` such that some winning coalition unanimously prefers x to y.

    The result is a raw relation; nothing guarantees it is acyclic.
    """
    _check_profile(game, alternatives, profile)
    winning = sorted(game.winning)
    out = set()
    for x in alternatives:
        for y in alternatives:
            if x == y:
                continue
            supporters = 0
            for i, relation in enumerate(profile.relations):
                if (x, y) in relation:
                    supporters |= 1 << i
            if any(mask & supporters == mask for mask in winning):
                out.add((x, y))
    return frozenset(out)


def core(game: FiniteGame, alternatives: Sequence[str], profile: Profile) -> list[str]:
    """Undominated alternatives, in the order given."""
    if game.empty_winning:
        raise StandingAssumptionError("core is undefined when the empty coalition wins")
    dominated = {y for _, y in dominance(game, alternatives, profile)}
    return [x for x in alternatives if x not in dominated]


def _check_profile(game: FiniteGame, alternatives: Sequence[str], profile: Profile) -> None:
    if len(profile) != game.universe:
        raise ValueError(
            f"profile has {len(profile)} relations but the game universe is {game.universe}"
        )
    if len(set(alternatives)) != len(alternatives):
        raise ValueError("alternative labels must be distinct")


def all_acyclic_relations(alternatives: Sequence[str]) -> list[Relation]:
    """Every acyclic strict relation over the alternatives.

    Each unordered pair may be oriented either way or left out, and the
    cyclic assignments are filtered. Guarded to four alternatives; beyond
    that, use linear orders.
    """
    if len(alternatives) > 4:
        raise ValueError("full acyclic enumeration is only supported up to 4 alternatives")
    pairs = list(itertools.combinations(alternatives, 2))
    out: list[Relation] = []
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        relation = set()
        for (x, y), way in zip(pairs, choice):
            if way == 1:
                relation.add((x, y))
            elif way == 2:
                relation.add((y, x))
        if is_acyclic(relation):
            out.append(frozenset(relation))
    return out


def all_linear_orders(alternatives: Sequence[str]) -> list[Relation]:
    return [linear_order(perm) for perm in itertools.permutations(alternatives)]


def linear_order(ranking: Sequence[str]) -> Relation:
    """The strict relation of a ranking, best first."""
    return frozenset(
        (ranking[i], ranking[j]) for i in range(len(ranking)) for j in range(i + 1, len(ranking))
    )


@dataclass(frozen=True)
class CoreCheck:
    """Outcome of a threshold check; see :func:`verify_core_threshold`.

    On the "below" side, a non-None ``empty_core_profile`` is the violating
    profile that was found (there should never be one); on the
    "at_or_above" side it is the verified empty-core certificate.
    """

    alternatives: tuple[str, ...]
    nu: int | float
    side: str  # "below" or "at_or_above"
    profiles_checked: int
    all_nonempty: bool | None = None
    empty_core_profile: Profile | None = None
    constructed: bool = False

    @property
    def ok(self) -> bool:
        if self.side == "below":
            return bool(self.all_nonempty)
        return self.empty_core_profile is not None


def verify_core_threshold(
    game: FiniteGame,
    m: int,
    mode: str = "exhaustive",
    seed: int = 0,
    samples: int = 1000,
) -> CoreCheck:
    """Check the core-existence threshold for ``m`` alternatives.

    Below the game's Nakamura number, every enumerated or sampled profile
    must yield a nonempty core. At or above it, a cyclic profile is built
    from a minimum witness family and re-verified to have an empty core
    (with a brute-force search over linear-order profiles as fallback).
    Exhaustive mode is limited to ``m <= 3`` and a universe of at most 4.
    """
    if game.empty_winning:
        raise StandingAssumptionError("threshold check requires the empty coalition to lose")
    if m < 1:
        raise ValueError("need at least one alternative")
    result = nakamura_number(game)
    if not result.is_finite:
        raise ValueError("the game is weak; the core is nonempty for every profile and every m")
    nu = int(result.value)
    alternatives = tuple(f"x{i}" for i in range(m))

    if m < nu:
        relations = _relation_pool(alternatives, mode, game.universe)
        checked = 0
        if mode == "exhaustive":
            checked, violation = _exhaustive_below_sweep(game, alternatives, relations)
            if violation is not None:
                return CoreCheck(
                    alternatives,
                    nu,
                    "below",
                    checked,
                    all_nonempty=False,
                    empty_core_profile=Profile(violation),
                )
        elif mode == "sampled":
            rng = random.Random(seed)
            for _ in range(samples):
                combo = tuple(rng.choice(relations) for _ in range(game.universe))
                checked += 1
                if not core(game, alternatives, Profile(combo)):
                    return CoreCheck(alternatives, nu, "below", checked, all_nonempty=False)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return CoreCheck(alternatives, nu, "below", checked, all_nonempty=True)

    witness = result.witness
    assert witness is not None
    profile = _cyclic_profile(game, alternatives, [c.mask for c in witness])
    if not core(game, alternatives, profile):
        return CoreCheck(
            alternatives, nu, "at_or_above", 1, empty_core_profile=profile, constructed=True
        )
    # the construction is validated, never trusted; scan linear-order profiles if it failed
    orders = all_linear_orders(alternatives)
    space = len(orders) ** game.universe
    checked = 1
    if space <= 20000:
        candidates: Iterable[tuple[Relation, ...]] = itertools.product(
            orders, repeat=game.universe
        )
    else:
        rng = random.Random(seed)
        candidates = (
            tuple(rng.choice(orders) for _ in range(game.universe)) for _ in range(20000)
        )
    for combo in candidates:
        checked += 1
        candidate = Profile(combo)
        if not core(game, alternatives, candidate):
            return CoreCheck(
                alternatives, nu, "at_or_above", checked, empty_core_profile=candidate
            )
    return CoreCheck(alternatives, nu, "at_or_above", checked, empty_core_profile=None)


def _exhaustive_below_sweep(
    game: FiniteGame, alternatives: tuple[str, ...], relations: list[Relation]
) -> tuple[int, tuple[Relation, ...] | None]:
    """Scan every profile over the pool for an empty core.

    Equivalent to running :func:`core` per profile, specialized for the
    sweep: dominance only needs, per ordered pair, the set of players
    preferring it, so relations are flattened to pair-membership rows once.
    Returns the number of profiles checked and the first violating profile.
    """
    pairs = [(x, y) for x in alternatives for y in alternatives if x != y]
    target = [alternatives.index(y) for _, y in pairs]
    rows = [tuple(1 if p in rel else 0 for p in pairs) for rel in relations]
    wins = sorted(game.winning)
    n = game.universe
    full = (1 << len(alternatives)) - 1
    checked = 0
    for combo in itertools.product(range(len(relations)), repeat=n):
        supporters = [0] * len(pairs)
        for player in range(n):
            row = rows[combo[player]]
            bit = 1 << player
            for k, flag in enumerate(row):
                if flag:
                    supporters[k] |= bit
        dominated = 0
        for k, s in enumerate(supporters):
            for w in wins:
                if w & s == w:
                    dominated |= 1 << target[k]
                    break
        checked += 1
        if dominated == full:
            return checked, tuple(relations[i] for i in combo)
    return checked, None


def _relation_pool(alternatives: tuple[str, ...], mode: str, universe: int) -> list[Relation]:
    m = len(alternatives)
    if mode == "exhaustive":
        if m > 3 or universe > 4:
            raise ValueError("exhaustive mode is limited to m <= 3 and universe <= 4")
        return all_acyclic_relations(alternatives)
    if m <= 3:
        return all_acyclic_relations(alternatives)
    return all_linear_orders(alternatives)


def _cyclic_profile(
    game: FiniteGame, alternatives: tuple[str, ...], blocks: list[int]
) -> Profile:
    """Empty-core construction from a witness family.

    Every player misses at least one witness block (their intersection is
    empty); rotating the first ``len(blocks)`` alternatives past that block
    makes each of them dominated by its predecessor, and parking any extra
    alternatives at the bottom of every ranking dominates those too.
    """
    nu = len(blocks)
    orders = []
    for i in range(game.universe):
        r = next(j for j, mask in enumerate(blocks) if not mask >> i & 1)
        cycle = [alternatives[(r + 1 + t) % nu] for t in range(nu)]
        orders.append(linear_order(cycle + list(alternatives[nu:])))
    return Profile(tuple(orders))


def profile_to_json(profile: Profile) -> list[list[list[str]]]:
    return [sorted([list(pair) for pair in relation]) for relation in profile.relations]


def profile_from_json(data: Sequence[Sequence[Sequence[str]]]) -> Profile:
    return Profile(tuple(frozenset((x, y) for x, y in relation) for relation in data))


def acyclic_relation_count(m: int) -> int:
    """Number of acyclic strict relations on ``m`` labelled alternatives."""
    if m > 4:
        raise ValueError("only small alternative sets are enumerated")
    return len(all_acyclic_relations([f"x{i}" for i in range(m)]))
