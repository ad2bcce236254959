"""Generator catalog: named witness games, pairings, and game products.

The catalog covers the standard small games (majority, dictator, unanimity),
the partition games whose Nakamura number equals their block count, the
three-player exotics of every nonempty nonweak type, and the diagonal
prefix game. Products combine two games over disjoint halves of the player
set carved out by a pairing of injections; a disjoint union of coalitions
wins in the product iff both halves win their factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .coalitions import Coalition
from .diagonal import IndexOracle, diagonal_game
from .games import Determination, FiniteGame, PrefixGame, finite_as_prefix


def majority(n: int) -> FiniteGame:
    """Strict-majority rule; ``n`` odd and at least 3 keeps it decisive."""
    if n < 3 or n % 2 == 0:
        raise ValueError("majority rule needs an odd universe of at least 3")
    winning = frozenset(m for m in range(1 << n) if m.bit_count() > n // 2)
    return FiniteGame(n, winning)


def dictator(player: int, n: int) -> FiniteGame:
    if not 0 <= player < n:
        raise ValueError(f"dictator {player} outside universe of {n}")
    winning = frozenset(m for m in range(1 << n) if m >> player & 1)
    return FiniteGame(n, winning)


def unanimity(members: Iterable[int], n: int) -> FiniteGame:
    """Winning iff the coalition contains every listed member."""
    need = Coalition.from_members(members, n).mask
    if need == 0:
        raise ValueError("unanimity needs a nonempty required set")
    winning = frozenset(m for m in range(1 << n) if m & need == need)
    return FiniteGame(n, winning)


def veto_free_rule(k: int) -> FiniteGame:
    """Winning iff at most one of the ``k`` players is missing."""
    if k < 2:
        raise ValueError("veto-free rule needs at least 2 players")
    winning = frozenset(m for m in range(1 << k) if m.bit_count() >= k - 1)
    return FiniteGame(k, winning)


def partition_type3(sizes: Iterable[int]) -> FiniteGame:
    """Winning iff at least ``k - 1`` of the ``k`` blocks are fully inside.

    Needs at least three blocks (two make the rule improper) and one block
    of size two or more (all-singleton blocks can make the rule strong; the
    all-singleton variant is :func:`veto_free_rule`). The Nakamura number of
    the result is the number of blocks.
    """
    blocks = _blocks(sizes)
    k = len(blocks)
    if k < 3:
        raise ValueError("need at least 3 blocks; 2 blocks yield an improper rule")
    if max(b.bit_count() for b in blocks) < 2:
        raise ValueError("need one block of size >= 2 (use veto_free_rule for singletons)")
    n = sum(b.bit_count() for b in blocks)
    winning = frozenset(
        m for m in range(1 << n) if sum(1 for b in blocks if m & b == b) >= k - 1
    )
    return FiniteGame(n, winning)


def partition_type11(sizes: Iterable[int]) -> FiniteGame:
    """Winning iff *exactly* ``k - 1`` blocks are fully inside; nonmonotonic."""
    blocks = _blocks(sizes)
    k = len(blocks)
    if k < 3:
        raise ValueError("need at least 3 blocks; see type11_k2 for the two-block analogue")
    n = sum(b.bit_count() for b in blocks)
    winning = frozenset(
        m for m in range(1 << n) if sum(1 for b in blocks if m & b == b) == k - 1
    )
    return FiniteGame(n, winning)


def type11_k2() -> FiniteGame:
    """The three-player game whose only winners are {0} and {1}."""
    return FiniteGame.from_coalitions(3, [[0], [1]])


def example_type9() -> FiniteGame:
    return FiniteGame.from_coalitions(3, [[0, 1, 2], [0], [1], [2]])


def example_type13() -> FiniteGame:
    return FiniteGame.from_coalitions(3, [[0, 1, 2], [1, 2], [0], [1], [2]])


def example_type15() -> FiniteGame:
    return FiniteGame.from_coalitions(3, [[0, 1, 2], [1, 2], [0], [1]])


def _blocks(sizes: Iterable[int]) -> list[int]:
    sizes = [int(s) for s in sizes]
    if any(s < 1 for s in sizes):
        raise ValueError("block sizes must be positive")
    blocks: list[int] = []
    start = 0
    for s in sizes:
        blocks.append(((1 << s) - 1) << start)
        start += s
    return blocks


@dataclass(frozen=True)
class Pairing:
    """Two injections whose images split the player set in two.

    ``to_left`` maps the left factor's players in (its domain is the first
    ``left_domain`` naturals, or all of them when ``None``); ``to_right``
    maps the right factor's. ``position_side(j)`` inverts the pair: it says
    which side owns position ``j`` and which factor player it is. Both
    injections must be increasing so that string prefixes split into string
    prefixes.
    """

    label: str
    left_domain: int | None
    to_left: Callable[[int], int]
    to_right: Callable[[int], int]
    position_side: Callable[[int], tuple[int, int]]

    def validate(self, universe: int) -> None:
        """Check disjointness and joint exhaustiveness over a bounded universe."""
        seen: dict[int, tuple[int, int]] = {}
        i = 0
        while self.left_domain is None or i < self.left_domain:
            j = self.to_left(i)
            if j >= universe:
                break
            seen[j] = (0, i)
            i += 1
        i = 0
        while True:
            j = self.to_right(i)
            if j >= universe:
                break
            if j in seen:
                raise ValueError(f"images overlap at position {j}")
            seen[j] = (1, i)
            i += 1
        for j in range(universe):
            if j not in seen:
                raise ValueError(f"position {j} covered by neither image")
            if self.position_side(j) != seen[j]:
                raise ValueError(f"position_side disagrees with the images at {j}")


def even_odd_pairing() -> Pairing:
    return Pairing(
        label="even_odd",
        left_domain=None,
        to_left=lambda i: 2 * i,
        to_right=lambda i: 2 * i + 1,
        position_side=lambda j: (j & 1, j >> 1),
    )


def shift_pairing(k: int) -> Pairing:
    if k < 1:
        raise ValueError("shift pairing needs a positive left domain")
    return Pairing(
        label=f"shift:{k}",
        left_domain=k,
        to_left=lambda i: i,
        to_right=lambda i: i + k,
        position_side=lambda j: (0, j) if j < k else (1, j - k),
    )


def pairing_from_spec(text: str) -> Pairing:
    if text == "even_odd":
        return even_odd_pairing()
    if text.startswith("shift:"):
        return shift_pairing(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown pairing {text!r}; use 'even_odd' or 'shift:<k>'")


def disjoint_image(
    left: Coalition, right: Coalition, pairing: Pairing, universe: int | None = None
) -> Coalition:
    """The union of the two images; injectivity makes it disjoint."""
    if pairing.left_domain is not None:
        outside = [i for i in left.members if i >= pairing.left_domain]
        if outside:
            raise ValueError(f"left coalition members {outside} fall outside the pairing domain")
    ids = [pairing.to_left(i) for i in left.members] + [
        pairing.to_right(i) for i in right.members
    ]
    if universe is None:
        universe = max(ids, default=-1) + 1
    return Coalition.from_members(ids, universe)


def split_positions(alpha: str, pairing: Pairing) -> tuple[str, str]:
    """Split a string over product positions into its two factor strings."""
    halves: tuple[list[str], list[str]] = ([], [])
    counts = [0, 0]
    for j, bit in enumerate(alpha):
        side, idx = pairing.position_side(j)
        if idx != counts[side]:
            raise ValueError("pairing is not increasing; prefixes do not split into prefixes")
        halves[side].append(bit)
        counts[side] += 1
    return "".join(halves[0]), "".join(halves[1])


def product(
    left: FiniteGame, right: FiniteGame | PrefixGame, pairing: Pairing
) -> FiniteGame | PrefixGame:
    """The game on disjoint images of winning pairs.

    Membership decomposes through the pairing: a coalition wins iff its
    left-image preimage wins ``left`` and its right-image preimage wins
    ``right``. Two finite factors produce a finite game over the smallest
    universe containing both image carriers; a prefix right factor produces
    a prefix game whose strings are classified once both halves determine.
    """
    if not isinstance(left, FiniteGame):
        raise ValueError("the left factor must be a finite game (its universe is its carrier)")
    if pairing.left_domain is not None and left.universe > pairing.left_domain:
        raise ValueError(
            f"left universe {left.universe} exceeds the pairing domain {pairing.left_domain}"
        )
    if isinstance(right, FiniteGame):
        return _finite_product(left, right, pairing)
    return _prefix_product(left, right, pairing)


def _finite_product(left: FiniteGame, right: FiniteGame, pairing: Pairing) -> FiniteGame:
    if left.universe == 0 or right.universe == 0:
        raise ValueError("product factors need nonempty universes")
    universe = 1 + max(
        pairing.to_left(left.universe - 1), pairing.to_right(right.universe - 1)
    )
    pairing.validate(universe)
    winning = set()
    for mask in range(1 << universe):
        left_mask, right_mask = _split_mask(mask, universe, pairing)
        if (left_mask & left.full_mask) in left.winning and (
            right_mask & right.full_mask
        ) in right.winning:
            winning.add(mask)
    return FiniteGame(universe, frozenset(winning))


def _split_mask(mask: int, universe: int, pairing: Pairing) -> tuple[int, int]:
    left_mask = right_mask = 0
    for j in range(universe):
        if mask >> j & 1:
            side, idx = pairing.position_side(j)
            if side == 0:
                left_mask |= 1 << idx
            else:
                right_mask |= 1 << idx
    return left_mask, right_mask


def _prefix_product(left: FiniteGame, right: PrefixGame, pairing: Pairing) -> PrefixGame:
    left_prefix = finite_as_prefix(left)

    def classify(alpha: str) -> Determination:
        left_part, right_part = split_positions(alpha, pairing)
        left_status = left_prefix.classify(left_part)
        if left_status is Determination.NONDETERMINING:
            return Determination.NONDETERMINING
        right_status = right.classify(right_part)
        if right_status is Determination.NONDETERMINING:
            return Determination.NONDETERMINING
        if left_status is Determination.WINNING and right_status is Determination.WINNING:
            return Determination.WINNING
        return Determination.LOSING

    label = f"product({left_prefix.label} (x) {right.label}, {pairing.label})"
    return PrefixGame(classify, max_depth=right.max_depth, label=label)


BUILDERS: dict[str, Callable[..., FiniteGame | PrefixGame]] = {}


def build(name: str, params: dict | None = None) -> FiniteGame | PrefixGame:
    """Construct a catalog game by name; see ``BUILDERS`` for the names."""
    params = dict(params or {})
    try:
        builder = BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown construction {name!r}; known: {sorted(BUILDERS)}") from None
    return builder(**params)


def _build_diagonal(oracle: str = "alternating", max_depth: int = 64) -> PrefixGame:
    return diagonal_game(IndexOracle.from_spec(oracle), max_depth=max_depth)


BUILDERS.update(
    {
        "majority": lambda n: majority(int(n)),
        "dictator": lambda player, n: dictator(int(player), int(n)),
        "unanimity": lambda members, n: unanimity(members, int(n)),
        "veto_free_rule": lambda k: veto_free_rule(int(k)),
        "partition_type3": lambda sizes: partition_type3(sizes),
        "partition_type11": lambda sizes: partition_type11(sizes),
        "type11_k2": type11_k2,
        "example_type9": example_type9,
        "example_type13": example_type13,
        "example_type15": example_type15,
        "diagonal": _build_diagonal,
    }
)
