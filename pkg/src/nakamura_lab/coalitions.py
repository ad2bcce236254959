"""Coalitions as bitmasks over a bounded universe of player ids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_UNIVERSE = 63  # one machine word per coalition


@dataclass(frozen=True, order=True)
class Coalition:
    """A subset of ``{0, ..., universe - 1}``; bit ``i`` of ``mask`` is player ``i``.

    Instances are immutable and totally ordered by ``(mask, universe)``, which
    gives every algorithm in this package a deterministic tie-break.
    """

    mask: int
    universe: int

    def __post_init__(self) -> None:
        if not 0 <= self.universe <= MAX_UNIVERSE:
            raise ValueError(f"universe must lie in 0..{MAX_UNIVERSE}, got {self.universe}")
        if not 0 <= self.mask < (1 << self.universe):
            raise ValueError(
                f"coalition mask {self.mask:#b} does not fit a universe of {self.universe}"
            )

    @classmethod
    def from_members(cls, members: Iterable[int], universe: int) -> Coalition:
        mask = 0
        for i in members:
            if not 0 <= int(i) < universe:
                raise ValueError(f"player {i} outside universe of {universe}")
            mask |= 1 << int(i)
        return cls(mask, universe)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.universe) if self.mask >> i & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.universe) - 1

    def complement(self) -> Coalition:
        """The complement within the universe."""
        return Coalition(self.mask ^ self.full_mask, self.universe)

    def intersection(self, other: Coalition) -> Coalition:
        self._require_same_universe(other)
        return Coalition(self.mask & other.mask, self.universe)

    def union(self, other: Coalition) -> Coalition:
        self._require_same_universe(other)
        return Coalition(self.mask | other.mask, self.universe)

    def issubset(self, other: Coalition) -> bool:
        self._require_same_universe(other)
        return self.mask & other.mask == self.mask

    def _require_same_universe(self, other: Coalition) -> None:
        if self.universe != other.universe:
            raise ValueError(f"universe mismatch: {self.universe} vs {other.universe}")

    def __contains__(self, player: int) -> bool:
        return 0 <= player < self.universe and bool(self.mask >> player & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __repr__(self) -> str:
        return f"Coalition({{{', '.join(map(str, self.members))}}}, universe={self.universe})"
