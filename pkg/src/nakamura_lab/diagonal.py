"""An infinite, decidable, majority-flavored game built by diagonalization.

The construction consumes a listing of distinct ``(index, bit)`` pairs with
first index at least 2. Stage ``s`` of the listing pins a finite set of
strings of length ``cutoff(s)``: the string must carry the stage's bit at
its index and the *opposite* bit at every earlier stage's index. Strings
pinned by some stage that start with ``10`` form the decision cores: the
stage bit sorts them into a winning core (bit 1) or a losing core (bit 0).
The full winning and losing string sets are the cores closed under
complementation plus the seeds ``11`` (winning) and ``00`` (losing).

Any two distinct strings in the two sets disagree somewhere, so no set of
players can be driven to both answers. A set of players wins iff some
initial segment of its membership bits lands in the winning set; the
resulting game is monotonic, self-dual (hence proper and strong), has three
winning coalitions with empty intersection, and admits no finite carrier as
long as the listing keeps producing fresh indices carrying both bit values
beyond every threshold. Built-in listings guarantee that by construction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bitstrings import complement, validate_bits
from .games import Determination, PrefixGame


class OracleError(ValueError):
    """The index listing violates its contract (duplicate or bad entries)."""


class IndexOracle:
    """Lazily materialized listing of distinct ``(index, bit)`` pairs.

    ``entry(s)`` returns the ``s``-th pair, or ``None`` once a finite
    listing is exhausted. ``cutoff(s)`` is the running string length bound:
    one more than the largest index seen up to stage ``s``.
    """

    def __init__(self, entries: Iterable[tuple[int, int]], label: str = "custom") -> None:
        self._source: Iterator[tuple[int, int]] = iter(entries)
        self._entries: list[tuple[int, int]] = []
        self._cutoffs: list[int] = []
        self._seen: set[int] = set()
        self._exhausted = False
        self.label = label

    @classmethod
    def alternating(cls) -> IndexOracle:
        """Indices 2, 4, 6, ... with bits 0, 1, 0, 1, ..."""
        return cls(((2 + 2 * s, s % 2) for s in itertools.count()), label="alternating")

    @classmethod
    def seeded(cls, seed: int) -> IndexOracle:
        """A randomized listing that still guarantees both bits beyond every cutoff.

        The head shuffles the indices 2..8 (so several stages may share one
        cutoff), indices 10 and 11 carry the two bit values in random order,
        and from 12 on the indices increase forever in pairs that always
        carry both bits.
        """

        def generate() -> Iterator[tuple[int, int]]:
            rng = random.Random(seed)
            head = list(range(2, 9))
            rng.shuffle(head)
            for k in head:
                yield k, rng.randrange(2)
            yield 9, rng.randrange(2)
            tail = [0, 1]
            rng.shuffle(tail)
            yield 10, tail[0]
            yield 11, tail[1]
            k = 12
            while True:
                bits = [0, 1]
                rng.shuffle(bits)
                yield k, bits[0]
                yield k + 1, bits[1]
                k += 2

        return cls(generate(), label=f"seeded:{seed}")

    @classmethod
    def from_entries(cls, pairs: Iterable[tuple[int, int]]) -> IndexOracle:
        return cls(list(pairs), label="explicit")

    @classmethod
    def from_spec(cls, text: str) -> IndexOracle:
        if text == "alternating":
            return cls.alternating()
        if text.startswith("seeded:"):
            return cls.seeded(int(text.split(":", 1)[1]))
        raise OracleError(f"unknown oracle spec {text!r}; use 'alternating' or 'seeded:<n>'")

    def entry(self, s: int) -> tuple[int, int] | None:
        while len(self._entries) <= s and not self._exhausted:
            nxt = next(self._source, None)
            if nxt is None:
                self._exhausted = True
                break
            k, v = int(nxt[0]), int(nxt[1])
            if v not in (0, 1):
                raise OracleError(f"bit must be 0 or 1, got {v}")
            if k in self._seen:
                raise OracleError(f"duplicate index {k}")
            if not self._entries and k < 2:
                raise OracleError(f"first index must be at least 2, got {k}")
            if k < 0:
                raise OracleError(f"negative index {k}")
            self._seen.add(k)
            self._entries.append((k, v))
            prev = self._cutoffs[-1] if self._cutoffs else 0
            self._cutoffs.append(max(prev, k + 1))
        if s < len(self._entries):
            return self._entries[s]
        return None

    def cutoff(self, s: int) -> int | None:
        if self.entry(s) is None:
            return None
        return self._cutoffs[s]

    def __repr__(self) -> str:
        return f"IndexOracle({self.label})"


@dataclass(frozen=True)
class Decision:
    """A classification plus a flag for listings that ran out mid-decision."""

    status: Determination
    truncated: bool = False


@dataclass(frozen=True)
class DeterminingTables:
    """Materialized string sets up to a length bound.

    ``stage_strings[s]`` holds the strings pinned by stage ``s``;
    ``winning_core`` and ``losing_core`` the pinned strings extending
    ``10``, split by stage bit; ``winning`` and ``losing`` the closures
    under complement plus the seeds. ``truncated`` marks a finite listing
    that ran out before the length bound was covered.
    """

    max_len: int
    indices: tuple[int, ...]
    bits: tuple[int, ...]
    cutoffs: tuple[int, ...]
    stage_strings: tuple[frozenset[str], ...]
    winning_core: frozenset[str]
    losing_core: frozenset[str]
    winning: frozenset[str]
    losing: frozenset[str]
    truncated: bool

    def status(self, alpha: str) -> Determination:
        if alpha in self.winning:
            return Determination.WINNING
        if alpha in self.losing:
            return Determination.LOSING
        return Determination.NONDETERMINING


def determining_tables(oracle: IndexOracle, max_len: int) -> DeterminingTables:
    """Materialize every stage whose cutoff fits within ``max_len``."""
    if max_len < 3:
        raise ValueError("max_len below 3 cannot hold any pinned string")
    indices: list[int] = []
    bits: list[int] = []
    cutoffs: list[int] = []
    stage_strings: list[frozenset[str]] = []
    truncated = False
    s = 0
    while True:
        got = oracle.entry(s)
        if got is None:
            truncated = True
            break
        cut = oracle.cutoff(s)
        assert cut is not None
        if cut > max_len:
            break
        indices.append(got[0])
        bits.append(got[1])
        cutoffs.append(cut)
        stage_strings.append(frozenset(_stage_strings(indices, bits, cut)))
        s += 1

    winning_core: set[str] = set()
    losing_core: set[str] = set()
    for stage, strings in enumerate(stage_strings):
        side = winning_core if bits[stage] else losing_core
        for alpha in strings:
            if alpha.startswith("10"):
                side.add(alpha)
    winning = frozenset({"11"} | winning_core | {complement(a) for a in losing_core})
    losing = frozenset({"00"} | losing_core | {complement(a) for a in winning_core})
    return DeterminingTables(
        max_len=max_len,
        indices=tuple(indices),
        bits=tuple(bits),
        cutoffs=tuple(cutoffs),
        stage_strings=tuple(stage_strings),
        winning_core=frozenset(winning_core),
        losing_core=frozenset(losing_core),
        winning=winning,
        losing=losing,
        truncated=truncated,
    )


def _stage_strings(indices: list[int], bits: list[int], length: int) -> list[str]:
    """All strings of the given length meeting stage ``len(indices) - 1``'s pins."""
    pins: dict[int, str] = {}
    last = len(indices) - 1
    for t in range(last + 1):
        pins[indices[t]] = str(bits[t]) if t == last else str(1 - bits[t])
    free = [i for i in range(length) if i not in pins]
    out: list[str] = []
    for combo in itertools.product("01", repeat=len(free)):
        chars = [""] * length
        for pos, value in pins.items():
            chars[pos] = value
        for pos, value in zip(free, combo):
            chars[pos] = value
        out.append("".join(chars))
    return out


def decide_string(oracle: IndexOracle, alpha: str) -> Decision:
    """Decide whether a string is winning, losing, or neither.

    Case split on the first two bits: the seeds decide themselves, longer
    ``00``/``11`` strings are never pinned, strings extending ``10`` are
    looked up in the cores by scanning stages until the cutoff passes the
    string's length, and strings extending ``01`` are decided through their
    complements. A finite listing that runs out mid-scan yields a
    nondetermining decision flagged as truncated.
    """
    validate_bits(alpha)
    if len(alpha) < 2:
        return Decision(Determination.NONDETERMINING)
    head = alpha[:2]
    if head == "00":
        if alpha == "00":
            return Decision(Determination.LOSING)
        return Decision(Determination.NONDETERMINING)
    if head == "11":
        if alpha == "11":
            return Decision(Determination.WINNING)
        return Decision(Determination.NONDETERMINING)
    if head == "10":
        side, truncated = _core_side(oracle, alpha)
        if side is None:
            return Decision(Determination.NONDETERMINING, truncated)
        return Decision(Determination.WINNING if side else Determination.LOSING)
    flipped = complement(alpha)
    side, truncated = _core_side(oracle, flipped)
    if side is None:
        return Decision(Determination.NONDETERMINING, truncated)
    # complement in the losing core puts the string itself on the winning side
    return Decision(Determination.LOSING if side else Determination.WINNING)


def _core_side(oracle: IndexOracle, sigma: str) -> tuple[int | None, bool]:
    """Which core a ``10``-string belongs to: 1 winning, 0 losing, None neither."""
    if len(sigma) < 3:
        return None, False  # every pinned string has length at least 3
    s = 0
    while True:
        if oracle.entry(s) is None:
            return None, True
        cut = oracle.cutoff(s)
        assert cut is not None
        if cut >= len(sigma):
            break
        s += 1
    if cut > len(sigma):
        return None, False
    while True:
        if _pinned_by_stage(oracle, s, sigma):
            return oracle.entry(s)[1], False
        nxt = oracle.entry(s + 1)
        if nxt is None:
            return None, True
        if oracle.cutoff(s + 1) > cut:
            return None, False
        s += 1


def _pinned_by_stage(oracle: IndexOracle, s: int, sigma: str) -> bool:
    if oracle.cutoff(s) != len(sigma):
        return False
    for t in range(s + 1):
        k, v = oracle.entry(t)
        want = v if t == s else 1 - v
        if sigma[k] != str(want):
            return False
    return True


def diagonal_game(oracle: IndexOracle, max_depth: int = 64) -> PrefixGame:
    """The prefix game of the construction.

    A string is winning-determining when it or one of its prefixes lies in
    the winning set (mirroring "some initial segment wins"); likewise for
    losing. Truncated decisions of finite listings degrade soundly to
    nondetermining.
    """
    memo: dict[str, Determination] = {}

    def classify(alpha: str) -> Determination:
        validate_bits(alpha)
        if len(alpha) < 2:
            return Determination.NONDETERMINING
        got = memo.get(alpha)
        if got is None:
            inherited = classify(alpha[:-1]) if len(alpha) > 2 else Determination.NONDETERMINING
            got = inherited if inherited != Determination.NONDETERMINING else decide_string(
                oracle, alpha
            ).status
            memo[alpha] = got
        return got

    return PrefixGame(classify, max_depth=max_depth, label=f"diagonal({oracle.label})")


def dodging_prefix(oracle: IndexOracle, length: int) -> str:
    """First ``length`` bits of the set that dodges every stage.

    The set starts ``10`` and carries, at every listed index, the opposite
    of the listed bit; all other positions are 0. No initial segment of it
    is ever pinned, yet each initial segment has both winning and losing
    extensions whenever the listing supplies later indices with both bits.
    Built-in listings produce indices in increasing order past a fixed head,
    so materializing stages until the indices outgrow the request is enough.
    """
    forced: dict[int, int] = {}
    s = 0
    recent: list[int] = []
    # built-in listings produce strictly increasing indices from stage 12 on,
    # so once three consecutive indices clear the request nothing smaller follows
    while s < 12 or len(recent) < 3 or min(recent) < length:
        got = oracle.entry(s)
        if got is None:
            break
        k, v = got
        if k < length:
            forced[k] = 1 - v
        recent = (recent + [k])[-3:]
        s += 1
    bits = []
    for i in range(length):
        if i == 0:
            bits.append("1")
        elif i == 1:
            bits.append("0")
        else:
            bits.append(str(forced.get(i, 0)))
    if 0 in forced or 1 in forced:
        raise OracleError("listing pins position 0 or 1; no dodging set starts with 10")
    return "".join(bits)
