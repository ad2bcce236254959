"""Reproduction report for the sixteen-type Nakamura-number table.

Every nonempty finite class gets a catalog witness that is classified and
solved exactly. Infinite classes reachable at desk scale (the diagonal game
and its products with finite factors) get bounded evidence: stream verdicts
for the axioms, a bounded witness family for the value, and the interval
certificate implied by the type. Classes whose only known witnesses need
machinery beyond this package are reported out of scope rather than
silently skipped, and the five impossible types are confirmed empty by an
exhaustive three-player census.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .axioms import IMPOSSIBLE_TYPES, TypeSignature, classify, exhaustive_census
from .constructions import (
    dictator,
    example_type13,
    example_type15,
    example_type9,
    majority,
    partition_type11,
    partition_type3,
    product,
    shift_pairing,
    type11_k2,
    unanimity,
    veto_free_rule,
)
from .diagonal import IndexOracle, determining_tables, diagonal_game, dodging_prefix
from .games import FiniteGame, MembershipStream, PrefixGame, eval_stream
from .nakamura import (
    INFINITE,
    bounded_nakamura_witness,
    nakamura_number,
    signature_constraints,
    winning_frontier,
)

COLUMNS = ("finite", "infinite")


@dataclass(frozen=True)
class Expectation:
    kind: str  # "exact" | "at_least" | "infinity" | "none"
    value: int | None = None

    def admits(self, nu: int | float) -> bool:
        if self.kind == "exact":
            return nu == self.value
        if self.kind == "at_least":
            return nu != INFINITE and nu >= (self.value or 0)
        if self.kind == "infinity":
            return nu == INFINITE
        return False  # "none": no game should exist at all

    def describe(self) -> str:
        if self.kind == "exact":
            return str(self.value)
        if self.kind == "at_least":
            return f">= {self.value}"
        if self.kind == "infinity":
            return "infinity"
        return "none"


EXPECTED: dict[tuple[int, str], Expectation] = {
    (1, "finite"): Expectation("exact", 3),
    (1, "infinite"): Expectation("exact", 3),
    (2, "finite"): Expectation("infinity"),
    (2, "infinite"): Expectation("none"),
    (3, "finite"): Expectation("at_least", 3),
    (3, "infinite"): Expectation("at_least", 3),
    (4, "finite"): Expectation("infinity"),
    (4, "infinite"): Expectation("infinity"),
    (5, "finite"): Expectation("exact", 2),
    (5, "infinite"): Expectation("exact", 2),
    (6, "finite"): Expectation("none"),
    (6, "infinite"): Expectation("none"),
    (7, "finite"): Expectation("exact", 2),
    (7, "infinite"): Expectation("exact", 2),
    (8, "finite"): Expectation("none"),
    (8, "infinite"): Expectation("none"),
    (9, "finite"): Expectation("exact", 2),
    (9, "infinite"): Expectation("exact", 2),
    (10, "finite"): Expectation("none"),
    (10, "infinite"): Expectation("none"),
    (11, "finite"): Expectation("at_least", 2),
    (11, "infinite"): Expectation("at_least", 2),
    (12, "finite"): Expectation("infinity"),
    (12, "infinite"): Expectation("infinity"),
    (13, "finite"): Expectation("exact", 2),
    (13, "infinite"): Expectation("exact", 2),
    (14, "finite"): Expectation("none"),
    (14, "infinite"): Expectation("none"),
    (15, "finite"): Expectation("exact", 2),
    (15, "infinite"): Expectation("exact", 2),
    (16, "finite"): Expectation("none"),
    (16, "infinite"): Expectation("none"),
}

OUT_OF_SCOPE_INFINITE = (5, 7, 9, 13, 15)


@dataclass
class ReportEntry:
    entry_id: str
    type_index: int
    column: str
    witness: str
    expected: str
    observed: str
    status: str  # "pass" | "fail" | "out-of-scope"
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.entry_id,
            "type": self.type_index,
            "column": self.column,
            "witness": self.witness,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "details": self.details,
        }


@dataclass
class TableReport:
    max_k: int
    depth: int
    entries: list[ReportEntry]

    @property
    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if e.status == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "max_k": self.max_k,
            "depth": self.depth,
            "passed": self.passed,
            "entries": [e.to_json() for e in self.entries],
        }

    def to_markdown(self) -> str:
        lines = [
            "# Possible Nakamura numbers by type",
            "",
            f"max_k={self.max_k}, depth={self.depth}, overall: "
            + ("PASS" if self.passed else "FAIL"),
            "",
            "| id | type | column | witness | expected | observed | status |",
            "|----|------|--------|---------|----------|----------|--------|",
        ]
        for e in self.entries:
            lines.append(
                f"| {e.entry_id} | {e.type_index} | {e.column} | {e.witness} "
                f"| {e.expected} | {e.observed} | {e.status} |"
            )
        return "\n".join(lines) + "\n"


def _nu_text(value: int | float) -> str:
    return "infinity" if value == INFINITE else str(int(value))


def _finite_entry(
    entry_id: str, game: FiniteGame, type_index: int, exact: int | float | None = None
) -> ReportEntry:
    """Classify and solve a finite witness, comparing against the table row."""
    expectation = EXPECTED[(type_index, "finite")]
    sig, witness = classify(game)
    result = nakamura_number(game)
    observed_type = sig.type_index
    ok = (
        observed_type == type_index
        and witness.verify(game)
        and expectation.admits(result.value)
        and (exact is None or result.value == exact)
        and signature_constraints(sig).contains(result.value)
    )
    details: dict[str, Any] = {
        "signature": sig.signature,
        "nu": _nu_text(result.value),
    }
    if result.witness:
        details["witness_family"] = [list(c.members) for c in result.witness]
        details["witness_family_masks"] = [bin(c.mask) for c in result.witness]
    return ReportEntry(
        entry_id=entry_id,
        type_index=type_index,
        column="finite",
        witness=repr(game),
        expected=expectation.describe() if exact is None else _nu_text(exact),
        observed=f"type {observed_type}, nu={_nu_text(result.value)}",
        status="pass" if ok else "fail",
        details=details,
    )


def _stream(prefix: str, period: str) -> MembershipStream:
    return MembershipStream.eventually_periodic(prefix, period)


def _diagonal_evidence(game: PrefixGame, oracle: IndexOracle, depth: int) -> tuple[bool, dict]:
    """Axioms and value for the diagonal game, checked at a depth bound."""
    details: dict[str, Any] = {}
    ones = eval_stream(game, _stream("", "1"))
    zeros = eval_stream(game, _stream("", "0"))
    seeds_ok = ones.is_winning and ones.witness == "11" and zeros.is_losing and zeros.witness == "00"

    # self-duality (proper and strong at stream level): determined complements disagree
    probe = [
        _stream(p, q)
        for p in ("", "1", "10", "01", "110", "100")
        for q in ("0", "1", "10", "01")
    ]
    dual_ok = True
    determined = 0
    for stream in probe:
        verdict = eval_stream(game, stream)
        if not verdict.is_determined:
            continue
        determined += 1
        opposite = eval_stream(game, stream.complement())
        if not opposite.is_determined or opposite.is_winning == verdict.is_winning:
            dual_ok = False
    details["dual_streams_determined"] = determined

    witness = bounded_nakamura_witness(game, depth, family_limit=3)
    witness_ok = witness is not None and len(witness) == 3
    if witness:
        details["witness_family"] = [list(c.members) for c in witness]

    # no finite carrier: the dodging set keeps meeting both winning and losing extensions
    tables = determining_tables(oracle, depth)
    dodge = dodging_prefix(oracle, depth)
    both = []
    for cut in range(2, depth + 1):
        head = dodge[:cut]
        has_win = any(s.startswith(head) or head.startswith(s) for s in tables.winning)
        has_lose = any(s.startswith(head) or head.startswith(s) for s in tables.losing)
        if has_win and has_lose:
            both.append(cut)
    carrier_ok = len(both) >= 3
    details["both_extension_depths"] = both

    sig = TypeSignature(True, True, True, True, finite=False)
    bound = signature_constraints(sig)
    details["interval"] = [str(bound.lower), str(bound.upper)]
    value_ok = witness_ok and bound.contains(3)
    return seeds_ok and dual_ok and witness_ok and carrier_ok and value_ok, details


def _product_entry(
    entry_id: str,
    left: FiniteGame,
    type_index: int,
    expected_nu: int | float,
    depth: int,
    oracle: IndexOracle,
) -> ReportEntry:
    """Evidence entry for (finite factor) x (diagonal game) products."""
    expectation = EXPECTED[(type_index, "infinite")]
    pairing = shift_pairing(left.universe)
    game = product(left, diagonal_game(oracle, max_depth=depth), pairing)
    assert isinstance(game, PrefixGame)
    details: dict[str, Any] = {"pairing": pairing.label, "oracle": oracle.label}
    checks: list[bool] = []

    left_sig, left_witness = classify(left)
    if expected_nu == INFINITE:
        # weakness: every winning coalition seen at depth shares the left veto players
        frontier = winning_frontier(game, depth)
        veto = left_witness.veto
        checks.append(bool(frontier) and veto is not None)
        if veto is not None and frontier:
            shared = -1
            for alpha in frontier:
                mask = int(alpha[::-1], 2)
                shared &= mask
            checks.append(all(shared >> pairing.to_left(i) & 1 for i in veto.members))
            details["frontier_winners"] = len(frontier)
        observed_nu = "infinity (veto players persist at depth)"
    else:
        witness = bounded_nakamura_witness(game, depth, family_limit=int(expected_nu) + 1)
        ok = witness is not None and len(witness) == expected_nu
        checks.append(ok)
        if witness:
            details["witness_family"] = [list(c.members) for c in witness]
        observed_nu = f"<= {len(witness)} witnessed" if witness else "no witness at depth"

    # axiom spot checks through composed streams, inherited from the factors
    checks.append(_product_axiom_evidence(game, left, left_witness, pairing, details))
    sig = TypeSignature(
        left_sig.monotonic,  # the diagonal factor is monotonic
        True,  # either factor proper suffices; the diagonal factor is proper
        False,  # both factors have losing coalitions
        expected_nu != INFINITE,
        finite=False,
    )
    if sig.type_index != type_index:
        checks.append(False)
    ok_all = all(checks) and (
        expectation.admits(expected_nu) if expectation.kind != "none" else False
    )
    return ReportEntry(
        entry_id=entry_id,
        type_index=type_index,
        column="infinite",
        witness=f"product({left!r} (x) diagonal({oracle.label}), {pairing.label})",
        expected=expectation.describe(),
        observed=f"type {sig.type_index} evidence, nu {observed_nu}",
        status="pass" if ok_all else "fail",
        details=details,
    )


def _product_axiom_evidence(
    game: PrefixGame,
    left: FiniteGame,
    left_witness,
    pairing,
    details: dict[str, Any],
) -> bool:
    """Concrete stream verdicts certifying the product's axiom pattern."""
    k = left.universe

    def compose(left_mask: int, tail_period: str) -> MembershipStream:
        prefix = "".join("1" if left_mask >> i & 1 else "0" for i in range(k))
        return _stream(prefix, tail_period)

    ok = True
    # nonstrongness: a complementary pair of losing streams built from the left factor
    pair = left_witness.nonstrong
    if pair is None:
        return False
    losing_a = eval_stream(game, compose(pair.mask, "1"))
    losing_b = eval_stream(game, compose(pair.complement().mask, "0"))
    ok &= losing_a.is_losing and losing_b.is_losing
    details["nonstrong_pair"] = [list(pair.members), list(pair.complement().members)]

    # monotonicity pattern: match the left factor's
    if left_witness.nonmonotonic is not None:
        small, large = left_witness.nonmonotonic
        won = eval_stream(game, compose(small.mask, "1"))
        lost = eval_stream(game, compose(large.mask, "1"))
        ok &= won.is_winning and lost.is_losing
        details["nonmonotone_pair"] = [list(small.members), list(large.members)]
    else:
        for mask in sorted(left.winning)[:4]:
            base = eval_stream(game, compose(mask, "1"))
            ok &= base.is_winning
            for i in range(k):
                grown = eval_stream(game, compose(mask | 1 << i, "1"))
                ok &= grown.is_winning

    # properness spot check: no sampled determined stream wins along with its complement
    for mask in range(min(1 << k, 16)):
        for period in ("0", "1", "10"):
            stream = compose(mask, period)
            verdict = eval_stream(game, stream)
            if verdict.is_winning:
                other = eval_stream(game, stream.complement())
                ok &= not other.is_winning
    return bool(ok)


def run_table_report(max_k: int = 6, depth: int = 12) -> TableReport:
    """Build, verify, and tabulate witnesses for every class of the table."""
    if max_k < 5:
        raise ValueError("max_k below 5 leaves the parametrized rows untested")
    entries: list[ReportEntry] = []

    # finite column
    entries.append(_finite_entry("type1-finite", majority(3), 1, exact=3))
    entries.append(_finite_entry("type2-finite", dictator(0, 3), 2, exact=INFINITE))
    for k in range(3, max_k + 1):
        entries.append(
            _finite_entry(
                f"type3-finite-k{k}", partition_type3([2] + [1] * (k - 1)), 3, exact=k
            )
        )
    entries.append(_finite_entry("type4-finite", unanimity([0, 1], 2), 4, exact=INFINITE))
    entries.append(_finite_entry("type5-finite", veto_free_rule(2), 5, exact=2))
    type7 = FiniteGame(
        4,
        frozenset(
            m for m in range(16) if (m & 0b0011) == 0b0011 or (m & 0b1100) == 0b1100
        ),
    )
    entries.append(_finite_entry("type7-finite", type7, 7, exact=2))
    entries.append(_finite_entry("type9-finite", example_type9(), 9, exact=2))
    entries.append(_finite_entry("type11-finite-k2", type11_k2(), 11, exact=2))
    for k in range(3, max_k + 1):
        entries.append(
            _finite_entry(f"type11-finite-k{k}", partition_type11([1] * k), 11, exact=k)
        )
    type12 = FiniteGame.from_coalitions(2, [[0]])
    entries.append(_finite_entry("type12-finite", type12, 12, exact=INFINITE))
    entries.append(_finite_entry("type13-finite", example_type13(), 13, exact=2))
    entries.append(_finite_entry("type15-finite", example_type15(), 15, exact=2))

    # empty classes: exhaustive census over three players, empty coalition losing
    census = exhaustive_census(3)
    leaked = sorted(set(census) & IMPOSSIBLE_TYPES)
    for t in sorted(IMPOSSIBLE_TYPES):
        entries.append(
            ReportEntry(
                entry_id=f"type{t}-both",
                type_index=t,
                column="finite",
                witness="census of all 128 three-player games with a losing empty coalition",
                expected="none",
                observed="absent from census" if t not in census else f"{census[t]} found",
                status="pass" if not leaked else "fail",
                details={"census_counts": {str(i): c for i, c in sorted(census.items())}},
            )
        )
    entries.append(
        ReportEntry(
            entry_id="type2-infinite",
            type_index=2,
            column="infinite",
            witness="(no witness possible)",
            expected="none",
            observed="strong weak games are dictatorial, so a one-player carrier exists",
            status="pass",
            details={},
        )
    )

    # infinite column, in scope: the diagonal game and its products
    oracle = IndexOracle.alternating()
    diag = diagonal_game(oracle, max_depth=depth)
    ok, details = _diagonal_evidence(diag, oracle, depth)
    expectation = EXPECTED[(1, "infinite")]
    entries.append(
        ReportEntry(
            entry_id="type1-infinite",
            type_index=1,
            column="infinite",
            witness=f"diagonal({oracle.label})",
            expected=expectation.describe(),
            observed="type 1 evidence, nu = 3 (witness + interval)" if ok else "evidence failed",
            status="pass" if ok else "fail",
            details=details,
        )
    )
    for k in (3, 4):
        entries.append(
            _product_entry(
                f"type3-infinite-k{k}",
                partition_type3([2] + [1] * (k - 1)),
                3,
                k,
                depth + 8,
                IndexOracle.alternating(),
            )
        )
        entries.append(
            _product_entry(
                f"type11-infinite-k{k}",
                partition_type11([1] * k),
                11,
                k,
                depth + 8,
                IndexOracle.alternating(),
            )
        )
    entries.append(
        _product_entry(
            "type4-infinite", unanimity([0, 1], 2), 4, INFINITE, depth + 4, IndexOracle.alternating()
        )
    )
    entries.append(
        _product_entry(
            "type12-infinite",
            FiniteGame.from_coalitions(2, [[0]]),
            12,
            INFINITE,
            depth + 4,
            IndexOracle.alternating(),
        )
    )

    for t in OUT_OF_SCOPE_INFINITE:
        entries.append(
            ReportEntry(
                entry_id=f"type{t}-infinite",
                type_index=t,
                column="infinite",
                witness="(not constructible with the tools in this package)",
                expected=EXPECTED[(t, "infinite")].describe(),
                observed="out of scope",
                status="out-of-scope",
                details={},
            )
        )

    entries.sort(key=lambda e: (e.type_index, e.column, e.entry_id))
    return TableReport(max_k=max_k, depth=depth, entries=entries)
