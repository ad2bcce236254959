"""Reusable property battery for the diagonal construction.

Each check raises AssertionError with context on failure. The same battery
runs in the unit tests (one oracle at a time) and in the acceptance suite
(several oracles, fixed depth), so it lives outside both.
"""

from __future__ import annotations

import itertools

from nakamura_lab import (
    Determination,
    MembershipStream,
    bounded_nakamura_witness,
    decide_string,
    determining_tables,
    diagonal_game,
    dodging_prefix,
    eval_stream,
    incompatible,
)

WINDOW = 16  # prefix <= 4 plus one full joint period (lcm of periods <= 4) of both tails


def periodic_streams(max_prefix: int = 4, max_period: int = 4):
    out = []
    for plen in range(max_prefix + 1):
        for prefix in ("".join(b) for b in itertools.product("01", repeat=plen)):
            for qlen in range(1, max_period + 1):
                for period in ("".join(b) for b in itertools.product("01", repeat=qlen)):
                    out.append(MembershipStream.eventually_periodic(prefix, period))
    return out


def check_stage_strings_pairwise_incompatible(tables) -> int:
    strings = [alpha for stage in tables.stage_strings for alpha in stage]
    for a, b in itertools.combinations(strings, 2):
        assert incompatible(a, b), (a, b)
    return len(strings)


def check_determining_strings_pairwise_incompatible(tables) -> int:
    strings = sorted(tables.winning | tables.losing)
    for a, b in itertools.combinations(strings, 2):
        assert incompatible(a, b), (a, b)
    for a in tables.winning:
        assert a not in tables.losing
    return len(strings)


def check_decision_procedure_matches_tables(oracle_factory, max_len: int) -> int:
    tables = determining_tables(oracle_factory(), max_len)
    oracle = oracle_factory()
    checked = 0
    for length in range(max_len + 1):
        for bits in itertools.product("01", repeat=length):
            alpha = "".join(bits)
            decision = decide_string(oracle, alpha)
            assert not decision.truncated
            assert decision.status is tables.status(alpha), alpha
            checked += 1
    return checked


def check_pinned_prefix_exists(tables) -> int:
    """Strings of a stage's length, starting 10, matching that stage's own pin,
    always extend some earlier-or-equal stage's pinned string that starts 10."""
    pinned_10 = [
        (s, alpha)
        for s, stage in enumerate(tables.stage_strings)
        for alpha in stage
        if alpha.startswith("10")
    ]
    checked = 0
    for s, cut in enumerate(tables.cutoffs):
        k_s, v_s = tables.indices[s], tables.bits[s]
        for bits in itertools.product("01", repeat=cut - 3):
            alpha = list("10" + "?" * (cut - 2))
            free_positions = [i for i in range(2, cut) if i != k_s]
            for pos, b in zip(free_positions, bits):
                alpha[pos] = b
            alpha[k_s] = str(v_s)
            candidate = "".join(alpha)
            assert "?" not in candidate
            ok = any(
                t <= s and candidate.startswith(beta) for t, beta in pinned_10
            )
            assert ok, (s, candidate)
            checked += 1
    return checked


def check_streams_never_get_both_statuses(tables, depth: int) -> int:
    both = 0
    for stream in periodic_streams():
        statuses = set()
        for k in range(depth + 1):
            seg = stream.initial_segment(k)
            if seg in tables.winning:
                statuses.add("winning")
            if seg in tables.losing:
                statuses.add("losing")
        assert len(statuses) <= 1, stream
        both += 1
    return both


def check_pointwise_growth_preserves_winning(tables) -> int:
    """A same-length string dominating a winning string pointwise, strictly
    somewhere, extends a winning string; dually below a losing string.

    Longer dominating strings reduce to this case: domination constrains
    only the first len(alpha) bits, and extending a winning string is
    inherited by every longer string.
    """
    checked = 0
    winning_list = sorted(tables.winning)
    losing_list = sorted(tables.losing)
    winning_set = set(winning_list)
    losing_set = set(losing_list)

    def extends_some(beta: str, pool: set) -> bool:
        return any(beta[:j] in pool for j in range(2, len(beta) + 1))

    for alpha in winning_list:
        zero_positions = [i for i, b in enumerate(alpha) if b == "0"]
        for r in range(1, len(zero_positions) + 1):
            for flips in itertools.combinations(zero_positions, r):
                beta = list(alpha)
                for i in flips:
                    beta[i] = "1"
                assert extends_some("".join(beta), winning_set), (alpha, beta)
                checked += 1
    for alpha in losing_list:
        one_positions = [i for i, b in enumerate(alpha) if b == "1"]
        for r in range(1, len(one_positions) + 1):
            for flips in itertools.combinations(one_positions, r):
                beta = list(alpha)
                for i in flips:
                    beta[i] = "0"
                assert extends_some("".join(beta), losing_set), (alpha, beta)
                checked += 1
    return checked


def check_monotone_over_comparable_streams(game, depth: int) -> int:
    streams = periodic_streams()
    verdicts = [eval_stream(game, s) for s in streams]
    masks = [int(s.initial_segment(WINDOW)[::-1] or "0", 2) for s in streams]
    pairs = 0
    for i, small in enumerate(masks):
        for j, large in enumerate(masks):
            if small & ~large:
                continue  # not a subset over the sound comparison window
            if verdicts[i].is_winning:
                assert verdicts[j].is_winning, (streams[i], streams[j])
            if verdicts[j].is_losing:
                assert verdicts[i].is_losing, (streams[i], streams[j])
            pairs += 1
    return pairs


def check_self_duality(game, depth: int) -> int:
    determined = 0
    for stream in periodic_streams():
        verdict = eval_stream(game, stream)
        if not verdict.is_determined:
            continue
        determined += 1
        opposite = eval_stream(game, stream.complement())
        assert opposite.is_determined
        assert opposite.is_winning != verdict.is_winning, stream
    return determined


def check_three_winning_coalitions_with_empty_intersection(game, depth: int):
    witness = bounded_nakamura_witness(game, depth, family_limit=3)
    assert witness is not None and len(witness) == 3
    inter = (1 << depth) - 1
    for c in witness:
        inter &= c.mask
        assert eval_stream(game, MembershipStream.from_coalition(c)).is_winning
    assert inter == 0
    return witness


def check_dodging_set_has_no_finite_carrier_evidence(oracle_factory, depth: int) -> list[int]:
    """Depths at which the dodging set's prefix still has both winning and
    losing extensions; three or more rule out any carrier below them."""
    tables = determining_tables(oracle_factory(), depth)
    dodge = dodging_prefix(oracle_factory(), depth)
    game = diagonal_game(oracle_factory(), max_depth=depth)
    for k in range(2, depth + 1):
        assert game.classify(dodge[:k]) is Determination.NONDETERMINING
    both = []
    for cut in range(2, depth + 1):
        head = dodge[:cut]
        has_win = any(s.startswith(head) for s in tables.winning)
        has_lose = any(s.startswith(head) for s in tables.losing)
        if has_win and has_lose:
            both.append(cut)
    assert len(both) >= 3, both
    return both


def run_battery(oracle_factory, depth: int = 12) -> dict[str, int]:
    """Run every check for one oracle; returns per-check work counts."""
    tables = determining_tables(oracle_factory(), depth)
    game = diagonal_game(oracle_factory(), max_depth=depth)
    counts = {
        "stage_strings": check_stage_strings_pairwise_incompatible(tables),
        "determining_strings": check_determining_strings_pairwise_incompatible(tables),
        "decision_vs_tables": check_decision_procedure_matches_tables(oracle_factory, depth),
        "pinned_prefixes": check_pinned_prefix_exists(tables),
        "streams_single_status": check_streams_never_get_both_statuses(tables, depth),
        "pointwise_growth": check_pointwise_growth_preserves_winning(tables),
        "monotone_pairs": check_monotone_over_comparable_streams(game, depth),
        "dual_streams": check_self_duality(game, depth),
    }
    check_three_winning_coalitions_with_empty_intersection(game, depth)
    counts["both_extension_depths"] = len(
        check_dodging_set_has_no_finite_carrier_evidence(oracle_factory, depth)
    )
    return counts
