"""Acceptance suite: one test per exit criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; every tolerance and runtime bound is pinned here.
"""

import random
import time
import warnings

from bruteforce import (
    brute_alpha_effective,
    brute_exactly_effective,
    naive_nakamura,
    random_game,
)
from diagonal_suite import run_battery
from nakamura_lab import (
    IMPOSSIBLE_TYPES,
    Coalition,
    FiniteGame,
    INFINITE,
    IndexOracle,
    classify,
    core,
    dictator,
    disjoint_image,
    even_odd_pairing,
    example_type13,
    example_type15,
    example_type9,
    exhaustive_census,
    is_dictatorial,
    majority,
    nakamura_number,
    partition_type11,
    partition_type3,
    product,
    shift_pairing,
    type11_k2,
    unanimity,
    verify_core_threshold,
    veto_free_form,
    veto_free_rule,
)
from nakamura_lab.effectivity import derive_alpha_game, derive_exact_game
from nakamura_lab.report import run_table_report


def _verdict(name: str, started: float, extra: str = "") -> None:
    took = time.monotonic() - started
    suffix = f" ({extra})" if extra else ""
    print(f"[acceptance] {name}: PASS in {took:.1f}s{suffix}")


def test_1_table_finite_column():
    started = time.monotonic()
    report = run_table_report(max_k=6, depth=12)
    finite = {e.entry_id: e for e in report.entries if e.column == "finite"}
    expected_rows = {
        "type1-finite": 3,
        "type2-finite": INFINITE,
        "type3-finite-k3": 3,
        "type3-finite-k4": 4,
        "type3-finite-k5": 5,
        "type3-finite-k6": 6,
        "type4-finite": INFINITE,
        "type5-finite": 2,
        "type7-finite": 2,
        "type9-finite": 2,
        "type11-finite-k2": 2,
        "type11-finite-k3": 3,
        "type11-finite-k4": 4,
        "type11-finite-k5": 5,
        "type11-finite-k6": 6,
        "type12-finite": INFINITE,
        "type13-finite": 2,
        "type15-finite": 2,
    }
    for row, nu in expected_rows.items():
        entry = finite[row]
        assert entry.status == "pass", row
        want = "infinity" if nu == INFINITE else str(int(nu))
        assert entry.details["nu"] == want, (row, entry.details)
    assert report.passed
    took = time.monotonic() - started
    assert took < 60.0
    _verdict("table finite column (11 nonempty classes)", started, f"{len(finite)} rows")


def test_2_three_player_census_realizes_no_empty_class():
    started = time.monotonic()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        census = exhaustive_census(3)
    assert sum(census.values()) == 128
    assert not set(census) & IMPOSSIBLE_TYPES, census
    took = time.monotonic() - started
    assert took < 10.0
    _verdict("census: types 6/8/10/14/16 absent over 3 players", started, f"{sum(census.values())} games")


def test_3_solver_matches_the_naive_definition():
    started = time.monotonic()
    checked = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for n in range(1, 5):
            for code in range(1 << (1 << n)):
                winning = frozenset(m for m in range(1 << n) if code >> m & 1)
                got = nakamura_number(FiniteGame(n, winning)).value
                assert got == naive_nakamura(n, winning), (n, sorted(winning))
                checked += 1
    rng = random.Random(20260808)
    for _ in range(500):
        n = rng.choice((5, 6))
        g = random_game(rng, n, empty_losing=False)
        assert nakamura_number(g).value == naive_nakamura(n, g.winning), g
        checked += 1
    _verdict("solver equals all-subfamily brute force", started, f"{checked} games, 0 mismatches")


def test_4_axiom_value_laws_hold_broadly():
    started = time.monotonic()
    games = [
        majority(3),
        majority(5),
        dictator(0, 3),
        unanimity([0, 1], 2),
        veto_free_rule(2),
        veto_free_rule(4),
        veto_free_rule(5),
        type11_k2(),
        example_type9(),
        example_type13(),
        example_type15(),
        FiniteGame(3, frozenset()),
    ]
    games += [partition_type3([2] + [1] * (k - 1)) for k in range(3, 7)]
    games += [partition_type11([1] * k) for k in range(3, 7)]
    rng = random.Random(97)
    games += [random_game(rng, rng.randrange(2, 7)) for _ in range(1000)]
    assert len(games) >= 1000
    for g in games:
        sig, _ = classify(g)
        value = nakamura_number(g).value
        if not sig.nonweak:
            assert sig.proper, g  # weakness forces properness
            assert value == INFINITE
        assert (is_dictatorial(g) is not None) == (sig.strong and not sig.nonweak), g
        if g.winning and not sig.proper:
            assert sig.nonweak and value == 2, g
        if sig.strong and sig.nonweak:
            assert value in (2, 3), g  # strong nonweak games sit at 2 or 3
        if sig.monotonic and sig.proper and g.winning:
            assert value >= 3, g
        if not sig.monotonic and sig.strong:
            assert sig.nonweak and value == 2, g
    _verdict("axiom/value laws on catalog plus random games", started, f"{len(games)} games")


def test_5_product_laws():
    started = time.monotonic()
    # unique split and recombination over both pairings, universes up to 12
    for pairing in (even_odd_pairing(), shift_pairing(5)):
        pairing.validate(12)
        for mask in range(1 << 12):
            left_ids, right_ids = [], []
            for j in range(12):
                if mask >> j & 1:
                    side, idx = pairing.position_side(j)
                    (left_ids if side == 0 else right_ids).append(idx)
            rebuilt = disjoint_image(
                Coalition.from_members(left_ids, max(left_ids, default=-1) + 1),
                Coalition.from_members(right_ids, max(right_ids, default=-1) + 1),
                pairing,
                universe=12,
            )
            assert rebuilt.mask == mask

    rng = random.Random(55)
    pairs = []
    for _ in range(200):
        pairs.append(
            (
                random_game(rng, rng.randrange(1, 5), nonempty=True),
                random_game(rng, rng.randrange(1, 5), nonempty=True),
            )
        )
    pairs.append((partition_type3([2, 1, 1, 1]), majority(3)))
    pairs.append((type11_k2(), veto_free_rule(2)))
    for g1, g2 in pairs:
        combined = product(g1, g2, even_odd_pairing())
        sig1, _ = classify(g1)
        sig2, _ = classify(g2)
        sig, _ = classify(combined)
        assert sig.monotonic == (sig1.monotonic and sig2.monotonic), (g1, g2)
        if sig1.proper or sig2.proper:
            assert sig.proper, (g1, g2)
        assert not sig.strong, (g1, g2)  # both factors have losing coalitions
        if sig1.nonweak and sig2.nonweak:
            v1 = nakamura_number(g1).value
            v2 = nakamura_number(g2).value
            assert nakamura_number(combined).value == max(v1, v2), (g1, g2)
        else:
            assert not sig.nonweak, (g1, g2)
    catalog = product(partition_type3([2, 1, 1, 1]), majority(3), shift_pairing(5))
    assert classify(catalog)[0].type_index == 3
    assert nakamura_number(catalog).value == 4
    catalog11 = product(type11_k2(), veto_free_rule(2), shift_pairing(3))
    assert classify(catalog11)[0].type_index == 11
    assert nakamura_number(catalog11).value == 2
    _verdict("product laws on 200 random pairs plus catalog pairs", started)


def test_6_core_threshold_at_desk_scale():
    started = time.monotonic()
    below = verify_core_threshold(majority(3), 2, mode="exhaustive")
    assert below.ok and below.profiles_checked == 27 and below.all_nonempty
    at = verify_core_threshold(majority(3), 3)
    assert at.ok
    assert core(majority(3), at.alternatives, at.empty_core_profile) == []

    g = partition_type3([2, 1, 1, 1])
    sampled = verify_core_threshold(g, 3, mode="sampled", seed=404, samples=1000)
    assert sampled.ok and sampled.profiles_checked == 1000 and sampled.all_nonempty
    four = verify_core_threshold(g, 4)
    assert four.ok
    assert core(g, four.alternatives, four.empty_core_profile) == []
    took = time.monotonic() - started
    assert took < 30.0
    _verdict("core threshold: 27 + 1000 profiles below, built counterexamples at", started)


def test_7_diagonal_property_suite():
    started = time.monotonic()
    oracles = [
        ("alternating", IndexOracle.alternating),
        ("seeded:1", lambda: IndexOracle.seeded(1)),
        ("seeded:2", lambda: IndexOracle.seeded(2)),
        ("seeded:3", lambda: IndexOracle.seeded(3)),
    ]
    for label, factory in oracles:
        counts = run_battery(factory, depth=12)
        assert counts["both_extension_depths"] >= 3, label
        assert counts["streams_single_status"] == 930, label
    took = time.monotonic() - started
    assert took < 60.0
    _verdict("diagonal construction property suite", started, "4 listings, strings to length 12")


def test_8_effectivity_derivations():
    started = time.monotonic()
    for k in (3, 4, 5):
        form = veto_free_form(k)
        alpha_game = derive_alpha_game(form)
        exact_game = derive_exact_game(form)
        targets = [{0}, {1}, {0, 1}]
        for mask in range(1 << k):
            members = [i for i in range(k) if mask >> i & 1]
            alpha_wins = all(brute_alpha_effective(form, members, t) for t in targets)
            exact_wins = all(brute_exactly_effective(form, members, t) for t in targets)
            assert alpha_wins == (mask in alpha_game.winning), (k, members)
            assert exact_wins == (mask in exact_game.winning), (k, members)
        assert alpha_game.winning == frozenset(
            m for m in range(1 << k) if bin(m).count("1") >= k - 1
        )
        assert exact_game.winning == frozenset(
            m for m in range(1 << k) if bin(m).count("1") == k - 1
        )
        assert classify(exact_game)[0].type_index == 11, k
        if k >= 4:
            assert classify(alpha_game)[0].type_index == 3, k
        else:
            # all-singleton blocks at k = 3 make the rule strong (type 1)
            assert classify(alpha_game)[0].type_index == 1
    _verdict("effectivity derivations for k = 3, 4, 5", started, "families brute-forced")


def test_spot_check_example_pairings_against_listed_images():
    # tiny guard that the two canonical pairings stay as documented
    s1 = Coalition.from_members([0, 2, 3], 4)
    s2 = Coalition.from_members([1, 2, 4], 5)
    assert disjoint_image(s1, s2, even_odd_pairing()).members == (0, 3, 4, 5, 6, 9)
    assert disjoint_image(s1, s2, shift_pairing(4)).members == (0, 2, 3, 5, 6, 8)
