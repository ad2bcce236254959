"""Effectivity over game forms and the derived simple games."""

import itertools

import pytest

from bruteforce import brute_alpha_effective
from nakamura_lab import (
    Coalition,
    GameForm,
    alpha_effective,
    classify,
    derive_alpha_game,
    derive_exact_game,
    exactly_effective,
    majority,
    nakamura_number,
    partition_type11,
    veto_free_form,
)


def coalition(members, k):
    return Coalition.from_members(members, k)


def test_alpha_effectivity_examples():
    f4 = veto_free_form(4)
    assert alpha_effective(f4, coalition([0, 1, 2], 4), {1})
    assert alpha_effective(f4, coalition([3], 4), {0, 1})  # the whole outcome set
    assert not alpha_effective(f4, coalition([0, 1, 2, 3], 4), set())  # nothing forces nothing


def test_exact_effectivity_examples():
    f4 = veto_free_form(4)
    grand = coalition([0, 1, 2, 3], 4)
    assert not exactly_effective(f4, grand, {0, 1})
    assert exactly_effective(f4, grand, {0}) and exactly_effective(f4, grand, {1})
    assert exactly_effective(f4, coalition([0, 1, 2], 4), {0, 1})
    # a fixed joint strategy of the grand coalition pins a singleton
    assert exactly_effective(f4, grand, {f4.outcome((1, 1, 1, 1))})


def test_alpha_agrees_with_definition():
    f3 = veto_free_form(3)
    for mask in range(8):
        members = [i for i in range(3) if mask >> i & 1]
        for targets in ({0}, {1}, {0, 1}):
            assert alpha_effective(
                f3, coalition(members, 3), targets
            ) == brute_alpha_effective(f3, members, targets)


def test_alpha_is_monotone_in_the_target_set():
    f4 = veto_free_form(4)
    for mask in range(16):
        c = Coalition(mask, 4)
        if alpha_effective(f4, c, {0}):
            assert alpha_effective(f4, c, {0, 1})
        if alpha_effective(f4, c, {1}):
            assert alpha_effective(f4, c, {0, 1})


def test_alpha_is_monotone_in_the_coalition_on_voting_forms():
    f4 = veto_free_form(4)
    for small in range(16):
        for large in range(16):
            if small & ~large:
                continue
            for targets in ({0}, {1}, {0, 1}):
                if alpha_effective(f4, Coalition(small, 4), targets):
                    assert alpha_effective(f4, Coalition(large, 4), targets)


def test_alpha_iff_exactly_effective_for_a_subset():
    for k in (3, 4):
        form = veto_free_form(k)
        subsets = [{0}, {1}, {0, 1}]
        for mask in range(1 << k):
            c = Coalition(mask, k)
            for targets in subsets:
                exact_below = any(
                    exactly_effective(form, c, sub)
                    for sub in subsets
                    if sub <= targets
                )
                assert alpha_effective(form, c, targets) == exact_below


def test_derived_games_for_small_voting_forms():
    for k in (3, 4, 5):
        form = veto_free_form(k)
        alpha_game = derive_alpha_game(form)
        exact_game = derive_exact_game(form)
        assert alpha_game.winning == frozenset(
            m for m in range(1 << k) if bin(m).count("1") >= k - 1
        )
        assert exact_game.winning == frozenset(
            m for m in range(1 << k) if bin(m).count("1") == k - 1
        )
        assert nakamura_number(alpha_game).value == k
        assert nakamura_number(exact_game).value == k
        assert classify(exact_game)[0].type_index == 11
        if k >= 4:
            assert classify(alpha_game)[0].type_index == 3
    # three singleton blocks make the at-least rule strong, i.e. plain majority
    assert classify(derive_alpha_game(veto_free_form(3)))[0].type_index == 1
    assert derive_alpha_game(veto_free_form(3)).winning == majority(3).winning
    assert derive_exact_game(veto_free_form(4)).winning == partition_type11([1, 1, 1, 1]).winning


def test_constant_form_derives_the_empty_game():
    table = {profile: "a" for profile in itertools.product((0, 1), repeat=2)}
    form = GameForm(((0, 1), (0, 1)), ("a", "b"), table)
    assert derive_alpha_game(form).winning == frozenset()
    assert derive_exact_game(form).winning == frozenset()


def test_game_form_validation():
    with pytest.raises(ValueError):
        GameForm(((0, 1), ()), (0, 1), {})
    with pytest.raises(ValueError):
        GameForm(((0, 1),), (0, 1), {})  # not total
    with pytest.raises(ValueError):
        GameForm(((0, 1),), (0,), {(0,): 0, (1,): 1})  # unknown outcome
    with pytest.raises(ValueError):
        veto_free_form(1)
    with pytest.raises(ValueError):
        GameForm(((0, 1),) * 25, (0, 1), {})  # joint space over the cap
    f3 = veto_free_form(3)
    with pytest.raises(ValueError):
        alpha_effective(f3, Coalition.from_members([0], 4), {1})
    with pytest.raises(ValueError):
        alpha_effective(f3, Coalition.from_members([0], 3), {"zebra"})
