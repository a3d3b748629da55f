import random

import pytest

from resetwords.automata import Dfa, image, word_to_text
from resetwords.exact import (BUDGET_EXCEEDED, FOUND, NOT_SYNCHRONIZING,
                              SearchBudget, min_reset_word, shortest_path_length)
from resetwords.gadgets import QState

from oracles import (cerny, enumerate_min_reset, iter_deepening_min_reset,
                     random_dfa, synchronizable_by_pairs)


def test_sample_gadget_minima(sat_gadget, unsat_gadget):
    found = min_reset_word(sat_gadget.dfa)
    assert found.status == FOUND
    assert found.length == 5
    assert word_to_text(found.word) == "cbbac"

    gap = min_reset_word(unsat_gadget.dfa)
    assert gap.status == FOUND
    assert gap.length == 9
    assert word_to_text(gap.word) == "aaaacaaac"
    assert image(unsat_gadget.dfa, range(41), gap.word) == {unsat_gadget.sink}


def test_single_state_needs_empty_word():
    result = min_reset_word(Dfa(1, 2, ((0, 0),)))
    assert (result.status, result.word, result.length) == (FOUND, (), 0)


def test_cerny_four_states():
    result = min_reset_word(cerny(4))
    assert result.length == 9
    # cross-check both the minimum and the lexicographic tie-break
    assert enumerate_min_reset(cerny(4), 9) == result.word
    assert word_to_text(result.word) == "baaabaaab"


def test_word_is_lex_least_among_shortest():
    rng = random.Random(404)
    checked = 0
    for _ in range(60):
        dfa = random_dfa(rng, max_states=5)
        result = min_reset_word(dfa)
        expected = enumerate_min_reset(dfa, 8)
        if expected is None:
            assert result.status != FOUND or result.length > 8
        else:
            assert result.status == FOUND
            assert result.word == expected
            checked += 1
    assert checked > 20


def test_matches_independent_oracles():
    rng = random.Random(505)
    for _ in range(100):
        dfa = random_dfa(rng)
        result = min_reset_word(dfa)
        assert (result.status == FOUND) == synchronizable_by_pairs(dfa)
        if result.status == FOUND:
            assert iter_deepening_min_reset(dfa, result.length + 1) == result.length
            assert len(image(dfa, range(dfa.num_states), result.word)) == 1
            assert result.length == len(result.word)


def test_deterministic_across_runs(unsat_gadget):
    first = min_reset_word(unsat_gadget.dfa)
    second = min_reset_word(unsat_gadget.dfa)
    assert first == second


def test_not_synchronizing_status():
    stuck = Dfa(2, 2, ((0, 0), (1, 1)))
    result = min_reset_word(stuck)
    assert result.status == NOT_SYNCHRONIZING
    assert result.word is None and result.length is None
    assert result.visited_sets >= 1


def test_budget_exhaustion_reports_partial_stats(sat_gadget):
    result = min_reset_word(sat_gadget.dfa, SearchBudget(max_visited_sets=10))
    assert result.status == BUDGET_EXCEEDED
    assert result.word is None
    assert result.visited_sets >= 10


def test_depth_cap_counts_as_budget():
    capped = min_reset_word(cerny(4), SearchBudget(max_depth=3))
    assert capped.status == BUDGET_EXCEEDED
    enough = min_reset_word(cerny(4), SearchBudget(max_depth=9))
    assert enough.status == FOUND and enough.length == 9


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_visited_sets=0)
    with pytest.raises(ValueError):
        SearchBudget(max_depth=-1)


def test_shortest_path_lengths(sat_gadget):
    dfa = sat_gadget.dfa
    start = sat_gadget.index_of(QState(5, 1))
    assert shortest_path_length(dfa, start, sat_gadget.sink) == 4
    assert shortest_path_length(dfa, start, start) == 0
    disjoint = Dfa(2, 1, ((0,), (1,)))
    assert shortest_path_length(disjoint, 0, 1) is None
    with pytest.raises(ValueError):
        shortest_path_length(dfa, -1, 0)


def test_minimum_at_least_single_state_distance(sat_gadget, unsat_gadget):
    # any reset word must in particular drive the timing-row start to the sink
    for gadget in (sat_gadget, unsat_gadget):
        need = shortest_path_length(
            gadget.dfa, gadget.index_of(QState(5, 1)), gadget.sink
        )
        assert min_reset_word(gadget.dfa).length >= need
