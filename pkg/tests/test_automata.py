import random

import pytest

from resetwords.automata import (Dfa, DfaFormatError, apply_letter, apply_word,
                                 as_word, image, is_synchronizing, parse_dfa,
                                 parse_dfa_labels, serialize_dfa, word_from_text,
                                 word_to_text)
from resetwords.gadgets import QState, Z0, Z1

from oracles import cerny, random_dfa, subset_bfs_reaches_singleton


def test_dfa_rejects_bad_tables():
    with pytest.raises(ValueError):
        Dfa(2, 1, ((0,),))  # missing row
    with pytest.raises(ValueError):
        Dfa(2, 2, ((0, 1), (1,)))  # short row
    with pytest.raises(ValueError):
        Dfa(2, 1, ((0,), (2,)))  # out-of-range target
    with pytest.raises(ValueError):
        Dfa(0, 1, ())
    with pytest.raises(ValueError):
        Dfa(1, 0, ((),))


def test_apply_letter_on_gadget(sat_gadget):
    dfa = sat_gadget.dfa
    sink = sat_gadget.index_of(Z0())
    for letter in range(3):
        assert apply_letter(dfa, sink, letter) == sink
    assert apply_letter(dfa, sat_gadget.index_of(Z1()), 2) == sink
    with pytest.raises(ValueError):
        apply_letter(dfa, dfa.num_states, 0)
    with pytest.raises(ValueError):
        apply_letter(dfa, 0, 3)


def test_apply_empty_word_is_identity(sat_gadget):
    dfa = sat_gadget.dfa
    for q in range(0, dfa.num_states, 7):
        assert apply_word(dfa, q, "") == q


def test_image_known_reset_words(sat_gadget, unsat_gadget):
    full = range(41)
    assert image(sat_gadget.dfa, full, "cbbac") == {sat_gadget.sink}
    assert image(unsat_gadget.dfa, full, "aaaacaaac") == {unsat_gadget.sink}
    # a^7c strands the timing-row start: the timing cycle is a permutation
    # under a/b, so only the second c after a 3-step realignment finishes.
    leftovers = image(unsat_gadget.dfa, full, "aaaaaaac")
    assert leftovers == {unsat_gadget.sink, unsat_gadget.index_of(QState(5, 1))}


def test_image_empty_word_and_empty_set(sat_gadget):
    dfa = sat_gadget.dfa
    some = frozenset({0, 5, 17})
    assert image(dfa, some, "") == some
    assert image(dfa, (), "abc") == frozenset()


def test_word_text_round_trip():
    assert word_from_text("cbbac") == (2, 1, 1, 0, 2)
    assert word_to_text((2, 1, 1, 0, 2)) == "cbbac"
    assert word_from_text("") == ()
    with pytest.raises(ValueError):
        word_from_text("ab!")
    with pytest.raises(ValueError):
        as_word("abc", num_letters=2)
    with pytest.raises(ValueError):
        as_word((0, 3), num_letters=3)


def test_is_synchronizing_known_cases(sat_gadget, unsat_gadget):
    assert is_synchronizing(sat_gadget.dfa)
    assert is_synchronizing(unsat_gadget.dfa)
    assert is_synchronizing(cerny(4))
    # two states fixed by every letter can never merge
    assert not is_synchronizing(Dfa(2, 2, ((0, 0), (1, 1))))
    assert is_synchronizing(Dfa(1, 1, ((0,),)))


def test_is_synchronizing_matches_subset_bfs():
    rng = random.Random(101)
    for _ in range(200):
        dfa = random_dfa(rng)
        assert is_synchronizing(dfa) == subset_bfs_reaches_singleton(dfa)


def test_image_monotone_collapse_and_composition():
    rng = random.Random(202)
    for _ in range(100):
        dfa = random_dfa(rng)
        states = frozenset(
            q for q in range(dfa.num_states) if rng.random() < 0.6
        )
        u = tuple(rng.randrange(dfa.num_letters) for _ in range(rng.randint(0, 4)))
        v = tuple(rng.randrange(dfa.num_letters) for _ in range(rng.randint(0, 4)))
        step = image(dfa, states, u)
        assert len(step) <= len(states)
        assert image(dfa, states, u + v) == image(dfa, step, v)
        for q in range(dfa.num_states):
            for d in range(dfa.num_letters):
                assert 0 <= apply_letter(dfa, q, d) < dfa.num_states


def test_serialize_parse_round_trip(sat_gadget):
    rng = random.Random(303)
    for dfa in [sat_gadget.dfa, cerny(4)] + [random_dfa(rng) for _ in range(25)]:
        assert parse_dfa(serialize_dfa(dfa)) == dfa


def test_labels_round_trip():
    dfa = Dfa(2, 1, ((1,), (1,)))
    text = serialize_dfa(dfa, {0: "start", 1: "sink"})
    assert parse_dfa(text) == dfa
    assert parse_dfa_labels(text) == {0: "start", 1: "sink"}


def test_parse_single_state_file():
    text = "DFA v1\nstates 1\nletters 1\n0\n"
    dfa = parse_dfa(text)
    assert (dfa.num_states, dfa.num_letters, dfa.delta) == (1, 1, ((0,),))


def test_parse_accepts_comments_and_blanks():
    text = "# reset target\nDFA v1\nstates 2  # two states\nletters 1\n\n1\n1\n"
    assert parse_dfa(text) == Dfa(2, 1, ((1,), (1,)))


@pytest.mark.parametrize("text,line", [
    ("DFA v2\nstates 1\nletters 1\n0\n", 1),
    ("DFA v1\nstates x\nletters 1\n0\n", 2),
    ("DFA v1\nstates 2\nletters 1\n0\n2\n", 5),  # entry out of range
    ("DFA v1\nstates 2\nletters 2\n0 0\n1\n", 5),  # short row
    ("DFA v1\nstates 2\nletters 1\n0\n", 5),  # missing row
    ("DFA v1\nstates 1\nletters 1\n0\nlabel 3 x\n", 5),
    ("DFA v1\nstates 1\nletters 1\n0\nnonsense\n", 5),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(DfaFormatError) as err:
        parse_dfa(text)
    assert err.value.line == line
