import random
from itertools import product

import pytest

from resetwords.cnf import (CapacityError, CnfFormula, DimacsError,
                            brute_force_sat, evaluate, parse_dimacs, to_dimacs)
from resetwords.corpus import sample_satisfiable, sample_unsatisfiable

SAMPLE_TEXT = """\
c three variables, four clauses
p cnf 3 4
1 2 3 0
-1 2 0
-2 3 0
-2 -3 0
"""


def test_parse_sample():
    formula = parse_dimacs(SAMPLE_TEXT)
    assert formula == sample_satisfiable()
    assert (formula.num_vars, formula.num_clauses) == (3, 4)


def test_parse_empty_clause():
    formula = parse_dimacs("p cnf 1 1\n0\n")
    assert formula.clauses == (frozenset(),)
    assert brute_force_sat(formula) is None


def test_parse_tautological_clause():
    formula = parse_dimacs("p cnf 2 1\n1 -1 0\n")
    assert formula.clauses == (frozenset({1, -1}),)
    assert brute_force_sat(formula) == (False, False)


def test_parse_clause_spanning_lines():
    formula = parse_dimacs("p cnf 3 2\n1 2\n3 0 -1\n-2 0\n")
    assert formula.clauses == (frozenset({1, 2, 3}), frozenset({-1, -2}))


def test_duplicate_literals_collapse():
    formula = CnfFormula(2, (frozenset({1, 1, -2}),))
    assert formula.clauses == (frozenset({1, -2}),)


@pytest.mark.parametrize("text", [
    "1 2 0\n",                      # clause before header
    "p cnf 2\n1 0\n",               # short header
    "p dnf 2 1\n1 0\n",             # wrong format tag
    "p cnf 2 1\n3 0\n",             # variable out of range
    "p cnf 2 2\n1 0\n",             # clause count mismatch
    "p cnf 2 1\n1 2\n",             # unterminated clause
    "p cnf 2 1\np cnf 2 1\n1 0\n",  # duplicate header
    "p cnf 2 1\nx 0\n",             # junk token
])
def test_parse_errors(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)


def test_formula_validation():
    with pytest.raises(ValueError):
        CnfFormula(0, ())
    with pytest.raises(ValueError):
        CnfFormula(2, (frozenset({3}),))
    with pytest.raises(ValueError):
        CnfFormula(2, (frozenset({0}),))


def test_dimacs_round_trip():
    rng = random.Random(707)
    formulas = [sample_satisfiable(), sample_unsatisfiable(),
                CnfFormula(1, (frozenset(),))]
    for _ in range(30):
        n = rng.randint(1, 6)
        clauses = tuple(
            frozenset(
                (v if rng.random() < 0.5 else -v)
                for v in rng.sample(range(1, n + 1), rng.randint(0, n))
            )
            for _ in range(rng.randint(0, 6))
        )
        formulas.append(CnfFormula(n, clauses))
    for formula in formulas:
        assert parse_dimacs(to_dimacs(formula, comment="round trip")) == formula


def test_brute_force_on_samples():
    assert brute_force_sat(sample_satisfiable()) == (False, False, True)
    assert brute_force_sat(sample_unsatisfiable()) is None


def test_brute_force_zero_clauses():
    assert brute_force_sat(CnfFormula(3, ())) == (False, False, False)


def test_brute_force_capacity():
    with pytest.raises(CapacityError):
        brute_force_sat(CnfFormula(25, ()))


def test_brute_force_matches_enumeration():
    rng = random.Random(808)
    for _ in range(40):
        n = rng.randint(1, 5)
        clauses = tuple(
            frozenset(
                (v if rng.random() < 0.5 else -v)
                for v in rng.sample(range(1, n + 1), rng.randint(1, min(3, n)))
            )
            for _ in range(rng.randint(1, 6))
        )
        formula = CnfFormula(n, clauses)
        expected = None
        for bits in product((False, True), repeat=n):
            if evaluate(formula, bits):
                expected = bits
                break
        assert brute_force_sat(formula) == expected


def test_evaluate_length_check():
    with pytest.raises(ValueError):
        evaluate(sample_satisfiable(), (True, False))
