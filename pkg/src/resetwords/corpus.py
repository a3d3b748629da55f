"""Bundled CNF instances and deterministic formula generators.

The two sample instances are small enough to trace by hand: they share all
clauses except the first, which makes one satisfiable and the other not, so
their gadgets differ in a single transition.  The generators cover the
satisfiable side (planted assignments) and the unsatisfiable side (an empty
clause, a unit contradiction, a two-pigeons-one-hole core, and oracle-checked
random formulas).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cnf import CnfFormula, TruthAssignment, brute_force_sat, clause_satisfied


def sample_satisfiable() -> CnfFormula:
    """3 variables, 4 clauses; satisfied by x1=x2=false, x3=true."""
    return CnfFormula(3, (
        frozenset({1, 2, 3}),
        frozenset({-1, 2}),
        frozenset({-2, 3}),
        frozenset({-2, -3}),
    ))


def sample_unsatisfiable() -> CnfFormula:
    """Like :func:`sample_satisfiable` but x3 is dropped from the first clause."""
    return CnfFormula(3, (
        frozenset({1, 2}),
        frozenset({-1, 2}),
        frozenset({-2, 3}),
        frozenset({-2, -3}),
    ))


def single_empty_clause(num_vars: int) -> CnfFormula:
    """One empty clause: trivially unsatisfiable."""
    return CnfFormula(num_vars, (frozenset(),))


def contradiction_pair(num_vars: int) -> CnfFormula:
    """The unit clauses x1 and not-x1."""
    return CnfFormula(num_vars, (frozenset({1}), frozenset({-1})))


def pigeonhole_unsat(num_vars: int) -> CnfFormula:
    """Two pigeons, one hole, over x1 and x2; unsatisfiable with 3 clauses."""
    if num_vars < 2:
        raise ValueError("need at least 2 variables")
    return CnfFormula(num_vars, (
        frozenset({1}),
        frozenset({2}),
        frozenset({-1, -2}),
    ))


def random_formula(num_vars: int, num_clauses: int, rng: random.Random,
                   max_width: int = 3) -> CnfFormula:
    """Uniform random clauses of width 1..max_width over distinct variables."""
    clauses = []
    for _ in range(num_clauses):
        width = rng.randint(1, min(max_width, num_vars))
        variables = rng.sample(range(1, num_vars + 1), width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(num_vars, tuple(clauses))


def planted_satisfiable(num_vars: int, num_clauses: int,
                        rng: random.Random) -> tuple[CnfFormula, TruthAssignment]:
    """A random formula forced to be satisfied by a hidden random assignment."""
    hidden = tuple(rng.random() < 0.5 for _ in range(num_vars))
    clauses = []
    for _ in range(num_clauses):
        width = rng.randint(1, min(3, num_vars))
        variables = rng.sample(range(1, num_vars + 1), width)
        literals = [v if rng.random() < 0.5 else -v for v in variables]
        if not clause_satisfied(frozenset(literals), hidden):
            fix = rng.randrange(width)
            v = variables[fix]
            literals[fix] = v if hidden[v - 1] else -v
        clauses.append(frozenset(literals))
    return CnfFormula(num_vars, tuple(clauses)), hidden


@dataclass(frozen=True)
class SweepInstance:
    name: str
    formula: CnfFormula
    satisfiable: bool
    assignment: TruthAssignment | None


def sweep(num_sat: int = 50, num_unsat: int = 50, seed: int = 20110,
          var_counts: tuple[int, ...] = (3, 4, 5), max_clauses: int = 8) -> list[SweepInstance]:
    """A deterministic mixed corpus, classified by the brute-force oracle.

    The unsatisfiable side starts with the small fixed families (guaranteeing
    instances with very few clauses) and is topped up with oracle-rejected
    random formulas.
    """
    rng = random.Random(seed)
    instances: list[SweepInstance] = []

    for k in range(num_sat):
        n = var_counts[k % len(var_counts)]
        m = rng.randint(2, max_clauses)
        formula, _ = planted_satisfiable(n, m, rng)
        assignment = brute_force_sat(formula)
        assert assignment is not None, "planted formula must be satisfiable"
        instances.append(SweepInstance(f"sat-{k:03d}-n{n}-m{m}", formula, True, assignment))

    unsat: list[tuple[str, CnfFormula]] = []
    for n in var_counts:
        unsat.append((f"unsat-empty-n{n}", single_empty_clause(n)))
        unsat.append((f"unsat-unitpair-n{n}", contradiction_pair(n)))
        unsat.append((f"unsat-pigeon-n{n}", pigeonhole_unsat(n)))
    attempt = 0
    while len(unsat) < num_unsat:
        n = var_counts[attempt % len(var_counts)]
        attempt += 1
        m = rng.randint(3, max_clauses)
        formula = random_formula(n, m, rng)
        if brute_force_sat(formula) is None:
            unsat.append((f"unsat-{len(unsat):03d}-n{n}-m{m}", formula))
    for name, formula in unsat[:num_unsat]:
        instances.append(SweepInstance(name, formula, False, None))
    return instances
