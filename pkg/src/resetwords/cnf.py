"""CNF formulas, DIMACS parsing, and a desk-scale brute-force SAT oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Assignments are tuples of n booleans, entry j-1 giving the value of variable j.
TruthAssignment = tuple[bool, ...]

BRUTE_FORCE_MAX_VARS = 24
_CHUNK_BITS = 20


class DimacsError(ValueError):
    """Raised on malformed DIMACS CNF input."""


class CapacityError(ValueError):
    """An operation would exceed its configured size bound."""


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula with variables ``1..num_vars``.

    Each clause is a frozenset of signed DIMACS-style literals (``+j`` for
    the variable, ``-j`` for its negation), so duplicate literals collapse.
    Empty clauses are allowed and make the formula unsatisfiable.
    """

    num_vars: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        clauses = tuple(frozenset(int(x) for x in clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for idx, clause in enumerate(clauses):
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {idx + 1}: literal {lit} out of range")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def has_literal(self, clause_index: int, literal: int) -> bool:
        """Whether the 1-based clause contains the signed literal."""
        return literal in self.clauses[clause_index - 1]


def literal_satisfied(literal: int, assignment: TruthAssignment) -> bool:
    value = assignment[abs(literal) - 1]
    return value if literal > 0 else not value


def clause_satisfied(clause: frozenset[int], assignment: TruthAssignment) -> bool:
    return any(literal_satisfied(lit, assignment) for lit in clause)


def evaluate(formula: CnfFormula, assignment: TruthAssignment) -> bool:
    """Whether the assignment satisfies every clause."""
    if len(assignment) != formula.num_vars:
        raise ValueError("assignment length does not match num_vars")
    return all(clause_satisfied(c, assignment) for c in formula.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse standard DIMACS CNF (``c`` comments, ``p cnf n m`` header,
    0-terminated clauses, possibly spanning lines)."""
    num_vars: int | None = None
    num_clauses: int | None = None
    clauses: list[frozenset[int]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: duplicate problem header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer header counts") from None
            if num_vars < 1 or num_clauses < 0:
                raise DimacsError(f"line {lineno}: bad header counts")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad token {token!r}") from None
            if lit == 0:
                clauses.append(frozenset(pending))
                pending = []
            else:
                if abs(lit) > num_vars:
                    raise DimacsError(
                        f"line {lineno}: variable {abs(lit)} out of range (header says {num_vars})"
                    )
                pending.append(lit)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if pending:
        raise DimacsError("last clause is not 0-terminated")
    if len(clauses) != num_clauses:
        raise DimacsError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def to_dimacs(formula: CnfFormula, comment: str | None = None) -> str:
    """Render DIMACS text; literals are sorted for reproducible output."""
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    for clause in formula.clauses:
        lits = sorted(clause, key=lambda lit: (abs(lit), lit < 0))
        lines.append(" ".join([str(lit) for lit in lits] + ["0"]))
    return "\n".join(lines) + "\n"


def brute_force_sat(formula: CnfFormula) -> TruthAssignment | None:
    """The smallest satisfying assignment in binary order, or None.

    Assignments are ordered by the number whose big-endian bits are
    ``(x1, ..., xn)``.  Enumeration is capped at 24 variables.
    """
    n = formula.num_vars
    if n > BRUTE_FORCE_MAX_VARS:
        raise CapacityError(
            f"brute-force SAT is capped at {BRUTE_FORCE_MAX_VARS} variables, got {n}"
        )
    total = 1 << n
    chunk = min(total, 1 << _CHUNK_BITS)
    for start in range(0, total, chunk):
        ks = np.arange(start, min(start + chunk, total), dtype=np.uint32)
        sat = np.ones(ks.shape, dtype=bool)
        for clause in formula.clauses:
            falsified = np.ones(ks.shape, dtype=bool)
            for lit in clause:
                bit = (ks >> (n - abs(lit))) & 1
                falsified &= (bit == 1) if lit < 0 else (bit == 0)
            sat &= ~falsified
            if not sat.any():
                break
        if sat.any():
            k = int(ks[int(np.argmax(sat))])
            return tuple(bool((k >> (n - j)) & 1) for j in range(1, n + 1))
    return None
