"""Automaton families whose shortest reset-word length encodes satisfiability.

Given a CNF formula with ``n`` variables and ``m`` clauses, the base
construction is a three-letter automaton in which letter ``a`` commits the
current variable column to true, ``b`` commits it to false, and ``c``
restarts rows.  A satisfiable formula admits a short reset word assembled
from any satisfying assignment, while an unsatisfiable one forces every
reset word to be roughly twice as long.  Stacking the construction over
itself widens that gap factor, and a pending-letter encoding brings the
whole family down to a two-letter alphabet.

State labels follow the serialized naming: clause rows ``q_i_j`` with a
timing row at ``i = m+1``, delay rows ``p_i_j``, the pre-sink ``z1`` and the
sink ``z0``; product states join labels with ``|`` and the two-letter
encoding appends ``@k`` for the pending letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .automata import Dfa, Word, serialize_dfa
from .cnf import CapacityError, CnfFormula, TruthAssignment

_A, _B, _C = 0, 1, 2


@dataclass(frozen=True)
class QState:
    """Clause-row state ``q_i_j`` (row ``i``, column ``j``); row m+1 is the timing row."""

    i: int
    j: int


@dataclass(frozen=True)
class PState:
    """Delay-row state ``p_i_j``; the row feeds clause row ``i`` on restart."""

    i: int
    j: int


@dataclass(frozen=True)
class Z1:
    """Pre-sink: the timing row's wrap-around state."""


@dataclass(frozen=True)
class Z0:
    """The sink; fixed by every letter."""


@dataclass(frozen=True)
class ProductState:
    """A stacked state: ``top`` runs in the base automaton, ``below`` waits.

    ``level`` is the stacking level that created the pair.  It keeps labels
    unique: from level 4 on, the same (top, below) pair also exists inside
    the lower-level copy, so the union is disjoint only when tagged.
    """

    top: "StateLabel"
    below: "StateLabel"
    level: int = 3


@dataclass(frozen=True)
class TripleState:
    """Two-letter encoding of ``base`` with pending letter index 1..3."""

    base: "StateLabel"
    pending: int


StateLabel = Union[QState, PState, Z1, Z0, ProductState, TripleState]


def format_label(label: StateLabel) -> str:
    if isinstance(label, QState):
        return f"q_{label.i}_{label.j}"
    if isinstance(label, PState):
        return f"p_{label.i}_{label.j}"
    if isinstance(label, Z1):
        return "z1"
    if isinstance(label, Z0):
        return "z0"
    if isinstance(label, ProductState):
        # one paren pair per level beyond 3 keeps the rendering injective
        depth = label.level - 3
        inner = "(" * depth + format_label(label.below) + ")" * depth
        return f"{format_label(label.top)}|{inner}"
    if isinstance(label, TripleState):
        return f"{format_label(label.base)}@{label.pending}"
    raise TypeError(f"not a state label: {label!r}")


@dataclass(frozen=True)
class GadgetMeta:
    num_vars: int
    num_clauses: int
    level: int
    is_binary: bool


@dataclass(frozen=True)
class LabeledDfa:
    """A DFA with a label per state and construction metadata.

    Invariants checked on construction: the sink ``z0`` exists, is fixed by
    every letter, and every state has a path to it (which is what makes
    every gadget synchronizing).  In the two-letter encoding the sink role
    is played by the pending-letter triple over ``z0``: the triple is closed,
    letter ``b`` collapses it to ``z0@1``, and every state reaches ``z0@1``.
    """

    dfa: Dfa
    labels: tuple[StateLabel, ...]
    meta: GadgetMeta

    def __post_init__(self) -> None:
        if len(self.labels) != self.dfa.num_states:
            raise ValueError("one label per state required")
        index: dict[StateLabel, int] = {}
        for state, label in enumerate(self.labels):
            if label in index:
                raise ValueError(f"duplicate label {format_label(label)}")
            index[label] = state
        object.__setattr__(self, "_index", index)

        if self.meta.is_binary:
            anchor = index.get(TripleState(Z0(), 1))
            if anchor is None:
                raise ValueError("binary gadget must contain the state z0@1")
            for pending in (1, 2, 3):
                state = index.get(TripleState(Z0(), pending))
                if state is None:
                    raise ValueError("binary gadget must carry all three z0 triples")
                bump, flush = self.dfa.delta[state]
                expected = index[TripleState(Z0(), min(pending + 1, 3))]
                if bump != expected or flush != anchor:
                    raise ValueError("the encoded sink triple is not closed")
            sink = anchor
        else:
            maybe = index.get(Z0())
            if maybe is None:
                raise ValueError("gadget must contain the sink z0")
            if any(t != maybe for t in self.dfa.delta[maybe]):
                raise ValueError("z0 must be fixed by every letter")
            sink = maybe
        if not self._all_reach(sink):
            raise ValueError("every state must have a path to the sink")

    def _all_reach(self, sink: int) -> bool:
        seen = {sink}
        frontier = [sink]
        backward: dict[int, list[int]] = {}
        for q, row in enumerate(self.dfa.delta):
            for t in row:
                backward.setdefault(t, []).append(q)
        while frontier:
            q = frontier.pop()
            for p in backward.get(q, ()):
                if p not in seen:
                    seen.add(p)
                    frontier.append(p)
        return len(seen) == self.dfa.num_states

    def index_of(self, label: StateLabel) -> int:
        return self._index[label]  # type: ignore[attr-defined]

    @property
    def sink(self) -> int:
        """The reset target: ``z0``, or ``z0@1`` in the two-letter encoding."""
        if self.meta.is_binary:
            return self.index_of(TripleState(Z0(), 1))
        return self.index_of(Z0())

    def text_labels(self) -> dict[int, str]:
        return {state: format_label(label) for state, label in enumerate(self.labels)}


def serialize_gadget(gadget: LabeledDfa) -> str:
    """DFA v1 text with one ``label`` line per state."""
    return serialize_dfa(gadget.dfa, gadget.text_labels())


def clause_scan_step(letter: int, clause_index: int, var_index: int,
                     formula: CnfFormula) -> StateLabel:
    """Successor of clause row ``clause_index`` at column ``var_index``.

    Letter ``a`` sets the column's variable true, ``b`` sets it false.  If
    that choice satisfies the clause the row drops to the sink; otherwise it
    advances to the next column.
    """
    if letter not in (_A, _B):
        raise ValueError("only letters a and b scan columns")
    if not 1 <= clause_index <= formula.num_clauses:
        raise ValueError(f"clause index {clause_index} out of range")
    if not 1 <= var_index <= formula.num_vars:
        raise ValueError(f"variable index {var_index} out of range")
    wanted = var_index if letter == _A else -var_index
    if formula.has_literal(clause_index, wanted):
        return Z0()
    return QState(clause_index, var_index + 1)


def build_base_gadget(formula: CnfFormula) -> LabeledDfa:
    """The three-letter automaton encoding ``formula``; ``2(m+1)(n+1)+1`` states.

    Layout (row-major): clause rows ``q_i_*`` for ``i <= m``, the timing row
    ``q_{m+1}_1 .. q_{m+1}_n`` which wraps through ``z1``, delay rows
    ``p_i_*``, then ``z1`` and the sink ``z0``.  Letters ``a``/``b`` scan
    columns as in :func:`clause_scan_step`; ``c`` restarts clause rows, maps
    a finished delay row onto its clause row's start, and collapses ``z1``.
    Requires at least two variables and one clause.
    """
    n, m = formula.num_vars, formula.num_clauses
    if n < 2:
        raise ValueError("gadget construction needs at least 2 variables")
    if m < 1:
        raise ValueError("gadget construction needs at least 1 clause")

    width = n + 1
    s1_size = (m + 1) * width - 1  # (m+1, n+1) is the role of z1

    def q(i: int, j: int) -> int:
        return (i - 1) * width + (j - 1)

    def p(i: int, j: int) -> int:
        return s1_size + (i - 1) * width + (j - 1)

    z1 = s1_size + (m + 1) * width
    z0 = z1 + 1

    labels: list[StateLabel] = []
    for i in range(1, m + 2):
        for j in range(1, n + 2):
            if (i, j) != (m + 1, n + 1):
                labels.append(QState(i, j))
    for i in range(1, m + 2):
        for j in range(1, n + 2):
            labels.append(PState(i, j))
    labels.append(Z1())
    labels.append(Z0())

    def label_index(label: StateLabel) -> int:
        if isinstance(label, QState):
            return q(label.i, label.j)
        return z0

    delta = [[0, 0, 0] for _ in range(z0 + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            delta[q(i, j)] = [
                label_index(clause_scan_step(_A, i, j, formula)),
                label_index(clause_scan_step(_B, i, j, formula)),
                q(i, 1),
            ]
        delta[q(i, n + 1)] = [z0, z0, q(m + 1, 1)]
    for j in range(1, n + 1):
        advance = q(m + 1, j + 1) if j < n else z1
        delta[q(m + 1, j)] = [advance, advance, q(m + 1, 1)]
    for i in range(1, m + 2):
        for j in range(1, n + 1):
            delta[p(i, j)] = [p(i, j + 1)] * 3
        delta[p(i, n + 1)] = [z0, z0, q(i, 1)]
    delta[z1] = [q(m + 1, 1), q(m + 1, 1), z0]
    delta[z0] = [z0, z0, z0]

    dfa = Dfa(z0 + 1, 3, tuple(tuple(row) for row in delta))
    return LabeledDfa(dfa, tuple(labels), GadgetMeta(n, m, 2, False))


def encode_assignment(assignment: TruthAssignment) -> Word:
    """The length-n word over ``{a, b}`` spelling an assignment: a=true, b=false."""
    if not assignment:
        raise ValueError("assignment must be non-empty")
    return tuple(_A if value else _B for value in assignment)


def witness_word(assignment: TruthAssignment, level: int = 2) -> Word:
    """The reset word ``c^(level-1) <assignment word> c`` of length ``n + level``.

    When the assignment satisfies the formula, this word resets the gadget
    built at that stacking level.
    """
    if level < 2:
        raise ValueError("stacking level must be at least 2")
    return (_C,) * (level - 1) + encode_assignment(assignment) + (_C,)


#: Default bound on constructed states for the stacked family.
DEFAULT_STATE_CAP = 10**6


def build_iterated_gadget(formula: CnfFormula, level: int,
                          state_cap: int = DEFAULT_STATE_CAP) -> LabeledDfa:
    """Stack the base construction ``level - 2`` times over itself.

    Level 2 is the base gadget.  Each further level keeps the previous
    automaton intact and adds one product state per (non-sink base state,
    previous state); a product state tracks its base component until the
    base component either dies to the sink, or finishes a sweep back to the
    timing row's start, in which case the product drops to the waiting
    lower-level state.  The state count multiplies by the base size per
    level, so a cap guards against runaway sizes.
    """
    if level < 2:
        raise ValueError("stacking level must be at least 2")
    base = build_base_gadget(formula)
    b = base.dfa.num_states
    would_be = b ** (level - 1)
    if would_be > state_cap:
        raise CapacityError(
            f"level-{level} gadget would need {would_be} states (cap {state_cap})"
        )
    if level == 2:
        return base

    lower = build_iterated_gadget(formula, level - 1, state_cap)
    low = lower.dfa.num_states
    n, m = formula.num_vars, formula.num_clauses

    base_sink = base.sink  # always the last base state
    timing_start = base.index_of(QState(m + 1, 1))
    drops = {base.index_of(QState(i, n + 1)) for i in range(1, m + 1)}
    drops |= {base.index_of(QState(m + 1, j)) for j in range(2, n + 1)}
    drops.add(base.index_of(Z1()))
    lower_sink = lower.sink

    labels = list(lower.labels)
    delta = [list(row) for row in lower.dfa.delta]
    for top in range(b - 1):  # base states in order, sink excluded (it is last)
        for below in range(low):
            labels.append(ProductState(base.labels[top], lower.labels[below], level))
            row = []
            for letter in range(3):
                succ = base.dfa.delta[top][letter]
                if succ == base_sink:
                    row.append(lower_sink)
                elif succ == timing_start and top in drops:
                    row.append(below)
                else:
                    row.append(low + succ * low + below)
            delta.append(row)

    dfa = Dfa(low * b, 3, tuple(tuple(row) for row in delta))
    return LabeledDfa(dfa, tuple(labels), GadgetMeta(n, m, level, False))


def to_binary(gadget: LabeledDfa) -> LabeledDfa:
    """Two-letter encoding: states carry a pending base letter (1..3).

    Letter ``a`` advances the pending letter (saturating at 3); letter ``b``
    applies the pending base letter to the base component and resets the
    pending letter to 1.  Triples the state count.
    """
    if gadget.dfa.num_letters != 3:
        raise ValueError("binary encoding needs a 3-letter automaton")
    base = gadget.dfa
    labels: list[StateLabel] = []
    delta = []
    for state in range(base.num_states):
        for pending in (1, 2, 3):
            labels.append(TripleState(gadget.labels[state], pending))
            bump = 3 * state + min(pending + 1, 3) - 1
            apply_pending = 3 * base.delta[state][pending - 1]
            delta.append((bump, apply_pending))
    meta = gadget.meta
    dfa = Dfa(3 * base.num_states, 2, tuple(delta))
    return LabeledDfa(
        dfa, tuple(labels),
        GadgetMeta(meta.num_vars, meta.num_clauses, meta.level, True),
    )


def translate_word(word: Word) -> Word:
    """Rewrite a word for a 3-letter automaton into one for its binary encoding.

    A leading ``b`` flushes whatever letter is pending, then each base letter
    becomes ``b``, ``ab`` or ``aab``.  If the input resets the base automaton,
    the output resets the encoded one; the output length is at most
    ``3 * len(word) + 1``.
    """
    if not word:
        raise ValueError("cannot translate the empty word")
    blocks = {_A: (1,), _B: (0, 1), _C: (0, 0, 1)}
    out = [1]
    for letter in word:
        if letter not in blocks:
            raise ValueError(f"letter {letter} is not in a 3-letter alphabet")
        out.extend(blocks[letter])
    return tuple(out)
