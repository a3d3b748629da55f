"""Complete deterministic finite automata over integer state and letter indices.

States are ``0 .. num_states-1`` and letters are ``0 .. num_letters-1``.
Letter ``i`` is rendered as the ``i``-th lowercase letter, so words can be
written as strings like ``"cbbac"``; every function that takes a word accepts
either a string or a sequence of letter indices.  All types are immutable
after construction and all operations are pure, so values can be shared
freely between threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

_LETTER_NAMES = "abcdefghijklmnopqrstuvwxyz"

Word = tuple[int, ...]
StateSet = frozenset[int]


class DfaFormatError(ValueError):
    """Raised when a DFA v1 text does not parse; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Dfa:
    """A complete DFA: ``delta[q][d]`` is the successor of state ``q`` under letter ``d``.

    The table must be total: exactly ``num_states`` rows of ``num_letters``
    in-range entries.
    """

    num_states: int
    num_letters: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_states < 1:
            raise ValueError("a DFA needs at least one state")
        if self.num_letters < 1:
            raise ValueError("a DFA needs at least one letter")
        rows = tuple(tuple(int(x) for x in row) for row in self.delta)
        object.__setattr__(self, "delta", rows)
        if len(rows) != self.num_states:
            raise ValueError(
                f"expected {self.num_states} transition rows, got {len(rows)}"
            )
        for q, row in enumerate(rows):
            if len(row) != self.num_letters:
                raise ValueError(f"state {q}: expected {self.num_letters} entries")
            for d, target in enumerate(row):
                if not 0 <= target < self.num_states:
                    raise ValueError(
                        f"state {q}, letter {d}: target {target} out of range"
                    )

    def transition_columns(self) -> list[np.ndarray]:
        """Per-letter successor arrays, for vectorised set images."""
        table = np.array(self.delta, dtype=np.int64).reshape(
            self.num_states, self.num_letters
        )
        return [table[:, d].copy() for d in range(self.num_letters)]


def word_to_text(word: Sequence[int]) -> str:
    """Render a word of letter indices as a lowercase string."""
    return "".join(_LETTER_NAMES[d] for d in word)


def word_from_text(text: str) -> Word:
    letters = []
    for ch in text:
        pos = _LETTER_NAMES.find(ch)
        if pos < 0:
            raise ValueError(f"bad letter {ch!r} in word {text!r}")
        letters.append(pos)
    return tuple(letters)


def as_word(word: str | Sequence[int], num_letters: int) -> Word:
    """Normalise ``word`` to a tuple of indices, checking the alphabet bound."""
    letters = word_from_text(word) if isinstance(word, str) else tuple(int(d) for d in word)
    for d in letters:
        if not 0 <= d < num_letters:
            raise ValueError(f"letter {d} outside alphabet of size {num_letters}")
    return letters


def apply_letter(dfa: Dfa, state: int, letter: int) -> int:
    """Follow one transition; out-of-range state or letter raises ValueError."""
    if not 0 <= state < dfa.num_states:
        raise ValueError(f"state {state} out of range")
    if not 0 <= letter < dfa.num_letters:
        raise ValueError(f"letter {letter} out of range")
    return dfa.delta[state][letter]


def apply_word(dfa: Dfa, state: int, word: str | Sequence[int]) -> int:
    """Follow a whole word from one state."""
    q = state
    for d in as_word(word, dfa.num_letters):
        q = apply_letter(dfa, q, d)
    return q


def image(dfa: Dfa, states: Iterable[int], word: str | Sequence[int]) -> StateSet:
    """The set ``{q.w for q in states}``; the empty set maps to itself.

    Applying a word never increases cardinality, and images compose:
    ``image(d, S, u + v) == image(d, image(d, S, u), v)``.
    """
    current = frozenset(states)
    for q in current:
        if not 0 <= q < dfa.num_states:
            raise ValueError(f"state {q} out of range")
    for d in as_word(word, dfa.num_letters):
        current = frozenset(dfa.delta[q][d] for q in current)
    return current


def _pair_targets(dfa: Dfa) -> list[np.ndarray]:
    """For each letter, the successor position of every unordered state pair.

    Pairs (i, j) with i <= j are laid out row-major, so pair (i, j) lives at
    ``i*n - i*(i-1)//2 + (j-i)``; the diagonal entries are the merged pairs.
    """
    n = dfa.num_states
    i_idx, j_idx = np.triu_indices(n)
    table = np.array(dfa.delta, dtype=np.int64).reshape(n, dfa.num_letters)
    out = []
    for d in range(dfa.num_letters):
        ti = table[i_idx, d]
        tj = table[j_idx, d]
        lo = np.minimum(ti, tj)
        hi = np.maximum(ti, tj)
        out.append(lo * n - lo * (lo - 1) // 2 + (hi - lo))
    return out


def is_synchronizing(dfa: Dfa) -> bool:
    """True iff some word maps the full state set to a single state.

    Uses the classical pairwise criterion: the automaton synchronizes iff
    every unordered pair of states can reach a merged pair in the pair
    automaton.  Runs in time polynomial in ``num_states**2 * num_letters``
    (and quadratic memory; intended for automata up to a few thousand
    states).
    """
    n = dfa.num_states
    if n == 1:
        return True
    targets = _pair_targets(dfa)
    i_idx, j_idx = np.triu_indices(n)
    reach = i_idx == j_idx
    while True:
        if reach.all():
            return True
        new = reach.copy()
        for t in targets:
            new |= reach[t]
        if np.array_equal(new, reach):
            return False
        reach = new


def serialize_dfa(dfa: Dfa, labels: Mapping[int, str] | None = None) -> str:
    """Render the DFA v1 text format; optional per-state label lines at the end."""
    lines = ["DFA v1", f"states {dfa.num_states}", f"letters {dfa.num_letters}"]
    for row in dfa.delta:
        lines.append(" ".join(str(x) for x in row))
    if labels:
        for state in sorted(labels):
            lines.append(f"label {state} {labels[state]}")
    return "\n".join(lines) + "\n"


def _strip(line: str) -> str:
    pos = line.find("#")
    if pos >= 0:
        line = line[:pos]
    return line.strip()


def _parse_dfa_text(text: str) -> tuple[Dfa, dict[int, str]]:
    lines = text.splitlines()
    content = [
        (i + 1, stripped) for i, raw in enumerate(lines) if (stripped := _strip(raw))
    ]
    pos = 0

    def next_line(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(content):
            raise DfaFormatError(len(lines) + 1, f"unexpected end of file, expected {what}")
        item = content[pos]
        pos += 1
        return item

    lineno, header = next_line("'DFA v1' header")
    if header != "DFA v1":
        raise DfaFormatError(lineno, f"expected 'DFA v1' header, got {header!r}")

    def keyword_int(keyword: str) -> int:
        lineno, line = next_line(f"'{keyword} <count>'")
        parts = line.split()
        if len(parts) != 2 or parts[0] != keyword:
            raise DfaFormatError(lineno, f"expected '{keyword} <count>', got {line!r}")
        try:
            value = int(parts[1])
        except ValueError:
            raise DfaFormatError(lineno, f"bad count {parts[1]!r}") from None
        if value < 1:
            raise DfaFormatError(lineno, f"{keyword} must be positive")
        return value

    num_states = keyword_int("states")
    num_letters = keyword_int("letters")

    rows = []
    for _ in range(num_states):
        lineno, line = next_line("a transition row")
        parts = line.split()
        if parts and parts[0] == "label":
            raise DfaFormatError(lineno, "label line before all transition rows")
        try:
            row = tuple(int(x) for x in parts)
        except ValueError:
            raise DfaFormatError(lineno, f"non-integer entry in row {line!r}") from None
        if len(row) != num_letters:
            raise DfaFormatError(
                lineno, f"expected {num_letters} entries, got {len(row)}"
            )
        for target in row:
            if not 0 <= target < num_states:
                raise DfaFormatError(lineno, f"entry {target} out of range")
        rows.append(row)

    labels: dict[int, str] = {}
    while pos < len(content):
        lineno, line = next_line("a label line")
        parts = line.split()
        if len(parts) != 3 or parts[0] != "label":
            raise DfaFormatError(lineno, f"expected 'label <state> <name>', got {line!r}")
        try:
            state = int(parts[1])
        except ValueError:
            raise DfaFormatError(lineno, f"bad state index {parts[1]!r}") from None
        if not 0 <= state < num_states:
            raise DfaFormatError(lineno, f"label for out-of-range state {state}")
        labels[state] = parts[2]

    return Dfa(num_states, num_letters, tuple(rows)), labels


def parse_dfa(text: str) -> Dfa:
    """Parse the DFA v1 format.  Round-trips with :func:`serialize_dfa`."""
    return _parse_dfa_text(text)[0]


def parse_dfa_labels(text: str) -> dict[int, str]:
    """Parse the optional ``label`` lines of a DFA v1 text."""
    return _parse_dfa_text(text)[1]
