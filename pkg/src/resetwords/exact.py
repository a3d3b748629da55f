"""Exact shortest reset words via breadth-first search over state-set images.

The search graph has one node per distinct image ``Q.w`` of the full state
set, with an edge per letter.  On structured instances the number of
reachable images is far below ``2**num_states``, which is what makes exact
solving practical for automata with hundreds of states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .automata import Dfa, Word

FOUND = "found"
NOT_SYNCHRONIZING = "not-synchronizing"
BUDGET_EXCEEDED = "budget-exceeded"

#: Default cap on distinct visited images; keeps worst-case memory near a few GiB.
DEFAULT_MAX_VISITED = 1 << 26


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the image search.

    ``max_visited_sets`` bounds the number of distinct images stored;
    ``max_depth``, when set, stops the search below that word length (which
    forfeits the optimality guarantee, so it is off by default).
    """

    max_visited_sets: int = DEFAULT_MAX_VISITED
    max_depth: int | None = None

    def __post_init__(self) -> None:
        if self.max_visited_sets < 1:
            raise ValueError("max_visited_sets must be positive")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")


@dataclass(frozen=True)
class ResetSearchResult:
    """Outcome of :func:`min_reset_word`.

    ``status`` is one of ``found``, ``not-synchronizing`` or
    ``budget-exceeded``.  When ``found``, ``word`` is a shortest reset word
    (the lexicographically least one) and ``length == len(word)``.
    ``visited_sets`` counts distinct images stored, ``peak_frontier`` the
    largest BFS level.
    """

    status: str
    word: Word | None
    length: int | None
    visited_sets: int
    peak_frontier: int


def min_reset_word(dfa: Dfa, budget: SearchBudget | None = None) -> ResetSearchResult:
    """Shortest word sending the full state set to a singleton.

    Breadth-first search from the full set, expanding letters in ascending
    order, so the returned word is the lexicographically least among the
    shortest reset words.  Deterministic: identical inputs give identical
    results.
    """
    if budget is None:
        budget = SearchBudget()
    n = dfa.num_states
    columns = dfa.transition_columns()

    full = np.ones(n, dtype=bool)
    if n == 1:
        return ResetSearchResult(FOUND, (), 0, visited_sets=1, peak_frontier=1)

    visited = {np.packbits(full).tobytes(): 0}
    parents: list[tuple[int, int]] = [(-1, -1)]
    frontier: list[tuple[int, np.ndarray]] = [(0, full)]
    peak = 1
    depth = 0
    truncated = False

    def rebuild(node: int, last_letter: int) -> Word:
        letters = [last_letter]
        while node > 0:
            node, letter = parents[node]
            letters.append(letter)
        return tuple(reversed(letters))

    while frontier:
        depth += 1
        if budget.max_depth is not None and depth > budget.max_depth:
            truncated = True
            break
        next_frontier: list[tuple[int, np.ndarray]] = []
        for node_id, mask in frontier:
            for letter, column in enumerate(columns):
                child = np.zeros(n, dtype=bool)
                child[column[mask]] = True
                key = np.packbits(child).tobytes()
                if key in visited:
                    continue
                visited[key] = len(parents)
                parents.append((node_id, letter))
                if np.count_nonzero(child) == 1:
                    return ResetSearchResult(
                        FOUND,
                        rebuild(node_id, letter),
                        depth,
                        visited_sets=len(visited),
                        peak_frontier=peak,
                    )
                if len(visited) > budget.max_visited_sets:
                    return ResetSearchResult(
                        BUDGET_EXCEEDED, None, None,
                        visited_sets=len(visited), peak_frontier=peak,
                    )
                next_frontier.append((len(parents) - 1, child))
        frontier = next_frontier
        peak = max(peak, len(frontier))

    status = BUDGET_EXCEEDED if truncated else NOT_SYNCHRONIZING
    return ResetSearchResult(status, None, None, len(visited), peak)


def shortest_path_length(dfa: Dfa, source: int, target: int) -> int | None:
    """Length of the shortest letter path between single states, or None."""
    for name, state in (("source", source), ("target", target)):
        if not 0 <= state < dfa.num_states:
            raise ValueError(f"{name} state {state} out of range")
    if source == target:
        return 0
    dist = {source: 0}
    frontier = [source]
    while frontier:
        next_frontier = []
        for q in frontier:
            for d in range(dfa.num_letters):
                t = dfa.delta[q][d]
                if t not in dist:
                    dist[t] = dist[q] + 1
                    if t == target:
                        return dist[t]
                    next_frontier.append(t)
        frontier = next_frontier
    return None
