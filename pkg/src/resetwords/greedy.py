"""Polynomial-time reset-word approximation by repeated pair merging.

Eppstein's greedy strategy: precompute, for every unordered pair of states,
the distance to a merged pair in the pair automaton, then repeatedly merge
the cheapest pair in the current image until a single state remains.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .automata import Dfa, Word, _pair_targets


class NotSynchronizingError(ValueError):
    """The automaton has an unmergeable state pair, so no reset word exists."""


_UNREACHABLE = np.iinfo(np.int64).max // 4


def pair_merge_distances(dfa: Dfa) -> tuple[np.ndarray, list[np.ndarray]]:
    """Distances from every unordered state pair to the nearest merged pair.

    Returns ``(dist, targets)`` in the row-major pair layout of the pair
    automaton; ``targets[d][p]`` is the pair reached from pair ``p`` under
    letter ``d``.  Unmergeable pairs keep a large sentinel distance.
    """
    n = dfa.num_states
    targets = _pair_targets(dfa)
    i_idx, j_idx = np.triu_indices(n)
    dist = np.full(i_idx.shape, _UNREACHABLE, dtype=np.int64)
    dist[i_idx == j_idx] = 0
    # Unit-weight relaxation; converges after max-finite-distance sweeps.
    while True:
        best = dist
        for t in targets:
            best = np.minimum(best, dist[t] + 1)
        if np.array_equal(best, dist):
            return dist, targets
        dist = best


def _pair_pos(i: np.ndarray | int, j: np.ndarray | int, n: int):
    return i * n - i * (i - 1) // 2 + (j - i)


def eppstein_greedy(dfa: Dfa) -> Word:
    """A reset word built by always merging the cheapest pair in the image.

    Deterministic: among pairs of the current image, pick the one with the
    shortest merging word, breaking ties by the (min-state, max-state) pair,
    and append the lexicographically least shortest merging word for it.
    Raises :class:`NotSynchronizingError` when some pair cannot merge.
    """
    n = dfa.num_states
    if n == 1:
        return ()
    dist, targets = pair_merge_distances(dfa)
    if int(dist.max()) >= _UNREACHABLE:
        raise NotSynchronizingError("some state pair has no merging word")

    columns = dfa.transition_columns()
    mask = np.ones(n, dtype=bool)
    word: list[int] = []
    while True:
        members = np.flatnonzero(mask)
        if len(members) == 1:
            return tuple(word)
        iu, ju = np.triu_indices(len(members), k=1)
        pi = members[iu]
        pj = members[ju]
        pair_d = dist[_pair_pos(pi, pj, n)]
        sel = np.lexsort((pj, pi, pair_d))[0]
        p, q = int(pi[sel]), int(pj[sel])

        merge: list[int] = []
        pos = _pair_pos(p, q, n)
        while p != q:
            for letter in range(dfa.num_letters):
                nxt = int(targets[letter][pos])
                if dist[nxt] == dist[pos] - 1:
                    merge.append(letter)
                    p, q = sorted((dfa.delta[p][letter], dfa.delta[q][letter]))
                    pos = _pair_pos(p, q, n)
                    break
        assert len(merge) <= n * n, "merging word exceeded the pair-graph bound"

        word.extend(merge)
        for letter in merge:
            new = np.zeros(n, dtype=bool)
            new[columns[letter][mask]] = True
            mask = new


def performance_ratio(approx_length: int, exact_length: int) -> Fraction:
    """Exact rational ``approx_length / exact_length``.

    Both lengths zero (the one-state automaton) gives ratio 1; a zero exact
    length with a positive approximation is a domain error.
    """
    if approx_length < 0 or exact_length < 0:
        raise ValueError("lengths must be non-negative")
    if exact_length == 0:
        if approx_length == 0:
            return Fraction(1)
        raise ValueError("exact length 0 with a positive approximate length")
    if approx_length == 0:
        raise ValueError("approximate length 0 with a positive exact length")
    return Fraction(approx_length, exact_length)
