"""Independent brute-force oracles used to cross-check the package.

Everything here reads only ``dfa.delta`` and deliberately avoids the
package's search code: word enumeration and iterative-deepening DFS for
minimum reset lengths, a per-pair forward BFS for synchronizability, and a
plain frozenset BFS over images.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import product

from resetwords.automata import Dfa


def apply_word_to_set(dfa: Dfa, states, word):
    current = frozenset(states)
    for d in word:
        current = frozenset(dfa.delta[q][d] for q in current)
    return current


def enumerate_min_reset(dfa: Dfa, max_len: int):
    """Lex-least shortest reset word by plain enumeration, or None.

    Tries every word of each length in lexicographic order, so the first hit
    is both shortest and lexicographically least.
    """
    full = frozenset(range(dfa.num_states))
    if len(full) == 1:
        return ()
    for length in range(1, max_len + 1):
        for word in product(range(dfa.num_letters), repeat=length):
            if len(apply_word_to_set(dfa, full, word)) == 1:
                return word
    return None


def iter_deepening_min_reset(dfa: Dfa, max_len: int):
    """Minimum reset length by iterative-deepening DFS, or None.

    Prunes a branch when the image set repeats along the current path (a
    minimal reset word never revisits an image), which preserves the
    minimum while keeping the search tree manageable.
    """
    full = frozenset(range(dfa.num_states))
    if len(full) == 1:
        return 0
    per_letter = [
        tuple(row[d] for row in dfa.delta) for d in range(dfa.num_letters)
    ]

    def dfs(current, remaining, path):
        for successor in per_letter:
            child = frozenset(successor[q] for q in current)
            if len(child) == 1:
                return True
            if remaining > 1 and child not in path:
                path.add(child)
                if dfs(child, remaining - 1, path):
                    return True
                path.discard(child)
        return False

    for limit in range(1, max_len + 1):
        if dfs(full, limit, {full}):
            return limit
    return None


def synchronizable_by_pairs(dfa: Dfa) -> bool:
    """Forward BFS from every unordered pair until the pair merges."""
    n = dfa.num_states
    for i in range(n):
        for j in range(i + 1, n):
            if not _pair_merges(dfa, i, j):
                return False
    return True


def _pair_merges(dfa: Dfa, i: int, j: int) -> bool:
    seen = {(i, j)}
    queue = deque([(i, j)])
    while queue:
        p, q = queue.popleft()
        for d in range(dfa.num_letters):
            a, b = dfa.delta[p][d], dfa.delta[q][d]
            if a == b:
                return True
            pair = (a, b) if a < b else (b, a)
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return False


def subset_bfs_reaches_singleton(dfa: Dfa) -> bool:
    """Exhaustive BFS over images of the full state set."""
    full = frozenset(range(dfa.num_states))
    seen = {full}
    queue = deque([full])
    while queue:
        current = queue.popleft()
        if len(current) == 1:
            return True
        for d in range(dfa.num_letters):
            child = frozenset(dfa.delta[q][d] for q in current)
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return False


def random_dfa(rng: random.Random, max_states: int = 8, max_letters: int = 3) -> Dfa:
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_letters)
    rows = tuple(tuple(rng.randrange(n) for _ in range(k)) for _ in range(n))
    return Dfa(n, k, rows)


def cerny(n: int) -> Dfa:
    """The classical slow-synchronizing rotation automaton on n states."""
    rows = tuple(((i + 1) % n, 0 if i == n - 1 else i) for i in range(n))
    return Dfa(n, 2, rows)
