"""Exact shortest reset words: the slow-synchronizing rotation automaton.

The n-state rotation automaton (letter a rotates the cycle, letter b merges
one adjacent pair) needs a reset word of length (n-1)^2, the worst known
behaviour for n-state automata.  The solver searches the graph of images of
the full state set, so its work is bounded by the number of distinct
reachable images rather than by 2^n.
"""

import random

from resetwords import (Dfa, SearchBudget, image, is_synchronizing,
                        min_reset_word, word_to_text)


def rotation_automaton(n: int) -> Dfa:
    return Dfa(n, 2, tuple(((i + 1) % n, 0 if i == n - 1 else i) for i in range(n)))


for n in range(2, 9):
    dfa = rotation_automaton(n)
    result = min_reset_word(dfa)
    print(f"n={n}: minimum {result.length:3d} = (n-1)^2 is {(n - 1) ** 2:3d}  "
          f"word {word_to_text(result.word)}")

print()
dfa = rotation_automaton(6)
capped = min_reset_word(dfa, SearchBudget(max_depth=10))
print(f"with a depth cap of 10 the 6-state search reports: {capped.status}")

print()
rng = random.Random(1)
print("random 8-state automata (3 letters): minima concentrate at small values")
histogram: dict[int, int] = {}
for _ in range(300):
    delta = tuple(tuple(rng.randrange(8) for _ in range(3)) for _ in range(8))
    dfa = Dfa(8, 3, delta)
    result = min_reset_word(dfa)
    key = result.length if result.length is not None else -1
    histogram[key] = histogram.get(key, 0) + 1
for length in sorted(histogram):
    label = "not synchronizing" if length == -1 else f"minimum {length}"
    print(f"  {label:18s} {histogram[length]:3d}")

one = Dfa(1, 2, ((0, 0),))
print("\na one-state automaton resets with the empty word:",
      min_reset_word(one).word == () and is_synchronizing(one))
print("images never grow:",
      len(image(dfa, range(8), "abcabc")) <= 8)
