"""Stacking the construction and squeezing it onto a two-letter alphabet.

Stacking multiplies the state count by the base size per level and widens
the satisfiable/unsatisfiable length gap from a factor of ~2 towards a
factor of r.  The two-letter encoding triples the states and at most
triples the minimum, so the gap survives on a binary alphabet.
"""

from resetwords import (brute_force_sat, build_iterated_gadget, image,
                        min_reset_word, to_binary, translate_word, witness_word,
                        word_to_text)
from resetwords.corpus import contradiction_pair, sample_satisfiable

sat = sample_satisfiable()
tau = brute_force_sat(sat)

print("satisfiable instance, stacking levels 2..3:")
for level in (2, 3):
    gadget = build_iterated_gadget(sat, level)
    word = witness_word(tau, level)
    resets = image(gadget.dfa, range(gadget.dfa.num_states), word) == {gadget.sink}
    exact = min_reset_word(gadget.dfa)
    print(f"  level {level}: {gadget.dfa.num_states:5d} states, "
          f"witness {word_to_text(word)} resets: {resets}, exact {exact.length}")

print("\nunsatisfiable contradiction pair, the gap grows with the level:")
unsat = contradiction_pair(3)
for level in (2, 3, 4):
    gadget = build_iterated_gadget(unsat, level)
    exact = min_reset_word(gadget.dfa)
    n = unsat.num_vars
    print(f"  level {level}: {gadget.dfa.num_states:5d} states, "
          f"minimum {exact.length:2d} > {level}(n-1) = {level * (n - 1)}")

print("\ntwo-letter encoding of the satisfiable base gadget:")
base = build_iterated_gadget(sat, 2)
binary = to_binary(base)
exact_a = min_reset_word(base.dfa)
exact_b = min_reset_word(binary.dfa)
print(f"  {base.dfa.num_states} states -> {binary.dfa.num_states} states")
print(f"  minimum {exact_a.length} -> {exact_b.length} "
      f"(within [{exact_a.length}, {3 * exact_a.length}])")
translated = translate_word(exact_a.word)
resets = image(binary.dfa, range(binary.dfa.num_states), translated) == {binary.sink}
print(f"  translated optimal word {word_to_text(translated)} resets the encoding: {resets}")
