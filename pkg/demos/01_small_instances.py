"""Walk through the two bundled CNF instances and their automata.

The instances share three of four clauses; the satisfiable one admits the
assignment x1=x2=false, x3=true.  Their automata differ in exactly one
transition, yet their shortest reset words differ in length by almost a
factor of two: that length gap is the whole point of the construction.
"""

from resetwords import (brute_force_sat, build_base_gadget, encode_assignment,
                        image, min_reset_word, serialize_gadget, to_dimacs,
                        witness_word, word_to_text)
from resetwords.corpus import sample_satisfiable, sample_unsatisfiable

for name, formula in [("satisfiable", sample_satisfiable()),
                      ("unsatisfiable", sample_unsatisfiable())]:
    print(f"=== {name} instance ===")
    print(to_dimacs(formula, comment=f"{name} sample"), end="")

    assignment = brute_force_sat(formula)
    print("oracle:", "satisfiable by " + str(assignment) if assignment else "unsatisfiable")

    gadget = build_base_gadget(formula)
    print(f"gadget: {gadget.dfa.num_states} states over 3 letters")

    if assignment:
        word = witness_word(assignment, 2)
        resets = image(gadget.dfa, range(gadget.dfa.num_states), word) == {gadget.sink}
        print(f"witness c{word_to_text(encode_assignment(assignment))}c ="
              f" {word_to_text(word)}, resets: {resets}")

    result = min_reset_word(gadget.dfa)
    print(f"exact minimum: {result.length} via {word_to_text(result.word)} "
          f"({result.visited_sets} image sets explored)")
    print()

sat = build_base_gadget(sample_satisfiable())
unsat = build_base_gadget(sample_unsatisfiable())
diff = [
    (q, "abc"[d])
    for q in range(sat.dfa.num_states)
    for d in range(3)
    if sat.dfa.delta[q][d] != unsat.dfa.delta[q][d]
]
print("transition-table differences:", diff, "(one arrow decides satisfiability)")

print("\nserialized header of the satisfiable gadget:")
print("\n".join(serialize_gadget(sat).splitlines()[:6]))
