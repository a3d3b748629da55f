"""Synchronizing automata toolkit: exact and greedy reset words, SAT gadgets."""

from .automata import (Dfa, DfaFormatError, StateSet, Word, apply_letter, apply_word,
                       as_word, image, is_synchronizing, parse_dfa, parse_dfa_labels,
                       serialize_dfa, word_from_text, word_to_text)
from .cnf import (CapacityError, CnfFormula, DimacsError, TruthAssignment,
                  brute_force_sat, evaluate, parse_dimacs, to_dimacs)
from .exact import (BUDGET_EXCEEDED, FOUND, NOT_SYNCHRONIZING, ResetSearchResult,
                    SearchBudget, min_reset_word, shortest_path_length)
from .gadgets import (GadgetMeta, LabeledDfa, PState, ProductState, QState,
                      StateLabel, TripleState, Z0, Z1, build_base_gadget,
                      build_iterated_gadget, clause_scan_step, encode_assignment,
                      format_label, serialize_gadget, to_binary, translate_word,
                      witness_word)
from .greedy import (NotSynchronizingError, eppstein_greedy, pair_merge_distances,
                     performance_ratio)
from .harness import (BenchRow, CheckResult, VerificationReport, bench_csv,
                      bench_formula, run_bench, run_verification)

__version__ = "0.1.0"
