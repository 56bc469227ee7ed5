"""Reversible weighted automata over finite commutative rings."""

from .decide import (Decomposition, DecisionReport, classify_language, decide_reversible_series,
                     ecom_language_check, step_decomposition, witness_char_series_over_ring,
                     witness_union_f2)
from .lang import (Dfa, Nfa, determinize, dfa_boolean, dfa_complement, dfa_equivalence,
                   intersect_orev, lift_to_wa, minimize, nfa_reversibility, support_dfa)
from .monoid import (check_omega_commute, check_xomega_leq_one, idempotents, is_ecom, omega,
                     syntactic_monoid, transition_monoid)
from .ring import (GF, Ring, RingError, RingSpec, Zn, characteristic, enumerate_elements,
                   generated_subring, product_ring, ring_from_spec)
from .wfa import (AutomatonError, LinearRepresentation, Verdict, WeightedAutomaton, coefficient,
                  coefficient_by_runs, disjoint_union, is_bideterministic, is_reversible,
                  scalar_mul, split_by_initial, to_linear_representation)

__version__ = "0.1.0"

__all__ = [
    "AutomatonError", "characteristic", "check_omega_commute", "check_xomega_leq_one",
    "classify_language", "coefficient", "coefficient_by_runs", "decide_reversible_series",
    "DecisionReport", "Decomposition", "determinize", "Dfa", "dfa_boolean", "dfa_complement",
    "dfa_equivalence", "disjoint_union", "ecom_language_check", "enumerate_elements",
    "generated_subring", "GF", "idempotents", "intersect_orev", "is_bideterministic", "is_ecom",
    "is_reversible", "lift_to_wa", "LinearRepresentation", "minimize", "Nfa", "nfa_reversibility",
    "omega", "product_ring", "Ring", "ring_from_spec", "RingError", "RingSpec", "scalar_mul",
    "split_by_initial", "step_decomposition", "support_dfa", "syntactic_monoid",
    "to_linear_representation", "transition_monoid", "Verdict", "WeightedAutomaton",
    "witness_char_series_over_ring", "witness_union_f2", "Zn",
]
