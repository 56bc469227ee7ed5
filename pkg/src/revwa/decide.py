"""Reversibility of languages and rational series over finite commutative rings."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .lang import (Dfa, Nfa, dfa_complement, dfa_equivalence, intersect_orev, lift_to_wa, minimize,
                   nfa_reversibility, support_dfa)
from .monoid import (IdempotentPair, check_omega_commute, check_xomega_leq_one,
                     is_ecom, syntactic_monoid)
from .ring import Elem, Ring, Zn, generated_subring
from .wfa import (AutomatonError, Verdict, WeightedAutomaton, disjoint_union, normalize_alphabet,
                  scalar_mul, to_linear_representation)


class DecompositionError(AutomatonError):
    pass


@dataclass(frozen=True)
class Decomposition:
    """Languages ``L_1..L_n``, each given by a reversible NFA with one initial state."""

    alphabet: tuple[str, ...]
    languages: tuple[Nfa, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alphabet", normalize_alphabet(self.alphabet))
        object.__setattr__(self, "languages", tuple(self.languages))
        for k, nfa in enumerate(self.languages):
            if nfa.alphabet != self.alphabet:
                raise DecompositionError(f"language {k} has alphabet {list(nfa.alphabet)}")
            rev = nfa_reversibility(nfa)
            if not rev.reversible:
                raise DecompositionError(f"language {k} is not given by a reversible automaton")
            if not rev.one_initial:
                raise DecompositionError(f"language {k} must have exactly one initial state")


def nonempty_subsets(n: int) -> Iterable[tuple[int, ...]]:
    """Nonempty subsets of ``range(n)`` by increasing size, then lexicographically."""
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def _intersection(dec: Decomposition, subset: tuple[int, ...]) -> Nfa:
    nfa = dec.languages[subset[0]]
    for k in subset[1:]:
        nfa = intersect_orev(nfa, dec.languages[k])
    return nfa


def witness_union_f2(dec: Decomposition) -> WeightedAutomaton:
    """Reversible automaton over F_2 for the characteristic series of L_1 u ... u L_n.

    Sums the lifted intersections over all nonempty index sets X; a word lying in
    exactly j of the languages is counted 2^j - 1 times, which is odd iff j > 0.
    """
    f2 = Zn(2)
    parts = [lift_to_wa(_intersection(dec, X), f2) for X in nonempty_subsets(len(dec.languages))]
    return disjoint_union(parts, ring=f2, alphabet=dec.alphabet)


def parity_sum_f2(dec: Decomposition) -> WeightedAutomaton:
    """Sum over F_2 of the characteristic series of the L_i."""
    f2 = Zn(2)
    return disjoint_union([lift_to_wa(nfa, f2) for nfa in dec.languages], ring=f2, alphabet=dec.alphabet)


def witness_char_series_over_ring(dec: Decomposition, target: Dfa | None, r: Ring) -> WeightedAutomaton:
    """Reversible automaton over ``r`` realising the characteristic series of ``target``.

    ``target`` must be the support of ``sum_i char(L_i)`` over F_2 (the words in
    an odd number of the L_i); when omitted it is computed.  The result sums
    ``(-2)^(|X|-1) char(cap_{i in X} L_i)`` over nonempty X, which by the
    binomial theorem equals 1 on odd-membership words and 0 elsewhere.
    """
    if r.zero == r.one:
        raise DecompositionError("the ring must be nontrivial")
    parity = minimize(support_dfa(to_linear_representation(parity_sum_f2(dec))))
    if target is not None:
        if target.alphabet != dec.alphabet:
            raise DecompositionError("target alphabet differs from the decomposition alphabet")
        if not dfa_equivalence(parity, target):
            raise DecompositionError("target is not the F_2 support of the decomposition")
    minus_two = r.from_int(-2)
    parts = []
    for X in nonempty_subsets(len(dec.languages)):
        coeff = r.power(minus_two, len(X) - 1)
        parts.append(scalar_mul(lift_to_wa(_intersection(dec, X), r), coeff))
    return disjoint_union(parts, ring=r, alphabet=dec.alphabet)


def ecom_language_check(d: Dfa) -> Verdict:
    """Whether the idempotents of the syntactic monoid of L(d) commute."""
    return is_ecom(syntactic_monoid(d))


@dataclass(frozen=True)
class LanguageClass:
    ecom: Verdict
    omega_commute: bool
    xomega_leq_one: Verdict

    @property
    def pin_reversible(self) -> bool:
        # relies on the cited pseudoinequality characterisation, not proved here
        return self.omega_commute and bool(self.xomega_leq_one)


def classify_language(d: Dfa) -> LanguageClass:
    m = syntactic_monoid(d)
    return LanguageClass(is_ecom(m), check_omega_commute(m), check_xomega_leq_one(d))


@dataclass
class ShiftResult:
    shift: Elem
    support_states: int
    monoid_size: int
    ecom: bool
    witness: IdempotentPair | None = None


@dataclass
class DecisionReport:
    reversible: bool
    ring: Ring
    shifts: list[ShiftResult]
    alphabet: tuple[str, ...]
    states: int
    subring: Ring | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def failure(self) -> ShiftResult | None:
        return next((s for s in self.shifts if not s.ecom), None)

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "verdict": "reversible" if self.reversible else "not-reversible",
            "ring": self.ring.spec.describe(),
            "alphabet": list(self.alphabet),
            "states": self.states,
            "subring_size": len(self.subring) if self.subring is not None else None,
            "shifts": [
                {
                    "shift": self.ring.dump_element(s.shift),
                    "support_states": s.support_states,
                    "monoid_size": s.monoid_size,
                    "ecom": s.ecom,
                    "witness": None if s.witness is None else {
                        "e_word": list(s.witness.e_word),
                        "f_word": list(s.witness.f_word),
                        "e": list(s.witness.e),
                        "f": list(s.witness.f),
                    },
                }
                for s in self.shifts
            ],
        }
        if timing:
            out["elapsed_seconds"] = self.elapsed
        return out

    def to_text(self, timing: bool = False) -> str:
        lines = [f"verdict: {'reversible' if self.reversible else 'not-reversible'}",
                 f"ring: {self.ring.spec.describe()} ({len(self.ring)} elements)"]
        if self.subring is not None:
            lines.append(f"shifts restricted to the generated subring ({len(self.subring)} elements)")
        for s in self.shifts:
            x = format_element(self.ring.dump_element(s.shift))
            line = (f"shift {x}: support DFA {_count(s.support_states, 'state')}, "
                    f"syntactic monoid {_count(s.monoid_size, 'element')}, "
                    f"ECom {'yes' if s.ecom else 'no'}")
            if s.witness is not None:
                line += (f"; idempotents {format_word(s.witness.e_word)} and "
                         f"{format_word(s.witness.f_word)} do not commute")
            lines.append(line)
        if timing:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines) + "\n"


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}" if n == 1 else f"{n} {noun}s"


def format_word(word: Sequence[str]) -> str:
    if all(len(c) == 1 for c in word):
        return '"' + "".join(word) + '"'
    return "[" + " ".join(word) + "]"


def format_element(obj) -> str:
    if isinstance(obj, list):
        return "[" + ",".join(format_element(x) for x in obj) + "]"
    return str(obj)


def _restrict_to_subring(a: WeightedAutomaton):
    sub = generated_subring(a.ring, a.weights())
    index = {x: i for i, x in enumerate(sub.labels)}
    restricted = WeightedAutomaton(
        sub, a.alphabet, a.states,
        {t: index[w] for t, w in a.transitions.items()},
        {q: index[w] for q, w in a.initial.items()},
        {q: index[w] for q, w in a.final.items()})
    return restricted, sub


def decide_reversible_series(a: WeightedAutomaton, *, subring: bool = False,
                             workers: int = 1) -> DecisionReport:
    """Decide whether ``||a||`` is realised by some reversible automaton over its ring.

    The series is reversible iff for every shift x the support of ``r + x Sigma*``
    has a syntactic monoid with commuting idempotents.  With ``subring`` the
    shifts range over the subring generated by the weights of ``a``.
    """
    start = time.perf_counter()
    ring = a.ring
    if ring.zero == ring.one:
        raise AutomatonError("the ring must be nontrivial")
    if not a.alphabet:
        raise AutomatonError("the alphabet must be nonempty")
    work, sub = (a, None)
    if subring:
        work, sub = _restrict_to_subring(a)
    lr = to_linear_representation(work)

    def one_shift(x):
        d = minimize(support_dfa(lr, x))
        m = syntactic_monoid(d)
        verdict = is_ecom(m)
        shift = sub.labels[x] if sub is not None else x
        return ShiftResult(shift, d.states, len(m), verdict.holds, verdict.witness)

    shifts = work.ring.elements
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one_shift, shifts))
    else:
        results = [one_shift(x) for x in shifts]
    return DecisionReport(all(s.ecom for s in results), ring, results, a.alphabet, a.states,
                          sub, time.perf_counter() - start)


def step_decomposition(a: WeightedAutomaton) -> list[tuple[Elem, Dfa]]:
    """Pairs ``(x, D_x)`` with D_x recognising the complement of supp(r - x Sigma*).

    ``D_x`` accepts exactly the words whose coefficient equals x, so
    ``r = sum_x x * char(L(D_x))``.
    """
    lr = to_linear_representation(a)
    R = a.ring
    return [(x, dfa_complement(minimize(support_dfa(lr, R.neg(x))))) for x in R.elements]
