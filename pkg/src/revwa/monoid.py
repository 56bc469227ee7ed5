"""Transition and syntactic monoids of complete DFAs, with idempotent checks.

A monoid element is a transformation of the DFA states stored as a tuple
``t`` with ``t[q]`` the image of ``q``.  Words act on the right, so the
product ``s * t`` means "first ``s``, then ``t``".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .lang import Dfa, access_words, minimize
from .wfa import Verdict, Word

Transformation = tuple[int, ...]


def compose(s: Transformation, t: Transformation) -> Transformation:
    return tuple(t[q] for q in s)


class TransitionMonoid:
    """Elements are kept in BFS discovery order together with a shortest generating word."""

    def __init__(self, dfa: Dfa, elements: list[Transformation], words: dict[Transformation, Word]):
        self.dfa = dfa
        self.elements = tuple(elements)
        self.words = words
        self.identity: Transformation = tuple(range(dfa.states))

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.elements)

    def __contains__(self, t):
        return t in self.words

    def __repr__(self):
        return f"<TransitionMonoid of size {len(self)} on {self.dfa.states} states>"

    def mul(self, s: Transformation, t: Transformation) -> Transformation:
        return compose(s, t)

    def element_of(self, word) -> Transformation:
        """The action of ``word`` on the states of the underlying DFA."""
        return tuple(self.dfa.run(q, word) for q in range(self.dfa.states))


def transition_monoid(d: Dfa) -> TransitionMonoid:
    identity = tuple(range(d.states))
    generators = [(c, d.action(c)) for c in d.alphabet]
    words: dict[Transformation, Word] = {identity: ()}
    order = [identity]
    k = 0
    while k < len(order):
        s = order[k]
        for c, g in generators:
            t = compose(s, g)
            if t not in words:
                words[t] = words[s] + (c,)
                order.append(t)
        k += 1
    return TransitionMonoid(d, order, words)


def syntactic_monoid(d: Dfa) -> TransitionMonoid:
    return transition_monoid(minimize(d))


def idempotents(m: TransitionMonoid) -> list[Transformation]:
    return [t for t in m if compose(t, t) == t]


@dataclass(frozen=True)
class OmegaPower:
    base: Transformation
    exponent: int
    value: Transformation


def omega(m: TransitionMonoid, t: Transformation) -> OmegaPower:
    """The idempotent among ``t, t^2, ...``, reached within ``|m|`` steps."""
    if t not in m:
        raise ValueError("element does not belong to the monoid")
    power, k = t, 1
    while compose(power, power) != power:
        power = compose(power, t)
        k += 1
        if k > len(m):
            raise AssertionError("no idempotent power found; monoid is not closed")
    return OmegaPower(t, k, power)


@dataclass(frozen=True)
class IdempotentPair:
    """Two idempotents ``e``, ``f`` with ``ef != fe`` and words producing them."""

    e: Transformation
    f: Transformation
    e_word: Word
    f_word: Word


def is_ecom(m: TransitionMonoid) -> Verdict:
    idem = idempotents(m)
    for i, e in enumerate(idem):
        for f in idem[i + 1:]:
            if compose(e, f) != compose(f, e):
                return Verdict(False, IdempotentPair(e, f, m.words[e], m.words[f]))
    return Verdict(True)


def check_omega_commute(m: TransitionMonoid) -> bool:
    """``x^w y^w == y^w x^w`` for every pair of elements."""
    omegas = [omega(m, t).value for t in m]
    return all(compose(x, y) == compose(y, x) for x in omegas for y in omegas)


@dataclass(frozen=True)
class OrderViolation:
    """Words with ``prefix + omega_word + suffix`` in L but ``prefix + suffix`` not in L."""

    element_word: Word
    omega_word: Word
    prefix: Word
    suffix: Word


def check_xomega_leq_one(d: Dfa) -> Verdict:
    """Whether ``t^w <= 1`` holds for every element of the syntactic monoid.

    The order is u <= v iff every context (x, y) with xuy in L also has xvy
    in L.  On the minimal DFA a context is a reachable state q (for x) and a
    monoid element s (for y), so the test is q.e.s final => q.s final.
    """
    m = syntactic_monoid(d)
    dfa = m.dfa
    prefixes = access_words(dfa)
    seen = set()
    for t in m:
        e = omega(m, t).value
        if e in seen:
            continue
        seen.add(e)
        for q in range(dfa.states):
            for s in m:
                if s[e[q]] in dfa.final and s[q] not in dfa.final:
                    return Verdict(False, OrderViolation(m.words[t], m.words[e],
                                                         prefixes[q], m.words[s]))
    return Verdict(True)
