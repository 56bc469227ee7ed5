"""Seeded random automata, for property tests and experiments."""

from __future__ import annotations

import random
from typing import Sequence

from .lang import Dfa, Nfa
from .ring import Ring
from .wfa import WeightedAutomaton


def _nonzero(rng: random.Random, ring: Ring):
    return rng.choice([x for x in ring.elements if x != ring.zero])


def _maybe(rng: random.Random, ring: Ring, p: float):
    return _nonzero(rng, ring) if rng.random() < p else ring.zero


def random_wa(rng: random.Random, ring: Ring, alphabet: Sequence[str], max_states: int = 4,
              density: float = 0.4) -> WeightedAutomaton:
    n = rng.randint(1, max_states)
    trans = {(p, c, q): _nonzero(rng, ring)
             for p in range(n) for c in alphabet for q in range(n) if rng.random() < density}
    initial = {q: _maybe(rng, ring, 0.5) for q in range(n)}
    final = {q: _maybe(rng, ring, 0.5) for q in range(n)}
    return WeightedAutomaton(ring, alphabet, n, trans, initial, final)


def _partial_injection(rng: random.Random, n: int, keep: float) -> dict[int, int]:
    image = list(range(n))
    rng.shuffle(image)
    return {p: q for p, q in enumerate(image) if rng.random() < keep}


def random_reversible_wa(rng: random.Random, ring: Ring, alphabet: Sequence[str],
                         max_states: int = 4, keep: float = 0.8) -> WeightedAutomaton:
    n = rng.randint(1, max_states)
    trans = {}
    for c in alphabet:
        for p, q in _partial_injection(rng, n, keep).items():
            trans[(p, c, q)] = _nonzero(rng, ring)
    initial = {q: _maybe(rng, ring, 0.5) for q in range(n)}
    final = {q: _maybe(rng, ring, 0.5) for q in range(n)}
    return WeightedAutomaton(ring, alphabet, n, trans, initial, final)


def random_orev_nfa(rng: random.Random, alphabet: Sequence[str], max_states: int = 3,
                    keep: float = 0.8) -> Nfa:
    """Reversible NFA with exactly one initial state."""
    n = rng.randint(1, max_states)
    trans = [(p, c, q) for c in alphabet for p, q in _partial_injection(rng, n, keep).items()]
    final = [q for q in range(n) if rng.random() < 0.5]
    return Nfa(alphabet, n, trans, {rng.randrange(n)}, final)


def random_dfa(rng: random.Random, alphabet: Sequence[str], max_states: int = 4) -> Dfa:
    n = rng.randint(1, max_states)
    table = [[rng.randrange(n) for _ in sorted(alphabet)] for _ in range(n)]
    final = [q for q in range(n) if rng.random() < 0.5]
    return Dfa.from_table(alphabet, table, rng.randrange(n), final)
