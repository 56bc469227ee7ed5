"""Brute-force oracles and small fixture automata shared by the tests."""

import itertools

from revwa.lang import Dfa, Nfa
from revwa.wfa import WeightedAutomaton


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(sorted(alphabet), repeat=n)


def aplus_sum_wa(ring):
    """Three single-state components: {eps}, a* and {eps} again with weight -2.

    Coefficients: 1 + 1 - 2 = 0 at the empty word and 1 at every a^t, t >= 1.
    """
    minus_two = ring.neg(ring.add(ring.one, ring.one))
    return WeightedAutomaton(
        ring, ["a"], 3,
        {(1, "a", 1): ring.one},
        {0: ring.one, 1: ring.one, 2: minus_two},
        {0: ring.one, 1: ring.one, 2: ring.one},
    )


def aplus_dfa():
    return Dfa.from_table(["a"], [[1], [1]], 0, [1])


def aa_star_dfa():
    return Dfa.from_table(["a"], [[1], [0]], 0, [0])


def sigma_star_dfa(alphabet=("a",)):
    return Dfa.from_table(alphabet, [[0] * len(alphabet)], 0, [0])


def empty_dfa(alphabet=("a",)):
    return Dfa.from_table(alphabet, [[0] * len(alphabet)], 0, [])


def contains_ab_dfa():
    """Sigma* ab Sigma* over {a, b}."""
    return Dfa.from_table(["a", "b"], [[1, 0], [1, 2], [2, 2]], 0, [2])


def eps_nfa(alphabet=("a",)):
    return Nfa(alphabet, 1, [], {0}, {0})


def star_nfa(alphabet=("a",)):
    return Nfa(alphabet, 1, [(0, c, 0) for c in alphabet], {0}, {0})


def aa_star_nfa():
    return Nfa(["a"], 2, [(0, "a", 1), (1, "a", 0)], {0}, {0})


def context_classes(accepts, alphabet, word_len, context_len):
    """Partition words up to ``word_len`` by which contexts (x, y) put them in L.

    Contexts range over all x, y up to ``context_len``; only the membership
    predicate ``accepts`` is used.
    """
    contexts = [(x, y) for x in words(alphabet, context_len) for y in words(alphabet, context_len)]
    classes = {}
    for u in words(alphabet, word_len):
        sig = tuple(accepts(x + u + y) for x, y in contexts)
        classes.setdefault(sig, []).append(u)
    return list(classes.values())


def nfa_accepts(nfa, word):
    """Depth-first search for an accepting path, straight from the transition list."""
    def walk(q, k):
        if k == len(word):
            return q in nfa.final
        return any(walk(t[2], k + 1) for t in nfa.transitions if t[0] == q and t[1] == word[k])
    return any(walk(q, 0) for q in nfa.initial)


def ecom_corpus():
    """Ten languages over {a, b} whose syntactic monoids have commuting idempotents."""
    t = Dfa.from_table
    AB = ["a", "b"]
    return {
        "sigma_star": sigma_star_dfa(AB),
        "empty": empty_dfa(AB),
        "epsilon": t(AB, [[1, 1], [1, 1]], 0, [0]),
        "sigma_plus": t(AB, [[1, 1], [1, 1]], 0, [1]),
        "even_a": t(AB, [[1, 0], [0, 1]], 0, [0]),
        "even_b": t(AB, [[0, 1], [1, 0]], 0, [0]),
        "length_mod_3": t(AB, [[1, 1], [2, 2], [0, 0]], 0, [0]),
        "a_b_same_parity": t(AB, [[1, 1], [0, 0]], 0, [0]),
        "a_plus": t(AB, [[1, 2], [1, 2], [2, 2]], 0, [1]),
        "b_star": t(AB, [[1, 0], [1, 1]], 0, [0]),
    }
