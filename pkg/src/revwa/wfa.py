"""Weighted automata over finite commutative rings and their linear representations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

from .ring import Elem, Ring

Word = tuple[str, ...]
Transition = tuple[int, str, int]


class AutomatonError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer that may carry a witness explaining a negative result."""

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds


def normalize_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    symbols = tuple(sorted(set(alphabet)))
    if not symbols:
        raise AutomatonError("alphabet must be nonempty")
    if any(not isinstance(c, str) or not c for c in symbols):
        raise AutomatonError("symbols must be nonempty strings")
    return symbols


def check_word(alphabet: Sequence[str], word: Iterable[str]) -> Word:
    word = tuple(word)
    for c in word:
        if c not in alphabet:
            raise AutomatonError(f"symbol {c!r} is not in the alphabet {list(alphabet)}")
    return word


class WeightedAutomaton:
    """States are ``0..states-1``; absent weights are zero.

    ``transitions`` maps ``(p, symbol, q)`` to a nonzero weight and may also be
    given as an iterable of ``(p, symbol, q, weight)`` tuples. Zero weights are
    dropped, so a stored transition is always a nonzero one.
    """

    def __init__(self, ring: Ring, alphabet: Iterable[str], states: int,
                 transitions: Mapping[Transition, Elem] | Iterable[tuple] = (),
                 initial: Mapping[int, Elem] | None = None,
                 final: Mapping[int, Elem] | None = None):
        self.ring = ring
        self.alphabet = normalize_alphabet(alphabet)
        if not isinstance(states, int) or states < 0:
            raise AutomatonError(f"state count must be a nonnegative integer, got {states!r}")
        self.states = states

        if isinstance(transitions, Mapping):
            items = [(p, c, q, w) for (p, c, q), w in transitions.items()]
        else:
            items = [tuple(t) for t in transitions]
        trans: dict[Transition, Elem] = {}
        for item in items:
            if len(item) != 4:
                raise AutomatonError(f"transition {item!r} is not (p, symbol, q, weight)")
            p, c, q, w = item
            self._check_state(p)
            self._check_state(q)
            if c not in self.alphabet:
                raise AutomatonError(f"symbol {c!r} is not in the alphabet")
            if w not in ring:
                raise AutomatonError(f"weight {w!r} is not an element of {ring.spec.describe()}")
            if (p, c, q) in trans:
                raise AutomatonError(f"duplicate transition {(p, c, q)!r}")
            trans[(p, c, q)] = w
        self.transitions = {t: w for t, w in sorted(trans.items()) if w != ring.zero}
        self.initial = self._weights(initial or {})
        self.final = self._weights(final or {})

    def _check_state(self, q):
        if not isinstance(q, int) or isinstance(q, bool) or not 0 <= q < self.states:
            raise AutomatonError(f"state {q!r} out of range [0, {self.states})")

    def _weights(self, m: Mapping[int, Elem]) -> dict[int, Elem]:
        out = {}
        for q, w in m.items():
            self._check_state(q)
            if w not in self.ring:
                raise AutomatonError(f"weight {w!r} is not an element of {self.ring.spec.describe()}")
            if w != self.ring.zero:
                out[q] = w
        return dict(sorted(out.items()))

    def __repr__(self):
        return (f"<WeightedAutomaton over {self.ring.spec.describe()}, {self.states} states, "
                f"{len(self.transitions)} transitions>")

    def __eq__(self, other):
        return (isinstance(other, WeightedAutomaton) and self.ring == other.ring
                and self.alphabet == other.alphabet and self.states == other.states
                and self.transitions == other.transitions
                and self.initial == other.initial and self.final == other.final)

    @cached_property
    def linear_representation(self) -> LinearRepresentation:
        return to_linear_representation(self)

    def coefficient(self, word: Iterable[str]) -> Elem:
        return coefficient(self.linear_representation, word)

    def weights(self) -> set:
        return {*self.transitions.values(), *self.initial.values(), *self.final.values()}


@dataclass(frozen=True)
class LinearRepresentation:
    ring: Ring
    alphabet: tuple[str, ...]
    n: int
    i: tuple
    mu: Mapping[str, tuple[tuple, ...]]
    f: tuple

    @cached_property
    def sparse_rows(self) -> dict[str, tuple[tuple[tuple[int, Elem], ...], ...]]:
        """Per symbol and row, the ``(column, value)`` pairs with nonzero value."""
        z = self.ring.zero
        return {c: tuple(tuple((q, w) for q, w in enumerate(row) if w != z) for row in m)
                for c, m in self.mu.items()}

    def step(self, v: tuple, c: str) -> tuple:
        """Row vector ``v`` times ``mu(c)``."""
        R = self.ring
        acc = [R.zero] * self.n
        for p, row in enumerate(self.sparse_rows[c]):
            vp = v[p]
            if vp != R.zero:
                for q, w in row:
                    acc[q] = R._add(acc[q], R._mul(vp, w))
        return tuple(acc)

    def dot_final(self, v: tuple) -> Elem:
        R = self.ring
        acc = R.zero
        for x, y in zip(v, self.f):
            acc = R._add(acc, R._mul(x, y))
        return acc

    def matrix(self, word: Iterable[str]) -> tuple[tuple, ...]:
        """``mu(word)`` as an explicit matrix (identity for the empty word)."""
        R, n = self.ring, self.n
        m = tuple(tuple(R.one if p == q else R.zero for q in range(n)) for p in range(n))
        for c in check_word(self.alphabet, word):
            m = tuple(self.step(row, c) for row in m)
        return m


def to_linear_representation(a: WeightedAutomaton) -> LinearRepresentation:
    R, n = a.ring, a.states
    mu = {}
    for c in a.alphabet:
        rows = [[R.zero] * n for _ in range(n)]
        for (p, s, q), w in a.transitions.items():
            if s == c:
                rows[p][q] = w
        mu[c] = tuple(tuple(r) for r in rows)
    i = tuple(a.initial.get(q, R.zero) for q in range(n))
    f = tuple(a.final.get(q, R.zero) for q in range(n))
    return LinearRepresentation(R, a.alphabet, n, i, mu, f)


def coefficient(lr: LinearRepresentation, word: Iterable[str]) -> Elem:
    """``i . mu(w_1) ... mu(w_t) . f``, multiplied left to right."""
    v = lr.i
    for c in check_word(lr.alphabet, word):
        v = lr.step(v, c)
    return lr.dot_final(v)


def coefficient_by_runs(a: WeightedAutomaton, word: Iterable[str]) -> Elem:
    """Sum of ``iota(q0) sigma(run) tau(qt)`` over every run on ``word``.

    Enumerates runs explicitly, so it is exponential in ``len(word)``; meant as
    an oracle for :func:`coefficient`.
    """
    word = check_word(a.alphabet, word)
    R = a.ring
    succ: dict[tuple[int, str], list[tuple[int, Elem]]] = {}
    for (p, c, q), w in a.transitions.items():
        succ.setdefault((p, c), []).append((q, w))

    total = R.zero

    def walk(q, k, weight):
        nonlocal total
        if k == len(word):
            total = R.add(total, R.mul(weight, a.final.get(q, R.zero)))
            return
        for q2, w in succ.get((q, word[k]), ()):
            walk(q2, k + 1, R.mul(weight, w))

    for q0 in range(a.states):
        walk(q0, 0, a.initial.get(q0, R.zero))
    return total


def is_reversible(a: WeightedAutomaton) -> Verdict:
    """Deterministic and codeterministic nonzero transitions.

    A negative verdict carries the first offending pair of transitions, either
    two leaving the same state on one symbol or two entering it.
    """
    forward: dict[tuple[int, str], Transition] = {}
    backward: dict[tuple[int, str], Transition] = {}
    for t in a.transitions:
        p, c, q = t
        if (p, c) in forward:
            return Verdict(False, (forward[(p, c)], t))
        if (q, c) in backward:
            return Verdict(False, (backward[(q, c)], t))
        forward[(p, c)] = t
        backward[(q, c)] = t
    return Verdict(True)


def is_bideterministic(a: WeightedAutomaton) -> Verdict:
    rev = is_reversible(a)
    if not rev:
        return rev
    if len(a.initial) > 1:
        return Verdict(False, ("initial", tuple(a.initial)))
    if len(a.final) > 1:
        return Verdict(False, ("final", tuple(a.final)))
    return Verdict(True)


def disjoint_union(automata: Sequence[WeightedAutomaton], ring: Ring | None = None,
                   alphabet: Iterable[str] | None = None) -> WeightedAutomaton:
    """Side-by-side union; component ``k`` occupies a contiguous block of states.

    ``ring`` and ``alphabet`` are only needed for an empty sequence.
    """
    automata = list(automata)
    if automata:
        ring = automata[0].ring if ring is None else ring
        alphabet = automata[0].alphabet if alphabet is None else normalize_alphabet(alphabet)
    elif ring is None or alphabet is None:
        raise AutomatonError("the union of no automata needs an explicit ring and alphabet")
    alphabet = normalize_alphabet(alphabet)
    for a in automata:
        if a.ring != ring:
            raise AutomatonError("all automata must share one ring")
        if a.alphabet != alphabet:
            raise AutomatonError("all automata must share one alphabet")
    trans, init, fin = {}, {}, {}
    offset = 0
    for a in automata:
        for (p, c, q), w in a.transitions.items():
            trans[(p + offset, c, q + offset)] = w
        init.update({q + offset: w for q, w in a.initial.items()})
        fin.update({q + offset: w for q, w in a.final.items()})
        offset += a.states
    return WeightedAutomaton(ring, alphabet, offset, trans, init, fin)


def scalar_mul(a: WeightedAutomaton, x: Elem, side: str = "left") -> WeightedAutomaton:
    R = a.ring
    if x not in R:
        raise AutomatonError(f"scalar {x!r} is not an element of {R.spec.describe()}")
    init, fin = dict(a.initial), dict(a.final)
    if side == "left":
        init = {q: R.mul(x, w) for q, w in init.items()}
    elif side == "right":
        fin = {q: R.mul(w, x) for q, w in fin.items()}
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return WeightedAutomaton(R, a.alphabet, a.states, a.transitions, init, fin)


def split_by_initial(a: WeightedAutomaton) -> list[WeightedAutomaton]:
    """One copy of ``a`` per initial state, keeping only that initial weight."""
    return [WeightedAutomaton(a.ring, a.alphabet, a.states, a.transitions, {q: w}, a.final)
            for q, w in a.initial.items()]


def permute_states(a: WeightedAutomaton, perm: Sequence[int]) -> WeightedAutomaton:
    """Rename state ``q`` to ``perm[q]``."""
    if sorted(perm) != list(range(a.states)):
        raise AutomatonError("perm must be a permutation of the states")
    return WeightedAutomaton(
        a.ring, a.alphabet, a.states,
        {(perm[p], c, perm[q]): w for (p, c, q), w in a.transitions.items()},
        {perm[q]: w for q, w in a.initial.items()},
        {perm[q]: w for q, w in a.final.items()},
    )
