"""Boolean automata: NFAs, complete DFAs and the constructions linking them to weighted automata."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .ring import Elem, Ring
from .wfa import (AutomatonError, LinearRepresentation, WeightedAutomaton, Word, check_word,
                  normalize_alphabet)


class Nfa:
    def __init__(self, alphabet: Iterable[str], states: int,
                 transitions: Iterable[tuple[int, str, int]] = (),
                 initial: Iterable[int] = (), final: Iterable[int] = ()):
        self.alphabet = normalize_alphabet(alphabet)
        if not isinstance(states, int) or states < 0:
            raise AutomatonError(f"state count must be a nonnegative integer, got {states!r}")
        self.states = states
        trans = set()
        for t in transitions:
            if len(t) != 3:
                raise AutomatonError(f"transition {t!r} is not (p, symbol, q)")
            p, c, q = t
            self._check_state(p)
            self._check_state(q)
            if c not in self.alphabet:
                raise AutomatonError(f"symbol {c!r} is not in the alphabet")
            trans.add((p, c, q))
        self.transitions = tuple(sorted(trans))
        self.initial = frozenset(initial)
        self.final = frozenset(final)
        for q in self.initial | self.final:
            self._check_state(q)

    def _check_state(self, q):
        if not isinstance(q, int) or isinstance(q, bool) or not 0 <= q < self.states:
            raise AutomatonError(f"state {q!r} out of range [0, {self.states})")

    def __repr__(self):
        return f"<Nfa {self.states} states, {len(self.transitions)} transitions>"

    def __eq__(self, other):
        return (isinstance(other, Nfa) and self.alphabet == other.alphabet
                and self.states == other.states and self.transitions == other.transitions
                and self.initial == other.initial and self.final == other.final)

    def successors(self) -> dict[tuple[int, str], list[int]]:
        succ: dict[tuple[int, str], list[int]] = {}
        for p, c, q in self.transitions:
            succ.setdefault((p, c), []).append(q)
        return succ

    def accepts(self, word: Iterable[str]) -> bool:
        succ = self.successors()
        current = set(self.initial)
        for c in check_word(self.alphabet, word):
            current = {q for p in current for q in succ.get((p, c), ())}
        return bool(current & self.final)


class Dfa:
    """Complete DFA; ``table[q][k]`` is the successor of ``q`` on ``alphabet[k]``."""

    def __init__(self, alphabet: Iterable[str], states: int,
                 transitions: Mapping[tuple[int, str], int] | Iterable[tuple[int, str, int]],
                 initial: int, final: Iterable[int] = ()):
        self.alphabet = normalize_alphabet(alphabet)
        if not isinstance(states, int) or states < 1:
            raise AutomatonError("a complete DFA needs at least one state")
        self.states = states
        if isinstance(transitions, Mapping):
            items = [(p, c, q) for (p, c), q in transitions.items()]
        else:
            items = [tuple(t) for t in transitions]
        delta: dict[tuple[int, str], int] = {}
        for t in items:
            if len(t) != 3:
                raise AutomatonError(f"transition {t!r} is not (p, symbol, q)")
            p, c, q = t
            self._check_state(p)
            self._check_state(q)
            if c not in self.alphabet:
                raise AutomatonError(f"symbol {c!r} is not in the alphabet")
            if delta.get((p, c), q) != q:
                raise AutomatonError(f"state {p} has two successors on {c!r}")
            delta[(p, c)] = q
        missing = [(p, c) for p in range(states) for c in self.alphabet if (p, c) not in delta]
        if missing:
            raise AutomatonError(f"DFA is not complete: no transition for {missing[0]!r}")
        self.table = tuple(tuple(delta[(p, c)] for c in self.alphabet) for p in range(states))
        self._check_state(initial)
        self.initial = initial
        self.final = frozenset(final)
        for q in self.final:
            self._check_state(q)
        self._sym = {c: k for k, c in enumerate(self.alphabet)}

    _check_state = Nfa._check_state

    @classmethod
    def from_table(cls, alphabet: Sequence[str], table: Sequence[Sequence[int]], initial: int,
                   final: Iterable[int]) -> Dfa:
        alphabet = normalize_alphabet(alphabet)
        return cls(alphabet, len(table),
                   [(p, c, row[k]) for p, row in enumerate(table) for k, c in enumerate(alphabet)],
                   initial, final)

    def __repr__(self):
        return f"<Dfa {self.states} states over {list(self.alphabet)}>"

    def __eq__(self, other):
        return (isinstance(other, Dfa) and self.alphabet == other.alphabet
                and self.table == other.table and self.initial == other.initial
                and self.final == other.final)

    def step(self, q: int, c: str) -> int:
        return self.table[q][self._sym[c]]

    def run(self, q: int, word: Iterable[str]) -> int:
        for c in check_word(self.alphabet, word):
            q = self.table[q][self._sym[c]]
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(self.initial, word) in self.final

    def action(self, c: str) -> tuple[int, ...]:
        k = self._sym[c]
        return tuple(row[k] for row in self.table)

    def transitions(self) -> list[tuple[int, str, int]]:
        return [(p, c, row[k]) for p, row in enumerate(self.table) for k, c in enumerate(self.alphabet)]

    def to_nfa(self) -> Nfa:
        return Nfa(self.alphabet, self.states, self.transitions(), {self.initial}, self.final)


@dataclass(frozen=True)
class NfaReversibility:
    reversible: bool
    one_initial: bool


def nfa_reversibility(a: Nfa) -> NfaReversibility:
    out_seen, in_seen = set(), set()
    reversible = True
    for p, c, q in a.transitions:
        if (p, c) in out_seen or (q, c) in in_seen:
            reversible = False
            break
        out_seen.add((p, c))
        in_seen.add((q, c))
    return NfaReversibility(reversible, len(a.initial) == 1)


def lift_to_wa(a: Nfa | Dfa, r: Ring) -> WeightedAutomaton:
    """Weight 1 on every transition, initial and final state of ``a``."""
    if r.zero == r.one:
        raise AutomatonError("lifting needs a nontrivial ring")
    if isinstance(a, Dfa):
        a = a.to_nfa()
    return WeightedAutomaton(r, a.alphabet, a.states,
                             {t: r.one for t in a.transitions},
                             {q: r.one for q in a.initial},
                             {q: r.one for q in a.final})


def _require_orev(a: Nfa, name: str):
    rev = nfa_reversibility(a)
    if not (rev.reversible and rev.one_initial):
        raise AutomatonError(f"{name} must be reversible with exactly one initial state")


def intersect_orev(a: Nfa, b: Nfa) -> Nfa:
    """Synchronized product of two reversible one-initial NFAs, reachable part only."""
    _require_orev(a, "first operand")
    _require_orev(b, "second operand")
    if a.alphabet != b.alphabet:
        raise AutomatonError("alphabet mismatch")
    sa, sb = a.successors(), b.successors()
    start = (next(iter(a.initial)), next(iter(b.initial)))
    index = {start: 0}
    queue = deque([start])
    trans = []
    while queue:
        p1, p2 = pair = queue.popleft()
        for c in a.alphabet:
            if (p1, c) in sa and (p2, c) in sb:
                nxt = (sa[(p1, c)][0], sb[(p2, c)][0])
                if nxt not in index:
                    index[nxt] = len(index)
                    queue.append(nxt)
                trans.append((index[pair], c, index[nxt]))
    final = [i for (q1, q2), i in index.items() if q1 in a.final and q2 in b.final]
    return Nfa(a.alphabet, len(index), trans, {0}, final)


def _bfs_dfa(alphabet, start, successor, is_final):
    """Explore ``successor`` from ``start`` in BFS order and number states by discovery."""
    index = {start: 0}
    order = [start]
    table = []
    k = 0
    while k < len(order):
        state = order[k]
        row = []
        for c in alphabet:
            nxt = successor(state, c)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        table.append(row)
        k += 1
    final = [i for i, s in enumerate(order) if is_final(s)]
    return Dfa.from_table(alphabet, table, 0, final), order


def support_dfa(lr: LinearRepresentation, x: Elem | None = None) -> Dfa:
    """DFA on the reachable row vectors ``i mu(w)`` recognising supp(r + x Sigma*).

    A vector ``v`` is final when ``v f + x`` is nonzero; ``x`` defaults to zero.
    """
    R = lr.ring
    x = R.zero if x is None else x
    if x not in R:
        raise AutomatonError(f"shift {x!r} is not an element of {R.spec.describe()}")
    dfa, _ = _bfs_dfa(lr.alphabet, tuple(lr.i), lr.step,
                      lambda v: R._add(lr.dot_final(v), x) != R.zero)
    return dfa


def determinize(a: Nfa) -> Dfa:
    succ = a.successors()
    dfa, _ = _bfs_dfa(
        a.alphabet, frozenset(a.initial),
        lambda S, c: frozenset(q for p in S for q in succ.get((p, c), ())),
        lambda S: bool(S & a.final))
    return dfa


def reachable(d: Dfa) -> Dfa:
    """The reachable part of ``d`` renumbered in BFS order."""
    dfa, _ = _bfs_dfa(d.alphabet, d.initial, d.step, lambda q: q in d.final)
    return dfa


def minimize(d: Dfa) -> Dfa:
    """Moore partition refinement on the reachable part, numbered in BFS order."""
    d = reachable(d)
    block = [int(q in d.final) for q in range(d.states)]
    while True:
        sigs: dict[tuple, int] = {}
        new = [sigs.setdefault((block[q], *(block[t] for t in d.table[q])), len(sigs))
               for q in range(d.states)]
        if len(sigs) == len(set(block)):
            break
        block = new
    rep: dict[int, int] = {}
    for q, b in enumerate(block):
        rep.setdefault(b, q)
    dfa, _ = _bfs_dfa(d.alphabet, block[d.initial],
                      lambda b, c: block[d.step(rep[b], c)],
                      lambda b: rep[b] in d.final)
    return dfa


_BOOLEAN_OPS = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
    "symdiff": lambda x, y: x != y,
}


def _same_alphabet(a: Dfa, b: Dfa):
    if a.alphabet != b.alphabet:
        raise AutomatonError(f"alphabet mismatch: {list(a.alphabet)} vs {list(b.alphabet)}")


def dfa_boolean(a: Dfa, b: Dfa, op: str) -> Dfa:
    _same_alphabet(a, b)
    try:
        combine = _BOOLEAN_OPS[op]
    except KeyError:
        raise ValueError(f"unknown Boolean operation {op!r}") from None
    dfa, _ = _bfs_dfa(a.alphabet, (a.initial, b.initial),
                      lambda s, c: (a.step(s[0], c), b.step(s[1], c)),
                      lambda s: combine(s[0] in a.final, s[1] in b.final))
    return dfa


def dfa_complement(a: Dfa) -> Dfa:
    return Dfa.from_table(a.alphabet, a.table, a.initial,
                          [q for q in range(a.states) if q not in a.final])


def dfa_equivalence(a: Dfa, b: Dfa) -> bool:
    """Searches the reachable product for a pair that disagrees on acceptance."""
    _same_alphabet(a, b)
    start = (a.initial, b.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in a.final) != (q in b.final):
            return False
        for c in a.alphabet:
            nxt = (a.step(p, c), b.step(q, c))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def access_words(d: Dfa) -> dict[int, Word]:
    """A shortest word leading from the initial state to each reachable state."""
    words = {d.initial: ()}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for c in d.alphabet:
            nxt = d.step(q, c)
            if nxt not in words:
                words[nxt] = words[q] + (c,)
                queue.append(nxt)
    return words
