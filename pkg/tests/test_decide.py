import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from revwa.decide import (Decomposition, DecompositionError, classify_language, decide_reversible_series,
                          ecom_language_check, nonempty_subsets, parity_sum_f2, step_decomposition,
                          witness_char_series_over_ring, witness_union_f2)
from revwa.generators import random_orev_nfa, random_wa
from revwa.lang import (Nfa, dfa_boolean, dfa_complement, dfa_equivalence, lift_to_wa, minimize,
                        support_dfa)
from revwa.monoid import compose
from revwa.ring import GF, Zn, product_ring
from revwa.wfa import AutomatonError, WeightedAutomaton, disjoint_union, is_reversible, permute_states

from oracles import (aa_star_dfa, aa_star_nfa, aplus_dfa, aplus_sum_wa, contains_ab_dfa, ecom_corpus,
                     empty_dfa, eps_nfa, nfa_accepts, sigma_star_dfa, star_nfa, words)

AB = ["a", "b"]
F2 = Zn(2)
GF4 = GF(2, 2, [1, 1, 1])
seeds = st.integers(0, 2**32 - 1)
WITNESS_RINGS = [Zn(2), Zn(6), GF4, product_ring(Zn(2), Zn(3))]


def random_decomposition(rng, alphabet=AB, max_members=3):
    n = rng.randint(0, max_members)
    return Decomposition(alphabet, [random_orev_nfa(rng, alphabet, 3) for _ in range(n)])


def odd_membership(dec, w):
    return sum(nfa_accepts(nfa, w) for nfa in dec.languages) % 2 == 1


def test_subset_order():
    assert list(nonempty_subsets(3)) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    assert list(nonempty_subsets(0)) == []


def test_union_witness_examples():
    single = witness_union_f2(Decomposition(["a"], [aa_star_nfa()]))
    assert all(single.coefficient(w) == (len(w) % 2 == 0) for w in words(["a"], 8))
    pair = witness_union_f2(Decomposition(["a"], [eps_nfa(), star_nfa()]))
    assert pair.states == 3 and is_reversible(pair)
    assert all(pair.coefficient(w) == 1 for w in words(["a"], 8))
    empty = witness_union_f2(Decomposition(["a"], []))
    assert empty.states == 0 and empty.coefficient("a") == 0


@pytest.mark.parametrize("ring", [Zn(2), Zn(3), Zn(4), Zn(6), GF4], ids=repr)
def test_aplus_witness(ring):
    dec = Decomposition(["a"], [eps_nfa(), star_nfa()])
    a = witness_char_series_over_ring(dec, aplus_dfa(), ring)
    assert is_reversible(a)
    for w in words(["a"], 12):
        assert a.coefficient(w) == (ring.one if w else ring.zero)


def test_aplus_witness_over_f2_matches_union_support():
    dec = Decomposition(["a"], [eps_nfa(), star_nfa()])
    over_ring = witness_char_series_over_ring(dec, aplus_dfa(), F2)
    # over F_2 the pair term has coefficient -2 = 0; the union witness keeps it with weight 1
    parity = minimize(support_dfa(parity_sum_f2(dec).linear_representation))
    assert dfa_equivalence(support_dfa(over_ring.linear_representation), parity)
    assert dfa_equivalence(parity, aplus_dfa())


def test_single_language_witness_is_its_lift():
    dec = Decomposition(["a"], [aa_star_nfa()])
    a = witness_char_series_over_ring(dec, aa_star_dfa(), Zn(6))
    b = lift_to_wa(aa_star_nfa(), Zn(6))
    assert a.transitions == b.transitions and a.initial == b.initial and a.final == b.final


def test_witness_target_mismatch():
    dec = Decomposition(["a"], [eps_nfa(), star_nfa()])
    with pytest.raises(DecompositionError):
        witness_char_series_over_ring(dec, sigma_star_dfa(), Zn(6))
    with pytest.raises(DecompositionError):
        witness_char_series_over_ring(dec, sigma_star_dfa(AB), Zn(6))


def test_invalid_decompositions():
    fork = Nfa(["a"], 3, [(0, "a", 1), (0, "a", 2)], {0}, {1})
    with pytest.raises(DecompositionError, match="reversible"):
        Decomposition(["a"], [fork])
    two = Nfa(["a"], 2, [(0, "a", 1), (1, "a", 0)], {0, 1}, {0})
    with pytest.raises(DecompositionError, match="one initial"):
        Decomposition(["a"], [two])
    none = Nfa(["a"], 1, [], set(), {0})
    with pytest.raises(DecompositionError):
        Decomposition(["a"], [none])
    with pytest.raises(DecompositionError, match="alphabet"):
        Decomposition(["a"], [star_nfa(AB)])


@settings(max_examples=50, deadline=None)
@given(seeds, st.sampled_from(WITNESS_RINGS))
def test_witness_soundness(seed, ring):
    rng = random.Random(seed)
    dec = random_decomposition(rng)
    a = witness_char_series_over_ring(dec, None, ring)
    assert is_reversible(a)
    u = witness_union_f2(dec)
    assert is_reversible(u)
    for w in words(AB, 6):
        odd = odd_membership(dec, w)
        assert a.coefficient(w) == (ring.one if odd else ring.zero)
        in_union = any(nfa_accepts(nfa, w) for nfa in dec.languages)
        assert u.coefficient(w) == int(in_union)


@settings(max_examples=15, deadline=None)
@given(seeds, st.sampled_from([Zn(2), Zn(3), Zn(4), Zn(6), GF4, product_ring(Zn(2), Zn(2)),
                               Zn(8), GF(2, 3, [1, 1, 0, 1])]))
def test_decision_on_witnesses(seed, ring):
    rng = random.Random(seed)
    dec = random_decomposition(rng, max_members=2)
    assert decide_reversible_series(witness_char_series_over_ring(dec, None, ring)).reversible


def test_ecom_language_examples():
    assert ecom_language_check(aplus_dfa())
    assert ecom_language_check(empty_dfa(AB))
    v = ecom_language_check(contains_ab_dfa())
    assert not v and (v.witness.e_word, v.witness.f_word) == (("a",), ("b",))


@pytest.mark.parametrize("dfa, ecom, pin", [
    (aplus_dfa(), True, False),
    (sigma_star_dfa(AB), True, True),
    (contains_ab_dfa(), False, False),
    (aa_star_dfa(), True, True),
], ids=["aplus", "sigma_star", "contains_ab", "aa_star"])
def test_classification(dfa, ecom, pin):
    c = classify_language(dfa)
    assert (bool(c.ecom), c.pin_reversible) == (ecom, pin)


def test_corpus_is_ecom():
    corpus = ecom_corpus()
    assert len(corpus) == 10
    for name, d in corpus.items():
        assert ecom_language_check(d), name


def test_boolean_closure():
    corpus = list(ecom_corpus().values())
    for d in corpus:
        assert ecom_language_check(dfa_complement(d))
    for d, e in itertools.combinations(corpus, 2):
        for op in ("union", "intersection", "symdiff"):
            assert ecom_language_check(dfa_boolean(d, e, op))


def test_closure_with_a_non_ecom_member():
    corpus = list(ecom_corpus().values()) + [contains_ab_dfa()]
    members = [d for d in corpus if ecom_language_check(d)]
    assert len(members) == 10
    for d, e in itertools.combinations(members, 2):
        assert ecom_language_check(dfa_boolean(d, e, "symdiff"))


def test_decide_examples():
    report = decide_reversible_series(lift_to_wa(aplus_dfa(), F2))
    assert report.reversible and report.failure is None
    bad = decide_reversible_series(lift_to_wa(contains_ab_dfa(), F2))
    assert not bad.reversible
    assert [s.ecom for s in bad.shifts] == [False, False]
    assert bad.failure.shift == 0
    w = bad.failure.witness
    # replay the witness words on the minimal support DFA
    d = minimize(support_dfa(lift_to_wa(contains_ab_dfa(), F2).linear_representation, 0))
    e = tuple(d.run(q, w.e_word) for q in range(d.states))
    f = tuple(d.run(q, w.f_word) for q in range(d.states))
    assert compose(e, e) == e and compose(f, f) == f and compose(e, f) != compose(f, e)


@pytest.mark.parametrize("ring", [Zn(2), Zn(6), GF4], ids=repr)
def test_zero_series_is_reversible(ring):
    report = decide_reversible_series(WeightedAutomaton(ring, AB, 0))
    assert report.reversible
    assert [s.support_states for s in report.shifts] == [1] * len(ring)


def test_decide_aplus_sum_over_z6():
    report = decide_reversible_series(aplus_sum_wa(Zn(6)))
    assert report.reversible and len(report.shifts) == 6


def test_decide_subring_restriction():
    a = lift_to_wa(contains_ab_dfa(), GF4)
    full = decide_reversible_series(a)
    sub = decide_reversible_series(a, subring=True)
    assert len(full.shifts) == 4 and len(sub.shifts) == 2
    assert [s.shift for s in sub.shifts] == [GF4.zero, GF4.one]
    assert full.reversible == sub.reversible is False


def test_decide_workers_give_same_report():
    a = lift_to_wa(contains_ab_dfa(), Zn(6))
    assert decide_reversible_series(a, workers=4) == decide_reversible_series(a)


def test_decide_rejects_empty_alphabet():
    with pytest.raises(AutomatonError):
        decide_reversible_series(WeightedAutomaton(F2, [], 1, {}, {0: 1}, {0: 1}))


def test_report_text():
    text = decide_reversible_series(lift_to_wa(contains_ab_dfa(), F2)).to_text()
    assert text.splitlines()[0] == "verdict: not-reversible"
    assert 'idempotents "a" and "b" do not commute' in text
    assert "elapsed" not in text


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_shift_complement_over_f2(seed):
    lr = random_wa(random.Random(seed), F2, AB, 3).linear_representation
    zero, one = support_dfa(lr, 0), support_dfa(lr, 1)
    assert dfa_equivalence(one, dfa_complement(zero))
    assert bool(ecom_language_check(zero)) == bool(ecom_language_check(one))


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([Zn(2), Zn(3), Zn(4), Zn(5), Zn(6), GF4, product_ring(Zn(2), Zn(3))]))
def test_step_function_identity(seed, ring):
    a = random_wa(random.Random(seed), ring, AB, 3)
    steps = step_decomposition(a)
    for w in words(AB, 5):
        total = ring.sum(ring.mul(x, ring.one if d.accepts(w) else ring.zero) for x, d in steps)
        assert total == a.coefficient(w)


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([Zn(2), Zn(3), GF4]))
def test_decide_invariances(seed, ring):
    rng = random.Random(seed)
    a = random_wa(rng, ring, AB, 3)
    verdict = decide_reversible_series(a).reversible
    padded = disjoint_union([a, WeightedAutomaton(ring, AB, 2)])
    assert decide_reversible_series(padded).reversible == verdict
    perm = list(range(a.states))
    rng.shuffle(perm)
    assert decide_reversible_series(permute_states(a, perm)).reversible == verdict
