"""Command-line front end.

Exit codes: 0 success, 1 negative verdict under ``--assert`` or a failed
witness verification, 2 malformed input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from . import formats
from .decide import (classify_language, decide_reversible_series, format_element, format_word,
                     parity_sum_f2, witness_char_series_over_ring)
from .lang import dfa_equivalence, minimize, support_dfa
from .monoid import idempotents, is_ecom, syntactic_monoid
from .ring import RingError
from .wfa import AutomatonError, is_bideterministic, is_reversible, to_linear_representation


class UsageError(Exception):
    pass


def _yes(flag) -> str:
    return "yes" if flag else "no"


def _read_word(args, alphabet) -> tuple[str, ...]:
    if args.word_file:
        lines = Path(args.word_file).read_text(encoding="utf-8").splitlines()
        word = tuple(line.strip() for line in lines if line.strip())
    elif args.word is not None:
        word = tuple(args.word)
    else:
        raise UsageError("give a word or --word-file")
    for c in word:
        if c not in alphabet:
            raise UsageError(f"symbol {c!r} is not in the alphabet {list(alphabet)}")
    return word


def _fmt_transition(t) -> str:
    p, c, q = t
    return f"({p}, {json.dumps(c)}, {q})"


def cmd_eval(args) -> int:
    a = formats.load_wa(args.automaton)
    word = _read_word(args, a.alphabet)
    print(json.dumps(a.ring.dump_element(a.coefficient(word))))
    return 0


def cmd_check(args) -> int:
    a = formats.load_wa(args.automaton)
    rev = is_reversible(a)
    line = f"reversible: {_yes(rev)}"
    if not rev:
        t1, t2 = rev.witness
        line += f" (transitions {_fmt_transition(t1)} and {_fmt_transition(t2)})"
    print(line)
    print(f"bideterministic: {_yes(is_bideterministic(a))}")
    print(f"one-initial: {_yes(len(a.initial) == 1)}")
    return 1 if args.assert_ and not rev else 0


def cmd_decide(args) -> int:
    a = formats.load_wa(args.automaton)
    report = decide_reversible_series(a, subring=args.subring, workers=args.workers)
    if args.json:
        print(json.dumps(report.to_json(timing=args.timing), indent=2))
    else:
        sys.stdout.write(report.to_text(timing=args.timing))
    return 1 if args.assert_ and not report.reversible else 0


def _monoid_summary(d):
    m = syntactic_monoid(d)
    ecom = is_ecom(m)
    summary = {
        "minimal_states": m.dfa.states,
        "size": len(m),
        "idempotents": [list(m.words[e]) for e in idempotents(m)],
        "ecom": ecom.holds,
        "witness": None if ecom else {"e_word": list(ecom.witness.e_word),
                                      "f_word": list(ecom.witness.f_word)},
    }
    return summary


def _print_monoid(summary):
    print(f"minimal DFA states: {summary['minimal_states']}")
    print(f"size: {summary['size']}")
    print(f"idempotents: {len(summary['idempotents'])} "
          f"({', '.join(format_word(w) for w in summary['idempotents'])})")
    print(f"ECom: {_yes(summary['ecom'])}")
    if summary["witness"]:
        w = summary["witness"]
        print(f"witness: {format_word(w['e_word'])} and {format_word(w['f_word'])} "
              f"are idempotents that do not commute")


def cmd_monoid(args) -> int:
    summary = _monoid_summary(formats.load_dfa(args.dfa))
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        _print_monoid(summary)
    return 0


def cmd_classify(args) -> int:
    d = formats.load_dfa(args.dfa)
    cls = classify_language(d)
    result = {
        "ecom": cls.ecom.holds,
        "omega_commute": cls.omega_commute,
        "xomega_leq_one": cls.xomega_leq_one.holds,
        "pin_reversible": cls.pin_reversible,
    }
    v = cls.xomega_leq_one.witness
    if args.json:
        if v is not None:
            result["xomega_violation"] = {"prefix": list(v.prefix), "omega_word": list(v.omega_word),
                                          "suffix": list(v.suffix)}
        print(json.dumps(result, indent=2))
        return 0
    print(f"ecom: {_yes(result['ecom'])}")
    if not cls.ecom:
        w = cls.ecom.witness
        print(f"  idempotents {format_word(w.e_word)} and {format_word(w.f_word)} do not commute")
    print(f"omega-commute: {_yes(result['omega_commute'])}")
    print(f"xomega-leq-one: {_yes(result['xomega_leq_one'])}")
    if v is not None:
        print(f"  {format_word(v.prefix + v.omega_word + v.suffix)} is in L "
              f"but {format_word(v.prefix + v.suffix)} is not")
    print(f"pin_reversible: {_yes(result['pin_reversible'])} "
          f"(via the pseudoinequality characterisation)")
    return 0


def cmd_witness(args) -> int:
    dec = formats.load_decomposition(args.decomposition)
    ring = formats.load_ring(args.ring)
    target = formats.load_dfa(args.target) if args.target else None
    a = witness_char_series_over_ring(dec, target, ring)
    if target is None:
        target = minimize(support_dfa(to_linear_representation(parity_sum_f2(dec))))

    rev = is_reversible(a)
    supp_ok = dfa_equivalence(minimize(support_dfa(a.linear_representation)), target)
    checked, bad = 0, None
    for n in range(args.check_length + 1):
        for word in itertools.product(a.alphabet, repeat=n):
            expected = ring.one if target.accepts(word) else ring.zero
            checked += 1
            if a.coefficient(word) != expected and bad is None:
                bad = word
    if args.out:
        Path(args.out).write_text(formats.dumps(formats.dump_wa(a)), encoding="utf-8")
    else:
        sys.stdout.write(formats.dumps(formats.dump_wa(a)))
    out = sys.stderr if not args.out else sys.stdout
    print(f"states: {a.states}", file=out)
    print(f"reversible: {_yes(rev)}", file=out)
    print(f"support matches target: {_yes(supp_ok)}", file=out)
    print(f"coefficients checked: {checked} words up to length {args.check_length}, "
          + ("all match" if bad is None else f"mismatch at {format_word(bad)}"), file=out)
    return 0 if rev and supp_ok and bad is None else 1


def cmd_support(args) -> int:
    a = formats.load_wa(args.automaton)
    if args.shift is None:
        x = a.ring.zero
    else:
        try:
            x = a.ring.parse_element(json.loads(args.shift))
        except json.JSONDecodeError:
            raise UsageError(f"shift {args.shift!r} is not valid JSON") from None
    d = minimize(support_dfa(a.linear_representation, x))
    text = formats.dumps(formats.dump_dfa(d))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"support DFA with {d.states} states written to {args.out} "
              f"(shift {format_element(a.ring.dump_element(x))})")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revwa",
        description="Reversible weighted automata over finite commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="coefficient of a word in the realised series")
    p.add_argument("automaton")
    p.add_argument("word", nargs="?", help='single-character symbols; "" is the empty word')
    p.add_argument("--word-file", help="file with one symbol per line")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="structural reversibility of an automaton")
    p.add_argument("automaton")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 if not reversible")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", help="is the series realised by some reversible automaton?")
    p.add_argument("automaton")
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 if not reversible")
    p.add_argument("--json", action="store_true")
    p.add_argument("--subring", action="store_true",
                   help="range shifts over the subring generated by the weights")
    p.add_argument("--timing", action="store_true", help="include elapsed time (not reproducible)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_decide)

    for name, func, desc in (("monoid", cmd_monoid, "syntactic monoid summary of a DFA language"),
                             ("classify", cmd_classify, "ECom and Pin-reversibility of a DFA language")):
        p = sub.add_parser(name, help=desc)
        p.add_argument("dfa")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("witness", help="reversible automaton for the characteristic series of a language")
    p.add_argument("decomposition")
    p.add_argument("ring")
    p.add_argument("target", nargs="?", help="DFA of the target language (default: F_2 support)")
    p.add_argument("--out", help="write the automaton here instead of stdout")
    p.add_argument("--check-length", type=int, default=6)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("support", help="minimal DFA of supp(r + x Sigma*)")
    p.add_argument("automaton")
    p.add_argument("--shift", help="ring element x as JSON (default zero)")
    p.add_argument("--out", help="write the DFA here instead of stdout")
    p.set_defaults(func=cmd_support)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (formats.FormatError, RingError, AutomatonError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
