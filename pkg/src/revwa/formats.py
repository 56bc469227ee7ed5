"""JSON documents for rings, weighted automata, NFAs/DFAs and decompositions.

Parsing rejects unknown fields; dumping produces the canonical form, so
``dump(parse(dump(x))) == dump(x)`` for every document kind.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .decide import Decomposition
from .lang import Dfa, Nfa
from .ring import Ring, RingError, RingSpec, ring_from_spec
from .wfa import AutomatonError, WeightedAutomaton


class FormatError(ValueError):
    pass


def _fields(obj: Any, what: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    unknown = set(obj) - required - optional
    if unknown:
        raise FormatError(f"unknown field(s) in {what}: {', '.join(sorted(unknown))}")
    missing = required - set(obj)
    if missing:
        raise FormatError(f"missing field(s) in {what}: {', '.join(sorted(missing))}")
    return obj


def _int(v, what):
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"{what} must be an integer, got {v!r}")
    return v


def _int_matrix(v, what):
    if not isinstance(v, list) or not all(isinstance(row, list) for row in v):
        raise FormatError(f"{what} must be a list of lists")
    return [[_int(x, what) for x in row] for row in v]


_RING_FIELDS = {
    "zn": {"kind", "n"},
    "gf": {"kind", "p", "k", "modulus"},
    "product": {"kind", "factors"},
    "table": {"kind", "size", "add", "mul", "zero", "one"},
}


def parse_ring_spec(obj: Any) -> RingSpec:
    if not isinstance(obj, dict) or obj.get("kind") not in _RING_FIELDS:
        raise FormatError(f"ring kind must be one of {sorted(_RING_FIELDS)}")
    kind = obj["kind"]
    _fields(obj, f"{kind} ring", _RING_FIELDS[kind])
    if kind == "zn":
        return RingSpec.zn(_int(obj["n"], "n"))
    if kind == "gf":
        if not isinstance(obj["modulus"], list):
            raise FormatError("modulus must be a list of coefficients")
        return RingSpec.gf(_int(obj["p"], "p"), _int(obj["k"], "k"),
                           [_int(c, "modulus coefficient") for c in obj["modulus"]])
    if kind == "product":
        if not isinstance(obj["factors"], list):
            raise FormatError("factors must be a list")
        return RingSpec.product(*(parse_ring_spec(f) for f in obj["factors"]))
    size = _int(obj["size"], "size")
    spec = RingSpec.table(_int_matrix(obj["add"], "add"), _int_matrix(obj["mul"], "mul"),
                          _int(obj["zero"], "zero"), _int(obj["one"], "one"))
    if spec.size != size:
        raise FormatError(f"declared size {size} does not match the {spec.size}x{spec.size} tables")
    return spec


def dump_ring_spec(spec: RingSpec) -> dict:
    if spec.kind == "zn":
        return {"kind": "zn", "n": spec.n}
    if spec.kind == "gf":
        return {"kind": "gf", "p": spec.p, "k": spec.k, "modulus": list(spec.modulus)}
    if spec.kind == "product":
        return {"kind": "product", "factors": [dump_ring_spec(f) for f in spec.factors]}
    return {"kind": "table", "size": spec.size, "add": [list(r) for r in spec.add],
            "mul": [list(r) for r in spec.mul], "zero": spec.zero, "one": spec.one}


def parse_ring(obj: Any) -> Ring:
    return ring_from_spec(parse_ring_spec(obj))


def _alphabet(v):
    if not isinstance(v, list) or not all(isinstance(c, str) for c in v):
        raise FormatError("alphabet must be a list of strings")
    if len(set(v)) != len(v):
        raise FormatError("alphabet contains duplicate symbols")
    return v


def _weight_map(ring: Ring, v, what) -> dict[int, Any]:
    if not isinstance(v, dict):
        raise FormatError(f"{what} must be an object mapping states to weights")
    out = {}
    for key, w in v.items():
        try:
            q = int(key)
        except ValueError:
            raise FormatError(f"{what} key {key!r} is not a state number") from None
        if str(q) != key:
            raise FormatError(f"{what} key {key!r} is not in canonical form")
        out[q] = ring.parse_element(w)
    return out


def parse_wa(obj: Any) -> WeightedAutomaton:
    _fields(obj, "weighted automaton", {"ring", "alphabet", "states"},
            {"initial", "final", "transitions"})
    ring = parse_ring(obj["ring"])
    trans = obj.get("transitions", [])
    if not isinstance(trans, list):
        raise FormatError("transitions must be a list")
    items = []
    for t in trans:
        if not isinstance(t, list) or len(t) != 4:
            raise FormatError(f"transition {t!r} must be [p, symbol, q, weight]")
        p, c, q, w = t
        items.append((_int(p, "state"), c, _int(q, "state"), ring.parse_element(w)))
    return WeightedAutomaton(ring, _alphabet(obj["alphabet"]), _int(obj["states"], "states"), items,
                             _weight_map(ring, obj.get("initial", {}), "initial"),
                             _weight_map(ring, obj.get("final", {}), "final"))


def dump_wa(a: WeightedAutomaton) -> dict:
    R = a.ring
    return {
        "ring": dump_ring_spec(R.spec),
        "alphabet": list(a.alphabet),
        "states": a.states,
        "initial": {str(q): R.dump_element(w) for q, w in a.initial.items()},
        "final": {str(q): R.dump_element(w) for q, w in a.final.items()},
        "transitions": [[p, c, q, R.dump_element(w)] for (p, c, q), w in a.transitions.items()],
    }


def _state_list(v, what):
    if not isinstance(v, list):
        raise FormatError(f"{what} must be a list of states")
    return [_int(q, what) for q in v]


def _triples(v):
    if not isinstance(v, list):
        raise FormatError("transitions must be a list")
    out = []
    for t in v:
        if not isinstance(t, list) or len(t) != 3:
            raise FormatError(f"transition {t!r} must be [p, symbol, q]")
        out.append((_int(t[0], "state"), t[1], _int(t[2], "state")))
    return out


_AUTOMATON_FIELDS = {"alphabet", "states", "initial", "final", "transitions"}


def parse_nfa(obj: Any) -> Nfa:
    _fields(obj, "automaton", _AUTOMATON_FIELDS, {"complete"})
    return Nfa(_alphabet(obj["alphabet"]), _int(obj["states"], "states"), _triples(obj["transitions"]),
               _state_list(obj["initial"], "initial"), _state_list(obj["final"], "final"))


def dump_nfa(a: Nfa) -> dict:
    return {"alphabet": list(a.alphabet), "states": a.states, "initial": sorted(a.initial),
            "final": sorted(a.final), "transitions": [list(t) for t in a.transitions]}


def parse_dfa(obj: Any) -> Dfa:
    _fields(obj, "DFA", _AUTOMATON_FIELDS | {"complete"})
    if obj["complete"] is not True:
        raise FormatError('a DFA document must declare "complete": true')
    initial = _state_list(obj["initial"], "initial")
    if len(initial) != 1:
        raise FormatError("a DFA has exactly one initial state")
    return Dfa(_alphabet(obj["alphabet"]), _int(obj["states"], "states"), _triples(obj["transitions"]),
               initial[0], _state_list(obj["final"], "final"))


def dump_dfa(d: Dfa) -> dict:
    return {"alphabet": list(d.alphabet), "states": d.states, "initial": [d.initial],
            "final": sorted(d.final), "transitions": [list(t) for t in d.transitions()],
            "complete": True}


def parse_decomposition(obj: Any) -> Decomposition:
    _fields(obj, "decomposition", {"alphabet", "languages"})
    if not isinstance(obj["languages"], list):
        raise FormatError("languages must be a list of automata")
    return Decomposition(tuple(_alphabet(obj["alphabet"])),
                         tuple(parse_nfa(x) for x in obj["languages"]))


def dump_decomposition(dec: Decomposition) -> dict:
    return {"alphabet": list(dec.alphabet), "languages": [dump_nfa(a) for a in dec.languages]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def _loader(parse):
    def load(path):
        try:
            return parse(load_json(path))
        except (RingError, AutomatonError) as exc:
            raise FormatError(f"{path}: {exc}") from None
    return load


load_ring = _loader(parse_ring)
load_wa = _loader(parse_wa)
load_nfa = _loader(parse_nfa)
load_dfa = _loader(parse_dfa)
load_decomposition = _loader(parse_decomposition)
