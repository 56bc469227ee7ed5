"""Finite commutative rings with unity.

Elements are plain hashable values in a canonical encoding:

* ``zn``      -- an ``int`` in ``range(n)``
* ``gf``      -- a ``tuple`` of ``k`` coefficients in ``range(p)``, ascending degree
* ``product`` -- a ``tuple`` of factor encodings
* ``table``   -- an ``int`` index in ``range(size)``

Two elements are equal exactly when their encodings are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

Elem = Hashable

DEFAULT_MAX_TABLE_SIZE = 256


class RingError(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    """Structural description of a ring; only the fields of ``kind`` are used."""

    kind: str
    n: int | None = None
    p: int | None = None
    k: int | None = None
    modulus: tuple[int, ...] | None = None
    factors: tuple[RingSpec, ...] | None = None
    size: int | None = None
    add: tuple[tuple[int, ...], ...] | None = None
    mul: tuple[tuple[int, ...], ...] | None = None
    zero: int | None = None
    one: int | None = None

    @classmethod
    def zn(cls, n: int) -> RingSpec:
        return cls("zn", n=n)

    @classmethod
    def gf(cls, p: int, k: int, modulus: Sequence[int]) -> RingSpec:
        return cls("gf", p=p, k=k, modulus=tuple(modulus))

    @classmethod
    def product(cls, *factors: RingSpec) -> RingSpec:
        return cls("product", factors=tuple(factors))

    @classmethod
    def table(cls, add, mul, zero: int, one: int) -> RingSpec:
        add = tuple(tuple(row) for row in add)
        mul = tuple(tuple(row) for row in mul)
        return cls("table", size=len(add), add=add, mul=mul, zero=zero, one=one)

    def describe(self) -> str:
        if self.kind == "zn":
            return f"Z_{self.n}"
        if self.kind == "gf":
            return f"GF({self.p}^{self.k})"
        if self.kind == "product":
            return " x ".join(f.describe() for f in self.factors)
        return f"table ring of size {self.size}"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Ring:
    """Base class; subclasses supply ``_add``, ``_mul``, ``_neg`` and the carrier."""

    spec: RingSpec
    zero: Elem
    one: Elem

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<Ring {self.spec.describe()}>"

    def __contains__(self, a) -> bool:
        try:
            return a in self._carrier
        except TypeError:  # unhashable
            return False

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def elements(self) -> tuple:
        return tuple(self._enumerate())

    @cached_property
    def _carrier(self) -> frozenset:
        return frozenset(self.elements)

    def _check(self, *xs):
        for x in xs:
            if x not in self:
                raise RingError(f"{x!r} is not an element of {self.spec.describe()}")

    def add(self, a: Elem, b: Elem) -> Elem:
        self._check(a, b)
        return self._add(a, b)

    def mul(self, a: Elem, b: Elem) -> Elem:
        self._check(a, b)
        return self._mul(a, b)

    def neg(self, a: Elem) -> Elem:
        self._check(a)
        return self._neg(a)

    def sub(self, a: Elem, b: Elem) -> Elem:
        self._check(a, b)
        return self._add(a, self._neg(b))

    def sum(self, xs: Iterable[Elem]) -> Elem:
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs: Iterable[Elem]) -> Elem:
        acc = self.one
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def power(self, a: Elem, e: int) -> Elem:
        if e < 0:
            raise RingError("negative exponent")
        self._check(a)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def from_int(self, m: int) -> Elem:
        """The element ``m * 1``, built from the unity by double-and-add."""
        acc, base, k = self.zero, self.one, abs(m)
        while k:
            if k & 1:
                acc = self._add(acc, base)
            base = self._add(base, base)
            k >>= 1
        return self._neg(acc) if m < 0 else acc

    @cached_property
    def characteristic(self) -> int:
        acc, m = self.one, 1
        while acc != self.zero:
            acc = self._add(acc, self.one)
            m += 1
        return m

    # serialization of single elements (JSON-compatible values)

    def dump_element(self, a: Elem) -> Any:
        self._check(a)
        return _to_json(a)

    def parse_element(self, obj: Any) -> Elem:
        a = _from_json(obj)
        if a not in self:
            raise RingError(f"{obj!r} does not encode an element of {self.spec.describe()}")
        return a

    # internals

    def _enumerate(self) -> Iterable[Elem]:
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError


def _to_json(a):
    if isinstance(a, tuple):
        return [_to_json(x) for x in a]
    return a


def _from_json(obj):
    if isinstance(obj, list):
        return tuple(_from_json(x) for x in obj)
    if isinstance(obj, bool) or not isinstance(obj, (int, tuple)):
        return None
    return obj


class ZnRing(Ring):
    def __init__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise RingError(f"Z_n needs an integer n >= 2, got {n!r}")
        self.n = n
        self.spec = RingSpec.zn(n)
        self.zero, self.one = 0, 1

    def __contains__(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.n

    def _enumerate(self):
        return range(self.n)

    def _add(self, a, b):
        return (a + b) % self.n

    def _mul(self, a, b):
        return (a * b) % self.n

    def _neg(self, a):
        return (-a) % self.n


def _poly_rem(num: list[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of ``num`` by the monic ``den`` over Z_p (ascending coefficients)."""
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]] + [0] * max(0, d - len(num))


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive search for a monic divisor of degree 1..deg//2 over Z_p."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(modulus, list(low) + [1], p)):
                return False
    return True


class GFRing(Ring):
    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        if not isinstance(p, int) or not is_prime(p):
            raise RingError(f"GF characteristic must be prime, got {p!r}")
        if not isinstance(k, int) or k < 1:
            raise RingError(f"GF degree must be >= 1, got {k!r}")
        modulus = tuple(modulus)
        if len(modulus) != k + 1:
            raise RingError(f"modulus must have k+1 = {k + 1} coefficients, got {len(modulus)}")
        if any(not isinstance(c, int) or not 0 <= c < p for c in modulus):
            raise RingError(f"modulus coefficients must lie in [0, {p})")
        if modulus[-1] != 1:
            raise RingError("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise RingError(f"modulus {list(modulus)} is reducible over Z_{p}")
        self.p, self.k, self.modulus = p, k, modulus
        self.spec = RingSpec.gf(p, k, modulus)
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def __contains__(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.k
            and all(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < self.p for c in a)
        )

    def _enumerate(self):
        # ordered by the value of the coefficient vector read as a base-p numeral
        for digits in itertools.product(range(self.p), repeat=self.k):
            yield tuple(reversed(digits))

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_poly_rem(prod, self.modulus, self.p))


class ProductRing(Ring):
    def __init__(self, factors: Sequence[Ring]):
        self.factors = tuple(factors)
        if not self.factors:
            raise RingError("empty product is the trivial ring")
        self.spec = RingSpec.product(*(f.spec for f in self.factors))
        self.zero = tuple(f.zero for f in self.factors)
        self.one = tuple(f.one for f in self.factors)

    def __contains__(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == len(self.factors)
            and all(x in f for x, f in zip(a, self.factors))
        )

    def _enumerate(self):
        return itertools.product(*(f.elements for f in self.factors))

    def _add(self, a, b):
        return tuple(f._add(x, y) for f, x, y in zip(self.factors, a, b))

    def _mul(self, a, b):
        return tuple(f._mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _neg(self, a):
        return tuple(f._neg(x) for f, x in zip(self.factors, a))


class TableRing(Ring):
    """A ring given by Cayley tables over the indices ``0..size-1``.

    ``labels`` optionally names each index by an element of an ambient ring
    (set by :func:`generated_subring`); it takes no part in equality.
    """

    def __init__(self, add, mul, zero: int, one: int, *,
                 max_size: int = DEFAULT_MAX_TABLE_SIZE, labels: Sequence | None = None):
        try:
            add = tuple(tuple(row) for row in add)
            mul = tuple(tuple(row) for row in mul)
        except TypeError:
            raise RingError("tables must be square lists of lists") from None
        m = len(add)
        if m > max_size:
            raise RingError(f"table ring of size {m} exceeds the cap of {max_size}")
        for name, t in (("add", add), ("mul", mul)):
            if len(t) != m or any(len(row) != m for row in t):
                raise RingError(f"{name} table must be {m}x{m}")
            for row in t:
                for v in row:
                    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                        raise RingError(f"{name} table entry {v!r} outside [0, {m})")
        for name, v in (("zero", zero), ("one", one)):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                raise RingError(f"{name} index {v!r} outside [0, {m})")
        self._addt, self._mult = add, mul
        self.size = m
        self.zero, self.one = zero, one
        self.spec = RingSpec.table(add, mul, zero, one)
        self.labels = tuple(labels) if labels is not None else None
        self._validate()
        self._negt = tuple(next(b for b in range(m) if add[a][b] == zero) for a in range(m))

    def _validate(self):
        m, A, M, z, o = self.size, self._addt, self._mult, self.zero, self.one
        if z == o:
            raise RingError("trivial ring: zero equals one")
        R = range(m)
        for a in R:
            if A[z][a] != a or A[a][z] != a:
                raise RingError("declared zero is not an additive identity")
            if M[o][a] != a or M[a][o] != a:
                raise RingError("declared one is not a multiplicative identity")
        for a in R:
            if all(A[a][b] != z for b in R):
                raise RingError(f"element {a} has no additive inverse")
            for b in R:
                if A[a][b] != A[b][a]:
                    raise RingError(f"addition is not commutative at ({a}, {b})")
                if M[a][b] != M[b][a]:
                    raise RingError(f"multiplication is not commutative at ({a}, {b})")
        for a in R:
            if M[z][a] != z:
                raise RingError(f"zero is not absorbing at {a}")
            for b in R:
                ab_add, ab_mul = A[a][b], M[a][b]
                for c in R:
                    if A[ab_add][c] != A[a][A[b][c]]:
                        raise RingError(f"addition is not associative at ({a}, {b}, {c})")
                    if M[ab_mul][c] != M[a][M[b][c]]:
                        raise RingError(f"multiplication is not associative at ({a}, {b}, {c})")
                    if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                        raise RingError(f"distributivity fails at ({a}, {b}, {c})")

    def __contains__(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.size

    def _enumerate(self):
        return range(self.size)

    def _add(self, a, b):
        return self._addt[a][b]

    def _mul(self, a, b):
        return self._mult[a][b]

    def _neg(self, a):
        return self._negt[a]


def ring_from_spec(spec: RingSpec, *, max_table_size: int = DEFAULT_MAX_TABLE_SIZE) -> Ring:
    if spec.kind == "zn":
        return ZnRing(spec.n)
    if spec.kind == "gf":
        return GFRing(spec.p, spec.k, spec.modulus or ())
    if spec.kind == "product":
        ring = ProductRing([ring_from_spec(f, max_table_size=max_table_size) for f in spec.factors or ()])
        if ring.zero == ring.one:
            raise RingError("trivial ring: zero equals one")
        return ring
    if spec.kind == "table":
        if spec.add is not None and spec.size != len(spec.add):
            raise RingError(f"declared size {spec.size} does not match the tables")
        return TableRing(spec.add or (), spec.mul or (), spec.zero, spec.one, max_size=max_table_size)
    raise RingError(f"unknown ring kind {spec.kind!r}")


def Zn(n: int) -> Ring:
    return ZnRing(n)


def GF(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> Ring:
    if modulus is None:
        if k != 1:
            raise RingError("a modulus is required for k > 1")
        modulus = (0, 1)
    return GFRing(p, k, modulus)


def product_ring(*factors: Ring) -> Ring:
    return ring_from_spec(RingSpec.product(*(f.spec for f in factors)))


def enumerate_elements(r: Ring) -> tuple:
    return r.elements


def characteristic(r: Ring) -> int:
    return r.characteristic


def generated_subring(r: Ring, gens: Iterable[Elem] = ()) -> TableRing:
    """Smallest subring of ``r`` containing ``gens`` (and always 0 and 1).

    The result is a :class:`TableRing` whose index ``i`` stands for
    ``result.labels[i]``; indices follow the enumeration order of ``r``.
    """
    gens = list(gens)
    r._check(*gens)
    found = {r.zero, r.one, *gens}
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            cands = [r._neg(a)]
            for b in list(found):
                cands.append(r._add(a, b))
                cands.append(r._mul(a, b))
            for c in cands:
                if c not in found:
                    found.add(c)
                    new.append(c)
        frontier = new
    labels = [a for a in r.elements if a in found]
    index = {a: i for i, a in enumerate(labels)}
    add = [[index[r._add(a, b)] for b in labels] for a in labels]
    mul = [[index[r._mul(a, b)] for b in labels] for a in labels]
    return TableRing(add, mul, index[r.zero], index[r.one],
                     max_size=max(len(labels), DEFAULT_MAX_TABLE_SIZE), labels=labels)
