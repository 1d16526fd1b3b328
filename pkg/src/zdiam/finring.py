"""Finite commutative unitary rings with elements indexed ``0..order-1``.

Every ring carries numpy-vectorised ``add``/``mul``/``neg`` callables over
index arrays.  Rings of order at most :data:`MATERIALIZE_LIMIT` cache full
operation tables on first use; larger structured rings compute products on
demand from their structure.  Zero is always index 0 and one index 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np
from sympy import isprime

from .errors import (
    ArityError,
    BaseRingError,
    ElementIndexError,
    InvalidOrderError,
    ModulusError,
    ValidationError,
)

MATERIALIZE_LIMIT = 4096
TABLE_LIMIT = 1024

ELEMSET_KINDS = frozenset(
    {"zero_divisors", "units", "annihilator", "nilradical", "idempotents", "custom"}
)

VecOp = Callable[..., np.ndarray]


class FiniteRing:
    """A finite commutative ring with identity.

    ``add``, ``mul`` and ``neg`` are the vectorised structure maps; the
    scalar convenience methods of the same name accept plain ints.
    """

    def __init__(
        self,
        order: int,
        add: VecOp,
        mul: VecOp,
        neg: VecOp,
        *,
        label: str,
        render: Callable[[int], str] | None = None,
        zero_ix: int = 0,
        one_ix: int = 1,
    ):
        if order < 2:
            raise InvalidOrderError(f"ring order must be at least 2, got {order}")
        if zero_ix == one_ix:
            raise InvalidOrderError("zero and one must be distinct")
        self.order = int(order)
        self.zero_ix = zero_ix
        self.one_ix = one_ix
        self.label = label
        self._add_v = add
        self._mul_v = mul
        self._neg_v = neg
        self._render = render or str

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"

    # -- element helpers -------------------------------------------------

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def check_index(self, x) -> int:
        if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
            raise ElementIndexError(f"element index must be an int, got {x!r}")
        if not 0 <= x < self.order:
            raise ElementIndexError(f"element index {x} out of range for {self.label}")
        return int(x)

    def render(self, x: int) -> str:
        return self._render(int(x))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {self.render(x): x for x in range(self.order)}

    def index_of(self, label: str) -> int:
        """Look an element up by its rendered label."""
        try:
            return self._label_index[label.replace(" ", "")]
        except KeyError:
            raise ElementIndexError(f"no element rendered as {label!r} in {self.label}") from None

    # -- tables ------------------------------------------------------------

    @property
    def materialized(self) -> bool:
        return self.order <= MATERIALIZE_LIMIT

    @cached_property
    def add_table(self) -> np.ndarray:
        return self._table(self._add_v)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self._mul_v)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.asarray(self._neg_v(self.elements()), dtype=np.int64)

    def _table(self, op: VecOp) -> np.ndarray:
        if not self.materialized:
            raise MemoryError(f"{self.label} is too large to tabulate (order {self.order})")
        e = self.elements()
        return np.ascontiguousarray(op(e[:, None], e[None, :]), dtype=np.int32)

    @cached_property
    def _add_rows(self) -> list[list[int]]:
        return self.add_table.tolist()

    @cached_property
    def _mul_rows(self) -> list[list[int]]:
        return self.mul_table.tolist()

    def mul_matrix(self, xs, ys) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64).reshape(-1)
        ys = np.asarray(ys, dtype=np.int64).reshape(-1)
        if self.materialized:
            return self.mul_table[np.ix_(xs, ys)]
        return np.asarray(self._mul_v(xs[:, None], ys[None, :]), dtype=np.int64)

    def add_matrix(self, xs, ys) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64).reshape(-1)
        ys = np.asarray(ys, dtype=np.int64).reshape(-1)
        if self.materialized:
            return self.add_table[np.ix_(xs, ys)]
        return np.asarray(self._add_v(xs[:, None], ys[None, :]), dtype=np.int64)

    def vmul(self, x, y) -> np.ndarray:
        """Elementwise product of two broadcastable index arrays."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.materialized:
            return self.mul_table[x, y].astype(np.int64)
        return np.asarray(self._mul_v(x, y), dtype=np.int64)

    def vadd(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.materialized:
            return self.add_table[x, y].astype(np.int64)
        return np.asarray(self._add_v(x, y), dtype=np.int64)

    # -- scalar arithmetic -------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.materialized:
            return self._add_rows[x][y]
        return int(self._add_v(np.int64(x), np.int64(y)))

    def mul(self, x: int, y: int) -> int:
        if self.materialized:
            return self._mul_rows[x][y]
        return int(self._mul_v(np.int64(x), np.int64(y)))

    def neg(self, x: int) -> int:
        return int(self._neg_v(np.int64(x)))

    def validate(self) -> None:
        """Exhaustively check the ring axioms; raises :class:`ValidationError`."""
        zero, one = check_axioms(self.add_table, self.mul_table)
        if (zero, one) != (self.zero_ix, self.one_ix):
            raise ValidationError("identity placement", (zero, one))
        neg = self.neg_table
        if not np.all(self.add_table[self.elements(), neg] == zero):
            bad = int(np.flatnonzero(self.add_table[self.elements(), neg] != zero)[0])
            raise ValidationError("negation", (bad,))


class ElemOps(NamedTuple):
    sum: int
    product: int
    negation: int
    equal: bool


@dataclass(frozen=True)
class ElemSet:
    """An ordered set of element indices of ``ring`` tagged with what it is."""

    ring: FiniteRing
    members: tuple[int, ...]
    kind: str = "custom"

    def __post_init__(self):
        if self.kind not in ELEMSET_KINDS:
            raise ValueError(f"unknown element-set kind {self.kind!r}")
        for m in self.members:
            if not 0 <= m < self.ring.order:
                raise ElementIndexError(f"member {m} out of range for {self.ring.label}")
        if self.kind == "zero_divisors" and self.ring.zero_ix in self.members:
            raise ValueError("zero-divisor sets exclude zero")

    @classmethod
    def from_mask(cls, ring: FiniteRing, mask: np.ndarray, kind: str) -> "ElemSet":
        return cls(ring, tuple(int(i) for i in np.flatnonzero(mask)), kind)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.members)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def labels(self) -> list[str]:
        return [self.ring.render(m) for m in self.members]


# ---------------------------------------------------------------------------
# axiom checking


def check_axioms(add: np.ndarray, mul: np.ndarray) -> tuple[int, int]:
    """Check commutative unitary ring axioms on raw tables.

    Returns ``(zero, one)``.  Witnesses are reported in the tables' own indices.
    """
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    n = add.shape[0]
    e = np.arange(n)

    for name, t in (("addition", add), ("multiplication", mul)):
        asym = np.argwhere(t != t.T)
        if asym.size:
            a, b = asym[0]
            raise ValidationError(f"{name} commutativity", (int(a), int(b)))

    zeros = np.flatnonzero(np.all(add == e[None, :], axis=1))
    if zeros.size == 0:
        raise ValidationError("additive identity")
    zero = int(zeros[0])
    ones = np.flatnonzero(np.all(mul == e[None, :], axis=1))
    if ones.size == 0:
        raise ValidationError("multiplicative identity")
    one = int(ones[0])
    if zero == one:
        raise ValidationError("nontrivial ring (zero != one)", (zero,))

    no_inverse = np.flatnonzero(~np.any(add == zero, axis=1))
    if no_inverse.size:
        raise ValidationError("additive inverse", (int(no_inverse[0]),))

    for a in range(n):
        for name, t in (("addition", add), ("multiplication", mul)):
            # (a.b).c against a.(b.c) over all b, c
            bad = np.argwhere(t[t[a]] != t[a][t])
            if bad.size:
                b, c = bad[0]
                raise ValidationError(f"{name} associativity", (a, int(b), int(c)))
        row = mul[a]
        bad = np.argwhere(row[add] != add[row[:, None], row[None, :]])
        if bad.size:
            b, c = bad[0]
            raise ValidationError("distributivity", (a, int(b), int(c)))
    return zero, one


# ---------------------------------------------------------------------------
# constructors


def make_zn(n: int) -> FiniteRing:
    """The integers modulo ``n``."""
    if n < 2:
        raise InvalidOrderError(f"Z_n needs n >= 2, got {n}")
    return FiniteRing(
        n,
        lambda x, y: (x + y) % n,
        lambda x, y: (x * y) % n,
        lambda x: (-x) % n,
        label=f"Z_{n}",
    )


def _product_label(factors: Sequence[FiniteRing]) -> str:
    labels = [f.label for f in factors]
    if len(set(labels)) == 1 and labels[0].replace("_", "").isalnum():
        return f"{labels[0]}^{len(labels)}"
    return " x ".join(f"({lab})" if " x " in lab else lab for lab in labels)


def make_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Componentwise product ring.

    Element encoding is mixed radix with the first factor least significant,
    with indices 1 and the natural position of ``(1, ..., 1)`` swapped so
    that one sits at index 1.
    """
    factors = list(factors)
    if len(factors) < 2:
        raise ArityError("a product needs at least two factors")
    orders = [f.order for f in factors]
    weights = [math.prod(orders[:i]) for i in range(len(orders))]
    order = math.prod(orders)
    nat_one = sum(w * f.one_ix for w, f in zip(weights, factors))

    def swap(v):
        return np.where(v == 1, nat_one, np.where(v == nat_one, 1, v))

    def decode(v):
        nat = swap(np.asarray(v, dtype=np.int64))
        return [(nat // w) % o for w, o in zip(weights, orders)]

    def encode(comps):
        nat = sum(np.asarray(c, dtype=np.int64) * w for c, w in zip(comps, weights))
        return swap(nat)

    def binop(name):
        def op(x, y):
            cx, cy = decode(x), decode(y)
            return encode([getattr(f, name)(a, b) for f, a, b in zip(factors, cx, cy)])

        return op

    def neg(x):
        return encode([f._neg_v(a) for f, a in zip(factors, decode(x))])

    def render(x):
        comps = decode(x)
        return "(" + ",".join(f.render(int(c)) for f, c in zip(factors, comps)) + ")"

    ring = FiniteRing(
        order, binop("vadd"), binop("vmul"), neg, label=_product_label(factors), render=render
    )
    ring.factors = tuple(factors)
    ring.components = lambda x: tuple(int(c) for c in decode(x))
    ring.from_components = lambda comps: int(encode(comps))
    return ring


def _poly_str(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


def _digits(v, base: int, count: int) -> list[np.ndarray]:
    v = np.asarray(v, dtype=np.int64)
    return [(v // base**i) % base for i in range(count)]


def _undigits(ds, base: int) -> np.ndarray:
    return sum(np.asarray(d, dtype=np.int64) * base**i for i, d in enumerate(ds))


def _require_prime(p: int) -> None:
    if p < 2 or not isprime(p):
        raise BaseRingError(f"base characteristic must be prime, got {p}")


def make_quotient_poly(p: int, modulus: Sequence[int]) -> FiniteRing:
    """``F_p[x]/(modulus)``; ``modulus`` is monic, coefficients low to high."""
    _require_prime(p)
    mod = [int(c) % p for c in modulus]
    d = len(mod) - 1
    if d < 1:
        raise ModulusError("modulus must have degree at least 1")
    if mod[-1] != 1:
        raise ModulusError(f"modulus must be monic, leading coefficient is {modulus[-1]}")
    low = mod[:d]

    def add(x, y):
        return _undigits([(a + b) % p for a, b in zip(_digits(x, p, d), _digits(y, p, d))], p)

    def mul(x, y):
        a, b = _digits(x, p, d), _digits(y, p, d)
        prod = [0] * (2 * d - 1)
        for i in range(d):
            for j in range(d):
                prod[i + j] = prod[i + j] + a[i] * b[j]
        # x^d == -(low part of the modulus)
        for k in range(2 * d - 2, d - 1, -1):
            t = prod[k] % p
            for i, m in enumerate(low):
                if m:
                    prod[k - d + i] = prod[k - d + i] - t * m
        return _undigits([c % p for c in prod[:d]], p)

    def neg(x):
        return _undigits([(-a) % p for a in _digits(x, p, d)], p)

    def render(x):
        return _poly_str([int(c) for c in _digits(x, p, d)], "x")

    label = f"F_{p}[x]/({_poly_str(mod, 'x')})"
    ring = FiniteRing(p**d, add, mul, neg, label=label, render=render)
    ring.modulus = tuple(mod)
    return ring


def make_bivariate_x2_xy(p: int, ydeg: int = 3) -> FiniteRing:
    """``F_p[X,Y]/(X^2, XY, Y^ydeg)`` with basis ``1, X, Y, ..., Y^(ydeg-1)``."""
    _require_prime(p)
    if ydeg < 2:
        raise ModulusError(f"Y truncation degree must be at least 2, got {ydeg}")
    m = ydeg
    width = m + 1  # digits: [1, X, Y, ..., Y^(m-1)]

    def split(v):
        ds = _digits(v, p, width)
        return ds[1], [ds[0]] + ds[2:]  # X coefficient, polynomial in Y

    def join(xc, h):
        return _undigits([h[0], xc] + list(h[1:]), p)

    def add(x, y):
        return _undigits([(a + b) % p for a, b in zip(_digits(x, p, width), _digits(y, p, width))], p)

    def mul(x, y):
        xa, ha = split(x)
        xb, hb = split(y)
        h = [0] * m
        for i in range(m):
            for j in range(m - i):
                h[i + j] = h[i + j] + ha[i] * hb[j]
        xc = (xa * hb[0] + xb * ha[0]) % p
        return join(xc, [c % p for c in h])

    def neg(x):
        return _undigits([(-a) % p for a in _digits(x, p, width)], p)

    def render(x):
        ds = [int(c) for c in _digits(x, p, width)]
        terms = []
        for c, mono in zip(ds, ["", "X", "Y"] + [f"Y^{k}" for k in range(2, m)]):
            if c == 0:
                continue
            terms.append(str(c) if not mono else mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    ring = FiniteRing(
        p**width, add, mul, neg, label=f"F_{p}[X,Y]/(X^2,XY,Y^{m})", render=render
    )
    ring.basis = ("1", "X") + tuple("Y" if k == 1 else f"Y^{k}" for k in range(1, m))
    return ring


def make_from_tables(add, mul, *, label: str | None = None) -> FiniteRing:
    """Ingest a ring from explicit operation tables after exhaustive validation.

    Elements are re-indexed so zero is 0 and one is 1; labels keep the
    caller's original indices.
    """
    try:
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"tables must be integer matrices ({exc})") from None
    if add.ndim != 2 or add.shape[0] != add.shape[1]:
        raise ValidationError("addition table must be square")
    if mul.shape != add.shape:
        raise ValidationError("tables must have the same shape")
    n = add.shape[0]
    if n < 2:
        raise InvalidOrderError(f"ring order must be at least 2, got {n}")
    if n > TABLE_LIMIT:
        raise InvalidOrderError(f"table-backed rings are capped at order {TABLE_LIMIT}")
    for name, t in (("addition", add), ("multiplication", mul)):
        bad = np.argwhere((t < 0) | (t >= n))
        if bad.size:
            a, b = bad[0]
            raise ValidationError(f"{name} closure", (int(a), int(b)))

    zero, one = check_axioms(add, mul)
    perm = [zero, one] + [i for i in range(n) if i not in (zero, one)]  # new -> old
    inv = np.empty(n, dtype=np.int64)
    inv[perm] = np.arange(n)
    p = np.asarray(perm)
    add_t = inv[add[np.ix_(p, p)]]
    mul_t = inv[mul[np.ix_(p, p)]]
    neg_t = np.argmax(add_t == 0, axis=1)
    names = [str(i) for i in perm]

    ring = FiniteRing(
        n,
        lambda x, y: add_t[x, y],
        lambda x, y: mul_t[x, y],
        lambda x: neg_t[x],
        label=label or f"table(n={n})",
        render=lambda x: names[x],
    )
    ring.original_index = tuple(perm)
    return ring


# ---------------------------------------------------------------------------
# element-level computations


def elem_ops(ring: FiniteRing, x: int, y: int) -> ElemOps:
    x, y = ring.check_index(x), ring.check_index(y)
    return ElemOps(ring.add(x, y), ring.mul(x, y), ring.neg(x), x == y)


def _nonzero(ring: FiniteRing) -> np.ndarray:
    e = ring.elements()
    return e[e != ring.zero_ix]


def _row_scan(ring: FiniteRing, cols: np.ndarray, reduce: Callable, block: int = 512) -> np.ndarray:
    """Apply ``reduce`` to ``mul_matrix(rows, cols)`` in row blocks."""
    out = np.empty(ring.order, dtype=bool)
    for start in range(0, ring.order, block):
        rows = np.arange(start, min(start + block, ring.order))
        out[rows] = reduce(ring.mul_matrix(rows, cols))
    return out


def units_mask(ring: FiniteRing) -> np.ndarray:
    return _row_scan(ring, ring.elements(), lambda m: np.any(m == ring.one_ix, axis=1))


def zero_divisor_mask(ring: FiniteRing) -> np.ndarray:
    """Mask of Z(R)*: nonzero x with xy = 0 for some nonzero y."""
    mask = _row_scan(ring, _nonzero(ring), lambda m: np.any(m == ring.zero_ix, axis=1))
    mask[ring.zero_ix] = False
    return mask


def units(ring: FiniteRing) -> ElemSet:
    return ElemSet.from_mask(ring, units_mask(ring), "units")


def zero_divisors(ring: FiniteRing) -> ElemSet:
    """Nonzero zero-divisors, in index order."""
    return ElemSet.from_mask(ring, zero_divisor_mask(ring), "zero_divisors")


def annihilator(ring: FiniteRing, generators: ElemSet | Iterable[int]) -> ElemSet:
    gens = np.asarray([ring.check_index(g) for g in generators], dtype=np.int64)
    if gens.size == 0:
        # the empty set is killed by everything
        return ElemSet(ring, tuple(range(ring.order)), "annihilator")
    mask = _row_scan(ring, gens, lambda m: np.all(m == ring.zero_ix, axis=1))
    return ElemSet.from_mask(ring, mask, "annihilator")


def annihilator_masks(ring: FiniteRing, xs) -> np.ndarray:
    """Row ``i`` is the annihilator mask of ``xs[i]``."""
    return ring.mul_matrix(xs, ring.elements()) == ring.zero_ix


def nilpotent_mask(ring: FiniteRing) -> np.ndarray:
    power = ring.elements()
    # x^(2^k) with 2^k >= order vanishes exactly for nilpotent x
    for _ in range(max(1, math.ceil(math.log2(ring.order))) + 1):
        power = ring.vmul(power, power)
    return power == ring.zero_ix


def nilradical(ring: FiniteRing) -> ElemSet:
    return ElemSet.from_mask(ring, nilpotent_mask(ring), "nilradical")


def idempotents(ring: FiniteRing) -> ElemSet:
    e = ring.elements()
    return ElemSet.from_mask(ring, ring.vmul(e, e) == e, "idempotents")
