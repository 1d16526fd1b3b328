"""Polynomials over a finite ring and exact distances in Γ(R[X]).

Zero-divisor testing uses McCoy's theorem: ``f`` is a zero-divisor of
``R[X]`` exactly when one nonzero ``r`` in ``R`` kills every coefficient.

Distances between two polynomials reduce to a finite scan over ``R``.  If
``h`` kills both ``f`` and ``g`` it also kills ``F = f + X^N g`` for ``N``
larger than every degree involved, and vice versa because the coefficient
blocks of ``hF`` do not overlap.  Applying McCoy to the single polynomial
``F`` shows that ``f`` and ``g`` have a common nonzero annihilator in
``R[X]`` iff some nonzero constant kills all coefficients of both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import DegenerateInputError, NotAVertexError, RingMismatchError
from .finring import FiniteRing, annihilator_masks, zero_divisor_mask


@dataclass(frozen=True, eq=False)
class Poly:
    ring: FiniteRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [self.ring.check_index(int(x)) for x in self.coeffs]
        while c and c[-1] == self.ring.zero_ix:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def constant(cls, ring: FiniteRing, r: int) -> "Poly":
        return cls(ring, (r,))

    @classmethod
    def monomial(cls, ring: FiniteRing, r: int, k: int) -> "Poly":
        return cls(ring, (ring.zero_ix,) * k + (r,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def _check(self, other: "Poly") -> None:
        if other.ring is not self.ring:
            raise RingMismatchError(
                f"polynomials over {self.ring.label} and {other.ring.label} cannot be combined"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        R, z = self.ring, self.ring.zero_ix
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (z,) * (n - len(a))
        b = b + (z,) * (n - len(b))
        return Poly(R, tuple(R.add(x, y) for x, y in zip(a, b)))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        R = self.ring
        if self.is_zero() or other.is_zero():
            return Poly(R, ())
        out = [R.zero_ix] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == R.zero_ix:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(x, y))
        return Poly(R, tuple(out))

    def scale(self, r: int) -> "Poly":
        return Poly(self.ring, tuple(self.ring.mul(r, c) for c in self.coeffs))

    def render(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == self.ring.zero_ix:
                continue
            lab = self.ring.render(c)
            if k == 0:
                terms.append(lab)
            else:
                mono = "X" if k == 1 else f"X^{k}"
                terms.append(mono if c == self.ring.one_ix else f"{lab}*{mono}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.ring.label}, {list(self.coeffs)})"


def poly_arith(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Sum and product of ``f`` and ``g``."""
    return f + g, f * g


def _least_common_annihilator(ring: FiniteRing, coeffs: Sequence[int]) -> Optional[int]:
    cs = np.unique(np.asarray(coeffs, dtype=np.int64))
    ann = np.all(annihilator_masks(ring, cs), axis=0)
    ann[ring.zero_ix] = False
    hits = np.flatnonzero(ann)
    return int(hits[0]) if hits.size else None


def is_zd_poly(f: Poly) -> Optional[int]:
    """Least nonzero ``r`` with ``r*c = 0`` for every coefficient of ``f``, or None."""
    if f.is_zero():
        raise DegenerateInputError("the zero polynomial is not a vertex")
    return _least_common_annihilator(f.ring, f.coeffs)


def common_ann_nonzero(f: Poly, g: Poly) -> Optional[int]:
    """Least nonzero constant killing every coefficient of both ``f`` and ``g``."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("zero polynomial passed to common_ann_nonzero")
    return _least_common_annihilator(f.ring, f.coeffs + g.coeffs)


@dataclass(frozen=True)
class RxDistance:
    """A Γ(R[X]) distance with its certificate.

    ``middle`` is the shared neighbour for distance 2 and None otherwise.
    """

    f: Poly
    g: Poly
    distance: int
    middle: Optional[Poly] = None

    def to_dict(self) -> dict:
        return {
            "f": self.f.render(),
            "g": self.g.render(),
            "f_coeffs": list(self.f.coeffs),
            "g_coeffs": list(self.g.coeffs),
            "distance": self.distance,
            "middle": None if self.middle is None else self.middle.render(),
        }


def gamma_rx_path(f: Poly, g: Poly) -> RxDistance:
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("the zero polynomial is not a vertex")
    if f == g:
        raise DegenerateInputError("distance needs two distinct polynomials")
    for p in (f, g):
        if is_zd_poly(p) is None:
            raise NotAVertexError(f"{p.render()} is not a zero-divisor of R[X]")
    if (f * g).is_zero():
        return RxDistance(f, g, 1)
    r = common_ann_nonzero(f, g)
    if r is None:
        return RxDistance(f, g, 3)
    # r*X^k still kills both; pick the first shift distinct from f and g
    k = 0
    while (h := Poly.monomial(f.ring, r, k)) in (f, g):
        k += 1
    return RxDistance(f, g, 2, h)


def gamma_rx_distance(f: Poly, g: Poly) -> int:
    return gamma_rx_path(f, g).distance


def iter_zd_polys(ring: FiniteRing, max_deg: int) -> Iterator[Poly]:
    """Zero-divisor polynomials of degree <= ``max_deg`` in (degree, coefficients) order."""
    if max_deg < 0:
        raise ValueError("max_deg must be nonnegative")
    zs = np.flatnonzero(zero_divisor_mask(ring))
    if zs.size == 0:
        return
    coeff_pool = [ring.zero_ix] + [int(z) for z in zs]
    lead_pool = [int(z) for z in zs]
    # coefficients must lie in a common annihilator, hence in Z(R)
    for d in range(max_deg + 1):
        for lower in itertools.product(coeff_pool, repeat=d):
            for lead in lead_pool:
                coeffs = lower + (lead,)
                if _least_common_annihilator(ring, coeffs) is not None:
                    yield Poly(ring, coeffs)


def sample_zd_polys(ring: FiniteRing, max_deg: int, budget: Optional[int] = None) -> list[Poly]:
    """Deterministic enumeration of zero-divisor polynomials, truncated at ``budget``."""
    if budget is not None and budget < 1:
        raise ValueError("budget must be at least 1")
    return list(itertools.islice(iter_zd_polys(ring, max_deg), budget))


def _coeff_matrix(polys: Sequence[Poly], width: int) -> np.ndarray:
    out = np.zeros((len(polys), width), dtype=np.int64)
    for i, p in enumerate(polys):
        out[i, : len(p.coeffs)] = p.coeffs
    return out


def products_vanish(fs: Sequence[Poly], gs: Sequence[Poly], block: int = 512) -> np.ndarray:
    """Boolean matrix whose ``(i, j)`` entry says ``fs[i] * gs[j] == 0``."""
    if not fs or not gs:
        return np.ones((len(fs), len(gs)), dtype=bool)
    ring = fs[0].ring
    for p in itertools.chain(fs, gs):
        p._check(fs[0])
    df = max(p.degree for p in fs) + 1
    dg = max(p.degree for p in gs) + 1
    P = _coeff_matrix(fs, max(df, 1))
    Q = _coeff_matrix(gs, max(dg, 1))
    out = np.ones((len(fs), len(gs)), dtype=bool)
    for start in range(0, len(fs), block):
        rows = P[start : start + block]
        ok = np.ones((len(rows), len(gs)), dtype=bool)
        for k in range(df + dg - 1):
            acc = np.full((len(rows), len(gs)), ring.zero_ix, dtype=np.int64)
            for i in range(max(0, k - dg + 1), min(k, df - 1) + 1):
                acc = ring.vadd(acc, ring.vmul(rows[:, i][:, None], Q[:, k - i][None, :]))
            ok &= acc == ring.zero_ix
        out[start : start + block] = ok
    return out
