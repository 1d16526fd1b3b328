"""Executable properties checked over a ring, grouped by the module they exercise.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
property, so callers can report every failure in one pass.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .classify import (
    find_rx_witness,
    predict_diam_gamma,
    predict_diam_gamma_finite,
    predict_diam_gamma_rx,
)
from .errors import RingError
from .finring import (
    FiniteRing,
    annihilator,
    annihilator_masks,
    idempotents,
    nilradical,
    units,
    zero_divisors,
)
from .polyring import Poly, gamma_rx_path, products_vanish, sample_zd_polys
from .structure import (
    embeds_two_domains,
    find_zero_ann_pair,
    is_boolean,
    is_domain,
    is_z2_squared,
    local_factor_count,
    mccoy_check,
    structure_report,
    z_is_ideal,
    z_square_zero,
)
from .zdgraph import GAMMA, GAMMA_TILDE, build_graph, diameter, distance_matrix, is_complete

RX_SAMPLE_PAIRS = 200
RX_SAMPLE_POOL = 2000
RX_SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"check": self.name, "ok": self.ok, "detail": self.detail}


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> CheckResult:
    try:
        out = fn()
    except RingError as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return CheckResult(name, bool(out[0]), out[1])
    return CheckResult(name, bool(out))


# -- finring -----------------------------------------------------------------


def _axioms(ring):
    ring.validate()
    return True


def _partition(ring):
    u, z = set(units(ring)), set(zero_divisors(ring))
    whole = u | z | {ring.zero_ix}
    ok = not (u & z) and ring.zero_ix not in u | z and len(whole) == ring.order
    return ok, "" if ok else f"units={sorted(u)} zd={sorted(z)}"


def _annihilator_pairs(ring):
    masks = annihilator_masks(ring, ring.elements())
    for x, y in itertools.combinations_with_replacement(range(ring.order), 2):
        got = annihilator(ring, [x, y]).mask()
        if not np.array_equal(got, masks[x] & masks[y]):
            return False, f"pair ({x}, {y})"
    return True


def _nilradical_in_z(ring):
    z0 = set(zero_divisors(ring)) | {ring.zero_ix}
    extra = set(nilradical(ring)) - z0
    return not extra, f"outside Z(R): {sorted(extra)}" if extra else ""


def _idempotent_count(ring):
    n = len(idempotents(ring))
    return n & (n - 1) == 0, f"{n} idempotents"


def finring_checks(ring: FiniteRing) -> list[CheckResult]:
    return [
        _check("finring.axioms", lambda: _axioms(ring)),
        _check("finring.unit-zero-divisor-partition", lambda: _partition(ring)),
        _check("finring.annihilator-of-pair", lambda: _annihilator_pairs(ring)),
        _check("finring.nilradical-in-zero-divisors", lambda: _nilradical_in_z(ring)),
        _check("finring.idempotent-count-power-of-two", lambda: _idempotent_count(ring)),
    ]


# -- structure ---------------------------------------------------------------


def _distinct_pair_nonzero_product(ring) -> bool:
    zs = np.asarray(zero_divisors(ring).members)
    prods = ring.mul_matrix(zs, zs) != ring.zero_ix
    np.fill_diagonal(prods, False)
    return bool(prods.any())


def _square_zero_gives_ideal(ring):
    return not z_square_zero(ring) or z_is_ideal(ring)[0]


def _ideal_nonsquare_gives_pair(ring):
    if z_is_ideal(ring)[0] and not z_square_zero(ring):
        return _distinct_pair_nonzero_product(ring), "no distinct pair with xy != 0"
    return True


def _ideal_pair_shape(ring):
    if not z_is_ideal(ring)[0]:
        return True
    pair = find_zero_ann_pair(ring, require_nonzero_product=False)
    if pair is None:
        return True
    x, y = pair
    ok = x != y and ring.zero_ix not in (x, y) and ring.mul(x, y) != ring.zero_ix
    return ok, f"pair {pair}"


def _ideal_pair_not_square_zero(ring):
    if z_is_ideal(ring)[0] and find_zero_ann_pair(ring, require_nonzero_product=False):
        return not z_square_zero(ring)
    return True


def _boolean_order(ring):
    if not is_boolean(ring):
        return True
    k = local_factor_count(ring)
    return ring.order == 2**k, f"order {ring.order}, {k} factors"


def _ideal_iff_local(ring):
    return z_is_ideal(ring)[0] == (local_factor_count(ring) == 1)


def _report_consistency(ring):
    r = structure_report(ring)
    ok = (
        (not r.z_square_zero or r.z_is_ideal)
        and (not r.boolean_ring or r.reduced)
        and (not r.reduced or r.min_prime_count == r.local_factor_count)
    )
    return ok, str(r.to_dict()) if not ok else ""


def structure_checks(ring: FiniteRing) -> list[CheckResult]:
    return [
        _check("structure.square-zero-implies-ideal", lambda: _square_zero_gives_ideal(ring)),
        _check("structure.ideal-nonsquare-has-pair", lambda: _ideal_nonsquare_gives_pair(ring)),
        _check("structure.zero-ann-pair-shape", lambda: _ideal_pair_shape(ring)),
        _check("structure.zero-ann-pair-not-square-zero", lambda: _ideal_pair_not_square_zero(ring)),
        _check("structure.boolean-order", lambda: _boolean_order(ring)),
        _check("structure.ideal-iff-local", lambda: _ideal_iff_local(ring)),
        _check("structure.mccoy-up-to-3", lambda: mccoy_check(ring, 3)),
        _check("structure.report-consistency", lambda: _report_consistency(ring)),
    ]


# -- zdgraph -----------------------------------------------------------------


def _gamma_bounds(ring):
    d = distance_matrix(build_graph(ring, GAMMA))
    ok = bool(np.all((d >= 0) & (d <= 3)))
    return ok, f"distances seen {sorted(set(d.ravel().tolist()))}"


def _tilde_incomplete(ring):
    tilde = build_graph(ring, GAMMA_TILDE)
    if is_complete(tilde):
        return True
    dg, dt = diameter(build_graph(ring, GAMMA)), diameter(tilde)
    return dg == 3 and dt == 2, f"diam Γ={dg}, diam Γ̃={dt}"


def _tilde_criterion(ring):
    if len(zero_divisors(ring)) < 2:
        return True
    complete = is_complete(build_graph(ring, GAMMA_TILDE))
    predicted = z_is_ideal(ring)[0] or is_boolean(ring) or embeds_two_domains(ring)
    return complete == predicted, f"complete={complete}, criterion={predicted}"


def _tilde_contains_gamma(ring):
    g, t = build_graph(ring, GAMMA), build_graph(ring, GAMMA_TILDE)
    ok = g.edge_set() <= t.edge_set() and diameter(t) <= diameter(g)
    return ok


def zdgraph_checks(ring: FiniteRing) -> list[CheckResult]:
    if is_domain(ring):
        return []
    return [
        _check("zdgraph.distances-at-most-3", lambda: _gamma_bounds(ring)),
        _check("zdgraph.tilde-incomplete-forces-3", lambda: _tilde_incomplete(ring)),
        _check("zdgraph.tilde-completeness-criterion", lambda: _tilde_criterion(ring)),
        _check("zdgraph.gamma-inside-tilde", lambda: _tilde_contains_gamma(ring)),
    ]


# -- classify ----------------------------------------------------------------


def _coherence(ring):
    a, b = predict_diam_gamma(ring), predict_diam_gamma_finite(ring)
    return a == b, f"general={a}, finite={b}"


def _oracle(ring):
    p, c = predict_diam_gamma(ring), diameter(build_graph(ring, GAMMA))
    return p == c, f"predicted={p}, bfs={c}"


def _rx_vs_gamma(ring):
    g, rx = predict_diam_gamma(ring), predict_diam_gamma_rx(ring)
    if rx < 1:
        return False, f"rx prediction {rx}"
    if g == 0:
        expected = 1
    elif is_z2_squared(ring):
        expected = 2
    else:
        expected = g
    return rx == expected, f"gamma={g}, rx={rx}, expected rx={expected}"


def _ideal_no_pair(ring):
    if z_is_ideal(ring)[0]:
        return find_zero_ann_pair(ring) is None
    return True


def classify_checks(ring: FiniteRing) -> list[CheckResult]:
    if is_domain(ring):
        return []
    return [
        _check("classify.predictor-coherence", lambda: _coherence(ring)),
        _check("classify.oracle-equivalence", lambda: _oracle(ring)),
        _check("classify.rx-prediction-vs-gamma", lambda: _rx_vs_gamma(ring)),
        _check("classify.ideal-has-no-zero-ann-pair", lambda: _ideal_no_pair(ring)),
    ]


# -- polyring ----------------------------------------------------------------


def _zd_square_lift(ring, pool: int = RX_SAMPLE_POOL):
    if z_square_zero(ring):
        polys = sample_zd_polys(ring, 2)
        ok = bool(products_vanish(polys, polys).all())
        return ok, f"{len(polys)} polynomials of degree <= 2"
    polys = sample_zd_polys(ring, 2, pool)
    return not bool(products_vanish(polys, polys).all()), "no sampled pair with nonzero product"


def _constant_distances(ring):
    g = build_graph(ring, GAMMA)
    d = distance_matrix(g)
    vs = g.vertices.members
    for i, j in itertools.combinations(range(len(vs)), 2):
        rx = gamma_rx_path(Poly.constant(ring, vs[i]), Poly.constant(ring, vs[j])).distance
        if rx != d[i, j]:
            return False, f"constants {vs[i]}, {vs[j]}: rx={rx}, gamma={d[i, j]}"
    return True


def _common_annihilator_brute(f: Poly, g: Poly, max_deg: int) -> Poly | None:
    """Search every nonzero h of degree <= max_deg with fh = gh = 0."""
    R = f.ring
    for coeffs in itertools.product(range(R.order), repeat=max_deg + 1):
        h = Poly(R, coeffs)
        if not h.is_zero() and (f * h).is_zero() and (g * h).is_zero():
            return h
    return None


def verify_distance_certificate(res) -> bool:
    f, g = res.f, res.g
    if res.distance == 1:
        return (f * g).is_zero()
    if (f * g).is_zero():
        return False
    if res.distance == 2:
        h = res.middle
        return h is not None and not h.is_zero() and h not in (f, g) and (f * h).is_zero() and (g * h).is_zero()
    # distance 3: bounded search for a shared neighbour must fail
    max_deg = 1 if f.ring.order ** 2 <= 20000 else 0
    return _common_annihilator_brute(f, g, max_deg) is None


def rx_evidence(
    ring: FiniteRing, pairs: int = RX_SAMPLE_PAIRS, pool: int = RX_SAMPLE_POOL, seed: int = RX_SEED
) -> tuple[bool, str]:
    """Constructive evidence for the predicted diameter of Γ(R[X])."""
    predicted = predict_diam_gamma_rx(ring)
    if predicted == 1:
        polys = sample_zd_polys(ring, 2)
        ok = bool(products_vanish(polys, polys).all())
        return ok, f"predicted 1; {len(polys)} polynomials of degree <= 2 pairwise annihilate"
    if predicted == 3:
        w = find_rx_witness(ring, 3)
        if w is None:
            return False, "predicted 3; no distance-3 pair found"
        ok = verify_distance_certificate(w)
        return ok, f"predicted 3; witness {w.f} , {w.g}"
    w = find_rx_witness(ring, 2)
    if w is None or not verify_distance_certificate(w):
        return False, "predicted 2; no verified distance-2 pair"
    polys = sample_zd_polys(ring, 2, pool)
    rng = random.Random(seed)
    worst = 0
    for _ in range(pairs):
        f, g = rng.sample(polys, 2)
        res = gamma_rx_path(f, g)
        if res.distance > 2 or not verify_distance_certificate(res):
            return False, f"predicted 2; sampled pair {f} , {g} at distance {res.distance}"
        worst = max(worst, res.distance)
    return True, f"predicted 2; witness {w.f} , {w.g} via {w.middle}; {pairs} samples max {worst}"


def polyring_checks(ring: FiniteRing) -> list[CheckResult]:
    if is_domain(ring):
        return []
    return [
        _check("polyring.square-zero-lifts", lambda: _zd_square_lift(ring)),
        _check("polyring.constant-distances", lambda: _constant_distances(ring)),
        _check("polyring.rx-evidence", lambda: rx_evidence(ring)),
    ]


SUITES = (finring_checks, structure_checks, zdgraph_checks, classify_checks, polyring_checks)


def run_all(ring: FiniteRing, suites: Iterable = SUITES) -> list[CheckResult]:
    out: list[CheckResult] = []
    for suite in suites:
        out.extend(suite(ring))
    return out
