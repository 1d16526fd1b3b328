"""Closed-form diameter predictors for Γ(R) and Γ(R[X]) and the BFS cross-check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from sympy import factorint

from .errors import NotApplicableError, RingError
from .finring import FiniteRing, zero_divisors
from .polyring import Poly, RxDistance, gamma_rx_path, iter_zd_polys
from .structure import (
    StructureReport,
    embeds_two_domains,
    find_zero_ann_pair,
    is_boolean,
    is_domain,
    is_reduced,
    is_z2_squared,
    local_factor_count,
    structure_report,
    z_is_ideal,
    z_square_zero,
)
from .zdgraph import GAMMA, GAMMA_TILDE, ZERO_SUM_ADJACENT, build_graph, diameter, is_complete


def _require_zero_divisors(ring: FiniteRing) -> None:
    if is_domain(ring):
        raise NotApplicableError(f"{ring.label} has no zero-divisors")


def predict_diam_gamma_branch(ring: FiniteRing) -> tuple[int, str]:
    """Predicted diam Γ(R) from ring predicates, with the name of the case that fired."""
    _require_zero_divisors(ring)
    if len(zero_divisors(ring)) == 1:
        return 0, "single-zero-divisor"
    if is_z2_squared(ring):
        return 1, "z2-squared"
    if z_square_zero(ring):
        return 1, "z-square-zero"
    ideal, _ = z_is_ideal(ring)
    if ideal:
        if find_zero_ann_pair(ring) is None:
            return 2, "ideal-common-annihilators"
        return 3, "ideal-zero-annihilator-pair"
    if is_boolean(ring):
        return 3, "boolean"
    if embeds_two_domains(ring):
        return 2, "two-domains"
    return 3, "non-ideal"


def predict_diam_gamma(ring: FiniteRing) -> int:
    return predict_diam_gamma_branch(ring)[0]


def _is_two_fields(ring: FiniteRing) -> bool:
    return is_reduced(ring) and local_factor_count(ring) == 2


def predict_diam_gamma_finite(ring: FiniteRing) -> int:
    """Prediction phrased through locality and the square of the maximal ideal."""
    _require_zero_divisors(ring)
    if len(zero_divisors(ring)) == 1:
        return 0
    local = local_factor_count(ring) == 1
    m_square_zero = local and z_square_zero(ring)
    if is_z2_squared(ring) or m_square_zero:
        return 1
    if _is_two_fields(ring) or local:
        return 2
    return 3


def _zn_shape(n: int) -> dict[int, int]:
    if n <= 1:
        raise NotApplicableError(f"n must exceed 1, got {n}")
    fac = factorint(n)
    if sum(fac.values()) == 1:
        raise NotApplicableError(f"{n} is prime; Z_{n} is a field")
    return fac


def predict_diam_gamma_zn(n: int) -> int:
    fac = _zn_shape(n)
    if n == 4:
        return 0
    if len(fac) == 1:
        ((p, k),) = fac.items()
        return 1 if k == 2 else 2
    if len(fac) == 2 and all(k == 1 for k in fac.values()):
        return 2
    return 3


def predict_diam_gamma_rx_zn(n: int) -> int:
    fac = _zn_shape(n)
    if len(fac) == 1:
        ((_, k),) = fac.items()
        return 1 if k == 2 else 2
    if len(fac) == 2 and all(k == 1 for k in fac.values()):
        return 2
    return 3


def predict_diam_gamma_rx(ring: FiniteRing) -> int:
    """Predicted diam Γ(R[X]); never 0 since R[X] has infinitely many zero-divisors."""
    _require_zero_divisors(ring)
    if local_factor_count(ring) == 1:
        return 1 if z_square_zero(ring) else 2
    return 2 if _is_two_fields(ring) else 3


@dataclass
class CrossCheckOptions:
    compute: bool = True
    rx_witness: bool = True
    rx_max_deg: int = 1
    rx_budget: int = 400


@dataclass
class DiamReport:
    ring_label: str
    predicted_gamma: int
    branch: str
    predicted_gamma_finite: int
    computed_gamma: Optional[int]
    computed_gamma_tilde: Optional[int]
    predicted_gamma_rx: int
    rx_witness: Optional[RxDistance]
    gamma_tilde_complete: Optional[bool]
    tilde_implication_holds: Optional[bool]
    predicates: StructureReport
    agreement: bool
    coherent: bool
    zero_sum_adjacent: bool = ZERO_SUM_ADJACENT
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agreement and self.coherent and self.tilde_implication_holds is not False

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d["predicates"] = self.predicates.to_dict()
        d["rx_witness"] = None if self.rx_witness is None else self.rx_witness.to_dict()
        d["ok"] = self.ok
        return d


def find_rx_witness(
    ring: FiniteRing, target: int, max_deg: int = 1, budget: int = 400
) -> Optional[RxDistance]:
    """First pair of sampled zero-divisor polynomials at Γ(R[X]) distance ``target``."""
    seen: list[Poly] = []
    for g in iter_zd_polys(ring, max_deg):
        for f in seen:
            res = gamma_rx_path(f, g)
            if res.distance == target:
                return res
        seen.append(g)
        if len(seen) >= budget:
            break
    return None


def cross_check(ring: FiniteRing, options: CrossCheckOptions | None = None) -> DiamReport:
    opts = options or CrossCheckOptions()
    try:
        return _cross_check(ring, opts)
    except RingError as exc:
        if str(exc).startswith(ring.label):
            raise
        raise type(exc)(f"{ring.label}: {exc}") from exc


def _cross_check(ring: FiniteRing, opts: CrossCheckOptions) -> DiamReport:
    predicted, branch = predict_diam_gamma_branch(ring)
    finite = predict_diam_gamma_finite(ring)
    rx = predict_diam_gamma_rx(ring)
    notes = []
    computed = computed_tilde = complete = implication = None
    if opts.compute:
        computed = diameter(build_graph(ring, GAMMA))
        tilde = build_graph(ring, GAMMA_TILDE)
        complete = is_complete(tilde)
        computed_tilde = diameter(tilde)
        implication = complete or (computed == 3 and computed_tilde == 2)
    witness = None
    if opts.rx_witness and rx == 3:
        witness = find_rx_witness(ring, 3, opts.rx_max_deg, opts.rx_budget)
        if witness is None:
            notes.append("no distance-3 polynomial pair found within budget")
    if finite != predicted:
        notes.append(f"finite predictor gives {finite}, general gives {predicted}")
    return DiamReport(
        ring_label=ring.label,
        predicted_gamma=predicted,
        branch=branch,
        predicted_gamma_finite=finite,
        computed_gamma=computed,
        computed_gamma_tilde=computed_tilde,
        predicted_gamma_rx=rx,
        rx_witness=witness,
        gamma_tilde_complete=complete,
        tilde_implication_holds=implication,
        predicates=structure_report(ring),
        agreement=computed is None or computed == predicted,
        coherent=finite == predicted,
        notes=notes,
    )
