"""Decidable structural predicates of a finite commutative ring."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import BudgetError, ConsistencyError
from .finring import (
    FiniteRing,
    annihilator_masks,
    idempotents,
    nilpotent_mask,
    zero_divisor_mask,
)

Pair = tuple[int, int]

MCCOY_DEFAULT_GENS = 3
MCCOY_DEFAULT_BUDGET = 250_000


@dataclass
class StructureReport:
    reduced: bool
    boolean_ring: bool
    z_is_ideal: bool
    z_ideal_witness: Optional[Pair]
    z_square_zero: bool
    local_factor_count: int
    min_prime_count: Optional[int]
    embeds_two_domains: bool
    zero_ann_pair: Optional[Pair]
    mccoy_verified_to: int
    zero_divisor_count: int

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("z_ideal_witness", "zero_ann_pair"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d


def _zd0_mask(ring: FiniteRing) -> np.ndarray:
    """Mask of Z(R) including zero."""
    mask = zero_divisor_mask(ring)
    mask[ring.zero_ix] = True
    return mask


def is_reduced(ring: FiniteRing) -> bool:
    return int(nilpotent_mask(ring).sum()) == 1


def is_boolean(ring: FiniteRing) -> bool:
    e = ring.elements()
    return bool(np.all(ring.vmul(e, e) == e))


def is_domain(ring: FiniteRing) -> bool:
    return not zero_divisor_mask(ring).any()


def z_is_ideal(ring: FiniteRing) -> tuple[bool, Optional[Pair]]:
    """Whether Z(R) is an ideal, tested by additive closure only.

    r*z stays a zero-divisor for any zero-divisor z, so closure under
    addition is the whole question.  On failure returns the first pair
    ``x < y`` of nonzero zero-divisors whose sum is a non-zero-divisor.
    """
    zmask = _zd0_mask(ring)
    zs = np.flatnonzero(zmask)
    sums = ring.add_matrix(zs, zs)
    bad = ~zmask[sums]
    if not bad.any():
        return True, None
    for i, j in np.argwhere(bad):
        x, y = int(zs[i]), int(zs[j])
        if x != ring.zero_ix and y != ring.zero_ix and x < y:
            return False, (x, y)
    raise ConsistencyError(f"{ring.label}: zero-divisor sum escaped without a witness pair")


def z_square_zero(ring: FiniteRing) -> bool:
    zs = np.flatnonzero(zero_divisor_mask(ring))
    return bool(np.all(ring.mul_matrix(zs, zs) == ring.zero_ix))


def local_factor_count(ring: FiniteRing) -> int:
    """Number of local factors, read off the idempotent count."""
    count = len(idempotents(ring))
    k = count.bit_length() - 1
    if count != 1 << k:
        raise ConsistencyError(
            f"{ring.label} has {count} idempotents, not a power of two; ring is invalid"
        )
    return k


def is_local(ring: FiniteRing) -> bool:
    return local_factor_count(ring) == 1


def embeds_two_domains(ring: FiniteRing) -> bool:
    """Finite reduced rings are products of fields, so two factors at most is the test."""
    return is_reduced(ring) and local_factor_count(ring) <= 2


def is_z2_squared(ring: FiniteRing) -> bool:
    return ring.order == 4 and is_boolean(ring)


def find_zero_ann_pair(ring: FiniteRing, require_nonzero_product: bool = True) -> Optional[Pair]:
    """First pair ``x < y`` in Z(R)* with ann(x) and ann(y) meeting only in zero.

    By default the pair must also satisfy ``xy != 0``, i.e. it is a pair
    forced to distance 3 in the zero-divisor graph.  When Z(R) is an ideal
    the extra condition is automatic.
    """
    zs = np.flatnonzero(zero_divisor_mask(ring))
    if zs.size < 2:
        return None
    ann = annihilator_masks(ring, zs)
    ann[:, ring.zero_ix] = False
    common = ann.astype(np.int32) @ ann.T.astype(np.int32)
    hit = common == 0
    if require_nonzero_product:
        hit &= ring.mul_matrix(zs, zs) != ring.zero_ix
    hit &= np.triu(np.ones_like(hit), k=1).astype(bool)
    found = np.argwhere(hit)
    if found.size == 0:
        return None
    i, j = found[0]
    return int(zs[i]), int(zs[j])


def mccoy_check(
    ring: FiniteRing, max_gens: int = MCCOY_DEFAULT_GENS, budget: int = MCCOY_DEFAULT_BUDGET
) -> bool:
    """Check that every ideal inside Z(R) generated by at most ``max_gens``
    nonzero zero-divisors has a nonzero annihilator.

    Ideals are deduplicated, so generator sets producing the same ideal are
    checked once.  Raises :class:`BudgetError` once more than ``budget``
    ideal sums have been formed; its ``coverage`` holds ``verified_to``.
    """
    if max_gens < 1:
        raise ValueError("max_gens must be at least 1")
    zmask = _zd0_mask(ring)
    zs = np.flatnonzero(zero_divisor_mask(ring))
    e = ring.elements()
    nonzero = e != ring.zero_ix

    def key(mask):
        return np.packbits(mask).tobytes()

    principal = {}
    for z, ann in zip(zs, annihilator_masks(ring, zs)):
        mask = np.zeros(ring.order, dtype=bool)
        mask[ring.mul_matrix([z], e)[0]] = True
        principal.setdefault(key(mask), (mask, ann))

    def ok(mask, ann):
        return not zmask[mask].all() or bool((ann & nonzero).any())

    seen = dict(principal)
    if not all(ok(*v) for v in principal.values()):
        return False
    frontier = list(principal.values())
    gens = list(principal.values())
    spent = 0
    for level in range(2, max_gens + 1):
        new = []
        for mask, ann in frontier:
            members = np.flatnonzero(mask)
            for pmask, pann in gens:
                spent += 1
                if spent > budget:
                    raise BudgetError(
                        f"{ring.label}: McCoy scan exceeded {budget} ideal sums",
                        {"verified_to": level - 1, "ideals_checked": len(seen)},
                    )
                total = np.zeros(ring.order, dtype=bool)
                total[ring.add_matrix(members, np.flatnonzero(pmask)).ravel()] = True
                k = key(total)
                if k in seen:
                    continue
                entry = (total, ann & pann)
                seen[k] = entry
                if not ok(*entry):
                    return False
                new.append(entry)
        if not new:
            break
        frontier = new
    return True


def structure_report(ring: FiniteRing, mccoy_gens: int = MCCOY_DEFAULT_GENS) -> StructureReport:
    reduced = is_reduced(ring)
    ideal, witness = z_is_ideal(ring)
    factors = local_factor_count(ring)
    try:
        verified = mccoy_gens if mccoy_check(ring, mccoy_gens) else 0
    except BudgetError as exc:
        verified = exc.coverage.get("verified_to", 0)
    return StructureReport(
        reduced=reduced,
        boolean_ring=is_boolean(ring),
        z_is_ideal=ideal,
        z_ideal_witness=witness,
        z_square_zero=z_square_zero(ring),
        local_factor_count=factors,
        min_prime_count=factors if reduced else None,
        embeds_two_domains=reduced and factors <= 2,
        zero_ann_pair=find_zero_ann_pair(ring),
        mccoy_verified_to=verified,
        zero_divisor_count=int(zero_divisor_mask(ring).sum()),
    )
