import pytest

from zdiam.errors import BudgetError, ConsistencyError
from zdiam.finring import FiniteRing, make_bivariate_x2_xy, make_product, make_quotient_poly, make_zn
from zdiam.invariants import structure_checks
from zdiam.ringspec import build_ring
from zdiam.structure import (
    embeds_two_domains,
    find_zero_ann_pair,
    is_boolean,
    is_domain,
    is_local,
    is_reduced,
    is_z2_squared,
    local_factor_count,
    mccoy_check,
    structure_report,
    z_is_ideal,
    z_square_zero,
)

import oracles


def bool_ring(k):
    return build_ring(f"bool:{k}")


def test_reduced():
    assert is_reduced(make_zn(6))
    assert not is_reduced(make_zn(12))
    assert is_reduced(bool_ring(3))


def test_boolean():
    assert is_boolean(bool_ring(2))
    assert not is_boolean(make_zn(4))
    assert is_boolean(bool_ring(4))
    assert not is_boolean(make_zn(6))


def test_z_is_ideal():
    assert z_is_ideal(make_zn(12)) == (False, (2, 3))
    assert z_is_ideal(make_zn(9)) == (True, None)
    assert z_is_ideal(make_quotient_poly(3, [0, 0, 1])) == (True, None)


def test_z_is_ideal_witness_escapes_z(corpus):
    for name, R in corpus:
        ok, w = z_is_ideal(R)
        _, zd, _, _ = oracles.ring_scan(R)
        zset = set(zd) | {R.zero_ix}
        closed = all(R.add(x, y) in zset for x in zd for y in zd)
        assert ok == closed, name
        if not ok:
            x, y = w
            assert x in zd and y in zd and R.add(x, y) not in zset


def test_z_square_zero():
    assert z_square_zero(make_quotient_poly(3, [0, 0, 1]))
    assert not z_square_zero(make_bivariate_x2_xy(3))
    assert not z_square_zero(make_zn(8))
    assert z_square_zero(make_zn(25))


def test_local_factor_count():
    assert local_factor_count(make_zn(12)) == 2
    assert local_factor_count(make_zn(9)) == 1
    assert local_factor_count(bool_ring(3)) == 3
    assert local_factor_count(make_zn(30)) == 3
    assert is_local(make_zn(27)) and not is_local(make_zn(6))


def test_local_factor_count_inconsistent_ring():
    # a three-element "ring" whose multiplication is x*y = x has 3 idempotents
    import numpy as np

    bogus = FiniteRing(
        3,
        lambda a, b: (np.asarray(a) + np.asarray(b)) % 3,
        lambda a, b: np.where(np.asarray(b) == 0, 0, np.asarray(a)) + 0 * np.asarray(b),
        lambda a: (-np.asarray(a)) % 3,
        label="bogus",
    )
    with pytest.raises(ConsistencyError):
        local_factor_count(bogus)


def test_embeds_two_domains():
    assert embeds_two_domains(make_zn(6))
    assert not embeds_two_domains(bool_ring(3))
    assert not embeds_two_domains(make_zn(12))
    assert embeds_two_domains(make_zn(5))


def test_z2_squared_recognition():
    assert is_z2_squared(bool_ring(2))
    assert is_z2_squared(build_ring({"kind": "table", "add": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
                                     "mul": [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 2, 0], [0, 3, 0, 3]]}))
    assert not is_z2_squared(make_zn(4))
    assert not is_z2_squared(make_quotient_poly(2, [1, 1, 1]))
    assert not is_z2_squared(bool_ring(3))


def test_zero_ann_pair_examples():
    assert find_zero_ann_pair(make_zn(12)) == (2, 3)
    assert find_zero_ann_pair(make_zn(9)) is None
    B = bool_ring(3)
    x, y = find_zero_ann_pair(B)
    assert (B.render(x), B.render(y)) == ("(1,1,0)", "(1,0,1)")


def test_zero_ann_pair_matches_oracle(corpus):
    for name, R in corpus:
        assert find_zero_ann_pair(R) == oracles.first_zero_ann_pair(R), name


def test_zero_ann_pair_unrestricted():
    # without the nonzero-product filter Z_2^2 yields its orthogonal pair
    V = bool_ring(2)
    assert find_zero_ann_pair(V) is None
    x, y = find_zero_ann_pair(V, require_nonzero_product=False)
    assert V.mul(x, y) == 0


def test_mccoy_examples():
    assert mccoy_check(make_zn(12), 2)
    assert mccoy_check(make_zn(9), 2)
    assert mccoy_check(make_zn(7), 1)
    with pytest.raises(ValueError):
        mccoy_check(make_zn(12), 0)


def test_mccoy_budget():
    with pytest.raises(BudgetError) as info:
        mccoy_check(bool_ring(4), 3, budget=5)
    assert info.value.coverage["verified_to"] == 1


def test_structure_report_examples():
    r = structure_report(bool_ring(2))
    assert (r.reduced, r.boolean_ring, r.z_is_ideal, r.local_factor_count, r.embeds_two_domains) == (
        True, True, False, 2, True)
    assert r.zero_ann_pair is None and r.min_prime_count == 2
    r = structure_report(make_zn(4))
    assert (r.reduced, r.boolean_ring, r.z_is_ideal, r.z_square_zero, r.local_factor_count) == (
        False, False, True, True, 1)
    assert r.min_prime_count is None
    r = structure_report(make_zn(12))
    assert not r.reduced and not r.z_is_ideal and r.zero_ann_pair == (2, 3)
    assert r.mccoy_verified_to == 3
    d = r.to_dict()
    assert d["zero_ann_pair"] == [2, 3] and d["z_ideal_witness"] == [2, 3]


def test_is_domain():
    assert is_domain(make_zn(7))
    assert is_domain(make_quotient_poly(3, [1, 0, 1]))
    assert not is_domain(make_product([make_zn(2), make_zn(3)]))


def test_structure_suite_on_corpus(corpus):
    for name, R in corpus:
        bad = [c for c in structure_checks(R) if not c.ok]
        assert not bad, (name, bad)
