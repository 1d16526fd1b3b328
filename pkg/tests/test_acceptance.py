"""The eight acceptance criteria, each at its stated tolerance.

Every test records a PASS/FAIL line that the terminal summary prints after the
run, whether or not the assertion below it holds.
"""

import itertools
import subprocess
import sys
import time

from sympy import isprime

from zdiam.classify import predict_diam_gamma, predict_diam_gamma_zn
from zdiam.finring import make_zn
from zdiam.invariants import rx_evidence, structure_checks
from zdiam.polyring import Poly, is_zd_poly, products_vanish, sample_zd_polys
from zdiam.structure import is_domain, z_square_zero
from zdiam.zdgraph import GAMMA_TILDE, build_graph, diameter, is_complete

import oracles

REQUIRED_LABELS = {
    "Z_2^2", "Z_2^3", "Z_2^4",
    "F_2[x]/(x^2)", "F_3[x]/(x^2)", "F_3[x]/(x^3)", "F_5[x]/(x^2)",
    "Z_4 x Z_3",
}


def _non_domains(corpus):
    return [(name, R) for name, R in corpus if not is_domain(R)]


def test_c1_zn_sweep(record_acceptance):
    start = time.perf_counter()
    bad = []
    ns = [n for n in range(4, 301) if not isprime(n)]
    for n in ns:
        R = make_zn(n)
        bfs = diameter(build_graph(R))
        if not (bfs == predict_diam_gamma_zn(n) == predict_diam_gamma(R)):
            bad.append(n)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record_acceptance("1 Z_n sweep 4..300", ok, f"{len(ns)} composites, mismatches {bad}, {elapsed:.1f}s (< 60s)")
    assert ok


def test_c2_corpus_oracle_equivalence(corpus, record_acceptance):
    labels = {R.label for _, R in corpus}
    shape_ok = len(corpus) >= 25 and REQUIRED_LABELS <= labels
    shape_ok &= any(R.order == 81 and "Y^3" in R.label for _, R in corpus)
    bad = [name for name, R in _non_domains(corpus) if predict_diam_gamma(R) != diameter(build_graph(R))]
    ok = shape_ok and not bad
    record_acceptance("2 corpus oracle equivalence", ok, f"{len(corpus)} rings, mismatches {bad}")
    assert ok


def test_c3_tilde_incomplete(corpus, record_acceptance):
    bad, incomplete = [], 0
    for name, R in _non_domains(corpus):
        tilde = build_graph(R, GAMMA_TILDE)
        if not is_complete(tilde):
            incomplete += 1
            if diameter(build_graph(R)) != 3 or diameter(tilde) != 2:
                bad.append(name)
    ok = not bad and incomplete > 0
    record_acceptance("3 incomplete tilde graph", ok, f"{incomplete} incomplete, violations {bad}")
    assert ok


def test_c4_structure_implications(corpus, record_acceptance):
    wanted = (
        "structure.square-zero-implies-ideal",
        "structure.ideal-nonsquare-has-pair",
        "structure.zero-ann-pair-shape",
        "structure.zero-ann-pair-not-square-zero",
    )
    bad, seen = [], set()
    for name, R in corpus:
        for c in structure_checks(R):
            seen.add(c.name)
            if not c.ok:
                bad.append((name, c.name, c.detail))
    covered = set(wanted) <= seen
    ok = not bad and covered
    record_acceptance("4 structure implications", ok, f"{len(seen)} checks per ring, failures {bad}")
    assert ok


def test_c5_rx_classification(corpus, record_acceptance):
    start = time.perf_counter()
    bad = []
    for name, R in _non_domains(corpus):
        good, detail = rx_evidence(R)
        if not good:
            bad.append((name, detail))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record_acceptance("5 Gamma(R[X]) evidence", ok, f"failures {bad}, {elapsed:.1f}s (< 120s)")
    assert ok


def test_c6_mccoy_oracle(corpus, record_acceptance):
    rings = [R for _, R in corpus if R.order <= 16] + [make_zn(n) for n in range(2, 17)]
    mismatches, checked = [], 0
    for R in rings:
        for coeffs in itertools.product(range(R.order), repeat=3):
            f = Poly(R, coeffs)
            if f.is_zero():
                continue
            checked += 1
            found = oracles.annihilating_cofactor(R, f.coeffs, 2 * R.order)
            if (is_zd_poly(f) is not None) != (found is not None):
                mismatches.append((R.label, f.coeffs))
    ok = not mismatches
    record_acceptance("6 McCoy oracle", ok, f"{len(rings)} rings, {checked} polynomials, mismatches {len(mismatches)}")
    assert ok, mismatches[:10]


def test_c7_square_zero_lifts(corpus, record_acceptance):
    bad = []
    for name, R in _non_domains(corpus):
        if z_square_zero(R):
            polys = sample_zd_polys(R, 2)
            holds = bool(products_vanish(polys, polys).all())
        else:
            polys = sample_zd_polys(R, 2, 2000)
            holds = not bool(products_vanish(polys, polys).all())
        if not holds:
            bad.append(name)
    ok = not bad
    record_acceptance("7 square-zero lifts to R[X]", ok, f"violations {bad}")
    assert ok


def test_c8_sweep_determinism(record_acceptance):
    cmd = [sys.executable, "-m", "zdiam", "sweep", "--max-n", "100"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = first == second and len(first) > 0
    record_acceptance("8 sweep determinism", ok, f"{len(first)} bytes, identical={first == second}")
    assert ok
