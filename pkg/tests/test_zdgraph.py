import itertools
import math
from dataclasses import replace

import numpy as np
import pytest

from zdiam.errors import EmptyGraphError, VertexError
from zdiam.finring import ElemSet, make_bivariate_x2_xy, make_product, make_zn
from zdiam.invariants import zdgraph_checks
from zdiam.ringspec import build_ring
from zdiam.structure import embeds_two_domains, is_boolean, z_is_ideal
from zdiam.zdgraph import (
    GAMMA,
    GAMMA_TILDE,
    build_graph,
    diameter,
    distance,
    distance_matrix,
    eccentricities,
    export_dot,
    is_complete,
)

import oracles


def test_build_gamma_z6():
    g = build_graph(make_zn(6))
    assert g.vertices.members == (2, 3, 4)
    assert g.edges() == [(2, 3), (3, 4)]


def test_build_gamma_z2_squared():
    V = build_ring("bool:2")
    g = build_graph(V)
    (u, v), = g.edges()
    assert {V.render(u), V.render(v)} == {"(1,0)", "(0,1)"}


def test_build_tilde_z12():
    g = build_graph(make_zn(12), GAMMA_TILDE)
    assert (2, 3) not in g.edge_set()
    assert (2, 10) in g.edge_set()  # 2 + 10 = 0 counts as adjacent


def test_build_errors():
    with pytest.raises(EmptyGraphError):
        build_graph(make_zn(7))
    with pytest.raises(ValueError):
        build_graph(make_zn(6), "bogus")


def test_distance_examples():
    g6 = build_graph(make_zn(6))
    assert distance(g6, 2, 4) == 2
    assert distance(g6, 3, 3) == 0
    assert distance(build_graph(make_zn(12)), 2, 3) == 3
    with pytest.raises(VertexError):
        distance(g6, 1, 2)


def test_diameter_examples():
    assert diameter(build_graph(make_zn(4))) == 0
    assert diameter(build_graph(make_zn(9))) == 1
    assert diameter(build_graph(make_zn(8))) == 2
    assert diameter(build_graph(make_zn(12))) == 3


def test_disconnected_distance_is_infinite():
    # restrict Γ(Z_6) to the two non-adjacent vertices 2 and 4
    g = build_graph(make_zn(6))
    sub = replace(g, vertices=ElemSet(g.ring, (2, 4), "custom"), adjacency=np.zeros((2, 2), dtype=bool))
    assert distance(sub, 2, 4) == math.inf
    assert eccentricities(sub) == [math.inf, math.inf]
    assert diameter(sub) == math.inf


def test_is_complete_examples():
    assert is_complete(build_graph(build_ring("bool:2")))
    assert not is_complete(build_graph(make_zn(12), GAMMA_TILDE))
    assert is_complete(build_graph(make_zn(9), GAMMA_TILDE))


def test_export_dot_z6():
    assert export_dot(build_graph(make_zn(6))) == (
        'graph "Gamma(Z_6)" {\n'
        '  n2 [label="2"];\n'
        '  n3 [label="3"];\n'
        '  n4 [label="4"];\n'
        "  n2 -- n3;\n"
        "  n3 -- n4;\n"
        "}\n"
    )


def test_export_dot_nodes_only():
    assert export_dot(build_graph(make_zn(4))) == 'graph "Gamma(Z_4)" {\n  n2 [label="2"];\n}\n'


def test_tilde_contains_gamma_z6():
    R = make_zn(6)
    assert build_graph(R).edge_set() <= build_graph(R, GAMMA_TILDE).edge_set()


def test_edges_match_oracle(corpus):
    for name, R in corpus:
        for tilde, variant in ((False, GAMMA), (True, GAMMA_TILDE)):
            if not oracles.ring_scan(R)[1]:
                continue
            _, edges = oracles.graph_edges(R, tilde)
            assert build_graph(R, variant).edge_set() == edges, (name, variant)


def test_distances_match_floyd_warshall(corpus):
    for name, R in corpus:
        if R.order > 100:
            continue
        for tilde, variant in ((False, GAMMA), (True, GAMMA_TILDE)):
            verts, edges = oracles.graph_edges(R, tilde)
            if not verts:
                continue
            diam, d = oracles.floyd_warshall_diameter(verts, edges)
            g = build_graph(R, variant)
            assert diameter(g) == diam, (name, variant)
            dm = distance_matrix(g)
            assert np.array_equal(np.where(dm < 0, np.inf, dm), d), (name, variant)
            for i, j in itertools.islice(itertools.combinations(range(len(verts)), 2), 50):
                assert distance(g, verts[i], verts[j]) == d[i, j]


def test_completeness_criterion(corpus):
    for name, R in corpus:
        if len(oracles.ring_scan(R)[1]) < 2:
            continue
        expected = z_is_ideal(R)[0] or is_boolean(R) or embeds_two_domains(R)
        assert is_complete(build_graph(R, GAMMA_TILDE)) == expected, name


def test_large_graph_diameter():
    assert diameter(build_graph(make_product([make_zn(3), make_zn(5), make_zn(7)]))) == 3
    R = make_bivariate_x2_xy(5)
    assert diameter(build_graph(R)) == 2


def test_zdgraph_suite_on_corpus(corpus):
    for name, R in corpus:
        bad = [c for c in zdgraph_checks(R) if not c.ok]
        assert not bad, (name, bad)
