import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from octachain import closed_forms as cf
from octachain import graph_gen as gg
from octachain import laplacian as lap
from octachain import oracles as orc

F = Fraction

K2 = (2, ((0, 1),))


def test_jacobi_identity():
    eig = orc.eigenvalues_symmetric(np.eye(5))
    assert eig == [1.0] * 5


def test_jacobi_known_2x2():
    eig = orc.eigenvalues_symmetric([[0.0, 1.0], [1.0, 0.0]])
    assert eig[0] == pytest.approx(-1.0, abs=1e-12)
    assert eig[1] == pytest.approx(1.0, abs=1e-12)


def test_jacobi_la_n1():
    eig = orc.eigenvalues_symmetric(lap.block_decompose(1).l_a)
    assert eig[0] == pytest.approx(0.0, abs=1e-10)
    assert eig[1] + eig[2] == pytest.approx(8 / 3, abs=1e-10)
    assert eig[1] * eig[2] == pytest.approx(7 / 4, abs=1e-10)


def test_jacobi_trace():
    for n in range(1, 11):
        m = lap.normalized_laplacian(gg.build_moebius_octagonal(n))
        assert sum(orc.eigenvalues_symmetric(m)) == pytest.approx(6 * n, abs=1e-8)


def test_jacobi_nonconvergence_raises():
    rng = random.Random(7)
    m = np.array([[rng.uniform(-1, 1) for _ in range(8)] for _ in range(8)])
    m = m + m.T
    with pytest.raises(orc.NumericFailure):
        orc.eigenvalues_symmetric(m, tol=1e-12, max_sweeps=1)


def test_charpoly_block_images_n1():
    pa = orc.charpoly_exact(lap.rational_block_image(1, "A"))
    assert pa == [F(0), F(7, 4), F(-8, 3), F(1)]
    ps = orc.charpoly_exact(lap.rational_block_image(1, "S"))
    assert ps == [F(-5, 6), F(37, 12), F(-10, 3), F(1)]


def test_charpoly_walk_constant_term():
    for n in range(1, 7):
        g = gg.build_moebius_octagonal(n)
        coeffs = orc.charpoly_exact(lap.rational_walk_laplacian(g))
        assert coeffs[0] == 0
        assert coeffs[1] != 0
        assert coeffs[-1] == 1


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(
            st.fractions(min_value=-3, max_value=3, max_denominator=4),
            min_size=4,
            max_size=4,
        ),
        min_size=4,
        max_size=4,
    )
)
def test_charpoly_matches_numpy(rows):
    coeffs = orc.charpoly_exact(rows)
    numeric = np.poly(np.array([[float(x) for x in r] for r in rows]))[::-1]
    for k, c in enumerate(coeffs):
        assert float(c) == pytest.approx(numeric[k], abs=1e-6)


def test_recip_sum_from_charpoly():
    assert orc.recip_sum_from_charpoly([F(0), F(7, 4), F(-8, 3), F(1)]) == F(32, 21)
    assert orc.recip_sum_from_charpoly([F(-5, 6), F(37, 12), F(-10, 3), F(1)]) == F(37, 10)
    # (z-1)(z-2)z
    assert orc.recip_sum_from_charpoly([F(0), F(2), F(-3), F(1)]) == F(3, 2)
    # single zero root and nothing else
    assert orc.recip_sum_from_charpoly([F(0), F(1)]) == 0


def test_recip_sum_rejects_double_zero():
    with pytest.raises(ValueError):
        orc.recip_sum_from_charpoly([F(0), F(0), F(1)])


def test_k2_oracles():
    r = orc.resistance_matrix_exact(K2)
    assert r[0][1] == 1
    assert orc.kf_oracle(K2) == 1
    assert orc.dk_oracle(K2) == 1
    assert orc.kemeny_oracle(K2) == F(1, 2)


def test_octagon_resistances():
    g = gg.build_linear_octagonal(1)
    r = orc.resistance_matrix_exact(g)
    assert r[0][7] == 2  # opposite corners of the 8-cycle
    assert r[0][1] == F(7, 8)


def test_q1_resistance_dk():
    g = gg.build_moebius_octagonal(1)
    r = orc.resistance_matrix_exact(g)
    total = F(0)
    for i in range(6):
        for j in range(i + 1, 6):
            total += g.degrees[i] * g.degrees[j] * r[i][j]
    assert total == F(1097, 15)
    assert orc.dk_oracle(g) == F(1097, 15)
    assert orc.kemeny_oracle(g) == F(1097, 210)


def test_resistance_matrix_properties():
    g = gg.build_moebius_octagonal(2)
    r = orc.resistance_matrix_exact(g)
    nv = g.vertex_count
    for i in range(nv):
        assert r[i][i] == 0
        for j in range(i + 1, nv):
            assert r[i][j] == r[j][i] > 0
    # triangle inequality spot checks
    rng = random.Random(3)
    for _ in range(200):
        i, j, k = rng.sample(range(nv), 3)
        assert r[i][k] <= r[i][j] + r[j][k]


def test_resistance_ground_independence():
    g = gg.build_moebius_octagonal(2)
    base = orc.resistance_matrix_exact(g)
    for ground in (3, 5, 11):
        assert orc.resistance_matrix_exact(g, ground=ground) == base


def test_resistance_below_path_distance():
    for builder in (gg.build_moebius_octagonal, gg.build_linear_octagonal):
        g = builder(3)
        r = orc.resistance_matrix_exact(g)
        adj = gg.adjacency_lists(g)
        for src in range(g.vertex_count):
            dist = {src: 0}
            queue = [src]
            for v in queue:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
            for v, d in dist.items():
                assert r[src][v] <= d


def test_disconnected_graph_rejected():
    broken = (4, ((0, 1), (2, 3)))
    with pytest.raises(orc.DisconnectedGraph):
        orc.resistance_matrix_exact(broken)


def test_route_independence():
    for n in range(1, 5):
        q = gg.build_moebius_octagonal(n)
        assert orc.dk_oracle(q) == 2 * 7 * n * orc.kemeny_oracle(q)
    for n in range(1, 4):
        li = gg.build_linear_octagonal(n)
        assert orc.dk_oracle(li) == 2 * (7 * n + 1) * orc.kemeny_oracle(li)


def test_spanning_trees_oracle():
    assert orc.spanning_trees_oracle(gg.build_moebius_octagonal(1)) == 15
    assert orc.spanning_trees_oracle(gg.build_moebius_octagonal(4)) == 23064
    assert orc.spanning_trees_oracle(gg.build_moebius_octagonal(7)) == 19686345


def test_leading_principal_minors_exact():
    eye = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert orc.leading_principal_minors_exact(eye) == [1, 1, 1, 1]
    mins = orc.leading_principal_minors_exact(lap.rational_phase_image("A", 0, 6))
    assert mins == [F(2, 3), F(1, 2), F(1, 3), F(5, 36), F(1, 12), F(7, 144)]


def test_numeric_recip_sum_matches_exact():
    for n in range(1, 11):
        g = gg.build_moebius_octagonal(n)
        eig = orc.eigenvalues_symmetric(lap.normalized_laplacian(g))
        numeric = sum(1.0 / v for v in eig if v > 1e-9)
        exact = float(orc.kemeny_oracle(g))
        assert numeric == pytest.approx(exact, rel=1e-7)
