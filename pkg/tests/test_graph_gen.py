from collections import Counter

import pytest
from hypothesis import given, strategies as st

from octachain import graph_gen as gg


Q1_EDGES = ((0, 1), (0, 3), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5))


def test_q1_structure():
    g = gg.build_moebius_octagonal(1)
    assert g.kind == gg.MOEBIUS
    assert g.vertex_count == 6
    assert g.edges == Q1_EDGES
    assert g.degrees == (3, 2, 2, 3, 2, 2)


def test_q2_counts():
    g = gg.build_moebius_octagonal(2)
    assert g.vertex_count == 12
    assert len(g.edges) == 14
    assert Counter(g.degrees) == {3: 4, 2: 8}


def test_counts_up_to_50():
    for n in range(1, 51):
        q = gg.build_moebius_octagonal(n)
        assert q.vertex_count == 6 * n
        assert len(q.edges) == 7 * n
        assert Counter(q.degrees) == {3: 2 * n, 2: 4 * n}
        assert sum(q.degrees) == 2 * len(q.edges)
        li = gg.build_linear_octagonal(n)
        assert li.vertex_count == 6 * n + 2
        assert len(li.edges) == 7 * n + 1
        assert sum(li.degrees) == 2 * len(li.edges)


def test_connected_and_two_connected():
    for n in range(1, 13):
        g = gg.build_moebius_octagonal(n)
        assert gg.is_connected(g)
        adj = gg.adjacency_lists(g)
        for drop in range(g.vertex_count):
            # BFS skipping one vertex must still reach everything else
            start = 0 if drop != 0 else 1
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w != drop and w not in seen:
                        seen.add(w)
                        stack.append(w)
            assert len(seen) == g.vertex_count - 1


def test_degree_product():
    for n in range(1, 21):
        g = gg.build_moebius_octagonal(n)
        assert gg.degree_product(g) == 2 ** (4 * n) * 3 ** (2 * n)


def test_linear_one_is_octagon():
    g = gg.build_linear_octagonal(1)
    assert g.vertex_count == 8
    assert len(g.edges) == 8
    assert set(g.degrees) == {2}
    assert gg.is_connected(g)


def test_fold_reproduces_moebius():
    for n in range(1, 6):
        folded = gg.fold_linear_ends(gg.build_linear_octagonal(n))
        assert folded == gg.build_moebius_octagonal(n)


def test_fold_rejects_moebius():
    with pytest.raises(ValueError):
        gg.fold_linear_ends(gg.build_moebius_octagonal(2))


def test_mirror_small():
    g = gg.build_moebius_octagonal(1)
    assert gg.mirror_automorphism(g).permutation == (3, 4, 5, 0, 1, 2)


@given(st.integers(min_value=1, max_value=20))
def test_mirror_properties(n):
    g = gg.build_moebius_octagonal(n)
    pi = gg.mirror_automorphism(g).permutation
    assert all(pi[pi[v]] == v for v in range(g.vertex_count))
    assert all(pi[v] != v for v in range(g.vertex_count))
    mapped = {tuple(sorted((pi[a], pi[b]))) for a, b in g.edges}
    assert mapped == set(g.edges)
    # the two seam edges swap with each other
    m = 3 * n
    assert tuple(sorted((pi[m - 1], pi[m]))) == (0, 2 * m - 1)


def test_mirror_rejects_linear():
    with pytest.raises(ValueError):
        gg.mirror_automorphism(gg.build_linear_octagonal(2))


def test_bipartite_iff_odd():
    for n in range(1, 21):
        g = gg.build_moebius_octagonal(n)
        flag, cert = gg.is_bipartite(g)
        assert flag == (n % 2 == 1)
        if flag:
            colors = cert
            assert all(colors[a] != colors[b] for a, b in g.edges)
        else:
            cycle = cert
            assert len(cycle) % 2 == 1
            edge_set = set(g.edges)
            for i, v in enumerate(cycle):
                w = cycle[(i + 1) % len(cycle)]
                assert tuple(sorted((v, w))) in edge_set


def test_linear_always_bipartite():
    for n in range(1, 11):
        flag, colors = gg.is_bipartite(gg.build_linear_octagonal(n))
        assert flag


@pytest.mark.parametrize("bad", [0, -1, -7])
def test_invalid_n_rejected(bad):
    with pytest.raises(ValueError):
        gg.build_moebius_octagonal(bad)
    with pytest.raises(ValueError):
        gg.build_linear_octagonal(bad)


def test_chain_graph_validation():
    with pytest.raises(ValueError):
        gg.ChainGraph(kind="hex", n=1, vertex_count=6, edges=Q1_EDGES)
    with pytest.raises(ValueError):
        gg.ChainGraph(kind=gg.MOEBIUS, n=1, vertex_count=6, edges=((0, 0),))
    with pytest.raises(ValueError):
        gg.ChainGraph(
            kind=gg.MOEBIUS, n=1, vertex_count=6, edges=Q1_EDGES + ((0, 1),)
        )


def test_export_edgelist_golden():
    out = gg.export(gg.build_moebius_octagonal(1), "edgelist")
    assert out == "0 1\n0 3\n0 5\n1 2\n2 3\n3 4\n4 5\n"


def test_export_json():
    import json

    g = gg.build_moebius_octagonal(1)
    data = json.loads(gg.export(g, "json"))
    assert data == {
        "kind": "moebius",
        "n": 1,
        "vertices": 6,
        "edges": [[0, 1], [0, 3], [0, 5], [1, 2], [2, 3], [3, 4], [4, 5]],
    }
    lin = json.loads(gg.export(gg.build_linear_octagonal(2), "json"))
    assert lin["kind"] == "linear"
    assert lin["vertices"] == 14
    assert all(a < b for a, b in lin["edges"])
    assert lin["edges"] == sorted(lin["edges"])


def test_export_dot():
    out = gg.export(gg.build_moebius_octagonal(1), "dot")
    lines = out.splitlines()
    assert lines[0] == "graph Q1 {"
    assert lines[-1] == "}"
    assert lines[1].strip() == "0 -- 1;"
    assert len(lines) == 9


def test_export_unknown_format():
    with pytest.raises(ValueError):
        gg.export(gg.build_moebius_octagonal(1), "gml")
