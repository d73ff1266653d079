"""Construction of octagonal chain graphs.

Two families are built here, both assembled from a chain of octagons whose
horizontal sides are shared:

* the linear chain ``L_n`` on ``6n + 2`` vertices: two paths of ``3n + 1``
  vertices ("top" ``u_1..u_{3n+1}`` and "bottom" ``v_1..v_{3n+1}``) joined by
  vertical rungs ``u_j -- v_j`` at every position ``j = 1 (mod 3)``;
* the twisted closed chain ``Q_n`` on ``6n`` vertices: two paths of ``3n``
  vertices with rungs at ``j = 1 (mod 3)`` for ``j <= 3n - 2`` plus the two
  crossing seam edges ``u_{3n} -- v_1`` and ``v_{3n} -- u_1``.

Identifying the two ends of ``L_n`` with a half twist (``u_1 = v_{3n+1}``,
``v_1 = u_{3n+1}``) reproduces ``Q_n`` exactly; :func:`fold_linear_ends`
performs that identification.

Vertex numbering: top vertices come first (``u_j -> j - 1``), bottom vertices
after them. Edges are stored as lexicographically sorted ``(a, b)`` pairs
with ``a < b``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

MOEBIUS = "moebius"
LINEAR = "linear"


class ConstructionError(RuntimeError):
    """A structural invariant of a generated graph failed to hold."""


@dataclass(frozen=True)
class ChainGraph:
    """An immutable, validated simple graph with chain metadata."""

    kind: str
    n: int
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.kind not in (MOEBIUS, LINEAR):
            raise ValueError(f"unknown chain kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if self.vertex_count < 1:
            raise ValueError("graph must have at least one vertex")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < b < self.vertex_count):
                raise ValueError(f"edge {(a, b)} must satisfy 0 <= a < b < order")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge {(a, b)}")
            seen.add((a, b))
        if list(edges) != sorted(edges):
            raise ValueError("edges must be sorted lexicographically")
        degrees = [0] * self.vertex_count
        for a, b in edges:
            degrees[a] += 1
            degrees[b] += 1
        object.__setattr__(self, "degrees", tuple(degrees))


def _chain_graph(kind: str, n: int, vertex_count: int, edges) -> ChainGraph:
    return ChainGraph(
        kind=kind, n=n, vertex_count=vertex_count, edges=tuple(sorted(set(edges)))
    )


@lru_cache(maxsize=None)
def build_moebius_octagonal(n: int) -> ChainGraph:
    """Twisted closed chain of n octagons on 6n vertices and 7n edges."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    m = 3 * n
    u = list(range(m))
    v = list(range(m, 2 * m))
    edges = []
    for j in range(m - 1):
        edges.append((u[j], u[j + 1]))
        edges.append((v[j], v[j + 1]))
    for j in range(0, m - 2, 3):
        edges.append((u[j], v[j]))
    edges.append(tuple(sorted((u[m - 1], v[0]))))
    edges.append(tuple(sorted((v[m - 1], u[0]))))
    g = _chain_graph(MOEBIUS, n, 2 * m, edges)
    if len(g.edges) != 7 * n:
        raise ConstructionError(f"expected {7 * n} edges, built {len(g.edges)}")
    return g


@lru_cache(maxsize=None)
def build_linear_octagonal(n: int) -> ChainGraph:
    """Open chain of n octagons on 6n + 2 vertices and 7n + 1 edges."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    m = 3 * n + 1
    u = list(range(m))
    v = list(range(m, 2 * m))
    edges = []
    for j in range(m - 1):
        edges.append((u[j], u[j + 1]))
        edges.append((v[j], v[j + 1]))
    for j in range(0, m, 3):
        edges.append((u[j], v[j]))
    g = _chain_graph(LINEAR, n, 2 * m, edges)
    if len(g.edges) != 7 * n + 1:
        raise ConstructionError(f"expected {7 * n + 1} edges, built {len(g.edges)}")
    return g


def fold_linear_ends(g: ChainGraph) -> ChainGraph:
    """Glue the two ends of an open chain with a half twist.

    The identification is ``u_1 = v_{3n+1}`` and ``v_1 = u_{3n+1}``; the
    result is the twisted closed chain on 6n vertices.
    """
    if g.kind != LINEAR:
        raise ValueError("only open chains can be folded")
    n = g.n
    m = 3 * n

    def image(vertex: int) -> int:
        if vertex < m:  # u_1..u_{3n}
            return vertex
        if vertex == m:  # u_{3n+1} lands on v_1
            return m
        if vertex < 2 * m + 1:  # v_1..v_{3n}
            return vertex - 1
        return 0  # v_{3n+1} lands on u_1

    folded = {tuple(sorted((image(a), image(b)))) for a, b in g.edges}
    return _chain_graph(MOEBIUS, n, 2 * m, folded)


@dataclass(frozen=True)
class MirrorMap:
    """A graph automorphism given as a vertex permutation."""

    permutation: tuple[int, ...]


def mirror_automorphism(g: ChainGraph) -> MirrorMap:
    """The top/bottom swap ``u_j <-> v_j`` of the twisted closed chain.

    It is an involution without fixed points; the two seam edges are
    exchanged with each other.
    """
    if g.kind != MOEBIUS:
        raise ValueError("the mirror swap is only defined for the closed chain")
    m = 3 * g.n
    perm = tuple(i + m if i < m else i - m for i in range(2 * m))
    mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in g.edges}
    if mapped != set(g.edges):
        raise ConstructionError("mirror permutation does not preserve adjacency")
    return MirrorMap(permutation=perm)


def adjacency_lists(g) -> tuple[tuple[int, ...], ...]:
    """Sorted neighbour lists, accepting any (vertex_count, edges) pair."""
    vertex_count, edges = _graph_data(g)
    neighbours = [[] for _ in range(vertex_count)]
    for a, b in edges:
        neighbours[a].append(b)
        neighbours[b].append(a)
    return tuple(tuple(sorted(adj)) for adj in neighbours)


def _graph_data(g) -> tuple[int, tuple[tuple[int, int], ...]]:
    if isinstance(g, ChainGraph):
        return g.vertex_count, g.edges
    vertex_count, edges = g
    return int(vertex_count), tuple(tuple(e) for e in edges)


def is_connected(g) -> bool:
    vertex_count, edges = _graph_data(g)
    if vertex_count == 0:
        return True
    adj = adjacency_lists(g)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == vertex_count


def degree_product(g: ChainGraph) -> int:
    return math.prod(g.degrees)


def is_bipartite(g):
    """Two-colourability with a checkable certificate.

    Returns ``(True, colours)`` where ``colours[v]`` is 0/1, or
    ``(False, cycle)`` where ``cycle`` is an odd-length vertex tuple whose
    consecutive pairs (wrapping around) are all edges.
    """
    vertex_count, _ = _graph_data(g)
    adj = adjacency_lists(g)
    colour = [-1] * vertex_count
    parent = [-1] * vertex_count
    depth = [0] * vertex_count
    for root in range(vertex_count):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = [root]
        for v in queue:
            for w in adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, _odd_cycle(v, w, parent, depth)
    return True, tuple(colour)


def _odd_cycle(v, w, parent, depth):
    # walk both endpoints of the offending edge up to their lowest common
    # ancestor; the two branches plus the edge v--w close an odd cycle
    left, right = v, w
    left_path, right_path = [left], [right]
    while depth[left] > depth[right]:
        left = parent[left]
        left_path.append(left)
    while depth[right] > depth[left]:
        right = parent[right]
        right_path.append(right)
    while left != right:
        left = parent[left]
        right = parent[right]
        left_path.append(left)
        right_path.append(right)
    # drop the duplicated ancestor from one branch and reverse the other so
    # consecutive listed vertices are adjacent
    cycle = left_path + right_path[-2::-1]
    return tuple(cycle)


def export(g: ChainGraph, fmt: str) -> str:
    """Serialize a graph as "json", "edgelist" or "dot" text."""
    if fmt == "json":
        return json.dumps(
            {
                "kind": g.kind,
                "n": g.n,
                "vertices": g.vertex_count,
                "edges": [list(e) for e in g.edges],
            }
        )
    if fmt == "edgelist":
        return "".join(f"{a} {b}\n" for a, b in g.edges)
    if fmt == "dot":
        name = f"{'Q' if g.kind == MOEBIUS else 'L'}{g.n}"
        lines = [f"graph {name} {{"]
        lines.extend(f"  {a} -- {b};" for a, b in g.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")
