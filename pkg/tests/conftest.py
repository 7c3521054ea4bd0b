"""Shared graph builders for the test suite."""

from __future__ import annotations

import pytest

from degensplit.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism_graph() -> Graph:
    # two triangles {0,1,2}, {3,4,5} plus the matching i -- i+3
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def diamond_graph() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def claw_graph() -> Graph:
    return star_graph(3)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def cube_graph() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    edges += [(i, i + 4) for i in range(4)]
    return Graph(8, edges)


def h1_graph() -> Graph:
    # u, u1, u2, v1, v2, v3, w with u of degree 2
    return Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (4, 6), (5, 6)])


def h2_graph() -> Graph:
    return Graph(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7),
                     (4, 6), (5, 7), (4, 7)])


def h3_graph() -> Graph:
    return Graph(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 5), (2, 6), (3, 4), (3, 6),
                     (4, 7), (5, 7), (6, 7)])


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def complete_to_regular(n: int, k: int, edges: list[tuple[int, int]]) -> Graph:
    """Extend a partial graph to a k-regular one by chaining every remaining
    degree deficit through a fresh K_{k+1}-minus-an-edge gadget."""
    edges = list(edges)
    deg: dict[int, int] = {v: 0 for v in range(n)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if any(d > k for d in deg.values()):
        raise ValueError("partial graph already exceeds degree k")
    slots = [v for v in range(n) for _ in range(k - deg[v])]
    if len(slots) % 2:
        slots.extend([n] * k)  # a fresh vertex absorbs the parity mismatch
        n += 1
    for i in range(0, len(slots), 2):
        a, b = slots[i], slots[i + 1]
        base = n
        n += k + 1
        gadget = list(range(base, base + k + 1))
        p, q = gadget[0], gadget[1]
        edges.extend(
            (gadget[x], gadget[y])
            for x in range(k + 1)
            for y in range(x + 1, k + 1)
            if (gadget[x], gadget[y]) != (p, q)
        )
        edges.append((a, p))
        edges.append((b, q))
    g = Graph(n, edges)
    assert all(g.degree(v) == k for v in range(g.n)), "completion failed"
    return g


@pytest.fixture
def prism() -> Graph:
    return prism_graph()


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()
