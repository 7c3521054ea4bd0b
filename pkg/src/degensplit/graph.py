"""Core graph representation, traversal orders, degeneracy peeling, and the
shared text file formats.

Vertices are dense integers 0..n-1 internally; the text formats are
1-indexed.  Adjacency lists are kept sorted so that every "arbitrary"
traversal in the package is deterministic.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """A graph or colouring file is malformed.  Carries the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class PartitionError(ValueError):
    """A claimed (A, B) pair does not partition the vertex set."""


class ForbiddenCliqueError(ValueError):
    """The input contains a component for which no decomposition exists."""

    def __init__(self, k: int, component_indices: list[int]):
        self.k = k
        self.component_indices = component_indices
        super().__init__(
            f"component(s) {component_indices} isomorphic to K_{k + 1}: "
            f"no {k}-degenerate decomposition exists"
        )


class InternalInvariantError(AssertionError):
    """An invariant that the algorithms guarantee by construction failed."""


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.

    Treated as immutable once constructed; algorithms that delete vertices or
    add edges work on private mutable copies.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.adj = adj

    # -- basic queries -----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> list[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def m(self) -> int:
        return sum(len(lst) for lst in self.adj) // 2

    def max_degree(self) -> int:
        return max((len(lst) for lst in self.adj), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self.adj))))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``; returns it with old ids per new id."""
        old_ids = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old_ids)}
        edges = [
            (index[u], index[v])
            for u in old_ids
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph(len(old_ids), edges), old_ids

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(w not in vs for v in vs for w in self.adj[v])


@dataclass(frozen=True, slots=True)
class VertexOrder:
    """A duplicate-free sequence of vertices with its measured back-degree.

    ``back_degree_bound`` is the maximum, over positions i >= 1, of the number
    of neighbours of sequence[i] occurring earlier in the sequence.
    """

    sequence: tuple[int, ...]
    back_degree_bound: int


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Vertex partition (a_set, b_set): a_set independent, G[b_set] (k-2)-degenerate."""

    a_set: frozenset[int]
    b_set: frozenset[int]
    k: int


def max_back_degree(g: Graph, sequence: Iterable[int]) -> int:
    """Scan ``sequence``: the largest count of earlier-in-sequence neighbours.

    Neighbours outside the sequence are ignored, so this also measures orders
    of induced subgraphs.
    """
    pos: dict[int, int] = {}
    for i, v in enumerate(sequence):
        if v in pos:
            raise ValueError(f"duplicate vertex {v} in order")
        pos[v] = i
    best = 0
    for v, i in pos.items():
        back = sum(1 for w in g.adj[v] if pos.get(w, i) < i)
        if back > best:
            best = back
    return best


def order_of(g: Graph, sequence: Iterable[int]) -> VertexOrder:
    seq = tuple(sequence)
    return VertexOrder(seq, max_back_degree(g, seq))


# -- traversal ---------------------------------------------------------------


def bfs_discovery(g: Graph, start: int, blocked: frozenset[int] = frozenset()) -> list[int]:
    """BFS discovery order of start's component, exploring neighbours ascending."""
    if not (0 <= start < g.n):
        raise ValueError(f"start vertex {start} out of range")
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def reverse_bfs_order(g: Graph, start: int) -> VertexOrder:
    """Vertices of start's component in reverse breadth-first discovery order.

    When the component has maximum degree k and start has degree <= k-1, the
    result is a (k-1)-degenerate order: every vertex except the last has a
    neighbour later in the order.
    """
    discovery = bfs_discovery(g, start)
    discovery.reverse()
    return order_of(g, discovery)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, seeded by ascending id."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def components_without(g: Graph, removed: Iterable[int]) -> list[list[int]]:
    """Components of the graph minus ``removed``, sorted, seeded ascending."""
    blocked = set(removed)
    seen = [False] * g.n
    for v in blocked:
        seen[v] = True
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


# -- degeneracy --------------------------------------------------------------


def peel_degeneracy(g: Graph) -> tuple[int, VertexOrder]:
    """Iterated minimum-degree removal (ties by lowest id).

    Returns (degeneracy, order) where order is the removal sequence; the
    reversed sequence is a degeneracy-degenerate order.  The empty graph has
    degeneracy 0 by convention.
    """
    n = g.n
    deg = [len(g.adj[v]) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    sequence: list[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        sequence.append(v)
        if d > degeneracy:
            degeneracy = d
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return degeneracy, order_of(g, sequence)


def verify_decomposition(g: Graph, k: int, d: Decomposition) -> bool:
    """True iff d.a_set is independent and G[d.b_set] is (k-2)-degenerate.

    Raises PartitionError when (a_set, b_set) is not a partition of V, and
    ValueError for k < 2; property failures return False.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    a, b = d.a_set, d.b_set
    if a & b or len(a) + len(b) != g.n or not all(0 <= v < g.n for v in a | b):
        raise PartitionError("a_set and b_set must partition the vertex set")
    if not g.is_independent_set(a):
        return False
    sub, _ = g.induced(b)
    degeneracy, _ = peel_degeneracy(sub)
    return degeneracy <= k - 2


def components_and_forbidden_clique_check(
    g: Graph, k: int
) -> tuple[list[list[int]], list[int]]:
    """Components plus indices of those isomorphic to K_{k+1}.

    A component offends iff it has exactly k+1 vertices, each of degree k
    within it.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    comps = components(g)
    offenders = [
        i
        for i, comp in enumerate(comps)
        if len(comp) == k + 1 and all(g.degree(v) == k for v in comp)
    ]
    return comps, offenders


# -- text formats --------------------------------------------------------------


def _lines_of(text) -> list[str]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    elif hasattr(text, "read"):
        text = text.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    return text.splitlines()


def load_graph(text) -> Graph:
    """Parse the edge-list format.

    Optional comment lines start with ``c``; one header ``p <n> <m>``; then
    exactly m lines ``e <u> <v>`` with 1 <= u < v <= n.
    """
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(_lines_of(text), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise GraphFormatError(line_no, "duplicate header")
            if len(parts) != 3:
                raise GraphFormatError(line_no, "header must be 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer header fields") from None
            if n < 0 or m < 0:
                raise GraphFormatError(line_no, "negative header fields")
        elif parts[0] == "e":
            if n < 0:
                raise GraphFormatError(line_no, "edge before header")
            if len(parts) != 3:
                raise GraphFormatError(line_no, "edge must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer endpoints") from None
            if u == v:
                raise GraphFormatError(line_no, f"self-loop at {u}")
            if not (1 <= u < v <= n):
                raise GraphFormatError(line_no, f"need 1 <= u < v <= {n}, got ({u}, {v})")
            if (u, v) in seen:
                raise GraphFormatError(line_no, f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            edges.append((u - 1, v - 1))
            if len(edges) > m:
                raise GraphFormatError(line_no, f"more than {m} edge lines")
        else:
            raise GraphFormatError(line_no, f"unrecognised line {line!r}")
    if n < 0:
        raise GraphFormatError(0, "missing 'p <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(0, f"expected {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_colouring(text) -> tuple[int, list[int]]:
    """Parse a colouring file: ``k <num_colours>`` then ``v <vertex> <colour>`` lines.

    Returns (k, colours) with colours[i] the 1-based colour of 0-based vertex i.
    """
    k = -1
    assigned: dict[int, int] = {}
    max_vertex = 0
    for line_no, raw in enumerate(_lines_of(text), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "k":
            if k >= 0:
                raise GraphFormatError(line_no, "duplicate colour-count line")
            if len(parts) != 2:
                raise GraphFormatError(line_no, "expected 'k <num_colours>'")
            try:
                k = int(parts[1])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer colour count") from None
            if k < 1:
                raise GraphFormatError(line_no, "colour count must be positive")
        elif parts[0] == "v":
            if k < 0:
                raise GraphFormatError(line_no, "vertex line before colour count")
            if len(parts) != 3:
                raise GraphFormatError(line_no, "expected 'v <vertex> <colour>'")
            try:
                vertex, colour = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer fields") from None
            if vertex < 1:
                raise GraphFormatError(line_no, "vertex ids are 1-based")
            if vertex in assigned:
                raise GraphFormatError(line_no, f"vertex {vertex} coloured twice")
            if not (1 <= colour <= k):
                raise GraphFormatError(line_no, f"colour {colour} outside 1..{k}")
            assigned[vertex] = colour
            max_vertex = max(max_vertex, vertex)
        else:
            raise GraphFormatError(line_no, f"unrecognised line {line!r}")
    if k < 0:
        raise GraphFormatError(0, "missing 'k <num_colours>' line")
    if len(assigned) != max_vertex:
        missing = sorted(set(range(1, max_vertex + 1)) - set(assigned))
        raise GraphFormatError(0, f"missing colour for vertices {missing}")
    return k, [assigned[i] for i in range(1, max_vertex + 1)]


def serialize_colouring(k: int, colours: list[int]) -> str:
    lines = [f"k {k}"]
    lines.extend(f"v {i + 1} {c}" for i, c in enumerate(colours))
    return "\n".join(lines) + "\n"
