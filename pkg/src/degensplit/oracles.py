"""Brute-force ground truths and random instance generators.

Deliberately simple and slow: these are the independent oracles the fast
algorithms are tested against, so they share no code path with them beyond
the Graph type.  All enumeration orders and random draws are fixed so that
expected values are reproducible.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import Decomposition, Graph


@dataclass(frozen=True, slots=True)
class OracleBudget:
    max_vertices_for_subset_search: int = 22
    max_state_count_for_reconfig_bfs: int = 5_000_000


DEFAULT_BUDGET = OracleBudget()


class BudgetExceededError(ValueError):
    """The instance is too large for exhaustive search."""


def _subset_degenerate(adj_masks: list[int], members: int, bound: int) -> bool:
    """Peel the induced subgraph given as a bitmask; True iff degeneracy <= bound."""
    live = members
    changed = True
    while live and changed:
        changed = False
        rest = live
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if (adj_masks[v] & live).bit_count() <= bound:
                live ^= low
                changed = True
    return live == 0


def brute_decompose(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> Decomposition | None:
    """First subset A (ascending bitmask, bit i = vertex i) that is independent
    with G[V - A] (k-2)-degenerate, or None when no such partition exists."""
    if g.n > budget.max_vertices_for_subset_search:
        raise BudgetExceededError(f"{g.n} vertices exceeds subset-search budget")
    if k < 2:
        raise ValueError("k must be at least 2")
    n = g.n
    adj_masks = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            adj_masks[u] |= 1 << v
    full = (1 << n) - 1
    for mask in range(full + 1):
        rest = mask
        independent = True
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if adj_masks[v] & mask:
                independent = False
                break
            rest ^= low
        if not independent:
            continue
        if _subset_degenerate(adj_masks, full ^ mask, k - 2):
            a = frozenset(v for v in range(n) if mask >> v & 1)
            return Decomposition(a, frozenset(range(n)) - a, k)
    return None


def brute_reconfig_path(
    g: Graph,
    k: int,
    alpha: list[int],
    beta: list[int],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> list[tuple[int, int]] | None:
    """Shortest recolouring path between proper k-colourings by BFS over all
    proper colourings under single-vertex changes, or None when unreachable."""
    n = g.n
    if k**n > budget.max_state_count_for_reconfig_bfs:
        raise BudgetExceededError(f"{k}^{n} states exceeds reconfiguration budget")
    for name, col in (("alpha", alpha), ("beta", beta)):
        if len(col) != n or any(not 1 <= c <= k for c in col):
            raise ValueError(f"{name} is not a {k}-colouring of {n} vertices")
        if any(col[u] == col[v] for u, v in g.edges()):
            raise ValueError(f"{name} is not proper")
    start, goal = tuple(alpha), tuple(beta)
    if start == goal:
        return []
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], int, int]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for v in range(n):
            nbr_cols = {state[w] for w in g.adj[v]}
            for c in range(1, k + 1):
                if c == state[v] or c in nbr_cols:
                    continue
                nxt = state[:v] + (c,) + state[v + 1:]
                if nxt in parents:
                    continue
                parents[nxt] = (state, v, c)
                if nxt == goal:
                    steps = []
                    cur = nxt
                    while parents[cur] is not None:
                        prev, vv, cc = parents[cur]
                        steps.append((vv, cc))
                        cur = prev
                    steps.reverse()
                    return steps
                queue.append(nxt)
    return None


def brute_1_in_k_sat(inst, budget: OracleBudget = DEFAULT_BUDGET) -> list[bool] | None:
    """First assignment (ascending bitmask, bit i = variable i+1) making exactly
    one literal true per clause, or None.  The empty clause list yields all-false."""
    n = inst.num_vars
    if n > budget.max_vertices_for_subset_search:
        raise BudgetExceededError(f"{n} variables exceeds assignment-search budget")
    clause_masks = []
    for clause in inst.clauses:
        mask = 0
        for var in clause:
            mask |= 1 << (var - 1)
        clause_masks.append(mask)
    for mask in range(1 << n):
        if all((mask & cm).bit_count() == 1 for cm in clause_masks):
            return [bool(mask >> i & 1) for i in range(n)]
    return None


# -- random instance generators ------------------------------------------------


def gen_random_regular(k: int, n: int, seed: int) -> Graph:
    """Simple k-regular graph via the configuration model with full rejection
    of loops and repeated edges; deterministic per seed."""
    if n * k % 2 != 0:
        raise ValueError("n*k must be even")
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    rng = random.Random(seed)
    for _ in range(10_000):
        stubs = [v for v in range(n) for _ in range(k)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return Graph(n, sorted(edges))
    raise ValueError(f"could not sample a simple {k}-regular graph on {n} vertices")


def gen_random_max_degree(n: int, max_degree: int, seed: int, avg_degree: float = 2.2) -> Graph:
    """Sparse random graph with a degree cap: random pair proposals are kept
    while both endpoints are below the cap (degree-capped Erdos-Renyi)."""
    rng = random.Random(seed)
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    attempts = int(avg_degree * n) if n > 1 else 0
    for _ in range(attempts):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges or deg[u] >= max_degree or deg[v] >= max_degree:
            continue
        edges.add(key)
        deg[u] += 1
        deg[v] += 1
    return Graph(n, sorted(edges))


def gen_random_connected_max_degree(
    n: int, max_degree: int, seed: int, extra_edge_factor: float = 0.55
) -> Graph:
    """Connected random graph with a degree cap: a random degree-capped
    spanning tree plus capped random extra edges."""
    if n <= 0:
        raise ValueError("n must be positive")
    if max_degree < 1 and n > 1:
        raise ValueError("cannot connect more than one vertex with degree cap 0")
    if n > 2 and max_degree < 2:
        raise ValueError("cannot connect more than two vertices with degree cap 1")
    rng = random.Random(seed)
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    attachable = [order[0]]
    for v in order[1:]:
        idx = rng.randrange(len(attachable))
        u = attachable[idx]
        key = (u, v) if u < v else (v, u)
        edges.add(key)
        deg[u] += 1
        deg[v] += 1
        if deg[u] >= max_degree:
            attachable[idx] = attachable[-1]
            attachable.pop()
        if deg[v] < max_degree:
            attachable.append(v)
    for _ in range(int(extra_edge_factor * n)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges or deg[u] >= max_degree or deg[v] >= max_degree:
            continue
        edges.add(key)
        deg[u] += 1
        deg[v] += 1
    return Graph(n, sorted(edges))


def gen_random_subcubic(n: int, seed: int, connected: bool = False) -> Graph:
    if connected:
        return gen_random_connected_max_degree(n, 3, seed)
    return gen_random_max_degree(n, 3, seed)


def gen_random_colouring(g: Graph, k: int, seed: int) -> list[int]:
    """Proper k-colouring from a randomised greedy pass; needs k > max degree."""
    if k < g.max_degree() + 1:
        raise ValueError("k must exceed the maximum degree for greedy colouring")
    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    colours = [0] * g.n
    for v in order:
        taken = {colours[w] for w in g.adj[v] if colours[w]}
        choices = [c for c in range(1, k + 1) if c not in taken]
        colours[v] = choices[rng.randrange(len(choices))]
    return colours
