"""Quadratic-time decomposition of a maximum-degree-k graph into an
independent set A and a set B inducing a (k-2)-degenerate graph (k >= 3).

Non-regular components reduce to a greedy pass over a reverse-BFS order.
k-regular components run a refinement loop over good vertex pairs that
terminates in one of four structural situations (strong pair, clique minus an
edge on k+1 vertices, k-clique with a 2-vertex neighbourhood, or a lock),
each solved by its own O(kn) routine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Decomposition,
    ForbiddenCliqueError,
    Graph,
    InternalInvariantError,
    VertexOrder,
    components_and_forbidden_clique_check,
    components_without,
    max_back_degree,
    reverse_bfs_order,
    verify_decomposition,
)


@dataclass(frozen=True, slots=True)
class PairWitness:
    """Outcome of probing a good pair: strong, or one offending component."""

    u: int
    v: int
    kind: str  # "strong" | "good_with_component"
    component: frozenset[int] | None = None


@dataclass(frozen=True, slots=True)
class LockWitness:
    """A (u, v)-lock: N(c_set) = {u, v}; t adjacent to both u and v; w and x
    each adjacent to exactly one of them; G[c_set] complete except wt, xt."""

    c_set: frozenset[int]
    u: int
    v: int
    t: int
    w: int
    x: int


@dataclass(frozen=True, slots=True)
class StructuralCase:
    """A structure discovered during pair refinement that short-circuits the
    loop: kind is "quasiclique" (c_set = clique on k+1 vertices minus the edge
    uv) or "lock" (see LockWitness)."""

    kind: str
    c_set: frozenset[int]
    u: int | None = None
    v: int | None = None
    lock: LockWitness | None = None


# -- greedy assignment ---------------------------------------------------------


def _greedy_split(g: Graph, sequence: list[int]) -> tuple[set[int], set[int]]:
    """Assign each vertex to A unless an earlier neighbour is already in A."""
    a: set[int] = set()
    b: set[int] = set()
    for v in sequence:
        if any(w in a for w in g.adj[v]):
            b.add(v)
        else:
            a.add(v)
    return a, b


def greedy_from_order(g: Graph, order: VertexOrder, k: int) -> Decomposition:
    """Greedy split along a (k-1)-degenerate order covering all of g.

    A is a maximal independent set containing the first vertex, and the order
    restricted to B is a (k-2)-degenerate order of G[B].
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    seq = list(order.sequence)
    if sorted(seq) != list(range(g.n)):
        raise ValueError("order must cover every vertex exactly once")
    if max_back_degree(g, seq) > k - 1:
        raise ValueError(f"order is not ({k - 1})-degenerate")
    a, b = _greedy_split(g, seq)
    return Decomposition(frozenset(a), frozenset(b), k)


# -- validation helpers ----------------------------------------------------------


def _require_connected_regular(g: Graph, k: int) -> None:
    if g.n == 0:
        raise ValueError("graph is empty")
    if any(g.degree(v) != k for v in range(g.n)):
        raise ValueError(f"graph is not {k}-regular")
    if len(components_without(g, ())) != 1:
        raise ValueError("graph is not connected")


def _missing_pairs(g: Graph, vs: list[int]) -> list[tuple[int, int]]:
    return [
        (vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
        if not g.has_edge(vs[i], vs[j])
    ]


def _reverse_bfs_within(g: Graph, start: int, allowed: set[int]) -> list[int]:
    """Reverse BFS discovery order of start's component inside ``allowed``."""
    from collections import deque

    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    order.reverse()
    return order


# -- the four lemma routines ---------------------------------------------------


def via_strong_pair(g: Graph, k: int, u: int, v: int) -> Decomposition:
    """Decomposition of a connected k-regular graph from a strong pair {u, v}.

    Identifies u and v into a fresh vertex z, orders z first followed by each
    component of the remainder in reverse BFS from a common neighbour, runs
    the greedy split, and replaces z by {u, v}.
    """
    _require_connected_regular(g, k)
    if u == v or g.has_edge(u, v):
        raise ValueError("u and v must be distinct and non-adjacent")
    commons = set(g.adj[u]) & set(g.adj[v])
    if not commons:
        raise ValueError("u and v have no common neighbour")
    comps = components_without(g, (u, v))
    for comp in comps:
        if not commons.intersection(comp):
            raise ValueError("pair is not strong: a component lacks a common neighbour")
    z = g.n
    edges = [(a, b) for a, b in g.edges() if u not in (a, b) and v not in (a, b)]
    edges.extend((w, z) for w in sorted(set(g.adj[u]) | set(g.adj[v])))
    gp = Graph(g.n + 1, edges)
    seq = [z]
    for comp in comps:  # components_without yields them ordered by lowest id
        zc = min(commons.intersection(comp))
        seq.extend(_reverse_bfs_within(gp, zc, set(comp)))
    if max_back_degree(gp, seq) > k - 1:
        raise InternalInvariantError("identified-vertex order is not (k-1)-degenerate")
    a, b = _greedy_split(gp, seq)
    if z not in a:
        raise InternalInvariantError("identified vertex escaped the independent side")
    a.discard(z)
    a.update((u, v))
    return Decomposition(frozenset(a), frozenset(b), k)


def via_quasiclique(g: Graph, k: int, c_set, u: int, v: int) -> Decomposition:
    """Decomposition when c_set induces a clique on k+1 vertices minus the edge uv."""
    _require_connected_regular(g, k)
    cs = sorted(set(c_set))
    if len(cs) != k + 1 or u not in cs or v not in cs:
        raise ValueError("c_set must contain u, v and exactly k+1 vertices")
    if _missing_pairs(g, cs) != [(min(u, v), max(u, v))]:
        raise ValueError("c_set must induce a clique minus exactly the edge uv")
    out_u = [w for w in g.adj[u] if w not in c_set]
    out_v = [w for w in g.adj[v] if w not in c_set]
    if len(out_u) != 1 or len(out_v) != 1:
        raise InternalInvariantError("quasiclique endpoints must have one outside neighbour")
    t, w = out_u[0], out_v[0]
    if t == w:
        return via_strong_pair(g, k, u, v)
    rest = set(range(g.n)) - set(cs)
    seq_t = _reverse_bfs_within(g, t, rest)
    blocks = [seq_t]
    if w not in seq_t:
        blocks.append(_reverse_bfs_within(g, w, rest))
    if sum(len(b) for b in blocks) != len(rest):
        raise InternalInvariantError("remainder has a component missing both t and w")
    blocks.sort(key=min)
    seq = [x for block in blocks for x in block]
    if max_back_degree(g, seq) > k - 1:
        raise InternalInvariantError("remainder order is not (k-1)-degenerate")
    a, b = _greedy_split(g, seq)
    if t in b and w in b:
        a.update((u, v))
        b.update(x for x in cs if x not in (u, v))
    else:
        if t not in a:  # swap roles so the A-side outside neighbour is t's
            u, v, t, w = v, u, w, t
        x = min(x for x in cs if x not in (u, v))
        a.add(x)
        b.update(y for y in cs if y != x)
    return Decomposition(frozenset(a), frozenset(b), k)


def via_clique(g: Graph, k: int, c_set) -> Decomposition:
    """Decomposition when c_set induces K_k and has a 2-vertex neighbourhood."""
    _require_connected_regular(g, k)
    cs = sorted(set(c_set))
    if len(cs) != k or _missing_pairs(g, cs):
        raise ValueError("c_set must induce a clique on k vertices")
    outside = sorted({w for x in cs for w in g.adj[x] if w not in c_set})
    if len(outside) != 2:
        raise ValueError(f"neighbourhood of c_set has size {len(outside)}, not 2")
    u, v = outside
    n_u = [x for x in cs if g.has_edge(u, x)]
    n_v = [x for x in cs if g.has_edge(v, x)]
    if not n_u or not n_v:
        raise ValueError("each neighbourhood vertex needs a neighbour in c_set")
    if len(n_u) == k or len(n_v) == k:
        raise ValueError("no neighbourhood vertex may be adjacent to all of c_set")
    # root the BFS at the endpoint that loses more edges (degree < k afterwards)
    root, other = (u, v) if (len(n_u), -u) >= (len(n_v), -v) else (v, u)
    rest = set(range(g.n)) - set(cs)
    edges = [(a, b) for a, b in g.edges() if a in rest and b in rest]
    added_uv = not g.has_edge(u, v)
    if added_uv:
        edges.append((min(u, v), max(u, v)))
    gp = Graph(g.n, edges)
    seq = _reverse_bfs_within(gp, root, rest)
    if len(seq) != len(rest):
        raise InternalInvariantError("graph minus c_set plus uv must be connected")
    if max_back_degree(gp, seq) > k - 1:
        raise InternalInvariantError("reduced-graph order is not (k-1)-degenerate")
    a, b = _greedy_split(gp, seq)
    if u in a and v in a:
        raise InternalInvariantError("both clique neighbours landed independent")
    if u in a or (u in b and v in b and len(n_v) > len(n_u)):
        u, v, n_u, n_v = v, u, n_v, n_u
    # now either v in A and u in B, or both in B with u owning >= 2 clique edges
    if u in b and v in b and len(n_u) < 2:
        raise InternalInvariantError("B-side endpoint lacks two clique neighbours")
    t = min(n_u)
    a.add(t)
    b.update(x for x in cs if x != t)
    return Decomposition(frozenset(a), frozenset(b), k)


def via_lock(g: Graph, k: int, lock: LockWitness) -> Decomposition:
    """Decomposition when the graph contains a (u, v)-lock."""
    _require_connected_regular(g, k)
    cs = sorted(lock.c_set)
    u, v, t, w, x = lock.u, lock.v, lock.t, lock.w, lock.x
    if not {t, w, x} <= set(cs) or {u, v} & set(cs):
        raise ValueError("lock witness vertices misplaced")
    outside = {y for c in cs for y in g.adj[c] if y not in lock.c_set}
    if outside != {u, v}:
        raise ValueError("N(c_set) must equal {u, v}")
    if not (g.has_edge(u, t) and g.has_edge(v, t)):
        raise ValueError("t must be adjacent to both u and v")
    for y in (w, x):
        if (g.has_edge(u, y) + g.has_edge(v, y)) != 1:
            raise ValueError("w and x must each touch exactly one of u, v")
    expected_missing = sorted([tuple(sorted((w, t))), tuple(sorted((x, t)))])
    if sorted(_missing_pairs(g, cs)) != expected_missing:
        raise ValueError("G[c_set] must contain all edges except wt and xt")
    w_side = u if g.has_edge(u, w) else v
    x_side = u if g.has_edge(u, x) else v
    if w_side == x_side:
        return via_clique(g, k, set(cs) - {t})
    removed = set(cs) - {t}
    rest = set(range(g.n)) - removed
    if g.degree(u) - sum(1 for y in g.adj[u] if y in removed) != k - 1:
        raise InternalInvariantError("u must have degree k-1 after deleting c_set - {t}")
    seq = _reverse_bfs_within(g, u, rest)
    if len(seq) != len(rest):
        raise InternalInvariantError("graph minus c_set - {t} must stay connected")
    seq.remove(t)
    seq.insert(0, t)
    if max_back_degree(g, seq) > k - 1:
        raise InternalInvariantError("t-fronted order is not (k-1)-degenerate")
    a, b = _greedy_split(g, seq)
    if t not in a or u not in b or v not in b:
        raise InternalInvariantError("greedy split must put t in A and u, v in B")
    a.add(w)
    b.update(y for y in cs if y not in (w, t))
    return Decomposition(frozenset(a), frozenset(b), k)


# -- pair probing and refinement -------------------------------------------------


def probe_pair(g: Graph, u: int, v: int) -> PairWitness:
    """Classify a good pair as strong, or report the first component of the
    remainder (lowest-id seeding) when some component misses a common neighbour."""
    if u == v or g.has_edge(u, v):
        raise ValueError("u and v must be distinct and non-adjacent")
    commons = set(g.adj[u]) & set(g.adj[v])
    if not commons:
        raise ValueError("u and v have no common neighbour (not a good pair)")
    comps = components_without(g, (u, v))
    if all(commons.intersection(comp) for comp in comps):
        return PairWitness(u, v, "strong")
    return PairWitness(u, v, "good_with_component", frozenset(comps[0]))


def _good_pairs_in(g: Graph, c_sorted: list[int]):
    for i in range(len(c_sorted)):
        a = c_sorted[i]
        for j in range(i + 1, len(c_sorted)):
            b = c_sorted[j]
            if not g.has_edge(a, b) and set(g.adj[a]) & set(g.adj[b]):
                yield (a, b)


def refine_pair(g: Graph, k: int, u: int, v: int, c) -> tuple[int, int] | StructuralCase:
    """Pick a good pair inside component c keeping u and v together, or report
    the structural case (quasiclique / lock) the search proves must exist."""
    c_set = frozenset(c)
    if g.has_edge(u, v):
        raise ValueError("u and v must be non-adjacent")
    commons = set(g.adj[u]) & set(g.adj[v])
    if not commons:
        raise ValueError("u and v have no common neighbour")
    c_sorted = sorted(c_set)
    commons_in = sorted(commons & c_set)
    commons_out = commons - c_set

    if commons_out or len(commons_in) >= 3:
        pair = next(_good_pairs_in(g, c_sorted), None)
        if pair is None:
            raise InternalInvariantError("component unexpectedly contains no good pair")
        return pair

    if len(commons_in) == 2:
        t1, t2 = commons_in
        pair = next(
            (p for p in _good_pairs_in(g, c_sorted) if set(p) != {t1, t2}), None
        )
        if pair is not None:
            return pair
        # only good pair is {t1, t2}: c is a clique minus that edge on k vertices
        if len(c_sorted) != k or _missing_pairs(g, c_sorted) != [(t1, t2)]:
            raise InternalInvariantError("two-common-neighbour dead end is not K_k minus an edge")
        others = [y for y in c_sorted if y not in (t1, t2)]
        to_u = [y for y in others if g.has_edge(u, y)]
        to_v = [y for y in others if g.has_edge(v, y)]
        if len(to_u) == len(others):
            return StructuralCase("quasiclique", c_set | {u}, t1, t2)
        if len(to_v) == len(others):
            return StructuralCase("quasiclique", c_set | {v}, t1, t2)
        return (t1, t2)  # the remainder stays connected through u and v

    if len(commons_in) == 1:
        t = commons_in[0]
        pair = next((p for p in _good_pairs_in(g, c_sorted) if t not in p), None)
        if pair is not None:
            return pair
        # every good pair uses t: c is a (u, v)-lock
        rest = [y for y in c_sorted if y != t]
        if len(rest) != k or _missing_pairs(g, rest):
            raise InternalInvariantError("one-common-neighbour dead end is not a lock core")
        non_t = sorted(y for y in rest if not g.has_edge(t, y))
        if len(non_t) != 2:
            raise InternalInvariantError("lock core must miss exactly two edges at t")
        w, x = non_t
        lock = LockWitness(c_set, u, v, t, w, x)
        return StructuralCase("lock", c_set, u, v, lock)

    raise InternalInvariantError("good pair has no common neighbour anywhere")


# -- the main decomposition -------------------------------------------------------


def _initial_good_pair(g: Graph) -> tuple[int, int]:
    u = 0
    nbrs = set(g.adj[u])
    second = sorted({w for nb in g.adj[u] for w in g.adj[nb]} - nbrs - {u})
    for v in second:
        return u, v
    raise InternalInvariantError("connected regular non-complete graph lacks a good pair")


def _structural_checks(g: Graph, k: int, u: int, v: int, comp: list[int]):
    """Lines 4-6: quasiclique, clique-with-small-neighbourhood, lock."""
    c_set = set(comp)
    for extra in ((u,), (v,), (u, v)):
        s = sorted(c_set | set(extra))
        if len(s) == k + 1:
            missing = _missing_pairs(g, s)
            if len(missing) == 1:
                return ("quasiclique", frozenset(s), missing[0][0], missing[0][1])
    if len(comp) == k and not _missing_pairs(g, comp):
        outside = {w for x in comp for w in g.adj[x] if w not in c_set}
        if outside == {u, v}:
            return ("clique", frozenset(comp), None, None)
    lock = _detect_lock(g, comp, u, v)
    if lock is not None:
        return ("lock", lock, None, None)
    return None


def _detect_lock(g: Graph, comp: list[int], u: int, v: int) -> LockWitness | None:
    if len(comp) < 4:
        return None
    c_set = frozenset(comp)
    outside = {w for x in comp for w in g.adj[x] if w not in c_set}
    if outside != {u, v}:
        return None
    for t in comp:
        if not (g.has_edge(u, t) and g.has_edge(v, t)):
            continue
        rest = [y for y in comp if y != t]
        if _missing_pairs(g, rest):
            continue
        non_t = sorted(y for y in rest if not g.has_edge(t, y))
        if len(non_t) != 2:
            continue
        w, x = non_t
        if (g.has_edge(u, w) + g.has_edge(v, w)) != 1:
            continue
        if (g.has_edge(u, x) + g.has_edge(v, x)) != 1:
            continue
        return LockWitness(c_set, u, v, t, w, x)
    return None


def _decompose_regular(g: Graph, k: int, trace: list | None) -> Decomposition:
    """Algorithm for a connected k-regular component that is not K_{k+1}."""
    u, v = _initial_good_pair(g)
    comp: list[int] | None = None  # working component of G - {u, v}, once known
    for iteration in range(g.n + 1):
        witness = probe_pair(g, u, v)
        if witness.kind == "strong":
            if trace is not None:
                trace.append({"iter": iteration, "u": u, "v": v, "case": "strong",
                              "component_size": g.n - 2})
            return via_strong_pair(g, k, u, v)
        if comp is None:
            # first pass: take the component holding the lowest common neighbour
            commons = set(g.adj[u]) & set(g.adj[v])
            comps = components_without(g, (u, v))
            lowest_common = min(commons)
            comp = next(c for c in comps if lowest_common in c)
        found = _structural_checks(g, k, u, v, comp)
        if found is not None:
            kind, payload, p, q = found
            if trace is not None:
                trace.append({"iter": iteration, "u": u, "v": v, "case": kind,
                              "component_size": len(comp)})
            if kind == "quasiclique":
                return via_quasiclique(g, k, payload, p, q)
            if kind == "clique":
                return via_clique(g, k, payload)
            return via_lock(g, k, payload)
        refined = refine_pair(g, k, u, v, comp)
        if isinstance(refined, StructuralCase):
            if trace is not None:
                trace.append({"iter": iteration, "u": u, "v": v,
                              "case": refined.kind, "component_size": len(comp)})
            if refined.kind == "quasiclique":
                return via_quasiclique(g, k, refined.c_set, refined.u, refined.v)
            return via_lock(g, k, refined.lock)
        if trace is not None:
            trace.append({"iter": iteration, "u": u, "v": v, "case": "refine",
                          "component_size": len(comp)})
        new_u, new_v = refined
        comps2 = components_without(g, (new_u, new_v))
        if len(comps2) == 1:
            comp = None  # remainder connected: the next probe reports a strong pair
        else:
            # keep a component that avoids the old pair: it lies strictly inside comp
            new_comp = next(c for c in comps2 if u not in c)
            if not set(new_comp) < set(comp):
                raise InternalInvariantError("refined component is not strictly inside the old one")
            comp = new_comp
        u, v = new_u, new_v
    raise InternalInvariantError("refinement loop failed to terminate")


def decompose_k(g: Graph, k: int, trace: list | None = None) -> Decomposition:
    """Decomposition (A independent, G[B] (k-2)-degenerate) for max degree <= k.

    Raises ForbiddenCliqueError when some component is K_{k+1}.  Pass a list
    as ``trace`` to collect per-iteration records of the regular-component loop.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if g.max_degree() > k:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds {k}")
    comps, offenders = components_and_forbidden_clique_check(g, k)
    if offenders:
        raise ForbiddenCliqueError(k, offenders)
    a_all: set[int] = set()
    b_all: set[int] = set()
    for comp in comps:
        sub, old_ids = g.induced(comp)
        if any(sub.degree(x) < k for x in range(sub.n)):
            root = min(x for x in range(sub.n) if sub.degree(x) < k)
            order = reverse_bfs_order(sub, root)
            d = greedy_from_order(sub, order, k)
        else:
            d = _decompose_regular(sub, k, trace)
        a_all.update(old_ids[x] for x in d.a_set)
        b_all.update(old_ids[x] for x in d.b_set)
    return Decomposition(frozenset(a_all), frozenset(b_all), k)


def maximalize_a(g: Graph, d: Decomposition) -> Decomposition:
    """Move vertices from B to A (ascending id) until A is maximal independent.

    B only shrinks, so G[B] stays (k-2)-degenerate.
    """
    if not verify_decomposition(g, d.k, d):
        raise ValueError("input decomposition is invalid")
    a = set(d.a_set)
    b = set(d.b_set)
    for v in sorted(b):
        if not any(w in a for w in g.adj[v]):
            b.discard(v)
            a.add(v)
    return Decomposition(frozenset(a), frozenset(b), d.k)
