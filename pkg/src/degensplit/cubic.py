"""Linear-time near-bipartite decomposition of graphs with maximum degree 3.

The algorithm repeatedly applies the first applicable of nine local reduction
rules at the lowest-id live vertex until the graph is empty, then replays the
rules backwards while growing a 2-colouring in which colour 1 is an
independent set and colour 2 induces a forest.  Every connected subcubic
graph except K_4 admits such a colouring, so inputs with a K_4 component are
rejected up front.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import (
    Decomposition,
    ForbiddenCliqueError,
    Graph,
    InternalInvariantError,
    components_and_forbidden_clique_check,
)

BALL_RADIUS = 4
BALL_SIZE_LIMIT = 1 + 3 + 9 + 27 + 81  # 121 vertices in a subcubic radius-4 ball


@dataclass(frozen=True, slots=True)
class RuleRecord:
    """One reduction step: enough to invert it and extend a colouring.

    ``removed`` lists (vertex, live neighbours at removal time) in removal
    order; ``added_edges`` is non-empty only for rules 6 (one edge) and 9
    (three pairwise-distinct edges).
    """

    rule_id: int
    pivot: int
    removed: tuple[tuple[int, tuple[int, ...]], ...]
    added_edges: tuple[tuple[int, int], ...] = ()
    role_labels: dict = field(default_factory=dict)


class _Work:
    """Mutable adjacency lists plus alive flags; supports exact undo."""

    __slots__ = ("n", "adj", "alive", "live_count")

    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = [list(g.adj[v]) for v in range(g.n)]
        self.alive = bytearray(b"\x01") * g.n
        self.live_count = g.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def remove_vertex(self, v: int) -> tuple[int, ...]:
        nbrs = tuple(sorted(self.adj[v]))
        for w in nbrs:
            self.adj[w].remove(v)
        self.adj[v] = []
        self.alive[v] = 0
        self.live_count -= 1
        return nbrs

    def restore_vertex(self, v: int, nbrs: tuple[int, ...]) -> None:
        self.adj[v] = list(nbrs)
        for w in nbrs:
            self.adj[w].append(v)
        self.alive[v] = 1
        self.live_count += 1

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u].append(v)
        self.adj[v].append(u)

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].remove(v)
        self.adj[v].remove(u)

    def to_graph(self) -> Graph:
        return Graph(self.n, [(u, v) for u in range(self.n) for v in self.adj[u] if u < v])


def _ball(work: _Work, u: int, radius: int) -> dict[int, int]:
    """Distances of vertices within ``radius`` of u in the current graph."""
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == radius:
            continue
        for w in work.adj[x]:
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def _ball3_or_low_degree(work: _Work, u: int):
    """BFS to distance 3; stops at the first low-degree vertex discovered.

    Returns (None, v) when a vertex v != u of degree <= 2 turns up (rule 2
    fires on the earliest one in BFS order), else (distance map, None).
    """
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == 3:
            continue
        for w in work.adj[x]:
            if w not in dist:
                if len(work.adj[w]) <= 2:
                    return None, w
                dist[w] = d + 1
                queue.append(w)
    return dist, None


def _in_triangle(work: _Work, v: int) -> bool:
    nbrs = work.adj[v]
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if work.has_edge(nbrs[i], nbrs[j]):
                return True
    return False


def _is_induced_claw_centre(work: _Work, v: int) -> bool:
    return work.degree(v) == 3 and not _in_triangle(work, v)


def _assert_no_k4_on_edge(work: _Work, a: int, b: int) -> None:
    common = sorted(set(work.adj[a]) & set(work.adj[b]))
    for i in range(len(common)):
        for j in range(i + 1, len(common)):
            if work.has_edge(common[i], common[j]):
                raise InternalInvariantError(
                    f"edge addition ({a}, {b}) created a K_4 with {common[i]}, {common[j]}"
                )


# -- rule-8 patterns ----------------------------------------------------------
# Pattern vertex 0 is the anchor u.  Each pattern lists its edges and the
# index sets coloured 1 (independent) and 2 (forest) when the rule is undone.

_H1_EDGES = ((0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (4, 6), (5, 6))
_H1_ROLES = ("u", "u1", "u2", "v1", "v2", "v3", "w")
_H1_ONES = (4, 5)

_H2_EDGES = (
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 5),
    (2, 6), (3, 6), (3, 7), (4, 6), (5, 7), (4, 7),
)
_H2_ROLES = ("u", "u1", "u2", "u3", "t1", "t2", "t3", "t4")
_H2_ONES = (3, 4, 5)

_H3_EDGES = (
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 5),
    (2, 6), (3, 4), (3, 6), (4, 7), (5, 7), (6, 7),
)
_H3_ROLES = ("u", "u1", "u2", "u3", "t1", "t2", "t3", "t4")
_H3_ONES = (1, 2, 3)

_PATTERNS = (
    ("H1", _H1_EDGES, _H1_ROLES, _H1_ONES),
    ("H2", _H2_EDGES, _H2_ROLES, _H2_ONES),
    ("H3", _H3_EDGES, _H3_ROLES, _H3_ONES),
)


def _pattern_tables(edges: tuple[tuple[int, int], ...], nverts: int):
    adj = [[] for _ in range(nverts)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    # search order: anchor first, then each new vertex adjacent to a placed one
    order = [0]
    placed = {0}
    while len(order) < nverts:
        for q in range(nverts):
            if q not in placed and any(r in placed for r in adj[q]):
                order.append(q)
                placed.add(q)
                break
    anchors = []  # for each search position: (placed pattern-nbrs, placed non-nbrs)
    for idx, q in enumerate(order):
        before = order[:idx]
        anchors.append(
            ([r for r in before if r in adj[q]], [r for r in before if r not in adj[q]])
        )
    return adj, order, anchors


_PATTERN_TABLES = {name: _pattern_tables(edges, len(roles)) for name, edges, roles, _ in _PATTERNS}


def _find_anchored(work: _Work, u: int, name: str, allowed: set[int]) -> dict[int, int] | None:
    """Smallest injective subgraph embedding of the pattern with vertex 0 at u.

    In a subcubic host a match is automatically induced: every pattern vertex
    except the anchor has pattern-degree 3.
    """
    _, order, anchors = _PATTERN_TABLES[name]
    nverts = len(order)
    image = [-1] * nverts  # pattern id -> host vertex
    used: set[int] = set()

    def place(idx: int) -> bool:
        if idx == nverts:
            return True
        q = order[idx]
        nbrs_placed, _ = anchors[idx]
        base = image[nbrs_placed[0]]
        for cand in work.adj[base]:
            if cand in used or cand not in allowed:
                continue
            if any(not work.has_edge(cand, image[r]) for r in nbrs_placed[1:]):
                continue
            image[q] = cand
            used.add(cand)
            if place(idx + 1):
                return True
            used.discard(cand)
            image[q] = -1
        return False

    if u not in allowed:
        return None
    image[0] = u
    used.add(u)
    if place(1):
        return {q: image[q] for q in range(nverts)}
    return None


# -- forward rules --------------------------------------------------------------


def _record_removal(work: _Work, rule_id: int, pivot: int, victims: list[int],
                    added: tuple[tuple[int, int], ...] = (), roles: dict | None = None) -> RuleRecord:
    removed = tuple((v, work.remove_vertex(v)) for v in victims)
    for a, b in added:
        work.add_edge(a, b)
    return RuleRecord(rule_id, pivot, removed, added, roles or {})


def _try_rule1(work: _Work, u: int) -> RuleRecord | None:
    if work.degree(u) <= 2:
        return _record_removal(work, 1, u, [u], roles={"u": u})
    return None


def _try_rule3(work: _Work, u: int, dist: dict[int, int]) -> RuleRecord | None:
    ball3 = sorted(v for v, d in dist.items() if d <= 3)
    in_ball = set(ball3)
    for a in ball3:
        for b in work.adj[a]:
            if b <= a or b not in in_ball:
                continue
            common = sorted(set(work.adj[a]) & set(work.adj[b]))
            for i in range(len(common)):
                p = common[i]
                if p not in in_ball:
                    continue
                for j in range(i + 1, len(common)):
                    q = common[j]
                    if q not in in_ball:
                        continue
                    if work.has_edge(p, q):
                        raise InternalInvariantError(
                            f"K_4 found on {a},{b},{p},{q} during reduction"
                        )
                    roles = {"v": a, "w": b, "x": p, "y": q}
                    return _record_removal(work, 3, u, [a, b, p, q], roles=roles)
    return None


def _try_rule4(work: _Work, u: int, dist: dict[int, int]) -> RuleRecord | None:
    ball2 = sorted(v for v, d in dist.items() if d <= 2)
    for i in range(len(ball2)):
        a = ball2[i]
        na = sorted(work.adj[a])
        for j in range(i + 1, len(ball2)):
            b = ball2[j]
            if sorted(work.adj[b]) == na and b not in na:
                victims = [a, b] + na
                roles = {"u1": a, "u2": b, "common": tuple(na)}
                return _record_removal(work, 4, u, victims, roles=roles)
    return None


def _component_up_to(work: _Work, u: int, limit: int) -> list[int] | None:
    """Vertices of u's component, or None once more than ``limit`` are seen."""
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in work.adj[x]:
            if w not in seen:
                seen.add(w)
                if len(seen) > limit:
                    return None
                queue.append(w)
    return sorted(seen)


def _try_rule5(work: _Work, u: int) -> RuleRecord | None:
    comp = _component_up_to(work, u, 6)
    if comp is None or len(comp) != 6 or any(work.degree(v) != 3 for v in comp):
        return None
    if not _in_triangle(work, comp[0]):
        return None  # the other cubic graph on 6 vertices is K_{3,3}
    c0 = comp[0]
    tri_a = None
    nbrs = work.adj[c0]
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if work.has_edge(nbrs[i], nbrs[j]):
                tri_a = (c0, min(nbrs[i], nbrs[j]), max(nbrs[i], nbrs[j]))
                break
        if tri_a:
            break
    if tri_a is None:
        return None
    tri_b = tuple(sorted(set(comp) - set(tri_a)))
    if not all(work.has_edge(a, b) for a in tri_b for b in tri_b if a < b):
        return None
    matching = {}
    for a in tri_a:
        partners = [b for b in tri_b if work.has_edge(a, b)]
        if len(partners) != 1:
            return None
        matching[a] = partners[0]
    # colour 1 on the lowest vertex of each triangle, avoiding the matched pair
    one_a = tri_a[0]
    one_b = min(b for b in tri_b if b != matching[one_a])
    roles = {"triangle_a": tri_a, "triangle_b": tri_b,
             "matching": tuple(sorted(matching.items())), "ones": (one_a, one_b)}
    return _record_removal(work, 5, u, list(comp), roles=roles)


def _try_rule6(work: _Work, u: int) -> RuleRecord | None:
    nbrs = work.adj[u]
    tri = None
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if work.has_edge(nbrs[i], nbrs[j]):
                tri = (u, min(nbrs[i], nbrs[j]), max(nbrs[i], nbrs[j]))
                break
        if tri:
            break
    if tri is None:
        return None
    outs = {}
    for t in tri:
        outside = [w for w in work.adj[t] if w not in tri]
        if len(outside) != 1:
            raise InternalInvariantError(f"triangle vertex {t} lacks a unique outside neighbour")
        outs[t] = outside[0]
    if len(set(outs.values())) != 3:
        raise InternalInvariantError("triangle outside-neighbours not pairwise distinct")
    pairs = sorted(
        (min(outs[a], outs[b]), max(outs[a], outs[b]), a, b)
        for a in tri
        for b in tri
        if a < b
    )
    chosen = next(((p, q, a, b) for p, q, a, b in pairs if not work.has_edge(p, q)), None)
    if chosen is None:
        raise InternalInvariantError("all triangle outside-neighbours pairwise adjacent")
    xp, yp, ta, tb = chosen
    x = ta if outs[ta] == xp else tb
    y = tb if x == ta else ta
    u_role = next(t for t in tri if t not in (x, y))
    roles = {"x": x, "y": y, "u": u_role, "x_out": xp, "y_out": yp, "u_out": outs[u_role]}
    rec = _record_removal(work, 6, u, list(tri), added=((xp, yp),), roles=roles)
    _assert_no_k4_on_edge(work, xp, yp)
    return rec


def _try_rules_1_to_6(work: _Work, u: int) -> RuleRecord | None:
    # Rules 2-6 only inspect vertices within distance 3 of their pivot, so the
    # examined set stays inside the radius-4 ball of the original pivot even
    # under a rule-7 dispatch (121-vertex bound; see examined_ball).
    rec = _try_rule1(work, u)
    if rec:
        return rec
    dist, low = _ball3_or_low_degree(work, u)
    if low is not None:
        return _record_removal(work, 2, u, [low], roles={"v": low})
    for attempt in (_try_rule3, _try_rule4):
        rec = attempt(work, u, dist)
        if rec:
            return rec
    rec = _try_rule5(work, u)
    if rec:
        return rec
    return _try_rule6(work, u)


def _try_rule8(work: _Work, u: int, dist: dict[int, int]) -> RuleRecord | None:
    ball3 = {v for v, d in dist.items() if d <= 3}
    for name, _, role_names, ones in _PATTERNS:
        if name != "H1":
            comp = _component_up_to(work, u, 8)
            if comp is None or len(comp) != 8:
                continue
        image = _find_anchored(work, u, name, ball3)
        if image is None:
            continue
        victims = [image[q] for q in range(len(role_names))]
        roles = {"pattern": name}
        roles.update({role_names[q]: image[q] for q in range(len(role_names))})
        roles["ones"] = tuple(image[q] for q in ones)
        return _record_removal(work, 8, u, victims, roles=roles)
    return None


def _try_rule9(work: _Work, u: int) -> RuleRecord | None:
    if not _is_induced_claw_centre(work, u):
        raise InternalInvariantError(f"rule 9 reached but {u} is not an induced claw centre")
    u1, u2, u3 = work.adj[u]
    new_edges = []
    for ui in (u1, u2, u3):
        if not _is_induced_claw_centre(work, ui):
            raise InternalInvariantError(f"rule 9 reached but neighbour {ui} is not a claw centre")
        a, b = sorted(w for w in work.adj[ui] if w != u)
        new_edges.append((a, b))
    if len(set(new_edges)) != 3:
        raise InternalInvariantError("rule 9 produced coincident new edges")
    roles = {"u": u, "u1": u1, "u2": u2, "u3": u3, "new_edges": tuple(new_edges)}
    rec = _record_removal(work, 9, u, [u, u1, u2, u3], added=tuple(new_edges), roles=roles)
    for a, b in new_edges:
        _assert_no_k4_on_edge(work, a, b)
    return rec


def examined_ball(g: Graph, u: int) -> list[int]:
    """The radius-4 ball around u: a superset of everything any rule inspects."""
    work = _Work(g)
    dist = _ball(work, u, BALL_RADIUS)
    return sorted(dist)


def _apply_first(work: _Work, u: int) -> RuleRecord:
    if not (0 <= u < work.n) or not work.alive[u]:
        raise ValueError(f"vertex {u} is not live")
    rec = _try_rule1(work, u)
    if rec:
        return rec
    dist, low = _ball3_or_low_degree(work, u)
    if low is not None:
        return _record_removal(work, 2, u, [low], roles={"v": low})
    for attempt in (_try_rule3, _try_rule4):
        rec = attempt(work, u, dist)
        if rec:
            return rec
    rec = _try_rule5(work, u)
    if rec:
        return rec
    rec = _try_rule6(work, u)
    if rec:
        return rec
    # rule 7: u is now an induced claw centre; dispatch to a triangle neighbour
    for v in work.adj[u]:
        if _in_triangle(work, v):
            rec = _try_rules_1_to_6(work, v)
            if rec is None:
                raise InternalInvariantError(f"rule 7 dispatch found no rule at {v}")
            return rec
    rec = _try_rule8(work, u, dist)
    if rec:
        return rec
    rec = _try_rule9(work, u)
    if rec:
        return rec
    raise InternalInvariantError(f"no rule applicable at vertex {u}")


# -- public forward operations ---------------------------------------------------


def _validate_subcubic(g: Graph) -> None:
    if g.max_degree() > 3:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds 3")


def _reject_k4_components(g: Graph) -> None:
    """Flat local scan: a K_4 component is a degree-3 vertex whose three
    neighbours are pairwise adjacent.  Exact component indices are only
    computed on the (cold) error path."""
    for v in range(g.n):
        nbrs = g.adj[v]
        if len(nbrs) != 3:
            continue
        a, b, c = nbrs
        if b in g.adj[a] and c in g.adj[a] and c in g.adj[b]:
            _, offenders = components_and_forbidden_clique_check(g, 3)
            raise ForbiddenCliqueError(3, offenders)


def apply_first_rule(g: Graph, u: int) -> tuple[Graph, RuleRecord]:
    """Apply the first applicable rule at u; returns the reduced graph and record."""
    _validate_subcubic(g)
    _reject_k4_components(g)
    work = _Work(g)
    rec = _apply_first(work, u)
    return work.to_graph(), rec


def reduce_to_empty(g: Graph) -> list[RuleRecord]:
    """Run rules at the lowest-id live vertex until no vertex remains."""
    _validate_subcubic(g)
    _reject_k4_components(g)
    work = _Work(g)
    records: list[RuleRecord] = []
    cursor = 0
    while work.live_count:
        while not work.alive[cursor]:
            cursor += 1
        records.append(_apply_first(work, cursor))
    return records


# -- undo with colour extension ---------------------------------------------------

_ONE, _TWO = 1, 2


def _undo_structure(work: _Work, rec: RuleRecord) -> None:
    for a, b in rec.added_edges:
        work.remove_edge(a, b)
    for v, nbrs in reversed(rec.removed):
        work.restore_vertex(v, nbrs)


def _colour_low_degree(work: _Work, colour: dict[int, int], v: int) -> None:
    if all(colour[w] == _TWO for w in work.adj[v]):
        colour[v] = _ONE
    else:
        colour[v] = _TWO


def _extend_colour(work: _Work, rec: RuleRecord, colour: dict[int, int]) -> None:
    """Assign colours to the vertices re-added by undoing ``rec``.

    ``work`` is the subsequent graph (undo already applied); survivor colours
    are never changed.
    """
    rule = rec.rule_id
    if rule in (1, 2):
        _colour_low_degree(work, colour, rec.removed[0][0])
    elif rule == 3:
        r = rec.role_labels
        v, w, x, y = r["v"], r["w"], r["x"], r["y"]
        tips_outside = [z for t in (x, y) for z in work.adj[t] if z not in (v, w)]
        if all(colour[z] == _TWO for z in tips_outside):
            colour[x] = colour[y] = _ONE
            colour[v] = colour[w] = _TWO
        else:
            colour[min(v, w)] = _ONE
            colour[max(v, w)] = _TWO
            colour[x] = colour[y] = _TWO
    elif rule == 4:
        r = rec.role_labels
        colour[r["u1"]] = colour[r["u2"]] = _ONE
        for w in r["common"]:
            colour[w] = _TWO
    elif rule == 5:
        r = rec.role_labels
        ones = set(r["ones"])
        for v, _ in rec.removed:
            colour[v] = _ONE if v in ones else _TWO
    elif rule == 6:
        r = rec.role_labels
        x, y, u_role = r["x"], r["y"], r["u"]
        cx, cy, cu = colour[r["x_out"]], colour[r["y_out"]], colour[r["u_out"]]
        if cx == _TWO and cy == _TWO and cu == _TWO:
            colour[u_role] = _ONE
            colour[x] = colour[y] = _TWO
        elif cx == _TWO and cy == _TWO:
            colour[x] = _ONE
            colour[y] = colour[u_role] = _TWO
        else:
            if cx == _ONE and cy == _ONE:
                raise InternalInvariantError("added-edge endpoints both coloured 1")
            one_tip = y if cx == _ONE else x
            other_tip = x if one_tip == y else y
            colour[one_tip] = _ONE
            colour[other_tip] = colour[u_role] = _TWO
    elif rule == 8:
        ones = set(rec.role_labels["ones"])
        for v, _ in rec.removed:
            colour[v] = _ONE if v in ones else _TWO
    elif rule == 9:
        r = rec.role_labels
        colour[r["u"]] = _ONE
        for ui in (r["u1"], r["u2"], r["u3"]):
            colour[ui] = _TWO
    else:
        raise InternalInvariantError(f"unknown rule id {rule}")


def is_nb_colouring(g: Graph, colour: dict[int, int], partial: bool = False) -> bool:
    """True iff colour-1 vertices are independent and colour-2 ones induce a forest.

    With ``partial=True`` the colouring may cover only part of the vertex set,
    but every edge of ``g`` must join two coloured vertices (uncoloured
    vertices stand for removed ones and must be isolated).
    """
    from .graph import components

    if any(c not in (1, 2) for c in colour.values()):
        return False
    if not partial and set(colour) != set(range(g.n)):
        return False
    for u, v in g.edges():
        if u not in colour or v not in colour:
            return False
        if colour[u] == _ONE and colour[v] == _ONE:
            return False
    twos = [v in colour and colour[v] == _TWO for v in range(g.n)]
    sub, _ = g.induced([v for v in range(g.n) if twos[v]])
    return sub.m == sub.n - len(components(sub))


def undo_and_extend(record: RuleRecord, g_prior: Graph, c: dict[int, int]) -> dict[int, int]:
    """Invert one rule on ``g_prior`` and extend ``c`` over the restored vertices.

    ``g_prior`` is the graph before the undo, on the full vertex-id space:
    vertices removed by this or later rules appear isolated and uncoloured.
    ``c`` must satisfy the colouring invariants on its coloured part (checked;
    fail fast on violation).  The result colours the subsequent graph.  This
    validating wrapper is O(n); the internal replay in decompose_subcubic
    skips the validation to stay linear overall.
    """
    if not is_nb_colouring(g_prior, c, partial=True):
        raise ValueError("colouring is not valid for the prior graph")
    for v, _ in record.removed:
        if v in c:
            raise ValueError(f"vertex {v} to be restored is already coloured")
        if g_prior.degree(v) != 0:
            raise ValueError(f"vertex {v} to be restored is not absent from the prior graph")
    work = _Work(g_prior)
    colour = dict(c)
    _undo_structure(work, record)
    _extend_colour(work, record, colour)
    return colour


def decompose_subcubic(g: Graph) -> Decomposition:
    """Near-bipartite decomposition (A independent, B a forest) in linear time.

    Raises ForbiddenCliqueError when some component is K_4 and ValueError when
    the maximum degree exceeds 3.
    """
    _validate_subcubic(g)
    _reject_k4_components(g)
    work = _Work(g)
    records: list[RuleRecord] = []
    cursor = 0
    while work.live_count:
        while not work.alive[cursor]:
            cursor += 1
        records.append(_apply_first(work, cursor))
    colour = [0] * g.n
    for rec in reversed(records):
        _undo_structure(work, rec)
        _extend_colour(work, rec, colour)
    a_set = frozenset(v for v in range(g.n) if colour[v] == _ONE)
    b_set = frozenset(v for v in range(g.n) if colour[v] == _TWO)
    if len(a_set) + len(b_set) != g.n:
        raise InternalInvariantError("replay did not colour every vertex")
    return Decomposition(a_set, b_set, 3)


def rule_trace(records: list[RuleRecord]) -> list[dict]:
    """JSON-friendly trace rows for the --trace debug flag."""
    return [
        {
            "rule": rec.rule_id,
            "pivot": rec.pivot,
            "removed": [v for v, _ in rec.removed],
            "added": [list(e) for e in rec.added_edges],
        }
        for rec in records
    ]
