"""Recolouring paths between (maxdeg+1)-colourings.

A step recolours one vertex; every intermediate colouring must stay proper.
The core subroutine ("compact") shrinks the class of vertices wearing the
spare colour maxdeg+1 by at least one, in linear time, via Kempe-component
surgery.  The path finder repeatedly compacts both endpoint colourings down
to maxdeg-colourings, splits the graph into an independent set plus a
low-degeneracy part, parks the independent set on the spare colour, and
recurses on the rest with one colour fewer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, InternalInvariantError, components
from .kdegen import decompose_k, maximalize_a

LOCKED = "locked"
FREE = "free"
SUPERFREE = "superfree"

# A path longer than this factor times n^2 signals a bug, not a long answer.
MAX_PATH_LENGTH_FACTOR = 20

RecolourStep = tuple[int, int]  # (vertex, new colour)


@dataclass(frozen=True, slots=True)
class Colouring:
    """Colour assignment with colours[v] in 1..k."""

    colours: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(not 1 <= c <= self.k for c in self.colours):
            raise ValueError("colours must lie in 1..k")

    def is_proper(self, g: Graph) -> bool:
        if len(self.colours) != g.n:
            return False
        return all(self.colours[u] != self.colours[v] for u, v in g.edges())


@dataclass(frozen=True, slots=True)
class StatusReport:
    statuses: tuple[str, ...]
    l_set: tuple[int, ...]


class FrozenColouringError(ValueError):
    """No vertex can be recoloured: the colouring is isolated in the
    reconfiguration graph."""


class UnsupportedRegimeError(ValueError):
    """The (k, maxdeg) combination falls outside the supported k = maxdeg+1 case."""


def _check_colouring(g: Graph, c: Colouring, delta: int) -> None:
    if c.k != delta + 1:
        raise ValueError(f"colouring must use exactly {delta + 1} colours, has k={c.k}")
    if g.max_degree() > delta:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds {delta}")
    if not c.is_proper(g):
        raise ValueError("colouring is not proper")


def classify(g: Graph, c: Colouring, delta: int) -> StatusReport:
    """Vertex statuses: locked (delta distinct neighbour colours), else free;
    superfree when some colour other than delta+1 misses the closed
    neighbourhood.  Also reports the spare-coloured vertex set."""
    _check_colouring(g, c, delta)
    cols = c.colours
    statuses = []
    for v in range(g.n):
        nbr_cols = {cols[w] for w in g.adj[v]}
        if len(nbr_cols) == delta:
            statuses.append(LOCKED)
        else:
            closed = nbr_cols | {cols[v]}
            superfree = any(col not in closed for col in range(1, delta + 1))
            statuses.append(SUPERFREE if superfree else FREE)
    l_set = tuple(v for v in range(g.n) if cols[v] == delta + 1)
    return StatusReport(tuple(statuses), l_set)


def is_frozen(g: Graph, c: Colouring, delta: int) -> bool:
    """True iff no vertex is free (isolated vertex of the reconfiguration graph)."""
    report = classify(g, c, delta)
    return all(s == LOCKED for s in report.statuses)


def kempe_component(g: Graph, c: Colouring, v: int, j: int, l: int) -> frozenset[int]:
    """The connected component of v in the subgraph induced by colours {j, l}."""
    if j == l:
        raise ValueError("the two colours must differ")
    if c.colours[v] not in (j, l):
        raise ValueError(f"vertex {v} wears colour {c.colours[v]}, not {j} or {l}")
    cols = c.colours
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in g.adj[x]:
            if w not in seen and cols[w] in (j, l):
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


# -- mutable working state --------------------------------------------------------


class _State:
    """Colours plus the recorded steps; every step is properness-checked."""

    __slots__ = ("g", "cols", "k", "steps")

    def __init__(self, g: Graph, colours, k: int):
        self.g = g
        self.cols = list(colours)
        self.k = k
        self.steps: list[RecolourStep] = []

    def rec(self, v: int, colour: int) -> None:
        if colour == self.cols[v] or not 1 <= colour <= self.k:
            raise InternalInvariantError(f"bad step ({v} -> {colour})")
        for w in self.g.adj[v]:
            if self.cols[w] == colour:
                raise InternalInvariantError(
                    f"step ({v} -> {colour}) collides with neighbour {w}"
                )
        self.cols[v] = colour
        self.steps.append((v, colour))

    def snapshot(self) -> tuple[list[int], int]:
        return list(self.cols), len(self.steps)

    def rollback(self, snap: tuple[list[int], int]) -> None:
        self.cols = list(snap[0])
        del self.steps[snap[1]:]

    def nbr_colours(self, v: int) -> set[int]:
        return {self.cols[w] for w in self.g.adj[v]}

    def free(self, v: int, delta: int) -> bool:
        return len(self.nbr_colours(v)) < delta

    def superfree(self, v: int, delta: int) -> bool:
        closed = self.nbr_colours(v) | {self.cols[v]}
        return any(col not in closed for col in range(1, delta + 1))

    def l_set(self, delta: int) -> list[int]:
        return [v for v in range(self.g.n) if self.cols[v] == delta + 1]

    def spare_escape(self, v: int, delta: int) -> int:
        """Smallest colour <= delta absent from the closed neighbourhood."""
        closed = self.nbr_colours(v) | {self.cols[v]}
        for col in range(1, delta + 1):
            if col not in closed:
                return col
        raise InternalInvariantError(f"vertex {v} has no escape colour")

    def comp(self, v: int, j: int, l: int) -> set[int]:
        cols = self.cols
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for w in self.g.adj[x]:
                if w not in seen and cols[w] in (j, l):
                    seen.add(w)
                    queue.append(w)
        return seen

    def unique_nbr_with_colour(self, v: int, colour: int) -> int:
        hits = [w for w in self.g.adj[v] if self.cols[w] == colour]
        if len(hits) != 1:
            raise InternalInvariantError(
                f"vertex {v} has {len(hits)} neighbours of colour {colour}, expected 1"
            )
        return hits[0]

    def swap(self, members: set[int], transit: int, other: int, delta: int) -> None:
        """Exchange colours transit <-> other on a (transit, other)-component.

        The transit side passes through the spare colour delta+1, so none of
        its members may touch a spare-coloured vertex; the other side moves
        directly and never wears the spare.
        """
        spare = delta + 1
        transit_members = sorted(v for v in members if self.cols[v] == transit)
        other_members = sorted(v for v in members if self.cols[v] == other)
        if len(transit_members) + len(other_members) != len(members):
            raise InternalInvariantError("swap set is not two-coloured")
        for v in transit_members:
            self.rec(v, spare)
        for v in other_members:
            self.rec(v, transit)
        for v in transit_members:
            self.rec(v, other)


# -- public swap --------------------------------------------------------------


def swap_via_spare(
    g: Graph, c: Colouring, d_comp, j: int, l: int
) -> tuple[list[RecolourStep], Colouring]:
    """Swap colours j and l on a whole (j, l)-component via the spare colour.

    Requires that no j-coloured member touches a spare-coloured vertex; the
    j-side detours through the spare, so the swap stays proper stepwise.
    """
    spare = c.k
    if j == l or not (1 <= j < spare and 1 <= l < spare):
        raise ValueError("j and l must be distinct colours below the spare colour")
    members = set(d_comp)
    if not members:
        raise ValueError("component is empty")
    if not c.is_proper(g):
        raise ValueError("colouring is not proper")
    anchor = min(members)
    if c.colours[anchor] not in (j, l):
        raise ValueError("component vertices must wear colour j or l")
    if members != set(kempe_component(g, c, anchor, j, l)):
        raise ValueError("d_comp is not a maximal (j, l)-component")
    for v in sorted(members):
        if c.colours[v] == j and any(c.colours[w] == spare for w in g.adj[v]):
            raise ValueError(
                f"j-coloured vertex {v} touches the spare colour; swap would collide"
            )
    state = _State(g, c.colours, c.k)
    state.swap(members, j, l, c.k - 1)
    return state.steps, Colouring(tuple(state.cols), c.k)


# -- compaction ----------------------------------------------------------------


class _Compactor:
    """One compaction attempt on a connected graph; mutates a _State."""

    def __init__(self, g: Graph, state: _State, delta: int):
        self.g = g
        self.s = state
        self.delta = delta

    def try_quick(self) -> bool:
        """Recolour away a spare-coloured vertex that is free or has a free
        neighbour (constant work per spare vertex)."""
        s, delta = self.s, self.delta
        for ui in s.l_set(delta):
            if s.free(ui, delta):
                s.rec(ui, s.spare_escape(ui, delta))
                return True
            for w in self.g.adj[ui]:
                if s.free(w, delta):
                    old = s.cols[w]
                    s.rec(w, s.spare_escape(w, delta))
                    s.rec(ui, old)
                    return True
        return False

    def assert_lock_property(self) -> None:
        s, delta = self.s, self.delta
        for ui in s.l_set(delta):
            if s.free(ui, delta) or any(s.free(w, delta) for w in self.g.adj[ui]):
                raise InternalInvariantError("lock property expected but a free vertex remains")

    def walk_component_path(self, start: int, j: int, l: int):
        """Walk the (j, l)-component from a component-degree-1 start.

        Returns ("superfree", path, w) at the first superfree vertex,
        ("free_end", path, end) when the far end is free, or
        ("bad_path", path, end) for a path with locked ends and no superfree
        vertex.  A branching non-superfree vertex would contradict the colour
        counting, so it raises.
        """
        s, delta = self.s, self.delta
        pair = (j, l)
        if sum(1 for w in self.g.adj[start] if s.cols[w] in pair) != 1:
            raise InternalInvariantError(f"walk start {start} lacks component-degree 1")
        path = [start]
        prev = None
        cur = start
        while True:
            if s.superfree(cur, delta):
                return ("superfree", path, cur)
            nxt = [w for w in self.g.adj[cur] if s.cols[w] in pair and w != prev]
            if not nxt:
                if cur != start and s.free(cur, delta):
                    return ("free_end", path, cur)
                return ("bad_path", path, cur)
            if len(nxt) > 1:
                raise InternalInvariantError(
                    f"vertex {cur} branches in its Kempe component but is not superfree"
                )
            prev, cur = cur, nxt[0]
            path.append(cur)

    def try_path_surgery(self, ui: int, j: int, l: int) -> bool:
        """Free ui by reworking the (j, l)-component of its unique j-neighbour.

        Succeeds unless that component is a path with locked end-vertices and
        no superfree vertex; in that case returns False without touching the
        state.
        """
        s, delta = self.s, self.delta
        vij = s.unique_nbr_with_colour(ui, j)
        kind, path, stop = self.walk_component_path(vij, j, l)
        if kind == "bad_path":
            return False
        if kind == "superfree":
            s.rec(stop, s.spare_escape(stop, delta))
            piece = set(path[:-1])  # the walk stops at the superfree vertex
            if piece:
                s.swap(piece, l, j, delta)
        else:  # free far end: the whole component is a swappable path
            s.swap(set(path), l, j, delta)
        s.rec(ui, j)
        return True

    # -- the two-for-one release on a pair of distinct bad paths ----------------

    def try_double_release(self, ui: int, j: int, l: int) -> bool:
        """Free two spare-coloured vertices at the cost of one new one.

        Applies when the (j, l)-component anchored at ui's j-neighbour is a
        bad path on >= 3 vertices distinct from the one anchored at ui's
        l-neighbour.  Returns False when those preconditions fail; raises if
        they hold but no release plan goes through.
        """
        s, delta = self.s, self.delta
        vij = s.unique_nbr_with_colour(ui, j)
        kind, path, _ = self.walk_component_path(vij, j, l)
        if kind != "bad_path" or len(path) < 3:
            return False
        vil = s.unique_nbr_with_colour(ui, l)
        if vil in path:
            return False  # the two anchored components coincide
        sv = path[1]
        if s.cols[sv] != l or not s.free(sv, delta) or s.superfree(sv, delta):
            raise InternalInvariantError("second path vertex must be free and not superfree")
        comp_set = set(path)
        candidates = [t for t in self.g.adj[sv] if t not in comp_set]
        if not candidates:
            raise InternalInvariantError("free non-superfree path vertex lacks outside neighbours")
        for t in candidates:
            snap = s.snapshot()
            try:
                self._release_with(ui, j, l, path, sv, t)
                return True
            except InternalInvariantError:
                s.rollback(snap)
        raise InternalInvariantError("no release plan succeeded on a double bad path")

    def _release_with(self, ui, j, l, path, sv, t) -> None:
        s, delta = self.s, self.delta
        spare = delta + 1
        cc = s.cols[t]
        if cc in (j, l) or cc == spare:
            raise InternalInvariantError("outside neighbour wears a component colour")
        if s.free(t, delta):
            self._release_free_t(ui, j, l, path, t, cc)
        else:
            self._release_locked_t(ui, j, l, path, sv, t, cc)

    def _release_locked_t(self, ui, j, l, path, sv, t, cc) -> None:
        s, delta = self.s, self.delta
        spare = delta + 1
        uh = s.unique_nbr_with_colour(t, spare)
        vij = path[0]
        if uh == ui:
            # t anchors the (cc, l)-component of ui, which shares the free
            # vertex sv with our bad path and so cannot itself be a bad path
            if not self.try_path_surgery(ui, cc, l):
                raise InternalInvariantError("two bad paths intersect on a free vertex")
            return
        s.rec(sv, spare)
        s.rec(vij, l)
        if self.g.has_edge(t, vij):
            s.rec(t, j)
        else:
            s.rec(t, l)
        s.rec(uh, cc)
        s.rec(ui, j)

    def _release_free_t(self, ui, j, l, path, t, cc) -> None:
        s, delta = self.s, self.delta
        spare = delta + 1
        z = path[-1]
        zc = s.cols[z]
        ul = s.unique_nbr_with_colour(z, spare)
        if ul == ui:
            raise InternalInvariantError("distinct bad paths cannot share their spare anchor")
        pos = {x: i for i, x in enumerate(path)}
        t_positions = sorted(pos[x] for x in self.g.adj[t] if x in pos)
        if not t_positions:
            raise InternalInvariantError("candidate t lost its path neighbours")
        i1, i2 = t_positions[0], t_positions[-1]
        s.rec(t, spare)
        # cut the path at t's extreme neighbours so the outer pieces avoid t
        if i1 == i2:
            cuts = [i1]
        elif i2 - i1 == 1:
            # adjacent extremes: only one may take colour cc; the uncut one
            # must sit on the protected (never-spare) side of its piece
            if s.cols[path[i1]] == j:
                cuts = [i2]
            elif s.cols[path[i2]] == zc:
                cuts = [i1]
            else:
                raise InternalInvariantError("adjacent cut vertices block both swap sides")
        else:
            cuts = [i1, i2]
        for i in cuts:
            s.rec(path[i], cc)
        if cuts == [i2] and i1 != i2:
            prefix = path[: i1 + 1]
        else:
            prefix = path[: cuts[0]]
        if cuts == [i1] and i1 != i2:
            suffix = path[i1 + 1 :]
        else:
            suffix = path[cuts[-1] + 1 :]
        if prefix:
            s.swap(set(prefix), l, j, delta)  # flips path[0] = vij from j to l
        s.rec(ui, j)
        if suffix:
            s.swap(set(suffix), j if zc == l else l, zc, delta)  # flips z off zc
        s.rec(ul, zc)


def compact(g: Graph, c: Colouring, delta: int) -> tuple[list[RecolourStep], Colouring]:
    """Shrink the spare-coloured class of a connected graph by at least one.

    Preconditions: delta >= 3, max degree <= delta, g connected and not the
    complete graph on delta+1 vertices, c proper on delta+1 colours, not
    frozen, and at least one vertex wearing the spare colour delta+1.
    """
    if delta < 3:
        raise ValueError("delta must be at least 3")
    _check_colouring(g, c, delta)
    if len(components(g)) != 1:
        raise ValueError("graph must be connected")
    if g.n == delta + 1 and all(g.degree(v) == delta for v in range(g.n)):
        raise ValueError(f"graph is K_{delta + 1}: nothing can be recoloured")
    spare = delta + 1
    l_start = [v for v in range(g.n) if c.colours[v] == spare]
    if not l_start:
        raise ValueError("no vertex wears the spare colour; nothing to compact")
    if is_frozen(g, c, delta):
        raise FrozenColouringError("colouring is frozen")

    state = _State(g, c.colours, c.k)
    if not _compact_main(_Compactor(g, state, delta), g, state, delta):
        raise InternalInvariantError("compaction failed to make progress")
    if len(state.l_set(delta)) >= len(l_start):
        raise InternalInvariantError("compaction did not shrink the spare class")
    return state.steps, Colouring(tuple(state.cols), delta + 1)


def _compact_main(comp: _Compactor, g: Graph, state: _State, delta: int) -> bool:
    if comp.try_quick():
        return True
    comp.assert_lock_property()
    spare = delta + 1

    # the nearest free vertex sits at distance exactly two from the spare class
    triple = None
    for u1 in state.l_set(delta):
        for vmid in g.adj[u1]:
            for x in g.adj[vmid]:
                if state.free(x, delta):
                    triple = (u1, vmid, x)
                    break
            if triple:
                break
        if triple:
            break
    if triple is None:
        raise InternalInvariantError("no free vertex at distance two from the spare class")
    u1, vmid, x = triple
    j1, j2 = state.cols[vmid], state.cols[x]
    if spare in (j1, j2) or j1 == j2:
        raise InternalInvariantError("degenerate colours on the free-to-spare path")

    if comp.try_path_surgery(u1, j1, j2):
        return True
    if comp.try_path_surgery(u1, j2, j1):
        return True
    v1j2 = state.unique_nbr_with_colour(u1, j2)
    if v1j2 not in state.comp(vmid, j1, j2):
        if comp.try_double_release(u1, j1, j2):
            return True
        if comp.try_double_release(u1, j2, j1):
            return True
        raise InternalInvariantError("double release failed on distinct bad paths")

    # single shared path: bring in a third colour through the free vertex x
    j3 = next(col for col in range(1, delta + 1) if col not in (j1, j2))
    if sum(1 for w in g.adj[x] if state.cols[w] in (j2, j3)) != 1:
        raise InternalInvariantError("free path vertex must have one third-colour neighbour")
    checkpoint = state.snapshot()
    kind, h_path, stop = comp.walk_component_path(x, j2, j3)
    if kind == "superfree":
        state.rec(stop, state.spare_escape(stop, delta))
        if comp.try_path_surgery(u1, j1, j2):
            return True
        checkpoint = state.snapshot()
        kind, h_path, stop = comp.walk_component_path(x, j2, j3)
        if kind == "superfree":
            raise InternalInvariantError("third-colour component still branches after the cut")
    xp = h_path[-1]
    if state.cols[xp] == j2:
        state.swap(set(h_path), j3, j2, delta)
    else:
        state.swap(set(h_path), j2, j3, delta)

    # second pass over the modified colouring
    if comp.try_quick():
        return True
    comp.assert_lock_property()
    h_set = set(h_path)
    if vmid in h_set or v1j2 in h_set:
        raise InternalInvariantError("locked anchors strayed into the swapped component")
    if state.cols[vmid] != j1 or state.cols[v1j2] != j2:
        raise InternalInvariantError("anchor colours changed during the third-colour swap")
    if comp.try_path_surgery(u1, j1, j2):
        return True
    if comp.try_path_surgery(u1, j2, j1):
        return True
    if v1j2 not in state.comp(vmid, j1, j2):
        if comp.try_double_release(u1, j2, j1):
            return True
        if comp.try_double_release(u1, j1, j2):
            return True
        raise InternalInvariantError("double release failed after the third-colour swap")

    # still one shared path: the pre-swap (j1, j3)-component of vmid shares a
    # free vertex with it, so it cannot be a bad path; rewind and fix it there
    state.rollback(checkpoint)
    if not comp.try_path_surgery(u1, j1, j3):
        raise InternalInvariantError("two bad paths intersect on a free vertex")
    return True


# -- path validation and reversal ---------------------------------------------


def validate_path(g: Graph, k: int, alpha: Colouring, path, beta: Colouring) -> bool:
    """True iff path leads from alpha to beta, each step recolouring exactly
    one vertex to a different colour with every intermediate colouring proper."""
    if alpha.k != k or beta.k != k:
        return False
    if not alpha.is_proper(g) or not beta.is_proper(g):
        return False
    cols = list(alpha.colours)
    for step in path:
        try:
            v, colour = step
        except (TypeError, ValueError):
            return False
        if not (0 <= v < g.n and 1 <= colour <= k) or cols[v] == colour:
            return False
        if any(cols[w] == colour for w in g.adj[v]):
            return False
        cols[v] = colour
    return cols == list(beta.colours)


def reverse_path(path, alpha: Colouring) -> list[RecolourStep]:
    """The step-reversed path leading from the end colouring back to alpha."""
    cols = list(alpha.colours)
    reversed_steps: list[RecolourStep] = []
    for v, colour in path:
        if not (0 <= v < len(cols)) or colour == cols[v]:
            raise ValueError("path is not valid from alpha")
        reversed_steps.append((v, cols[v]))
        cols[v] = colour
    reversed_steps.reverse()
    return reversed_steps


# -- the path finder ------------------------------------------------------------


def _regime_message(k: int, delta: int) -> str:
    if k >= 4 and delta >= k:
        regime = "PSPACE-hard for k >= 4 with maximum degree >= k"
    elif k >= 4:
        regime = "polynomial for k >= 4 with maximum degree <= k-2, but not implemented here"
    else:
        regime = "the k <= 3 regime is solvable in linear time, but not implemented here"
    return (
        f"find_path supports exactly k = maxdeg+1; got k={k}, maxdeg={delta} ({regime})"
    )


def find_path(g: Graph, k: int, alpha: Colouring, beta: Colouring):
    """A recolouring path from alpha to beta using k = maxdeg+1 colours, or
    None when no path exists (a component frozen under differing colourings)."""
    delta = g.max_degree()
    if k != delta + 1:
        raise UnsupportedRegimeError(_regime_message(k, delta))
    for name, col in (("alpha", alpha), ("beta", beta)):
        if col.k != k or not col.is_proper(g):
            raise ValueError(f"{name} is not a proper {k}-colouring")
    steps: list[RecolourStep] = []
    for comp in components(g):
        sub, old_ids = g.induced(comp)
        sub_alpha = Colouring(tuple(alpha.colours[v] for v in comp), k)
        sub_beta = Colouring(tuple(beta.colours[v] for v in comp), k)
        sub_steps = _find_path_component(sub, k, sub_alpha, sub_beta)
        if sub_steps is None:
            return None
        steps.extend((old_ids[v], colour) for v, colour in sub_steps)
    limit = MAX_PATH_LENGTH_FACTOR * g.n * g.n
    if len(steps) > limit:
        raise InternalInvariantError(f"path length {len(steps)} exceeds {limit}")
    return steps


def _find_path_component(g: Graph, k: int, alpha: Colouring, beta: Colouring):
    if alpha.colours == beta.colours:
        return []
    delta = k - 1
    if delta < 3:
        return _solve_base(g, k, alpha, beta)
    if is_frozen(g, alpha, delta) or is_frozen(g, beta, delta):
        return None  # unequal endpoints with a frozen side are unreachable
    return _solve_component(g, k, alpha, beta)


def _solve_component(g: Graph, k: int, alpha: Colouring, beta: Colouring):
    delta = k - 1
    steps_a, gamma1 = _compact_to_low(g, alpha, delta)
    steps_b, gamma2 = _compact_to_low(g, beta, delta)
    d = maximalize_a(g, decompose_k(g, delta))
    s1 = sorted(d.a_set)
    s2 = sorted(d.b_set)
    state_a = _State(g, gamma1.colours, k)
    state_b = _State(g, gamma2.colours, k)
    for v in s1:  # the independent set parks on the spare colour
        state_a.rec(v, k)
        state_b.rec(v, k)
    steps_a = steps_a + state_a.steps
    steps_b = steps_b + state_b.steps
    lifted: list[RecolourStep] = []
    if s2:
        sub, old_ids = g.induced(s2)
        sub_alpha = Colouring(tuple(state_a.cols[v] for v in s2), k - 1)
        sub_beta = Colouring(tuple(state_b.cols[v] for v in s2), k - 1)
        for comp in components(sub):
            ssub, inner_ids = sub.induced(comp)
            a_restr = Colouring(tuple(sub_alpha.colours[v] for v in comp), k - 1)
            b_restr = Colouring(tuple(sub_beta.colours[v] for v in comp), k - 1)
            part = _find_path_component(ssub, k - 1, a_restr, b_restr)
            if part is None:
                raise InternalInvariantError(
                    "recursive instance is frozen despite the degeneracy guarantee"
                )
            lifted.extend((old_ids[inner_ids[v]], colour) for v, colour in part)
    return steps_a + lifted + reverse_path(steps_b, beta)


def _compact_to_low(g: Graph, colouring: Colouring, delta: int):
    """Compact until no vertex wears the spare colour delta+1."""
    steps: list[RecolourStep] = []
    current = colouring
    budget = sum(1 for c in colouring.colours if c == delta + 1)
    for _ in range(budget + 1):
        if all(c != delta + 1 for c in current.colours):
            return steps, current
        more, current = compact(g, current, delta)
        steps.extend(more)
    raise InternalInvariantError("compaction loop exceeded its budget")


def _solve_base(g: Graph, k: int, alpha: Colouring, beta: Colouring):
    """Components with k <= 3 colours: direct recolouring for path graphs,
    exhaustive search otherwise (reachable only from tiny direct calls)."""
    from .oracles import brute_reconfig_path

    if k == 3 and _is_path_graph(g):
        return _solve_path_graph(g, alpha, beta)
    return brute_reconfig_path(g, k, list(alpha.colours), list(beta.colours))


def _is_path_graph(g: Graph) -> bool:
    if g.n == 1:
        return True
    degs = sorted(g.degree(v) for v in range(g.n))
    return g.m == g.n - 1 and degs[0] == 1 and degs[-1] <= 2 and len(components(g)) == 1


def _solve_path_graph(g: Graph, alpha: Colouring, beta: Colouring) -> list[RecolourStep]:
    """Settle a path graph vertex by vertex from one end, pushing blocking
    colours rightwards with the third colour as the escape."""
    if g.n == 1:
        return [] if alpha.colours == beta.colours else [(0, beta.colours[0])]
    end = min(v for v in range(g.n) if g.degree(v) == 1)
    order = []
    prev, cur = None, end
    while cur is not None:
        order.append(cur)
        nxt = [w for w in g.adj[cur] if w != prev]
        prev, cur = cur, (nxt[0] if nxt else None)
    state = _State(g, alpha.colours, 3)

    def push(idx: int, banned: int) -> None:
        chain: list[tuple[int, int]] = []
        while idx < len(order) and state.cols[order[idx]] == banned:
            left = state.cols[order[idx - 1]]
            choice = next(c for c in (1, 2, 3) if c != banned and c != left)
            chain.append((idx, choice))
            if idx + 1 < len(order) and state.cols[order[idx + 1]] == choice:
                idx, banned = idx + 1, choice
            else:
                break
        for i, c in reversed(chain):
            state.rec(order[i], c)

    for idx, v in enumerate(order):
        target = beta.colours[v]
        if state.cols[v] == target:
            continue
        if idx + 1 < len(order) and state.cols[order[idx + 1]] == target:
            push(idx + 1, target)
        state.rec(v, target)
    if state.cols != list(beta.colours):
        raise InternalInvariantError("path-graph recolouring missed its target")
    return state.steps
