"""Hardness-instance generators: block graphs, their recursive towers, and
the reduction from positive 1-in-k satisfiability to decomposition instances
of maximum degree 2k-2, plus structural validators for the decompositions
such instances admit.

Tower coordinates: ('a', i, j) is the apex of block j at level i (1-based j),
('b', i, j, l) and ('d', i, j, l) its clique and independent-set vertices
(1-based l).  Identified vertices carry both their d-coordinate and the apex
coordinate of the child block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Decomposition, Graph, GraphFormatError, verify_decomposition

Coord = tuple


@dataclass(frozen=True, slots=True)
class CnfInstance:
    """Positive 1-in-k clauses: each clause lists k distinct variables (1-based)."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def validate(self, k: int) -> None:
        for idx, clause in enumerate(self.clauses):
            if len(clause) != k or len(set(clause)) != k:
                raise ValueError(f"clause {idx + 1} must have {k} distinct variables")
            if any(not 1 <= var <= self.num_vars for var in clause):
                raise ValueError(f"clause {idx + 1} has a variable outside 1..{self.num_vars}")


@dataclass(frozen=True, slots=True)
class GadgetGraph:
    """Reduction output with label maps back to towers and clauses."""

    graph: Graph
    var_tower: dict  # (variable, coord) -> vertex id
    clause_vertex: dict  # (clause index, variable) -> vertex id
    k: int
    q: int


def build_block(k: int) -> tuple[Graph, dict]:
    """The basic block: apex a joined to a clique B of k-1 vertices, which is
    completely joined to an independent set D of k-1 vertices.

    For k=3 this is the five-vertex graph with edges ab, ac, bc, bd, be, cd, ce.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    a = 0
    b_set = list(range(1, k))
    d_set = list(range(k, 2 * k - 1))
    edges = [(a, b) for b in b_set]
    edges += [(b_set[i], b_set[j]) for i in range(len(b_set)) for j in range(i + 1, len(b_set))]
    edges += [(b, d) for b in b_set for d in d_set]
    return Graph(2 * k - 1, edges), {"a": a, "b_set": tuple(b_set), "d_set": tuple(d_set)}


def _tower_parts(k: int, height: int):
    """Coordinate labels, edges, and vertex count of one tower of given height."""
    labels: dict[Coord, int] = {}
    edges: list[tuple[int, int]] = []
    next_id = 0

    def fresh() -> int:
        nonlocal next_id
        next_id += 1
        return next_id - 1

    labels[("a", 0, 1)] = fresh()
    for i in range(height + 1):
        for j in range(1, (k - 1) ** i + 1):
            apex = labels[("a", i, j)]
            bs = [fresh() for _ in range(k - 1)]
            ds = [fresh() for _ in range(k - 1)]
            for l in range(1, k):
                labels[("b", i, j, l)] = bs[l - 1]
                labels[("d", i, j, l)] = ds[l - 1]
            edges += [(apex, b) for b in bs]
            edges += [(bs[x], bs[y]) for x in range(k - 1) for y in range(x + 1, k - 1)]
            edges += [(b, d) for b in bs for d in ds]
            if i < height:
                # each D vertex becomes the apex of a child block one level down
                for l in range(1, k):
                    child = (k - 1) * (j - 1) + l
                    labels[("a", i + 1, child)] = labels[("d", i, j, l)]
    return labels, edges, next_id


def build_tower(k: int, i: int) -> tuple[Graph, dict]:
    """The recursive tower of height i: (k-1)^i blocks at the deepest level,
    each parent D vertex identified with a child apex."""
    if k < 3:
        raise ValueError("k must be at least 3")
    if i < 0:
        raise ValueError("height must be non-negative")
    labels, edges, n = _tower_parts(k, i)
    return Graph(n, edges), labels


def tower_size(k: int, i: int) -> int:
    """Closed-form vertex count: size(i) = size(i-1) + 2(k-1) * (k-1)^i."""
    total = 2 * k - 1
    for level in range(1, i + 1):
        total += 2 * (k - 1) * (k - 1) ** level
    return total


def build_reduction(inst: CnfInstance, k: int) -> GadgetGraph:
    """The full instance: one tower per variable, one k-clique per clause, and
    k-1 edges from each clause vertex into the matching leaf D-set of its
    variable's tower.  The output has maximum degree exactly 2k-2."""
    if k < 3:
        raise ValueError("k must be at least 3")
    inst.validate(k)
    m = len(inst.clauses)
    if m < 1:
        raise ValueError("need at least one clause")
    q = 0
    while (k - 1) ** q < m:
        q += 1
    tower_labels, tower_edges, tower_n = _tower_parts(k, q)
    edges: list[tuple[int, int]] = []
    var_tower: dict = {}
    for var in range(1, inst.num_vars + 1):
        offset = (var - 1) * tower_n
        for coord, vid in tower_labels.items():
            var_tower[(var, coord)] = vid + offset
        edges += [(u + offset, v + offset) for u, v in tower_edges]
    clause_vertex: dict = {}
    base = inst.num_vars * tower_n
    for j, clause in enumerate(inst.clauses, start=1):
        ids = {var: base + (j - 1) * k + idx for idx, var in enumerate(sorted(clause))}
        clause_vertex.update(((j, var), vid) for var, vid in ids.items())
        vids = sorted(ids.values())
        edges += [(vids[x], vids[y]) for x in range(k) for y in range(x + 1, k)]
        for var, vid in ids.items():
            for l in range(1, k):
                edges.append((var_tower[(var, ("d", q, j, l))], vid))
    graph = Graph(base + m * k, edges)
    gg = GadgetGraph(graph, var_tower, clause_vertex, k, q)
    audit = structural_audit(gg, m)
    if not audit["ok"]:
        raise AssertionError(f"construction self-check failed: {audit}")
    return gg


def structural_audit(gg: GadgetGraph, m: int) -> dict:
    """Degree, vertex-count, edge-count, and height checks on an instance."""
    k, q, g = gg.k, gg.q, gg.graph
    num_vars = len({var for var, _ in gg.var_tower})
    expected_n = num_vars * tower_size(k, q) + m * k
    # per-class edge tally: blocks contribute apex + clique + join edges;
    # clause gadgets a clique each; every clause vertex sends k-1 join edges
    blocks_per_tower = sum((k - 1) ** i for i in range(q + 1))
    block_edges = (k - 1) + (k - 1) * (k - 2) // 2 + (k - 1) ** 2
    expected_m = (
        num_vars * blocks_per_tower * block_edges
        + m * k * (k - 1) // 2
        + m * k * (k - 1)
    )
    max_deg = g.max_degree()
    bracketing = (q == 0 and m <= 1) or (k - 1) ** (q - 1) < m <= (k - 1) ** q
    return {
        "ok": max_deg == 2 * k - 2 and g.n == expected_n and g.m == expected_m
        and bracketing,
        "max_degree": max_deg,
        "expected_max_degree": 2 * k - 2,
        "n": g.n,
        "expected_n": expected_n,
        "m": g.m,
        "expected_m": expected_m,
        "q": q,
        "height_bracketing": bracketing,
    }


@dataclass(frozen=True, slots=True)
class ObservationReport:
    """Per-decomposition structural facts (violations falsify the reduction)."""

    ok: bool
    leaf_sets_uniform: dict        # variable -> "A" | "B", obs (ii)
    leaf_blocks_touch_b: list      # (variable, block) with no B-vertex in d.b_set, obs (iii)
    clause_a_counts: dict          # clause -> |clause gadget  ^ A|, obs (iv)
    variable_consistent: dict      # variable -> True/False across clause gadgets, obs (v)/(vi)
    violations: list


def audit_observations(gg: GadgetGraph, d: Decomposition) -> ObservationReport:
    """Check the structural facts every valid decomposition of a reduction
    instance must satisfy; violations are reported with coordinates."""
    g, k, q = gg.graph, gg.k, gg.q
    if not verify_decomposition(g, k, d):
        raise ValueError("decomposition is invalid for the gadget graph")
    a = d.a_set
    violations: list[str] = []

    variables = sorted({var for var, _ in gg.var_tower})
    leaf_uniform: dict = {}
    leaf_blocks_missing_b: list = []
    for var in variables:
        leaf_ids = [
            vid for (v, coord), vid in gg.var_tower.items()
            if v == var and coord[0] == "d" and coord[1] == q
        ]
        in_a = sum(1 for vid in leaf_ids if vid in a)
        if in_a == 0:
            leaf_uniform[var] = "B"
        elif in_a == len(leaf_ids):
            leaf_uniform[var] = "A"
        else:
            leaf_uniform[var] = "split"
            violations.append(f"variable {var}: leaf D vertices split across A and B")
        for j in range(1, (k - 1) ** q + 1):
            block_b = [gg.var_tower[(var, ("b", q, j, l))] for l in range(1, k)]
            if not any(vid in d.b_set for vid in block_b):
                leaf_blocks_missing_b.append((var, j))
                violations.append(f"variable {var} block {j}: no clique vertex in B")

    clause_ids = sorted({j for j, _ in gg.clause_vertex})
    clause_a_counts: dict = {}
    for j in clause_ids:
        members = [vid for (jj, _), vid in gg.clause_vertex.items() if jj == j]
        clause_a_counts[j] = sum(1 for vid in members if vid in a)
        if clause_a_counts[j] != 1:
            violations.append(
                f"clause {j}: {clause_a_counts[j]} gadget vertices in A, expected 1"
            )

    variable_consistent: dict = {}
    for var in variables:
        sides = {vid in a for (j, v), vid in gg.clause_vertex.items() if v == var}
        variable_consistent[var] = len(sides) <= 1
        if len(sides) > 1:
            violations.append(f"variable {var}: clause vertices on both sides")

    return ObservationReport(
        ok=not violations,
        leaf_sets_uniform=leaf_uniform,
        leaf_blocks_touch_b=leaf_blocks_missing_b,
        clause_a_counts=clause_a_counts,
        variable_consistent=variable_consistent,
        violations=violations,
    )


# -- instance text format ---------------------------------------------------------


def load_cnf(text) -> tuple[int, CnfInstance]:
    """Parse ``q1k <k> <n> <m>`` followed by m lines of k variable indices."""
    from .graph import _lines_of

    header = None
    clauses: list[tuple[int, ...]] = []
    for line_no, raw in enumerate(_lines_of(text), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "q1k":
            if header is not None:
                raise GraphFormatError(line_no, "duplicate header")
            if len(parts) != 4:
                raise GraphFormatError(line_no, "header must be 'q1k <k> <n> <m>'")
            try:
                header = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise GraphFormatError(line_no, "non-integer header fields") from None
        else:
            if header is None:
                raise GraphFormatError(line_no, "clause before header")
            try:
                clause = tuple(int(p) for p in parts)
            except ValueError:
                raise GraphFormatError(line_no, "non-integer variable index") from None
            k = header[0]
            if len(clause) != k:
                raise GraphFormatError(line_no, f"clause must list {k} variables")
            clauses.append(tuple(sorted(clause)))
    if header is None:
        raise GraphFormatError(0, "missing 'q1k <k> <n> <m>' header")
    k, n, m = header
    if len(clauses) != m:
        raise GraphFormatError(0, f"expected {m} clauses, found {len(clauses)}")
    inst = CnfInstance(n, tuple(clauses))
    inst.validate(k)
    return k, inst


def serialize_cnf(k: int, inst: CnfInstance) -> str:
    lines = [f"q1k {k} {inst.num_vars} {len(inst.clauses)}"]
    lines.extend(" ".join(str(v) for v in clause) for clause in inst.clauses)
    return "\n".join(lines) + "\n"


def label_map_json(gg: GadgetGraph) -> dict:
    """Sidecar label map: tower coordinates and clause vertices, 1-based ids."""

    def coord_key(coord: Coord) -> str:
        return ":".join(str(part) for part in coord)

    towers: dict = {}
    for (var, coord), vid in sorted(gg.var_tower.items(), key=lambda kv: kv[1]):
        towers.setdefault(str(var), {})[coord_key(coord)] = vid + 1
    clauses: dict = {}
    for (j, var), vid in sorted(gg.clause_vertex.items()):
        clauses.setdefault(str(j), {})[str(var)] = vid + 1
    return {"k": gg.k, "q": gg.q, "towers": towers, "clauses": clauses}
