"""Walkthrough: reduction instances from positive 1-in-k satisfiability.

Run:  python3 demos/04_hardness_gadgets.py
"""

from degensplit import (
    CnfInstance,
    audit_observations,
    brute_1_in_k_sat,
    brute_decompose,
    build_block,
    build_reduction,
    build_tower,
)

# The basic building block: apex + clique + independent set.
block, labels = build_block(3)
print("block for k=3:", block.n, "vertices,", block.m, "edges")
print("labels:", labels)

# Towers chain blocks by identifying leaf vertices with child apexes.
for height in (0, 1, 2):
    tower, _ = build_tower(3, height)
    print(f"tower height {height}: {tower.n} vertices")

# A full reduction instance: one clause over three variables.
inst = CnfInstance(3, ((1, 2, 3),))
gg = build_reduction(inst, 3)
print(f"\nreduction graph: {gg.graph.n} vertices, max degree {gg.graph.max_degree()}")

assignment = brute_1_in_k_sat(inst)
print("a 1-in-3 assignment exists:", assignment)

d = brute_decompose(gg.graph, 3)
print("the gadget graph decomposes:", d is not None)
report = audit_observations(gg, d)
print("structural audit ok:", report.ok)
print("clause gadget A-counts:", report.clause_a_counts)
print("leaf D-sets uniform per variable:", report.leaf_sets_uniform)

# Larger k raises the degree bound to 2k-2.
gg4 = build_reduction(CnfInstance(4, ((1, 2, 3, 4),)), 4)
print(f"\nk=4 instance: max degree {gg4.graph.max_degree()} (= 2k-2)")
