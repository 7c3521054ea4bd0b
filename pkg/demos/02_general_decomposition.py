"""Walkthrough: independent set + (k-2)-degenerate part for max degree k.

Run:  python3 demos/02_general_decomposition.py
"""

from degensplit import (
    decompose_k,
    gen_random_regular,
    maximalize_a,
    peel_degeneracy,
    verify_decomposition,
)

# A random 4-regular graph: the hardest shape for this problem, since no
# low-degree vertex offers a free starting point.
g = gen_random_regular(4, 30, seed=11)

trace: list = []
d = decompose_k(g, 4, trace=trace)
print("first loop iterations:", trace[:3])
print("|A| =", len(d.a_set), " |B| =", len(d.b_set))
print("verified:", verify_decomposition(g, 4, d))

sub, _ = g.induced(d.b_set)
print("degeneracy of G[B]:", peel_degeneracy(sub)[0], "(needs <= 2)")

# The independent side can always be greedily grown to a maximal one without
# hurting the degenerate side.
m = maximalize_a(g, d)
print("after maximalizing:", len(m.a_set), "independent vertices; still valid:",
      verify_decomposition(g, 4, m))

# Same machinery, one shot per k.
for k in (3, 5):
    h = gen_random_regular(k, 20, seed=5)
    dk = decompose_k(h, k)
    print(f"k={k}: verified =", verify_decomposition(h, k, dk))
