"""Walkthrough: stepwise recolouring between colourings with maxdeg+1 colours.

Run:  python3 demos/03_recolouring_paths.py
"""

from degensplit import (
    Colouring,
    Graph,
    brute_reconfig_path,
    classify,
    compact,
    find_path,
    gen_random_colouring,
    validate_path,
)

petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                 + [(i, 5 + i) for i in range(5)])

alpha = Colouring((1, 2, 1, 2, 3, 2, 3, 3, 1, 4), 4)
beta = Colouring(tuple(gen_random_colouring(petersen, 4, seed=4)), 4)

path = find_path(petersen, 4, alpha, beta)
print(f"path of {len(path)} single-vertex steps found")
print("validates:", validate_path(petersen, 4, alpha, path, beta))

# The engine under the hood: "compact" retires one wearer of the spare
# colour (here 4) per call, each step staying proper.
report = classify(petersen, alpha, 3)
print("\nvertex statuses under alpha:", dict(zip(range(10), report.statuses)))
print("spare-coloured vertices:", report.l_set)
steps, compacted = compact(petersen, alpha, 3)
print("compaction steps:", steps)
print("spare class afterwards:",
      [v for v in range(10) if compacted.colours[v] == 4])

# K_4 with four colours is fully frozen: distinct colourings are unreachable.
k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
a4 = Colouring((1, 2, 3, 4), 4)
b4 = Colouring((2, 1, 3, 4), 4)
print("\nK_4 distinct colourings connected?", find_path(k4, 4, a4, b4) is not None)
print("(brute-force agrees:", brute_reconfig_path(k4, 4, [1, 2, 3, 4], [2, 1, 3, 4]) is None,
      "- no path exists)")
