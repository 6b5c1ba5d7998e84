"""
Where the entropy is large
==========================

The c-entropy of node data is infinite exactly when a node sits at i, is
largest on the imaginary axis for fixed imaginary parts, and decays as nodes
move sideways. It never reaches zero though it can be made arbitrarily small.
"""

import numpy as np

from npls import classify_regime, entropy_from_nodes, imaginary_axis_invariants, single_node_invariants

# %% the three regimes
for nodes in ([1j, 2 + 1j], [2j, 3j], [1 + 2j, -1 + 2j]):
    cls = classify_regime(nodes)
    print(f"{str(nodes):24s} {cls.kind.value:15s} S = {entropy_from_nodes(nodes).value}")

# %% horizontal decay for a node a + 2i
for a in range(0, 11, 2):
    s, d = single_node_invariants(a + 2j)
    print(f"a = {a:2d}  S = {s.value:.6f}  D = {d:.6f}")

# %% imaginary-axis nodes: S grows linearly in the number of repeated nodes
for m in (1, 2, 4):
    print(f"m = {m}  S = {imaginary_axis_invariants([0.5] * m)[0].value:.6f}")

# %% small nodes: S is about 2 sum(a)
a = np.array([1e-3, 2e-3, 5e-3])
s = imaginary_axis_invariants(a)[0].value
print(f"S = {s:.12e}  2 sum a = {2 * a.sum():.12e}  bound sum a^3 = {np.sum(a**3):.1e}")
