"""
A symmetric pair of nodes
=========================

Nodes 1 + 2i and -1 + 2i with values i. The impedance is a single resonant
term 4z / (5 - z^2); its value at i is purely imaginary, which gives the
scalar kappa = (1 - t)/(1 + t).
"""

import math

from npls import (
    blaschke_transfer,
    build_model_delta,
    canonical_pair_impedance,
    classify_regime,
    compute_kappa,
    dissipation_from_nodes,
    entropy_from_nodes,
    herglotz_scan,
    impedance,
)

nodes = [1 + 2j, -1 + 2j]
sys = build_model_delta(nodes)

# %% the realization interpolates: V = i at both nodes
for z in nodes:
    print(f"V({z}) = {impedance(sys, z):.12f}")
print("V(i) =", impedance(sys, 1j), "  canonical form:", canonical_pair_impedance(1, 2, 1j))

# %% the transfer function is the two-factor Blaschke product
for z in (-1j, 0.5 - 2j):
    closed = (5 - z * z - 4j * z) / (5 - z * z + 4j * z)
    print(f"W({z}) = {blaschke_transfer(nodes, z):.12f}  closed form {closed:.12f}")

# %% invariants
s = entropy_from_nodes(nodes)
print("\nS =", s.value, "(ln 5 =", math.log(5), ")")
print("D =", dissipation_from_nodes(nodes))
print("regime:", classify_regime(nodes).kind.value)
print("kappa =", compute_kappa(sys))

# %% the impedance maps the upper half-plane into itself
print(herglotz_scan(lambda z: impedance(sys, z)))
