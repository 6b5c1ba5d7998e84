"""
Two nodes, three realizations
=============================

Interpolation data with nodes 2i and 3i and every value equal to i. We build
the Pick matrices, the Pick-form system, the triangular model and the
coupling of two multiplication operators, then check that all three give
the same transfer function and the same invariants.
"""

import math

import numpy as np

from npls import (
    build_model_delta,
    build_pick_form,
    build_pick_matrices,
    check_positivity,
    dissipation_operator,
    entropy_from_system,
    transfer,
    validate_data,
)
from npls.realizations import coupling_of_nodes, max_transfer_deviation

np.set_printoptions(precision=6, suppress=True)

# omitting the values means v_k = i for every node
data = validate_data([2j, 3j])
pick = build_pick_matrices(data)
print("P =\n", pick.P)
print("Q =\n", pick.Q)
print("det P =", np.linalg.det(pick.P).real, "(1/150 =", 1 / 150, ")")
print(check_positivity(pick.P))

# %% Pick form: T is diagonal in the weighted inner product
pick_sys = build_pick_form(data)
print("\nPick-form T =\n", pick_sys.T)
print("channel vector g =", pick_sys.K)

# %% the upper-triangular model and the coupling coincide entry by entry
model = build_model_delta(data)
coupled = coupling_of_nodes(data.nodes)
print("\nmodel T =\n", model.T)
print("2 sqrt(6) =", 2 * math.sqrt(6))
print("coupling equals model:", np.allclose(model.T, coupled.T))

# %% transfer functions agree on a grid off the spectrum
for name, other in (("model", model), ("coupling", coupled)):
    print(f"max |W_pick - W_{name}| = {max_transfer_deviation(pick_sys, other):.2e}")

# %% c-entropy and dissipation from each realization
for name, sys in (("pick", pick_sys), ("model", model), ("coupling", coupled)):
    s = entropy_from_system(sys)
    print(f"{name:9s} W(-i) = {transfer(sys, -1j).real:.12f}  S = {s.value:.12f}  D = {dissipation_operator(sys):.12f}")
print("ln 6 =", math.log(6), " 35/36 =", 35 / 36)
