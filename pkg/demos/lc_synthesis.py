"""
From interpolation nodes to an LC network
=========================================

A symmetric pair plus one imaginary node, 1 + 2i, -1 + 2i and 3i. The model
impedance -A0/z + A z/(B^2 - z^2) becomes, in the frequency variable p,
a series capacitor followed by a parallel LC cell.
"""

import numpy as np

from npls import (
    build_model_delta,
    detect_symmetric,
    emit_netlist,
    eval_model_impedance,
    impedance,
    model_impedance,
    network_impedance,
    pair_plus_imag_params,
    synthesize_lc,
    transfer,
)
from npls.synthesis import bode_rows

nodes = [1 + 2j, -1 + 2j, 3j]
config = detect_symmetric(nodes)
print(config)

# %% the operator model and its two-term rational form
sys = build_model_delta(nodes)
two_term = pair_plus_imag_params(1, 2, 3)
print(two_term, " 15/17 =", 15 / 17, " 104/17 =", 104 / 17)
print("W(-i) =", transfer(sys, -1j))
print("V(-i) =", impedance(sys, -1j), " two-term:", two_term(-1j), " -11i/9 =", -11j / 9)

# %% the superposed model impedance and its network
mi = model_impedance(config)
net = synthesize_lc(mi)
print("\n" + emit_netlist(net), end="")

# driving-point impedance against the model impedance on the imaginary axis
for p in (0.5, 1.0 + 0.5j, 3.0):
    print(f"Z({p}) = {network_impedance(net, p):.9f}   V(ip)/i = {eval_model_impedance(mi, 1j * p) / 1j:.9f}")

# %% a few points of the frequency response; the resonance sits at omega = sqrt(5)
for omega, z in bode_rows(net, np.array([0.5, 2.0, np.sqrt(5), 3.0])):
    print(f"omega = {omega:.4f}  |Z| = {abs(z):.4g}")
