"""Realizations, invariants and LC synthesis for scalar Nevanlinna-Pick data."""

from .analytic import (
    blaschke_transfer,
    cayley_v_to_w,
    cayley_w_to_v,
    coupled_impedance_two,
    herglotz_scan,
    impedance,
    impedance_closed_form,
    transfer,
)
from .errors import NPLSError
from .invariants import (
    EntropyValue,
    classify_regime,
    compose_dissipation,
    compose_entropy,
    compute_kappa,
    dissipation_from_entropy,
    dissipation_from_nodes,
    dissipation_operator,
    entropy_from_nodes,
    entropy_from_system,
    imaginary_axis_invariants,
    single_node_invariants,
    two_node_dissipation_closed,
)
from .pick import InterpolationData, PickPair, build_pick_matrices, check_positivity, validate_data
from .realizations import (
    build_model_delta,
    build_multiplication,
    build_pick_form,
    check_dissipativity,
    check_minimality,
    check_unitary_equivalence,
    couple,
    sample_valid_data,
    to_euclidean,
)
from .synthesis import (
    canonical_pair_impedance,
    detect_symmetric,
    emit_netlist,
    eval_model_impedance,
    model_impedance,
    network_impedance,
    pair_plus_imag_params,
    synthesize_lc,
)
from .system import LSystem

__version__ = "0.1.0"
