"""Concrete L-system realizations of interpolation data and checks on them."""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.linalg

from . import analytic
from .errors import (
    GridPointNotRegular,
    MetricMismatch,
    MetricNotPositive,
    ModelRequiresValuesI,
    NotDissipative,
    NotRegularPoint,
    PickNotPositive,
    ProbeNotRegular,
)
from .pick import (
    TOL_POS,
    InterpolationData,
    build_pick_matrices,
    check_positivity,
    pick_matrices,
    validate_data,
)
from .system import LSystem, RealizationAux

DISSIPATIVITY_TOL = 1e-10
RANK_TOL = 1e-8
PROBE_TOL = 1e-10
EQUIVALENCE_TOL = 1e-10


def build_pick_form(data: InterpolationData, tol_pos: float = TOL_POS) -> LSystem:
    """Pick-form realization on ``C^m`` with the metric ``P``.

    ``T = A + i g (g, .)_P`` with ``A = P^-1 Q`` and ``g = P^-1 phi``.
    """
    pick = build_pick_matrices(data)
    report = check_positivity(pick.P, tol_pos)
    if not report.strictly_positive:
        raise PickNotPositive(
            f"Pick matrix is not strictly positive (min eigenvalue {report.min_eigenvalue:.3e})"
        )
    # With rows of P, Q carrying the conjugated datum, the channel column that
    # interpolates is -conj(v); it equals v itself when every value is i.
    phi = -np.conj(np.array(data.values, dtype=complex))
    factor = scipy.linalg.cho_factor(pick.P, lower=True)
    g = scipy.linalg.cho_solve(factor, phi)
    A = scipy.linalg.cho_solve(factor, pick.Q)
    # g^* P = phi^* because P is Hermitian
    T = A + 1j * np.outer(g, phi.conj())
    aux = RealizationAux(phi=phi, g=g, A=A, pick=pick)
    return LSystem(T, g, "pick_form", metric=pick.P, source_nodes=data.nodes, aux=aux)


def build_model_delta(nodes: Sequence[complex] | InterpolationData) -> LSystem:
    """Upper-triangular model for data whose values are all ``i``."""
    if isinstance(nodes, InterpolationData):
        if not nodes.all_values_i:
            raise ModelRequiresValuesI("the model realization requires every value to equal i")
        z = np.array(nodes.nodes)
    else:
        z = np.array(validate_data(nodes).nodes)
    T = np.triu(2j * np.sqrt(np.outer(z.imag, z.imag)), k=1) + np.diag(z)
    return LSystem(T, np.sqrt(z.imag).astype(complex), "model_delta", source_nodes=z)


def build_multiplication(lambda0: complex) -> LSystem:
    lam = complex(lambda0)
    if not lam.imag > 0:
        raise NotDissipative(f"multiplication parameter {lam} must have positive imaginary part")
    return LSystem([[lam]], [np.sqrt(lam.imag)], "multiplication", source_nodes=[lam])


def couple(sys1: LSystem, sys2: LSystem, auto_convert: bool = True) -> LSystem:
    """Coupling ``sys1 . sys2``; its transfer function is ``W1 * W2``.

    Systems carrying a metric are flattened with :func:`to_euclidean` first
    unless ``auto_convert`` is false, in which case :class:`MetricMismatch`
    is raised.
    """
    if not (sys1.euclidean and sys2.euclidean):
        if not auto_convert:
            raise MetricMismatch("coupling is defined for Euclidean-metric systems only")
        sys1, sys2 = to_euclidean(sys1), to_euclidean(sys2)
    g1, g2 = sys1.K, sys2.K
    n1 = sys1.n
    T = np.zeros((n1 + sys2.n,) * 2, dtype=complex)
    T[:n1, :n1] = sys1.T
    T[:n1, n1:] = 2j * np.outer(g1, g2.conj())
    T[n1:, n1:] = sys2.T
    nodes = None
    if sys1.source_nodes is not None and sys2.source_nodes is not None:
        nodes = np.concatenate([sys1.source_nodes, sys2.source_nodes])
    return LSystem(T, np.concatenate([g1, g2]), "coupling", source_nodes=nodes)


def couple_all(systems: Iterable[LSystem]) -> LSystem:
    """Left-to-right iterated coupling."""
    return reduce(couple, systems)


def coupling_of_nodes(nodes: Sequence[complex]) -> LSystem:
    return couple_all(build_multiplication(z) for z in nodes)


def to_euclidean(sys: LSystem) -> LSystem:
    """Change basis so the state-space inner product becomes Euclidean.

    With ``P = L L^*``: ``T' = L^* T L^-*`` and ``K' = L^* K``.
    """
    if sys.metric is None:
        return sys
    try:
        L = scipy.linalg.cholesky(sys.metric, lower=True)
    except np.linalg.LinAlgError as exc:
        raise MetricNotPositive("metric is not strictly positive") from exc
    if sys.aux is not None:
        # T = P^-1 (Q + i phi phi^*), so T' = L^-1 (Q + i phi phi^*) L^-*
        phi = sys.aux.phi
        M = sys.aux.pick.Q + 1j * np.outer(phi, phi.conj())
        left = scipy.linalg.solve_triangular(L, M, lower=True)
        T = scipy.linalg.solve_triangular(L, left.conj().T, lower=True).conj().T
        g = scipy.linalg.solve_triangular(L, phi, lower=True)
    else:
        LH = L.conj().T
        T = scipy.linalg.solve_triangular(LH.T, (LH @ sys.T).T, lower=True).T
        g = LH @ sys.K
    return LSystem(T, g, sys.form, source_nodes=sys.source_nodes)


def check_dissipativity(sys: LSystem, tol: float = DISSIPATIVITY_TOL) -> bool:
    """Metric-aware test of ``(T - T^#)/(2i) = K K^#``.

    Both sides are multiplied by the metric ``P`` so no inverse is formed:
    ``(P T - T^* P)/(2i) = (P K)(P K)^*``.
    """
    P = sys.gram()
    PT = P @ sys.T
    lhs = (PT - PT.conj().T) / 2j
    PK = P @ sys.K
    rhs = np.outer(PK, PK.conj())
    scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs), np.finfo(float).tiny)
    return bool(np.linalg.norm(lhs - rhs) <= tol * scale)


def default_probes(sys: LSystem) -> np.ndarray:
    """``2n`` points in the lower half-plane spread across the spectrum's width."""
    eig = sys.eigenvalues
    centre = float(np.mean(eig.real))
    radius = 1.0 + float(np.max(np.abs(eig - centre)))
    count = 2 * sys.n
    x = np.linspace(-1.0, 1.0, count)
    y = np.where(np.arange(count) % 2 == 0, 0.25, 1.0)
    return centre + radius * x - 1j * radius * y


def check_minimality(
    sys: LSystem, probe_points: Optional[Sequence[complex]] = None, rank_tol: float = RANK_TOL
) -> bool:
    """Numerical rank test on resolvent-excited directions ``(T - zeta_j)^-1 K``."""
    probes = default_probes(sys) if probe_points is None else np.asarray(probe_points, dtype=complex)
    if probes.size < sys.n:
        raise ValueError(f"need at least {sys.n} probe points, got {probes.size}")
    eig = sys.eigenvalues
    columns = []
    for j, zeta in enumerate(probes, start=1):
        if np.min(np.abs(eig - zeta)) <= PROBE_TOL:
            raise ProbeNotRegular(j, complex(zeta))
        col = np.linalg.solve(sys.T - zeta * np.eye(sys.n), sys.K)
        norm = np.linalg.norm(col)
        columns.append(col / norm if norm > 0 else col)
    if sys.metric is not None:
        # rank is basis-independent, but singular values are read in the metric
        columns = [scipy.linalg.cholesky(sys.metric, lower=True).conj().T @ c for c in columns]
    s = np.linalg.svd(np.column_stack(columns), compute_uv=False)
    return bool(s[0] > 0 and s[-1] > rank_tol * s[0])


def equivalence_grid(*systems: LSystem) -> np.ndarray:
    """Deterministic 25-point grid clear of every system's spectrum.

    Fifteen points sit in the lower half-plane, where Blaschke-type transfer
    functions are bounded by one; ten sit high in the upper half-plane, far
    enough above the spectrum that every pole factor stays below 5/3.
    """
    radius = 1.0 + max(float(np.max(np.abs(s.eigenvalues))) for s in systems)
    re = radius * np.array([-1.0, -0.5, 0.0, 0.5, 1.0])
    lower = [complex(x, -y) for y in (0.5, 1.5, 3.0) for x in re]
    upper = [complex(x, y * radius) for y in (4.0, 8.0) for x in re]
    return np.array(lower + upper)


def max_transfer_deviation(sys1: LSystem, sys2: LSystem, grid: Optional[Sequence[complex]] = None) -> float:
    grid = equivalence_grid(sys1, sys2) if grid is None else grid
    try:
        w1 = analytic.transfer_on(sys1, grid)
        w2 = analytic.transfer_on(sys2, grid)
    except NotRegularPoint as exc:
        raise GridPointNotRegular(exc.point) from exc
    return float(np.max(np.abs(w1 - w2), initial=0.0))


def check_unitary_equivalence(
    sys1: LSystem,
    sys2: LSystem,
    grid: Optional[Sequence[complex]] = None,
    tol: float = EQUIVALENCE_TOL,
) -> bool:
    """Transfer-function agreement on ``grid``; for minimal systems this is
    equivalent to unitary equivalence."""
    return max_transfer_deviation(sys1, sys2, grid) <= tol


# -- seeded test data -------------------------------------------------------

_BOX_RE = (-3.0, 3.0)
_BOX_IM = (0.5, 3.0)
_MIN_SEPARATION = 0.6
_AVOID_I = 1e-3
_MAX_DRAWS = 10_000
MAX_SAMPLE_CONDITION = 1e4


def _draw_points(rng: np.random.Generator, m: int, avoid: Sequence[complex] = ()) -> np.ndarray:
    """Greedy rejection sampling of ``m`` well-separated points in the box."""
    points: list[complex] = []
    taken = [complex(z) for z in avoid]
    while len(points) < m:
        batch = rng.uniform(*_BOX_RE, 4 * m) + 1j * rng.uniform(*_BOX_IM, 4 * m)
        for z in batch.tolist():
            if abs(z - 1j) < _AVOID_I or any(abs(z - t) < _MIN_SEPARATION for t in taken):
                continue
            points.append(z)
            taken.append(z)
            if len(points) == m:
                break
    return np.array(points)


def _coupling_impedance(lambdas: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Impedance of the coupling of multiplication models, via the Cayley
    transform of its Blaschke-product transfer function."""
    upper = np.prod(z[:, None] - lambdas.conj()[None, :], axis=1)
    lower = np.prod(z[:, None] - lambdas[None, :], axis=1)
    return 1j * (upper - lower) / (upper + lower)


def sample_problem(
    seed: int, m: int, values_i: bool = False, max_condition: float = MAX_SAMPLE_CONDITION
) -> tuple[InterpolationData, LSystem]:
    """Random data together with the minimal dissipative system that generated it.

    The generator is an iterated coupling of ``m`` multiplication models. With
    ``values_i`` the nodes are the generator's own parameters (its
    eigenvalues), so every value is exactly ``i``; otherwise independent
    nodes are drawn and the values are the generator's impedance at them.

    Draws whose Pick matrix has condition number above ``max_condition`` are
    rejected and redrawn from the same stream, so the data stay resolvable to
    near machine precision.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    rng = np.random.default_rng(seed)
    for _ in range(_MAX_DRAWS):
        lambdas = _draw_points(rng, m)
        if values_i:
            nodes, values = lambdas, np.full(m, 1j)
        else:
            nodes = _draw_points(rng, m, avoid=lambdas)
            values = _coupling_impedance(lambdas, nodes)
        P, _ = pick_matrices(nodes, values)
        if check_positivity(P).condition_estimate <= max_condition:
            generator = coupling_of_nodes(lambdas)
            if not values_i:
                # take the values from the operator itself, not the closed form
                values = analytic.impedance_on(generator, nodes)
            return validate_data(nodes, values), generator
    raise RuntimeError(f"no draw met the condition bound {max_condition:g} (seed={seed}, m={m})")


def sample_valid_data(seed: int, m: int, values_i: bool = False) -> InterpolationData:
    return sample_problem(seed, m, values_i)[0]
