"""Cross-verification of the realizations of one data set.

Every check reports its largest deviation and a pass flag. Systems whose
transfer functions should coincide are compared on the deterministic grid
from :func:`npls.realizations.equivalence_grid`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional

import numpy as np

from . import analytic, invariants
from .errors import NPLSError
from .pick import TOL_POS, InterpolationData
from .realizations import (
    build_model_delta,
    build_multiplication,
    build_pick_form,
    couple,
    coupling_of_nodes,
    equivalence_grid,
    max_transfer_deviation,
    to_euclidean,
)
from .system import LSystem

TOLERANCES = {
    "equivalence": 1e-10,
    "cayley": 1e-11,
    "routes": 1e-9,
    "interpolation": 1e-9,
    "multiplication": 1e-11,
}


@dataclass
class Check:
    name: str
    deviation: float
    tol: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.deviation) and self.deviation <= self.tol)


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, deviation: float, key: str, detail: str = "") -> None:
        self.checks.append(Check(name, float(deviation), TOLERANCES[key], detail))

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "max_deviation": c.deviation, "tol": c.tol, "passed": c.passed}
                for c in self.checks
            ],
        }


def realizations_of(data: InterpolationData, tol_pos: float = TOL_POS) -> dict[str, LSystem]:
    """Every construction applicable to ``data``, keyed by a short label."""
    pick = build_pick_form(data, tol_pos)
    systems = {"pick": pick, "pick_euclidean": to_euclidean(pick)}
    if data.all_values_i:
        systems["model"] = build_model_delta(data)
        systems["coupling"] = coupling_of_nodes(data.nodes)
    return systems


def _safe(fn, *args) -> float:
    try:
        return float(fn(*args))
    except (NPLSError, np.linalg.LinAlgError):
        return float("inf")


def _cayley_deviation(sys: LSystem, grid: np.ndarray) -> float:
    w = analytic.transfer_on(sys, grid)
    v = analytic.impedance_on(sys, grid)
    return float(np.max(np.abs((1 - 1j * v) / (1 + 1j * v) - w)))


def _interpolation_deviation(sys: LSystem, data: InterpolationData) -> float:
    return float(np.max(np.abs(analytic.impedance_on(sys, data.nodes) - data.values)))


def _multiplication_deviation(sys: LSystem, grid: np.ndarray) -> float:
    """``W`` of the self-coupling against ``W^2``."""
    euc = to_euclidean(sys)
    w = analytic.transfer_on(euc, grid)
    return float(np.max(np.abs(analytic.transfer_on(couple(euc, euc), grid) - w * w)))


def _factor_deviation(nodes: np.ndarray, grid: np.ndarray) -> float:
    """Coupling of multiplication models against the product of their factors."""
    coupled = analytic.transfer_on(coupling_of_nodes(nodes), grid)
    product = np.prod([analytic.transfer_on(build_multiplication(z), grid) for z in nodes], axis=0)
    return float(np.max(np.abs(coupled - product)))


def _route_deviation(systems: Mapping[str, LSystem], data: InterpolationData, tol_node: float) -> float:
    """Spread of entropy and dissipation over every available route."""
    entropies = [invariants.entropy_from_system(s, tol_node) for s in systems.values()]
    dissipations = [invariants.dissipation_from_entropy(s) for s in entropies]
    dissipations += [invariants.dissipation_operator(s) for s in systems.values()]
    if data.all_values_i:
        entropies.append(invariants.entropy_from_nodes(data.nodes, tol_node))
        dissipations.append(invariants.dissipation_from_nodes(data.nodes, tol_node))
    finite = [e.finite for e in entropies]
    if any(finite) and not all(finite):
        return float("inf")
    spread = 0.0
    if all(finite):
        values = [e.value for e in entropies]
        spread = max(values) - min(values)
    return max(spread, max(dissipations) - min(dissipations))


def verify_data(
    data: InterpolationData,
    extra: Optional[Mapping[str, LSystem]] = None,
    tol_pos: float = TOL_POS,
    tol_node: float = invariants.TOL_NODE,
) -> VerificationReport:
    systems = realizations_of(data, tol_pos)
    systems.update(extra or {})
    grid = equivalence_grid(*systems.values())
    report = VerificationReport()
    for (n1, s1), (n2, s2) in combinations(systems.items(), 2):
        report.add(f"transfer {n1} vs {n2}", _safe(max_transfer_deviation, s1, s2, grid), "equivalence")
    for name, sys in systems.items():
        report.add(f"cayley duality {name}", _safe(_cayley_deviation, sys, grid), "cayley")
    for name, sys in systems.items():
        report.add(f"interpolation {name}", _safe(_interpolation_deviation, sys, data), "interpolation")
    report.add("entropy and dissipation routes", _safe(_route_deviation, systems, data, tol_node), "routes")
    report.add("multiplication pick*pick", _safe(_multiplication_deviation, systems["pick"], grid), "multiplication")
    if data.all_values_i:
        report.add("multiplication of node factors", _safe(_factor_deviation, data.nodes, grid), "multiplication")
    return report
