"""c-entropy, dissipation coefficient, regime classification and kappa.

Entropy is ``S = -ln|W(-i)|`` and dissipation is ``D = 1 - exp(-2 S)``. Both
are computed from a system's transfer function, from node formulas, and (for
``D``) from the operator identity ``D = 4 ||(T + iI)^-1 g||^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from . import analytic
from .errors import NodeAtI, NotApplicable, NotRegularPoint
from .realizations import to_euclidean
from .system import LSystem

TOL_NODE = 1e-9
ZERO_MODULUS = 1e-300


@dataclass(frozen=True)
class EntropyValue:
    """Extended-real entropy in nats; ``value`` is ``inf`` when not finite."""

    finite: bool
    value: float

    def __post_init__(self):
        if self.finite and not (math.isfinite(self.value) and self.value >= 0):
            raise ValueError(f"finite entropy must be a non-negative real, got {self.value}")
        if not self.finite:
            object.__setattr__(self, "value", math.inf)

    @classmethod
    def of(cls, value: float) -> "EntropyValue":
        return cls(True, max(float(value), 0.0)) if math.isfinite(value) else cls.infinite()

    @classmethod
    def infinite(cls) -> "EntropyValue":
        return cls(False, math.inf)


class Regime(str, Enum):
    INFINITE = "infinite"
    MAXIMAL_FINITE = "maximal_finite"
    SUB_MAXIMAL = "sub_maximal"


@dataclass(frozen=True)
class RegimeClassification:
    kind: Regime
    offending_nodes: list = field(default_factory=list)


def _node_at_i(z: complex, tol_node: float) -> bool:
    return abs(complex(z) - 1j) < tol_node


def _nodes(nodes: Sequence[complex]) -> np.ndarray:
    z = np.asarray(nodes, dtype=complex).ravel()
    if np.any(z.imag <= 0):
        k = int(np.flatnonzero(z.imag <= 0)[0]) + 1
        raise ValueError(f"node {k} = {z[k - 1]} is not in the open upper half-plane")
    return z


# -- entropy ------------------------------------------------------------------


def entropy_from_system(sys: LSystem, tol_node: float = TOL_NODE) -> EntropyValue:
    """``-ln|W(-i)|`` evaluated on the system itself."""
    if sys.source_nodes is not None and any(_node_at_i(z, tol_node) for z in sys.source_nodes):
        return EntropyValue.infinite()
    w = analytic.transfer(sys, -1j)
    modulus = abs(w)
    if modulus < ZERO_MODULUS:
        return EntropyValue.infinite()
    return EntropyValue.of(-math.log(modulus))


def _node_ratio(z: np.ndarray) -> np.ndarray:
    """Per-node ``|z + i|^2 / |z - i|^2``, written out in real and imaginary parts."""
    x, y = z.real, z.imag
    return (x**2 + (1 + y) ** 2) / (x**2 + (1 - y) ** 2)


def entropy_from_nodes(nodes: Sequence[complex], tol_node: float = TOL_NODE) -> EntropyValue:
    z = _nodes(nodes)
    if any(_node_at_i(zk, tol_node) for zk in z):
        return EntropyValue.infinite()
    return EntropyValue.of(0.5 * float(np.sum(np.log(_node_ratio(z)))))


def single_node_invariants(lambda0: complex, tol_node: float = TOL_NODE) -> tuple[EntropyValue, float]:
    lam = complex(lambda0)
    if not lam.imag > 0:
        raise ValueError(f"lambda0 = {lam} must have positive imaginary part")
    d = 4 * lam.imag / (lam.real**2 + (1 + lam.imag) ** 2)
    if _node_at_i(lam, tol_node):
        return EntropyValue.infinite(), 1.0
    return entropy_from_nodes([lam], tol_node), d


# -- dissipation --------------------------------------------------------------


def dissipation_from_entropy(s: EntropyValue) -> float:
    if not s.finite:
        return 1.0
    return float(-math.expm1(-2.0 * s.value))


def dissipation_from_nodes(nodes: Sequence[complex], tol_node: float = TOL_NODE) -> float:
    z = _nodes(nodes)
    if any(_node_at_i(zk, tol_node) for zk in z):
        return 1.0
    return float(1.0 - np.prod(1.0 / _node_ratio(z)))


def dissipation_operator(sys: LSystem) -> float:
    """``4 ||(T + iI)^-1 g||^2`` on the Euclidean form of ``sys``."""
    sys = to_euclidean(sys)
    if np.min(np.abs(sys.eigenvalues + 1j)) <= analytic.POLE_TOL:
        raise NotRegularPoint(-1j)
    x = np.linalg.solve(sys.T + 1j * np.eye(sys.n), sys.K)
    return float(4.0 * np.vdot(x, x).real)


def compose_entropy(s1: EntropyValue, s2: EntropyValue) -> EntropyValue:
    if not (s1.finite and s2.finite):
        return EntropyValue.infinite()
    return EntropyValue.of(s1.value + s2.value)


def compose_dissipation(d1: float, d2: float) -> float:
    return float(d1 + d2 - d1 * d2)


def two_node_dissipation_closed(lambda0: complex, mu0: complex) -> float:
    lam, mu = complex(lambda0), complex(mu0)
    if not (lam.imag > 0 and mu.imag > 0):
        raise ValueError("both parameters must have positive imaginary part")
    num = 4 * lam.imag * (abs(mu) ** 2 + 1) + 4 * mu.imag * (abs(lam) ** 2 + 1)
    den = (lam.real**2 + (1 + lam.imag) ** 2) * (mu.real**2 + (1 + mu.imag) ** 2)
    return float(num / den)


# -- regimes ------------------------------------------------------------------


def classify_regime(nodes: Sequence[complex], tol_node: float = TOL_NODE) -> RegimeClassification:
    z = _nodes(nodes)
    at_i = [k for k, zk in enumerate(z, start=1) if _node_at_i(zk, tol_node)]
    if at_i:
        return RegimeClassification(Regime.INFINITE, at_i)
    if np.all(np.abs(z.real) < tol_node):
        return RegimeClassification(Regime.MAXIMAL_FINITE)
    return RegimeClassification(Regime.SUB_MAXIMAL)


def imaginary_axis_invariants(
    a: Sequence[float], tol_node: float = TOL_NODE, lenient: bool = False
) -> tuple[EntropyValue, float]:
    """Invariants for nodes ``i a_k``.

    The entropy uses ``ln|(1 + a)/(1 - a)|``. A node at ``a = 1`` raises
    :class:`NodeAtI` unless ``lenient``, which returns ``(inf, 1)``.
    """
    a = np.asarray(a, dtype=float).ravel()
    if np.any(a <= 0):
        raise ValueError("every a_k must be positive")
    hits = np.flatnonzero(np.abs(a - 1) < tol_node)
    if hits.size:
        if lenient:
            return EntropyValue.infinite(), 1.0
        raise NodeAtI(int(hits[0]) + 1)
    # log1p keeps small a accurate; |1 - a| = 1 - a below one and a - 1 above
    below = a < 1
    shifted = np.where(below, -a, a - 2.0)
    s = float(np.sum(np.log1p(a) - np.log1p(shifted)))
    d = float(1.0 - np.prod(((1 - a) / (1 + a)) ** 2))
    return EntropyValue.of(s), d


def compute_kappa(sys: LSystem, tol_node: float = TOL_NODE) -> float:
    """``(1 - t)/(1 + t)`` for ``V(i) = i t`` with ``0 < t <= 1``."""
    v = analytic.impedance(sys, 1j)
    if abs(v.real) >= tol_node:
        raise NotApplicable(f"V(i) = {v} is not purely imaginary")
    t = v.imag
    if not 0 < t <= 1 + tol_node:
        raise NotApplicable(f"Im V(i) = {t} lies outside (0, 1]")
    t = min(t, 1.0)
    return (1 - t) / (1 + t)
