"""Interpolation data and Pick matrices.

Data are finite node/value lists in the upper half-plane. The Pick pair
``(P, Q)`` carries divided differences of the data; strict positivity of
``P`` is what makes the Pick-form realization well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DuplicateNodes,
    InvalidData,
    LengthMismatch,
    NodeNotInUpperHalfPlane,
    NonHermitianInput,
    ValueNotInUpperHalfPlane,
)

TOL_POS = 1e-10
DUPLICATE_TOL = 1e-9
MAX_NODES = 64
HERMITIAN_TOL = 1e-10


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class InterpolationData:
    """Nodes ``z_k`` and target values ``v_k``, both in the open upper half-plane.

    ``values_defaulted`` records that the caller omitted the values and every
    ``v_k`` was filled in as ``i``.
    """

    nodes: np.ndarray
    values: np.ndarray
    values_defaulted: bool = False

    @property
    def m(self) -> int:
        return len(self.nodes)

    @property
    def all_values_i(self) -> bool:
        return bool(np.all(np.abs(self.values - 1j) < DUPLICATE_TOL))


@dataclass(frozen=True, eq=False)
class PickPair:
    P: np.ndarray
    Q: np.ndarray


@dataclass(frozen=True)
class PositivityReport:
    min_eigenvalue: float
    matrix_norm: float
    strictly_positive: bool
    condition_estimate: float


def validate_data(
    raw_nodes: Iterable[complex], raw_values: Optional[Iterable[complex]] = None
) -> InterpolationData:
    """Check and freeze raw interpolation data.

    Omitted values default to ``v_k = i`` for every node. Raises one of the
    :class:`~npls.errors.InvalidData` subclasses on the first violation found.
    """
    nodes = [complex(z) for z in raw_nodes]
    if not nodes:
        raise InvalidData("at least one interpolation node is required")
    if len(nodes) > MAX_NODES:
        raise InvalidData(f"at most {MAX_NODES} nodes are supported, got {len(nodes)}")

    defaulted = raw_values is None
    values = [1j] * len(nodes) if defaulted else [complex(v) for v in raw_values]
    if len(values) != len(nodes):
        raise LengthMismatch(len(nodes), len(values))

    for k, z in enumerate(nodes, start=1):
        if not (np.isfinite(z.real) and np.isfinite(z.imag)) or z.imag <= 0:
            raise NodeNotInUpperHalfPlane(k, z)
    for k, v in enumerate(values, start=1):
        if not (np.isfinite(v.real) and np.isfinite(v.imag)) or v.imag <= 0:
            raise ValueNotInUpperHalfPlane(k, v)
    for j in range(len(nodes)):
        for k in range(j + 1, len(nodes)):
            if abs(nodes[j] - nodes[k]) < DUPLICATE_TOL * (1 + abs(nodes[j])):
                raise DuplicateNodes(j + 1, k + 1)

    return InterpolationData(_frozen(nodes), _frozen(values), defaulted)


def pick_matrices(nodes: Sequence[complex], values: Sequence[complex]) -> tuple[np.ndarray, np.ndarray]:
    """Raw Pick matrices from unvalidated arrays, symmetrized to be Hermitian.

    Row index ``j`` carries the conjugated datum:
    ``P[j, k] = (v_k - conj v_j) / (z_k - conj z_j)`` and
    ``Q[j, k] = (z_k v_k - conj(z_j v_j)) / (z_k - conj z_j)``.
    """
    z = np.asarray(nodes, dtype=complex)
    v = np.asarray(values, dtype=complex)
    denom = z[None, :] - z.conj()[:, None]
    P = (v[None, :] - v.conj()[:, None]) / denom
    Q = ((z * v)[None, :] - (z * v).conj()[:, None]) / denom
    P = 0.5 * (P + P.conj().T)
    Q = 0.5 * (Q + Q.conj().T)
    return P, Q


def build_pick_matrices(data: InterpolationData) -> PickPair:
    P, Q = pick_matrices(data.nodes, data.values)
    P.setflags(write=False)
    Q.setflags(write=False)
    return PickPair(P, Q)


def check_positivity(P: np.ndarray, tol_pos: float = TOL_POS) -> PositivityReport:
    """Certify strict positivity of a Hermitian matrix from its spectrum.

    ``strictly_positive`` holds iff the smallest eigenvalue exceeds
    ``tol_pos`` times the spectral norm.
    """
    P = np.asarray(P, dtype=complex)
    eig = np.linalg.eigvalsh(0.5 * (P + P.conj().T)) if P.size else np.zeros(0)
    norm = float(np.max(np.abs(eig))) if eig.size else 0.0
    asym = float(np.max(np.abs(P - P.conj().T))) if P.size else 0.0
    if asym > HERMITIAN_TOL * max(norm, np.finfo(float).tiny):
        raise NonHermitianInput(f"matrix is not Hermitian (asymmetry {asym:.3e})")
    lo = float(eig[0])
    hi = float(eig[-1])
    cond = hi / lo if lo > 0 else float("inf")
    return PositivityReport(
        min_eigenvalue=lo,
        matrix_norm=norm,
        strictly_positive=bool(lo > tol_pos * norm),
        condition_estimate=cond,
    )
