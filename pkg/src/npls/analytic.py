"""Transfer and impedance functions, Cayley transforms and closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    DenominatorZero,
    NotRegularPoint,
    NPLSError,
    PoleAtI,
    PoleAtMinusOne,
    PoleAtNode,
)
from .system import LSystem

POLE_TOL = 1e-12
CAYLEY_TOL = 1e-15


def _require_regular(spectrum: np.ndarray, z: complex) -> None:
    if spectrum.size and np.min(np.abs(spectrum - z)) <= POLE_TOL * (1 + abs(z)):
        raise NotRegularPoint(z)


def transfer(sys: LSystem, z: complex) -> complex:
    """``W(z) = 1 - 2i ((T - z)^-1 K, K)`` in the metric of ``sys``.

    Pick-form systems use ``T = P^-1 (Q + i phi phi^*)`` and are evaluated as
    ``1 - 2i phi^* (Q + i phi phi^* - zP)^-1 phi``.
    """
    z = complex(z)
    _require_regular(sys.eigenvalues, z)
    if sys.aux is not None:
        phi = sys.aux.phi
        pick = sys.aux.pick
        M = pick.Q + 1j * np.outer(phi, phi.conj()) - z * pick.P
        return 1 - 2j * complex(np.vdot(phi, np.linalg.solve(M, phi)))
    x = np.linalg.solve(sys.T - z * np.eye(sys.n), sys.K)
    return 1 - 2j * sys.inner(x, sys.K)


def impedance(sys: LSystem, z: complex) -> complex:
    """``V(z) = ((Re T - z)^-1 K, K)`` in the metric of ``sys``.

    Pick-form systems are evaluated through the pencil, ``phi^* (Q - zP)^-1 phi``,
    which avoids forming ``P^-1``.
    """
    z = complex(z)
    _require_regular(sys.real_part_eigenvalues, z)
    if sys.aux is not None:
        phi = sys.aux.phi
        pick = sys.aux.pick
        return complex(np.vdot(phi, np.linalg.solve(pick.Q - z * pick.P, phi)))
    x = np.linalg.solve(sys.real_part - z * np.eye(sys.n), sys.K)
    return sys.inner(x, sys.K)


def _check_grid(spectrum: np.ndarray, zs: np.ndarray) -> None:
    if spectrum.size and zs.size:
        dist = np.min(np.abs(spectrum[None, :] - zs[:, None]), axis=1)
        bad = np.flatnonzero(dist <= POLE_TOL * (1 + np.abs(zs)))
        if bad.size:
            raise NotRegularPoint(complex(zs[bad[0]]))


def _batched_form(M: np.ndarray, rhs: np.ndarray, left: np.ndarray) -> np.ndarray:
    """``left^* M_j^-1 rhs`` for a stack of matrices ``M_j``."""
    b = np.broadcast_to(rhs[:, None], (M.shape[0], rhs.size, 1))
    x = np.linalg.solve(M, b)[..., 0]
    return x @ left.conj()


def transfer_on(sys: LSystem, grid: Iterable[complex]) -> np.ndarray:
    """:func:`transfer` evaluated over a grid in one batched solve."""
    zs = np.asarray(list(grid), dtype=complex)
    _check_grid(sys.eigenvalues, zs)
    eye = np.eye(sys.n)
    if sys.aux is not None:
        phi = sys.aux.phi
        pick = sys.aux.pick
        M = (pick.Q + 1j * np.outer(phi, phi.conj()))[None] - zs[:, None, None] * pick.P[None]
        return 1 - 2j * _batched_form(M, phi, phi)
    M = sys.T[None] - zs[:, None, None] * eye[None]
    return 1 - 2j * _batched_form(M, sys.K, sys.gram() @ sys.K)


def impedance_on(sys: LSystem, grid: Iterable[complex]) -> np.ndarray:
    """:func:`impedance` evaluated over a grid in one batched solve."""
    zs = np.asarray(list(grid), dtype=complex)
    _check_grid(sys.real_part_eigenvalues, zs)
    if sys.aux is not None:
        phi = sys.aux.phi
        pick = sys.aux.pick
        M = pick.Q[None] - zs[:, None, None] * pick.P[None]
        return _batched_form(M, phi, phi)
    M = sys.real_part[None] - zs[:, None, None] * np.eye(sys.n)[None]
    return _batched_form(M, sys.K, sys.gram() @ sys.K)


def cayley_w_to_v(w: complex) -> complex:
    w = complex(w)
    if abs(w + 1) <= CAYLEY_TOL:
        raise PoleAtMinusOne(f"W = {w} hits the pole of the Cayley transform")
    return 1j * (w - 1) / (w + 1)


def cayley_v_to_w(v: complex) -> complex:
    v = complex(v)
    if abs(1 + 1j * v) <= CAYLEY_TOL:
        raise PoleAtI(f"V = {v} equals i; W has a pole here")
    return (1 - 1j * v) / (1 + 1j * v)


def blaschke_transfer(nodes: Sequence[complex], z: complex) -> complex:
    """Finite Blaschke product ``prod (z - conj z_k) / (z - z_k)``, in node order."""
    z = complex(z)
    w = 1 + 0j
    for k, zk in enumerate(nodes, start=1):
        zk = complex(zk)
        if abs(z - zk) <= POLE_TOL * (1 + abs(z)):
            raise PoleAtNode(k, zk)
        w *= (z - zk.conjugate()) / (z - zk)
    return w


def impedance_closed_form(nodes: Sequence[complex], z: complex) -> complex:
    """Impedance of the ``v_k = i`` model written as a ratio of node polynomials."""
    z = complex(z)
    upper = np.prod([z - complex(zk).conjugate() for zk in nodes])
    lower = np.prod([z - complex(zk) for zk in nodes])
    den = upper + lower
    if abs(den) <= CAYLEY_TOL * (abs(upper) + abs(lower)):
        raise DenominatorZero(f"impedance has a pole at z = {z}")
    return complex(1j * (upper - lower) / den)


def coupled_impedance_two(lambda0: complex, mu0: complex, z: complex) -> complex:
    """Impedance of the coupling of two one-dimensional multiplication models."""
    lam, mu, z = complex(lambda0), complex(mu0), complex(z)
    s, p = lam + mu, lam * mu
    num = s.imag * z - p.imag
    den = s.real * z - p.real - z * z
    if abs(den) <= CAYLEY_TOL * (abs(num) + abs(z) ** 2 + abs(s) * abs(z) + abs(p)):
        raise DenominatorZero(f"impedance has a pole at z = {z}")
    return num / den


def rect_grid(re_min: float, re_max: float, im_min: float, im_max: float, steps: int) -> np.ndarray:
    """Tensor grid of ``steps x steps`` points, imaginary part varying slowest."""
    re = np.linspace(re_min, re_max, steps)
    im = np.linspace(im_min, im_max, steps)
    return np.array([complex(x, y) for y in im for x in re])


HERGLOTZ_GRID = rect_grid(-5.0, 5.0, 0.1, 5.0, 10)


@dataclass
class HerglotzReport:
    min_im: float
    all_positive: bool
    skipped: list = field(default_factory=list)


def herglotz_scan(
    evaluator: Callable[[complex], complex], grid: Iterable[complex] | None = None
) -> HerglotzReport:
    """Scan ``Im f`` over upper half-plane points.

    Points where ``evaluator`` raises a package error or returns a non-finite
    value are treated as pole-adjacent and listed in ``skipped``.
    """
    grid = HERGLOTZ_GRID if grid is None else grid
    min_im = np.inf
    skipped = []
    for z in grid:
        try:
            f = complex(evaluator(z))
        except (NPLSError, ZeroDivisionError, np.linalg.LinAlgError):
            skipped.append(complex(z))
            continue
        if not np.isfinite(f):
            skipped.append(complex(z))
            continue
        min_im = min(min_im, f.imag)
    return HerglotzReport(float(min_im), bool(np.isfinite(min_im) and min_im > 0), skipped)
