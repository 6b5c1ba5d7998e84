"""Symmetric node configurations, model impedances and their LC networks.

A node set closed under ``z -> -conj(z)`` splits into mirror pairs
``+-a + ib`` and purely imaginary nodes ``ib``. Its model impedance

    V(z) = -A0/z + sum_k A_k z / (B_k^2 - z^2)

is a superposition of one capacitive term and resonant terms, and in the
frequency variable ``p = -iz`` it is the driving-point impedance of a series
capacitor followed by series-connected parallel-LC cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .analytic import POLE_TOL
from .errors import EmptyImpedance, PoleHit, UnpairedNode

PAIR_TOL = 1e-9
BODE_SIGMA = 1e-3


@dataclass(frozen=True)
class SymmetricPair:
    a: float
    b: float

    @property
    def nodes(self) -> tuple[complex, complex]:
        return complex(self.a, self.b), complex(-self.a, self.b)


@dataclass(frozen=True)
class SymmetricConfig:
    pairs: tuple[SymmetricPair, ...]
    imag_nodes: tuple[float, ...]

    def nodes(self) -> list[complex]:
        out = [z for p in self.pairs for z in p.nodes]
        return out + [complex(0.0, b) for b in self.imag_nodes]


@dataclass(frozen=True)
class Branch:
    A: float
    B: float


@dataclass(frozen=True)
class ModelImpedance:
    A0: float
    branches: tuple[Branch, ...]


@dataclass(frozen=True)
class PairImagParams:
    B2: float
    B2_tilde: float
    C: float
    A: float

    def __call__(self, z: complex) -> complex:
        """``-C/z + A z / (B~^2 - z^2)``."""
        return eval_model_impedance(ModelImpedance(self.C, (Branch(self.A, math.sqrt(self.B2_tilde)),)), z)


@dataclass(frozen=True)
class LCBranch:
    L: float
    C: float


@dataclass(frozen=True)
class LCNetwork:
    C0: float | None
    branches: tuple[LCBranch, ...]


def detect_symmetric(nodes: Sequence[complex], tol: float = PAIR_TOL) -> SymmetricConfig:
    """Split ``nodes`` into mirror pairs and purely imaginary nodes.

    Nodes are scanned in order; each node off the imaginary axis takes the
    first still-unmatched partner within ``tol`` of ``-conj(z)``.
    """
    z = [complex(w) for w in nodes]
    for k, w in enumerate(z, start=1):
        if not w.imag > 0:
            raise ValueError(f"node {k} = {w} is not in the open upper half-plane")
    used = [False] * len(z)
    pairs: list[SymmetricPair] = []
    imag: list[float] = []
    for k, w in enumerate(z):
        if used[k]:
            continue
        used[k] = True
        if abs(w.real) < tol:
            imag.append(w.imag)
            continue
        partner = next(
            (j for j in range(k + 1, len(z)) if not used[j] and abs(z[j] + w.conjugate()) < tol), None
        )
        if partner is None:
            raise UnpairedNode(k + 1, w)
        used[partner] = True
        pairs.append(SymmetricPair(abs(w.real), 0.5 * (w.imag + z[partner].imag)))
    return SymmetricConfig(tuple(pairs), tuple(imag))


def model_impedance(config: SymmetricConfig) -> ModelImpedance:
    branches = tuple(Branch(2.0 * p.b, math.hypot(p.a, p.b)) for p in config.pairs)
    return ModelImpedance(float(sum(config.imag_nodes)), branches)


def eval_model_impedance(mi: ModelImpedance, z: complex) -> complex:
    z = complex(z)
    v = 0j
    if mi.A0 > 0:
        if abs(z) <= POLE_TOL:
            raise PoleHit("z = 0 is a pole of the capacitive term")
        v -= mi.A0 / z
    for k, br in enumerate(mi.branches, start=1):
        den = br.B**2 - z * z
        if abs(den) <= POLE_TOL * (br.B**2 + abs(z) ** 2):
            raise PoleHit(f"z = {z} is a resonance of branch {k}")
        v += br.A * z / den
    return v


def canonical_pair_impedance(a: float, b: float, z: complex) -> complex:
    """Impedance ``2b z / (a^2 + b^2 - z^2)`` of a single mirror pair ``+-a + ib``."""
    if a == 0 or not b > 0:
        raise ValueError("need a != 0 and b > 0")
    return eval_model_impedance(ModelImpedance(0.0, (Branch(2.0 * b, math.hypot(a, b)),)), z)


def pair_plus_imag_params(a: float, b: float, c: float) -> PairImagParams:
    """Two-term impedance ``-C/z + A z/(B~^2 - z^2)`` equal to ``i`` at ``+-a + ib`` and ``ic``."""
    if a == 0 or not (b > 0 and c > 0):
        raise ValueError("need a != 0, b > 0 and c > 0")
    B2 = float(a * a + b * b)
    B2_tilde = B2 + 2 * b * c
    C = c * B2 / B2_tilde
    return PairImagParams(B2, B2_tilde, C, 2 * b + c - C)


def synthesize_lc(mi: ModelImpedance) -> LCNetwork:
    if not mi.branches and not mi.A0 > 0:
        raise EmptyImpedance("model impedance has no terms to realize")
    C0 = 1.0 / mi.A0 if mi.A0 > 0 else None
    return LCNetwork(C0, tuple(LCBranch(br.A / br.B**2, 1.0 / br.A) for br in mi.branches))


def network_impedance(net: LCNetwork, p: complex) -> complex:
    """Driving-point impedance ``1/(C0 p) + sum L p / (L C p^2 + 1)``."""
    p = complex(p)
    z = 0j
    if net.C0 is not None:
        if abs(p) <= POLE_TOL:
            raise PoleHit("p = 0 is a pole of the series capacitor")
        z += 1.0 / (net.C0 * p)
    for k, br in enumerate(net.branches, start=1):
        den = br.L * br.C * p * p + 1
        if abs(den) <= POLE_TOL * (1 + br.L * br.C * abs(p) ** 2):
            raise PoleHit(f"p = {p} is the resonance of LC cell {k}")
        z += br.L * p / den
    return z


def emit_netlist(net: LCNetwork) -> str:
    """SPICE-style element lines for the series chain, port across nodes 1 and 0.

    Each element occupies the link between two consecutive chain nodes; the
    last chain node is the return terminal.
    """
    lines = []
    node = 1
    if net.C0 is not None:
        lines.append(f"C0 {node} {node + 1} {net.C0:.12g}")
        node += 1
    for k, br in enumerate(net.branches, start=1):
        lines.append(f"L{k} {node} {node + 1} {br.L:.12g}")
        lines.append(f"C{k} {node} {node + 1} {br.C:.12g}")
        node += 1
    return "".join(line + "\n" for line in lines)


def default_bode_omegas(net: LCNetwork, count: int = 200) -> np.ndarray:
    """Log-spaced frequencies spanning two decades either side of the resonances."""
    res = [1.0 / math.sqrt(br.L * br.C) for br in net.branches] or [1.0]
    return np.logspace(math.log10(min(res)) - 2, math.log10(max(res)) + 2, count)


def bode_rows(net: LCNetwork, omegas: Iterable[float], sigma: float = BODE_SIGMA) -> list[tuple[float, complex]]:
    """``(omega, Z(sigma + i omega))``; the offset keeps resonance poles finite."""
    return [(float(w), network_impedance(net, complex(sigma, w))) for w in omegas]


def bode_csv(net: LCNetwork, omegas: Iterable[float] | None = None, sigma: float = BODE_SIGMA) -> str:
    omegas = default_bode_omegas(net) if omegas is None else omegas
    rows = ["omega,z_re,z_im"]
    rows += [f"{w:.12g},{z.real:.12g},{z.imag:.12g}" for w, z in bode_rows(net, omegas, sigma)]
    return "\n".join(rows) + "\n"
