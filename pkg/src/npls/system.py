"""The scalar L-system container shared by every realization."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np
import scipy.linalg

from .pick import PickPair

FORMS = ("pick_form", "model_delta", "multiplication", "coupling")


def _frozen(a, ndim: int) -> np.ndarray:
    arr = np.array(a, dtype=complex)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RealizationAux:
    """By-products of the Pick-form construction.

    ``phi`` is the channel column ``-conj(v_k)`` (equal to the values when
    all of them are ``i``), ``g = P^-1 phi`` and ``A = P^-1 Q``.
    """

    phi: np.ndarray
    g: np.ndarray
    A: np.ndarray
    pick: PickPair


@dataclass(frozen=True, eq=False)
class LSystem:
    """Main operator ``T`` and channel vector ``K`` (the map ``c -> c*K``).

    ``metric`` is the Gram matrix of the state-space inner product
    ``(x, y) = y^* metric x``; ``None`` means Euclidean.
    """

    T: np.ndarray
    K: np.ndarray
    form: str
    metric: Optional[np.ndarray] = None
    source_nodes: Optional[np.ndarray] = None
    aux: Optional[RealizationAux] = None

    def __post_init__(self):
        T = _frozen(self.T, 2)
        K = _frozen(self.K, 1)
        if T.shape != (K.size, K.size):
            raise ValueError(f"T has shape {T.shape} but K has length {K.size}")
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "K", K)
        if self.metric is not None:
            object.__setattr__(self, "metric", _frozen(self.metric, 2))
        if self.source_nodes is not None:
            object.__setattr__(self, "source_nodes", _frozen(self.source_nodes, 1))

    @property
    def n(self) -> int:
        return self.K.size

    @property
    def euclidean(self) -> bool:
        return self.metric is None

    def gram(self) -> np.ndarray:
        return np.eye(self.n, dtype=complex) if self.metric is None else self.metric

    def inner(self, x: np.ndarray, y: np.ndarray) -> complex:
        """``(x, y)`` in the state-space metric, linear in ``x``."""
        if self.metric is None:
            return complex(np.vdot(y, x))
        return complex(np.vdot(y, self.metric @ x))

    def adjoint(self) -> np.ndarray:
        """``T^#``, the adjoint of ``T`` with respect to the metric."""
        if self.metric is None:
            return self.T.conj().T
        return np.linalg.solve(self.metric, self.T.conj().T @ self.metric)

    @cached_property
    def real_part(self) -> np.ndarray:
        return 0.5 * (self.T + self.adjoint())

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.T)

    @cached_property
    def real_part_eigenvalues(self) -> np.ndarray:
        if self.aux is not None:
            # Re T = P^-1 Q: the pencil (Q, P) has the same spectrum
            pick = self.aux.pick
            return scipy.linalg.eigvalsh(pick.Q, pick.P).astype(complex)
        return np.linalg.eigvals(self.real_part)
