"""Exception types raised across the package.

Node and probe indices carried by these exceptions are 1-based, matching the
way interpolation nodes are numbered in reports and CLI messages.
"""

from __future__ import annotations


class NPLSError(ValueError):
    """Base class for every domain error raised by npls."""


# -- data validation --------------------------------------------------------


class InvalidData(NPLSError):
    """Interpolation data failed validation."""


class LengthMismatch(InvalidData):
    def __init__(self, n_nodes: int, n_values: int):
        self.n_nodes = n_nodes
        self.n_values = n_values
        super().__init__(f"{n_nodes} nodes but {n_values} values")


class NodeNotInUpperHalfPlane(InvalidData):
    def __init__(self, index: int, node: complex):
        self.index = index
        self.node = node
        super().__init__(f"node {index} = {node} is not in the open upper half-plane")


class ValueNotInUpperHalfPlane(InvalidData):
    def __init__(self, index: int, value: complex):
        self.index = index
        self.value = value
        super().__init__(f"value {index} = {value} does not have positive imaginary part")


class DuplicateNodes(InvalidData):
    def __init__(self, j: int, k: int):
        self.j = j
        self.k = k
        super().__init__(f"nodes {j} and {k} coincide")


class NonHermitianInput(NPLSError):
    pass


class PickNotPositive(NPLSError):
    """The Pick matrix of the data is not strictly positive."""


# -- realizations -----------------------------------------------------------


class NotDissipative(NPLSError):
    pass


class MetricMismatch(NPLSError):
    pass


class MetricNotPositive(NPLSError):
    pass


class ModelRequiresValuesI(NPLSError):
    pass


class ProbeNotRegular(NPLSError):
    def __init__(self, index: int, point: complex):
        self.index = index
        self.point = point
        super().__init__(f"probe {index} = {point} is (numerically) an eigenvalue of T")


class GridPointNotRegular(NPLSError):
    def __init__(self, point: complex):
        self.point = point
        super().__init__(f"grid point {point} is not a regular point of both systems")


# -- function evaluation ----------------------------------------------------


class NotRegularPoint(NPLSError):
    def __init__(self, point: complex):
        self.point = point
        super().__init__(f"{point} is not a regular point")


class PoleAtMinusOne(NPLSError):
    pass


class PoleAtI(NPLSError):
    pass


class PoleAtNode(NPLSError):
    def __init__(self, index: int, node: complex):
        self.index = index
        self.node = node
        super().__init__(f"z coincides with node {index} = {node}")


class DenominatorZero(NPLSError):
    pass


class PoleHit(NPLSError):
    pass


# -- invariants / synthesis -------------------------------------------------


class NotApplicable(NPLSError):
    pass


class NodeAtI(NPLSError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"node {index} sits at z = i")


class UnpairedNode(NPLSError):
    def __init__(self, index: int, node: complex):
        self.index = index
        self.node = node
        super().__init__(f"node {index} = {node} has no mirror partner -conj(z)")


class EmptyImpedance(NPLSError):
    pass
