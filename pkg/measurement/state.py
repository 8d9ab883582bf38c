from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ValidationError
from .operator import (
    as_operator,
    check_same_dim,
    herm_eig,
    is_hermitian,
    partial_trace_first,
    partial_trace_second,
)
from .tolerance import TOL

CLUSTER_TOL = 1e-8  # eigenvalues closer than this belong to the same projector

PAULI_X = as_operator([[0, 1], [1, 0]])
PAULI_Y = as_operator([[0, -1j], [1j, 0]])
PAULI_Z = as_operator([[1, 0], [0, -1]])

H = np.array([1.0, 0.0])  # horizontal polarization
V = np.array([0.0, 1.0])  # vertical polarization


@dataclass(frozen=True)
class DensityOperator:
    op: np.ndarray

    def __post_init__(self):
        op = as_operator(self.op)
        object.__setattr__(self, "op", op)

        tol = TOL.check
        if not is_hermitian(op, tol):
            raise ValidationError("a density operator must be Hermitian")

        if abs(np.trace(op) - 1) > tol:
            trace = np.trace(op).real
            raise ValidationError(f"a density operator has trace {trace:.12g}")

        if herm_eig(op, tol).eigenvalues[0] < -tol:
            raise ValidationError("a density operator must be positive semidefinite")

    @property
    def dim(self):
        return self.op.shape[0]


@dataclass(frozen=True)
class Pvm:
    projectors: tuple
    labels: tuple

    def __post_init__(self):
        projectors = tuple(as_operator(p) for p in self.projectors)
        object.__setattr__(self, "projectors", projectors)
        object.__setattr__(self, "labels", tuple(float(label) for label in self.labels))

        if not projectors or len(projectors) != len(self.labels):
            raise ValidationError("a PVM needs as many labels as projectors")

        check_same_dim(*projectors)
        tol = TOL.check
        for i, p in enumerate(projectors):
            if np.max(np.abs(p @ p - p)) > tol or not is_hermitian(p, tol):
                raise ValidationError(f"PVM element {i} is not a projector")

            for j in range(i):
                if np.max(np.abs(p @ projectors[j])) > tol:
                    raise ValidationError(f"PVM elements {j}, {i} are not orthogonal")

        closure = np.max(np.abs(sum(projectors) - np.eye(self.dim)))
        if closure > tol:
            raise ValidationError(f"PVM does not sum to identity ({closure:.3g})")

    @property
    def dim(self):
        return self.projectors[0].shape[0]

    def observable(self):
        return sum(label * p for label, p in zip(self.labels, self.projectors))


def density_operator(m):
    return DensityOperator(m)


def pure_state(v):
    v = np.asarray(v, dtype=np.complex128).ravel()
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValidationError("a pure state needs a nonzero vector")

    v = v / norm
    return DensityOperator(np.outer(v, np.conj(v)))


def spectral_pvm(a):
    eig = herm_eig(a)
    values, vectors = eig.eigenvalues, eig.eigenvectors

    # split the ascending eigenvalues where the gap exceeds CLUSTER_TOL
    gaps = np.flatnonzero(np.diff(values) > CLUSTER_TOL) + 1
    clusters = np.split(np.arange(len(values)), gaps)

    projectors, labels = [], []
    for cluster in clusters:
        vs = vectors[:, cluster]
        projectors.append(vs @ np.conj(vs).T)
        labels.append(np.mean(values[cluster]))

    return Pvm(tuple(projectors), tuple(labels))


def expectation(rho, m):
    if rho.dim != m.shape[0]:
        raise DimensionError(f"state of dimension {rho.dim} vs operator {m.shape[0]}")

    value = np.trace(rho.op @ m)
    if abs(value.imag) > TOL.check:
        raise ValidationError(f"expectation has imaginary part {value.imag:.3g}")
    return float(value.real)


def std_dev(rho, a):
    # centered second moment, exact zero on eigenstates
    centered = a - expectation(rho, a) * np.eye(rho.dim)
    variance = expectation(rho, centered @ centered)
    return float(np.sqrt(max(variance, 0.0)))


def polarization_projector(theta):
    """E^theta_+, linear polarization along theta"""
    v = np.array([np.cos(theta), np.sin(theta)])
    return as_operator(np.outer(v, v))


def polarization_pvm(theta):
    plus = polarization_projector(theta)
    return Pvm((plus, np.eye(2) - plus), (1.0, -1.0))


def entangled_pair_state():
    """(|HH> + |VV>) / sqrt(2)"""
    return pure_state(np.kron(H, H) + np.kron(V, V))


def reduced_state(rho, particle):
    """state of photon 1 or 2 of a two-photon state"""
    if rho.dim != 4:
        raise DimensionError(f"a two-photon state has dimension 4, got {rho.dim}")

    if particle == 1:
        return DensityOperator(partial_trace_second(rho.op, 2, 2))

    if particle == 2:
        return DensityOperator(partial_trace_first(rho.op, 2, 2))

    raise ValidationError(f"particle must be 1 or 2, got {particle}")


def basis_pvm(dim):
    """projectors on the computational basis, labelled 0 .. dim - 1"""
    eye = np.eye(dim)
    return Pvm(tuple(np.outer(e, e) for e in eye), tuple(range(dim)))
