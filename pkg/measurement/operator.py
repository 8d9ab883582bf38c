"""
dense complex operators of small dimension

an Operator is a read-only square complex numpy array,
composite indices follow first * dim_second + second
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SolverError, ValidationError
from .tolerance import TOL

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def _freeze(array):
    array.setflags(write=False)
    return array


def as_operator(entries):
    m = np.array(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError(f"an operator must be square, got shape {m.shape}")

    if not np.all(np.isfinite(m)):
        raise ValidationError("operator entries must be finite")

    return _freeze(m)


def identity(dim):
    return _freeze(np.eye(dim, dtype=np.complex128))


def adjoint(m):
    return _freeze(np.conj(m).T.copy())


def trace(m):
    return complex(np.trace(m))


def commutator(a, b):
    check_same_dim(a, b)
    return _freeze(a @ b - b @ a)


def tensor_product(a, b):
    """a is the slow (left) index"""
    return _freeze(np.kron(a, b))


def check_same_dim(*ms):
    dims = {m.shape[0] for m in ms}
    if len(dims) > 1:
        raise DimensionError(f"operators of different dimensions {sorted(dims)}")


def _check_split(m, dim_first, dim_second):
    if m.shape[0] != dim_first * dim_second:
        raise DimensionError(
            f"dimension {m.shape[0]} is not {dim_first} x {dim_second}"
        )
    return np.reshape(m, (dim_first, dim_second, dim_first, dim_second))


def partial_trace_second(m, dim_first, dim_second):
    blocks = _check_split(m, dim_first, dim_second)
    return _freeze(np.einsum("ikjk->ij", blocks))


def partial_trace_first(m, dim_first, dim_second):
    blocks = _check_split(m, dim_first, dim_second)
    return _freeze(np.einsum("kikj->ij", blocks))


def is_hermitian(m, tol=None):
    return bool(np.max(np.abs(m - np.conj(m).T), initial=0.0) <= TOL.get(tol))


def is_unitary(m, tol=None):
    eye = np.eye(m.shape[0])
    return bool(np.max(np.abs(m @ np.conj(m).T - eye)) <= TOL.get(tol))


def _check_hermitian(m, tol=None):
    if not is_hermitian(m, tol):
        residual = np.max(np.abs(m - np.conj(m).T))
        raise ValidationError(f"operator is not Hermitian (residual {residual:.3g})")


@dataclass(frozen=True)
class HermitianEig:
    eigenvalues: np.ndarray  # real, ascending
    eigenvectors: np.ndarray  # orthonormal columns

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ np.conj(v).T


def _off_norm(a):
    return np.linalg.norm(a - np.diag(np.diag(a)))


def _rotate(a, v, p, q):
    """zero a[p, q] with a complex Jacobi rotation acting on rows & columns p, q"""
    g = a[p, q]
    phase = g / abs(g)
    half_angle = 0.5 * np.arctan2(2 * abs(g), (a[q, q] - a[p, p]).real)
    c, s = np.cos(half_angle), np.sin(half_angle)
    rot = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])

    idx = [p, q]
    a[:, idx] = a[:, idx] @ rot
    a[idx, :] = np.conj(rot).T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    v[:, idx] = v[:, idx] @ rot


def herm_eig(m, tol=None):
    """cyclic Jacobi rotations, eigenvalues sorted ascending"""
    _check_hermitian(m, tol)

    n = m.shape[0]
    a = 0.5 * (np.array(m, dtype=np.complex128) + np.conj(m).T)
    v = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_TOL * max(1.0, np.linalg.norm(a))

    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_norm(a) < threshold:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0:
                    _rotate(a, v, p, q)
    else:
        if _off_norm(a) >= threshold:
            raise SolverError(
                f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps",
                best=HermitianEig(np.diag(a).real, v),
                residual=_off_norm(a),
            )

    eigenvalues = np.diag(a).real
    order = np.argsort(eigenvalues, kind="stable")
    return HermitianEig(
        _freeze(eigenvalues[order].copy()), _freeze(v[:, order].copy())
    )


def exp_hermitian_generator(h, t):
    """exp(-i h t), with hbar = 1"""
    eig = herm_eig(h)
    v = eig.eigenvectors
    return _freeze((v * np.exp(-1j * eig.eigenvalues * t)) @ np.conj(v).T)


def is_positive_semidefinite(m, tol=None):
    tol = TOL.get(tol)
    if not is_hermitian(m, tol):
        return False
    return bool(herm_eig(m, tol).eigenvalues[0] >= -tol)
