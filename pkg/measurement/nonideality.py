"""
nonideality of measurements

M_m = sum_n lam_mn N_n with lam column-stochastic: M is a nonideal version of N.
lam is recovered by projected gradient descent on the column-wise simplex,
its nonideality is measured by the average row entropy J
"""
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    NotJointMeasurementError,
    SolverError,
    ValidationError,
)
from .operator import check_same_dim, commutator, is_hermitian
from .povm import Povm, marginal
from .state import std_dev
from .tolerance import TOL

SOLVER_MAX_ITER = 100_000
SOLVER_GRAD_TOL = 1e-10  # norm of the gradient mapping
MAX_HALVINGS = 64


@dataclass(frozen=True)
class NonidealityMatrix:
    lam: np.ndarray
    residual: float = 0.0

    def __post_init__(self):
        lam = np.array(self.lam, dtype=float)
        if lam.ndim != 2:
            raise DimensionError(f"nonideality matrix of shape {lam.shape}")

        if np.min(lam) < -TOL.check:
            raise ValidationError(f"negative probability {np.min(lam):.3g}")

        sums = lam.sum(axis=0)
        if np.max(np.abs(sums - 1)) > 1e-7:
            raise ValidationError(f"columns don't sum to 1: {sums}")

        lam.setflags(write=False)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "residual", float(self.residual))

    @property
    def shape(self):
        return self.lam.shape

    def is_exact(self, tol=None):
        """M is a nonideal version of N, up to the recovery residual"""
        return self.residual < (TOL.exact if tol is None else tol)


@dataclass(frozen=True)
class InequalityReport:
    lhs: float
    rhs: float
    satisfied: bool
    slack: float

    @classmethod
    def evaluate(cls, lhs, rhs):
        slack = float(lhs - rhs)
        return cls(float(lhs), float(rhs), slack >= -TOL.check, slack)

    def is_tight(self, tol=None):
        """equality, up to the boundary tolerance"""
        return abs(self.slack) <= (TOL.boundary if tol is None else tol)


def project_columns(v):
    """euclidean projection of every column of v onto the probability simplex"""
    u = np.sort(v, axis=0)[::-1]
    cssv = np.cumsum(u, axis=0) - 1
    ind = np.arange(1, v.shape[0] + 1)[:, np.newaxis]
    rho = np.count_nonzero(u - cssv / ind > 0, axis=0)
    theta = cssv[rho - 1, np.arange(v.shape[1])] / rho
    return np.maximum(v - theta, 0)


def _vectorize(p):
    return np.array([e.ravel() for e in p.flat_effects])


def reconstruct(lam, n):
    """sum_n lam_mn N_n for every m"""
    return [
        sum(weight * effect for weight, effect in zip(row, n.flat_effects))
        for row in lam.lam
    ]


def recover_nonideality(m, n):
    """lam minimizing sum_m |M_m - sum_n lam_mn N_n|^2 over column-stochastic lam"""
    if m.dim != n.dim:
        raise DimensionError(f"POVMs of dimensions {m.dim} and {n.dim}")

    mv, nv = _vectorize(m), _vectorize(n)
    gram = (nv @ np.conj(nv).T).real
    cross = (mv @ np.conj(nv).T).real

    def residual(lam):
        return float(np.linalg.norm(mv - lam @ nv))

    # start from the projected unconstrained least squares solution
    lam = project_columns(cross @ np.linalg.pinv(gram))
    step = 1.0
    for _ in range(SOLVER_MAX_ITER):
        grad = 2 * (lam @ gram - cross)

        # the objective is quadratic: f(lam + d) = f + <grad, d> + tr(d G d^T)
        for _ in range(MAX_HALVINGS):
            candidate = project_columns(lam - step * grad)
            d = candidate - lam
            if np.sum((d @ gram) * d) <= np.sum(d * d) / (2 * step):
                break
            step /= 2

        lam = candidate
        if np.linalg.norm(d) / step < SOLVER_GRAD_TOL:
            return NonidealityMatrix(lam, residual(lam))

    best = NonidealityMatrix(lam, residual(lam))
    raise SolverError(
        f"nonideality recovery did not converge in {SOLVER_MAX_ITER} iterations",
        best=best,
        residual=best.residual,
    )


def row_entropy_measure(lam):
    """
    average row entropy J, averaged over the rows
    (the outcomes of the nonideal POVM), 0 ln 0 = 0
    """
    weights = np.clip(lam.lam, 0.0, None)
    row_sums = weights.sum(axis=1, keepdims=True)
    positive = weights > 0
    ratios = np.divide(weights, row_sums, out=np.ones_like(weights), where=positive)
    terms = np.where(positive, weights * np.log(ratios), 0.0)
    return max(0.0, float(-np.sum(terms) / weights.shape[0]))


def joint_nonideal_decomposition(r, e, f):
    """
    (lam, mu) such that
    sum_n R_mn = sum_m' lam_mm' E_m' and sum_m R_mn = sum_n' mu_nn' F_n'
    """
    check_same_dim(r.grid[0, 0], e.projectors[0], f.projectors[0])
    lam = recover_nonideality(marginal(r, "row"), Povm(e.projectors))
    mu = recover_nonideality(marginal(r, "col"), Povm(f.projectors))
    return lam, mu


def martens_bound(e, f):
    """-ln max_mn Tr(E_m F_n), independent of the state"""
    check_same_dim(e.projectors[0], f.projectors[0])
    overlap = max(
        np.trace(em @ fn).real for em in e.projectors for fn in f.projectors
    )
    if overlap <= 0:
        raise ValidationError("PVMs without any overlap")
    return float(-np.log(overlap))


def check_martens(r, e, f):
    lam, mu = joint_nonideal_decomposition(r, e, f)
    worst = max(lam.residual, mu.residual)
    if worst > TOL.joint:
        raise NotJointMeasurementError(
            f"not a joint nonideal measurement of (E, F), residual {worst:.3g}"
        )

    lhs = row_entropy_measure(lam) + row_entropy_measure(mu)
    return InequalityReport.evaluate(lhs, martens_bound(e, f))


def check_heisenberg(rho, a, b):
    """std(A) std(B) >= |<[A, B]>| / 2"""
    check_same_dim(rho.op, a, b)
    if not (is_hermitian(a) and is_hermitian(b)):
        raise ValidationError("Heisenberg inequality needs Hermitian observables")

    lhs = std_dev(rho, a) * std_dev(rho, b)
    rhs = 0.5 * abs(np.trace(rho.op @ commutator(a, b)))
    return InequalityReport.evaluate(lhs, rhs)
