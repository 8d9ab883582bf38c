"""
which-way polarization measurement of a photon

a semitransparent mirror transmits the photon with probability gamma toward
an analyzer along theta (detector D, row outcome m) and reflects it with
probability 1 - gamma toward an analyzer along theta' (detector D', column outcome n)
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .nonideality import (
    InequalityReport,
    NonidealityMatrix,
    joint_nonideal_decomposition,
    martens_bound,
    row_entropy_measure,
)
from .povm import BivariatePovm, distribution
from .state import polarization_projector, polarization_pvm

DEFAULT_THETA = 0.0
DEFAULT_THETA_PRIME = np.pi / 4  # the bound ln 2 is reached at both ends of the sweep
SWEEP_SLACK_TOL = 1e-6


@dataclass(frozen=True)
class WhichWayConfig:
    theta: float
    theta_prime: float
    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise ValidationError(f"gamma must be in [0, 1], got {self.gamma}")


@dataclass(frozen=True)
class SweepRow:
    gamma: float
    j_lambda: float
    j_mu: float
    bound: float
    slack: float


def whichway_povm(c):
    """R_mn, + is a detection, - a non-detection (absorption folded into --)"""
    e = c.gamma * polarization_projector(c.theta)
    f = (1 - c.gamma) * polarization_projector(c.theta_prime)
    grid = [
        [np.zeros((2, 2)), e],
        [f, np.eye(2) - e - f],
    ]
    return BivariatePovm(grid)


def whichway_probabilities(rho, c):
    """(p_D, p_D', p_absorbed)"""
    p = distribution(rho, whichway_povm(c)).probabilities
    return float(p[0, 1]), float(p[1, 0]), float(p[1, 1])


def whichway_nonideality_analytic(gamma):
    lam = NonidealityMatrix([[gamma, 0.0], [1 - gamma, 1.0]])
    mu = NonidealityMatrix([[1 - gamma, 0.0], [gamma, 1.0]])
    return lam, mu


def whichway_nonideality(c):
    return joint_nonideal_decomposition(
        whichway_povm(c), polarization_pvm(c.theta), polarization_pvm(c.theta_prime)
    )


def _sweep_row(theta, theta_prime, gamma, bound):
    lam, mu = whichway_nonideality(WhichWayConfig(theta, theta_prime, gamma))
    j_lambda, j_mu = row_entropy_measure(lam), row_entropy_measure(mu)
    report = InequalityReport.evaluate(j_lambda + j_mu, bound)
    return SweepRow(gamma, j_lambda, j_mu, bound, report.slack)


def martens_sweep(theta, theta_prime, n_points, max_workers=None):
    """(gamma, J_lambda, J_mu, bound, slack) on a uniform gamma grid, in gamma order"""
    if n_points < 2:
        raise ValidationError(f"a sweep needs at least 2 points, got {n_points}")

    bound = martens_bound(polarization_pvm(theta), polarization_pvm(theta_prime))
    gammas = np.linspace(0.0, 1.0, n_points)

    # map keeps the gamma order whatever the completion order
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        rows = executor.map(
            lambda gamma: _sweep_row(theta, theta_prime, float(gamma), bound), gammas
        )
        return list(rows)
