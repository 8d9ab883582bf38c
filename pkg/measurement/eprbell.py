"""
generalized EPR-Bell experiment: a which-way measurement on each photon of a pair

the outcome quadruple is (m1, n1, m2, n2), + valued +1 and - valued -1,
the CHSH value is E(a, b) - E(a, b') + E(a', b) + E(a', b')
"""
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .povm import QuadrivariatePovm, distribution, marginal_distribution
from .tolerance import TOL
from .whichway import WhichWayConfig, whichway_povm

CHSH_BOUND = 2.0
OUTCOME_VALUES = np.array([1.0, -1.0])  # indexed like DETECTION_LABELS

# (a, b) axis pairs in CHSH order, and their signs
SINGLE_SETUP_PAIRS = (("m1", "m2"), ("m1", "n2"), ("n1", "m2"), ("n1", "n2"))
CHSH_SIGNS = (1.0, -1.0, 1.0, 1.0)


@dataclass(frozen=True)
class EprBellConfig:
    arm1: WhichWayConfig
    arm2: WhichWayConfig

    @classmethod
    def from_angles(cls, theta1, theta1_prime, theta2, theta2_prime, gamma1, gamma2):
        return cls(
            WhichWayConfig(theta1, theta1_prime, gamma1),
            WhichWayConfig(theta2, theta2_prime, gamma2),
        )


@dataclass(frozen=True)
class ChshResult:
    correlations: tuple
    s_value: float
    violates: bool

    def __post_init__(self):
        if len(self.correlations) != 4:
            raise ValidationError("CHSH needs 4 correlations")

        if any(abs(e) > 1 + TOL.check for e in self.correlations):
            raise ValidationError(f"correlation out of [-1, 1]: {self.correlations}")

    @classmethod
    def from_correlations(cls, correlations):
        correlations = tuple(float(e) for e in correlations)
        s_value = float(np.dot(CHSH_SIGNS, correlations))
        return cls(correlations, s_value, abs(s_value) > CHSH_BOUND + TOL.check)


def eprbell_povm(c):
    """R_m1n1m2n2 = R_m1n1 x R_m2n2, arm 1 is the slow tensor factor"""
    r1, r2 = whichway_povm(c.arm1).grid, whichway_povm(c.arm2).grid
    grid = np.einsum("abij,cdkl->abcdikjl", r1, r2).reshape(2, 2, 2, 2, 4, 4)
    return QuadrivariatePovm(grid)


def correlation(dist, axis_a, axis_b):
    """E(a, b) from the pair marginal of a quadruple distribution"""
    p = marginal_distribution(dist, (axis_a, axis_b)).probabilities
    return float(OUTCOME_VALUES @ p @ OUTCOME_VALUES)


def chsh_from_distribution(dist):
    return ChshResult.from_correlations(
        correlation(dist, a, b) for a, b in SINGLE_SETUP_PAIRS
    )


def chsh_single_setup(rho, c):
    """every correlation comes from the same quadruple distribution"""
    return chsh_from_distribution(distribution(rho, eprbell_povm(c)))


def corner_configs(theta1, theta1_prime, theta2, theta2_prime):
    """
    the four Aspect arrangements, (gamma1, gamma2) = (1, 1), (1, 0), (0, 1), (0, 0),
    with the axes that ideally measure the arm observables in each of them
    """
    corners = []
    for pair, (gamma1, gamma2) in zip(
        SINGLE_SETUP_PAIRS, ((1.0, 1.0), (1.0, 0.0), (0.0, 1.0), (0.0, 0.0))
    ):
        config = EprBellConfig.from_angles(
            theta1, theta1_prime, theta2, theta2_prime, gamma1, gamma2
        )
        corners.append((config, pair))
    return corners


def chsh_pasted_aspect(rho, theta1, theta1_prime, theta2, theta2_prime):
    """each correlation comes from a different arrangement"""
    correlations = [
        correlation(distribution(rho, eprbell_povm(config)), *pair)
        for config, pair in corner_configs(theta1, theta1_prime, theta2, theta2_prime)
    ]
    return ChshResult.from_correlations(correlations)
