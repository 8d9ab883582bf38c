"""
quadruples (m1, n1, m2, n2) drawn one particle pair at a time
from the exact distribution of a generalized EPR-Bell experiment
"""
import numpy as np

from tools.rng import Mcg64

from .errors import ValidationError
from .eprbell import eprbell_povm
from .povm import OutcomeDistribution, distribution


def tv_bound(n_samples, n_outcomes=16):
    """largest total variation distance accepted for n_samples draws"""
    return 3 * np.sqrt(np.log(n_outcomes) / n_samples)


def sample_counts(rho, c, n_samples, seed):
    """counts of every quadruple, with the exact distribution they were drawn from"""
    if n_samples < 1:
        raise ValidationError(f"n_samples must be at least 1, got {n_samples}")

    exact = distribution(rho, eprbell_povm(c))
    draws = Mcg64(seed).choices(exact.probabilities.ravel(), n_samples)
    counts = np.bincount(draws, minlength=exact.probabilities.size)
    return counts.reshape(exact.shape), exact


def quadruple_sample_check(rho, c, n_samples, seed):
    counts, _ = sample_counts(rho, c, n_samples, seed)
    return OutcomeDistribution(counts / n_samples)
