import numpy as np
import pytest

from measurement.eprbell import CHSH_BOUND, EprBellConfig, chsh_from_distribution
from measurement.errors import ValidationError
from measurement.povm import total_variation
from measurement.sampling import quadruple_sample_check, sample_counts, tv_bound
from measurement.state import entangled_pair_state
from tools.rng import MASK64, Mcg64, splitmix64

CONFIG = EprBellConfig.from_angles(*np.radians([0, 45, 22.5, 67.5]), 0.5, 0.5)


def test_splitmix64():
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert 0 <= splitmix64(MASK64) <= MASK64


def test_mcg64_is_seeded():
    a, b = Mcg64(42), Mcg64(42)
    assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]
    assert Mcg64(42).random() != Mcg64(43).random()
    assert Mcg64(7).seed == 7
    assert Mcg64(0).state % 2 == 1


def test_mcg64_uniforms():
    draws = Mcg64(1).randoms(10_000)
    assert draws.min() >= 0 and draws.max() < 1
    assert draws.mean() == pytest.approx(0.5, abs=0.02)


def test_mcg64_choices():
    probabilities = np.array([0.0, 0.25, 0.75, 0.0])
    draws = Mcg64(3).choices(probabilities, 20_000)
    assert set(np.unique(draws)) <= {1, 2}
    assert np.mean(draws == 2) == pytest.approx(0.75, abs=0.02)


def test_sample_counts_are_deterministic():
    rho = entangled_pair_state()
    counts, exact = sample_counts(rho, CONFIG, 2000, seed=11)
    again, _ = sample_counts(rho, CONFIG, 2000, seed=11)
    other, _ = sample_counts(rho, CONFIG, 2000, seed=12)

    assert counts.shape == exact.shape == (2, 2, 2, 2)
    assert counts.sum() == 2000
    assert np.array_equal(counts, again)
    assert not np.array_equal(counts, other)


def test_sample_frequencies_converge():
    rho = entangled_pair_state()
    for n_samples in (1_000, 10_000):
        empirical = quadruple_sample_check(rho, CONFIG, n_samples, seed=5)
        _, exact = sample_counts(rho, CONFIG, 1, seed=5)
        assert total_variation(empirical, exact) < tv_bound(n_samples)


def test_impossible_outcomes_are_never_drawn():
    rho = entangled_pair_state()
    counts, exact = sample_counts(rho, CONFIG, 5000, seed=1)
    assert np.all(counts[exact.probabilities == 0] == 0)


def test_sample_needs_samples():
    with pytest.raises(ValidationError):
        sample_counts(entangled_pair_state(), CONFIG, 0, seed=1)


def test_tv_bound():
    assert tv_bound(10_000) == pytest.approx(3 * np.sqrt(np.log(16) / 10_000))


def test_sample_frequencies_at_large_n():
    rho = entangled_pair_state()
    empirical = quadruple_sample_check(rho, CONFIG, 100_000, seed=2)
    _, exact = sample_counts(rho, CONFIG, 1, seed=2)
    assert total_variation(empirical, exact) < 0.02


def test_sampled_chsh_stays_classical():
    rho = entangled_pair_state()
    n_samples = 20_000
    for seed in range(3):
        empirical = quadruple_sample_check(rho, CONFIG, n_samples, seed)
        chsh = chsh_from_distribution(empirical)
        # each correlation moves by at most twice the total variation distance
        assert abs(chsh.s_value) <= CHSH_BOUND + 8 * tv_bound(n_samples)
