import numpy as np
import pytest

import measurement.nonideality as nonideality
from measurement.errors import (
    NotJointMeasurementError,
    SolverError,
    ValidationError,
)
from measurement.nonideality import (
    InequalityReport,
    NonidealityMatrix,
    check_heisenberg,
    check_martens,
    joint_nonideal_decomposition,
    martens_bound,
    project_columns,
    reconstruct,
    recover_nonideality,
    row_entropy_measure,
)
from measurement.povm import BivariatePovm, Povm, marginal
from measurement.state import (
    PAULI_X,
    PAULI_Y,
    polarization_projector,
    polarization_pvm,
    pure_state,
)
from measurement.whichway import (
    WhichWayConfig,
    martens_sweep,
    whichway_nonideality_analytic,
    whichway_povm,
)

LN2 = np.log(2)
J_HALF = 0.75 * np.log(3) - 0.5 * np.log(2)


def whichway(gamma, theta=0.0, theta_prime=np.pi / 4):
    c = WhichWayConfig(theta, theta_prime, gamma)
    return whichway_povm(c), polarization_pvm(theta), polarization_pvm(theta_prime)


def test_nonideality_matrix_validation():
    assert NonidealityMatrix(np.eye(3)).shape == (3, 3)

    with pytest.raises(ValidationError):
        NonidealityMatrix([[0.5, 0], [0.6, 1]])

    with pytest.raises(ValidationError):
        NonidealityMatrix([[1.5, 0], [-0.5, 1]])


def test_project_columns(rng):
    v = rng.normal(size=(4, 6))
    p = project_columns(v)
    assert np.allclose(p.sum(axis=0), 1)
    assert p.min() >= 0

    stochastic = project_columns(rng.uniform(size=(3, 3)))
    assert np.allclose(project_columns(stochastic), stochastic)


def test_recover_self_relation():
    e = polarization_projector(0.4)
    p = Povm((e, np.eye(2) - e))
    lam = recover_nonideality(p, p)
    assert np.allclose(lam.lam, np.eye(2), atol=1e-9)
    assert lam.residual < 1e-9


@pytest.mark.parametrize("gamma", np.linspace(0, 1, 11))
def test_recover_whichway(gamma):
    r, e, f = whichway(gamma)
    expected_lam, expected_mu = whichway_nonideality_analytic(gamma)

    lam = recover_nonideality(marginal(r, "row"), Povm(e.projectors))
    mu = recover_nonideality(marginal(r, "col"), Povm(f.projectors))
    assert np.max(np.abs(lam.lam - expected_lam.lam)) < 1e-6
    assert np.max(np.abs(mu.lam - expected_mu.lam)) < 1e-6
    assert max(lam.residual, mu.residual) < 1e-9


def test_recover_exact_over_gamma_grid():
    for gamma in np.linspace(0, 1, 101):
        lam, mu = joint_nonideal_decomposition(*whichway(gamma))
        assert max(lam.residual, mu.residual) < 1e-9


def test_recover_is_idempotent():
    r, e, _ = whichway(0.35)
    n = Povm(e.projectors)
    lam = recover_nonideality(marginal(r, "row"), n)
    again = recover_nonideality(Povm(tuple(reconstruct(lam, n))), n)
    assert np.max(np.abs(again.lam - lam.lam)) < 1e-7


def test_recover_nonideal_target_has_residual():
    # gamma E^0 is not a smearing of the 0.3 rad polarization PVM
    r, _, _ = whichway(0.5)
    target = Povm(polarization_pvm(0.3).projectors)
    assert recover_nonideality(marginal(r, "row"), target).residual > 1e-3


def test_recover_solver_error(monkeypatch):
    monkeypatch.setattr(nonideality, "SOLVER_MAX_ITER", 0)
    r, e, _ = whichway(0.5)
    with pytest.raises(SolverError) as error:
        recover_nonideality(marginal(r, "row"), Povm(e.projectors))

    assert isinstance(error.value.best, NonidealityMatrix)
    assert error.value.residual == error.value.best.residual


def test_row_entropy_measure():
    assert row_entropy_measure(NonidealityMatrix(np.eye(4))) == 0
    gamma_zero = NonidealityMatrix([[0, 0], [1, 1]])
    assert row_entropy_measure(gamma_zero) == pytest.approx(LN2)
    gamma_half = NonidealityMatrix([[0.5, 0], [0.5, 1]])
    assert row_entropy_measure(gamma_half) == pytest.approx(J_HALF, abs=1e-12)
    assert J_HALF == pytest.approx(0.477386, abs=1e-6)


def test_row_entropy_bounds(rng):
    for _ in range(200):
        cols = int(rng.integers(2, 6))
        lam = NonidealityMatrix(project_columns(rng.normal(size=(cols, cols))))
        assert 0 <= row_entropy_measure(lam) <= np.log(cols) + 1e-12


def test_joint_decomposition_compatible():
    e = polarization_pvm(0.2)
    p0, p1 = e.projectors
    r = BivariatePovm([[p0, np.zeros((2, 2))], [np.zeros((2, 2)), p1]])
    lam, mu = joint_nonideal_decomposition(r, e, e)
    assert np.allclose(lam.lam, np.eye(2), atol=1e-9)
    assert np.allclose(mu.lam, np.eye(2), atol=1e-9)


def test_joint_decomposition_gamma_one():
    lam, mu = joint_nonideal_decomposition(*whichway(1.0))
    assert np.allclose(lam.lam, np.eye(2), atol=1e-9)
    assert np.allclose(mu.lam, [[0, 0], [1, 1]], atol=1e-9)


def test_martens_bound():
    e = polarization_pvm(0)
    assert martens_bound(e, polarization_pvm(np.pi / 4)) == pytest.approx(LN2)
    assert martens_bound(e, polarization_pvm(np.pi / 6)) == pytest.approx(-np.log(0.75))
    same = polarization_pvm(0.7)
    assert martens_bound(same, same) == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("gamma, lhs", [(0.0, LN2), (0.5, 2 * J_HALF), (1.0, LN2)])
def test_check_martens(gamma, lhs):
    report = check_martens(*whichway(gamma))
    assert report.satisfied
    assert report.lhs == pytest.approx(lhs, abs=1e-6)
    assert report.rhs == pytest.approx(LN2)
    assert report.is_tight() == (gamma in (0.0, 1.0))


def test_check_martens_not_joint():
    r, _, f = whichway(0.5)
    with pytest.raises(NotJointMeasurementError):
        check_martens(r, polarization_pvm(0.3), f)


def test_martens_property_suite(rng):
    for theta, theta_prime in rng.uniform(0, np.pi, (100, 2)):
        rows = martens_sweep(theta, theta_prime, 101)
        assert min(row.slack for row in rows) >= -1e-6


def test_inequality_report():
    report = InequalityReport.evaluate(1.0, 1.0 + 1e-10)
    assert report.satisfied
    assert report.is_tight()
    assert not InequalityReport.evaluate(1.0, 1.1).satisfied
    assert not InequalityReport.evaluate(1.1, 1.0).is_tight()


def test_check_heisenberg_commuting():
    rho = pure_state([0.6, 0.8])
    report = check_heisenberg(rho, PAULI_X, PAULI_X)
    assert report.rhs == 0
    assert report.satisfied


def test_check_heisenberg_equality():
    report = check_heisenberg(pure_state([1, 0]), PAULI_X, PAULI_Y)
    assert report.lhs == pytest.approx(1, abs=1e-9)
    assert report.rhs == pytest.approx(1, abs=1e-9)
    assert abs(report.slack) < 1e-9


def test_check_heisenberg_errors():
    with pytest.raises(ValidationError):
        check_heisenberg(pure_state([1, 0]), PAULI_X, np.array([[0, 1], [0, 0]]))


def test_heisenberg_property_suite(rng, random_density, random_hermitian):
    for _ in range(1000):
        dim = int(rng.integers(2, 5))
        report = check_heisenberg(
            random_density(dim), random_hermitian(dim), random_hermitian(dim)
        )
        assert report.satisfied
        assert report.slack >= -1e-9


def test_is_exact():
    assert NonidealityMatrix(np.eye(2), residual=1e-9).is_exact()
    assert not NonidealityMatrix(np.eye(2), residual=1e-6).is_exact()
    assert NonidealityMatrix(np.eye(2), residual=1e-6).is_exact(tol=1e-5)

    n = Povm(polarization_pvm(0.3).projectors)
    assert recover_nonideality(n, n).is_exact()

    lam, mu = joint_nonideal_decomposition(
        whichway_povm(WhichWayConfig(0.0, np.pi / 4, 0.4)),
        polarization_pvm(0.0),
        polarization_pvm(np.pi / 4),
    )
    assert lam.is_exact() and mu.is_exact()
