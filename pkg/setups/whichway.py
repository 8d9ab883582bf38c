import math
from itertools import product

from measurement.eprbell import OUTCOME_VALUES
from measurement.nonideality import check_martens, row_entropy_measure
from measurement.povm import distribution
from measurement.state import polarization_pvm
from measurement.whichway import (
    DEFAULT_THETA,
    DEFAULT_THETA_PRIME,
    WhichWayConfig,
    whichway_nonideality,
    whichway_povm,
)
from runner.experiment import Experiment, Field, state_parameter
from runner.result_table import ResultTable

COLUMNS = (
    "m",
    "n",
    "probability",
    *(f"lambda_{i}{j}" for i, j in product(range(2), repeat=2)),
    *(f"mu_{i}{j}" for i, j in product(range(2), repeat=2)),
    "j_lambda",
    "j_mu",
    "bound",
    "slack",
)


class WhichWay(Experiment):
    kind = "whichway"
    fields = dict(
        theta_deg=Field("angle", math.degrees(DEFAULT_THETA)),
        theta_prime_deg=Field("angle", math.degrees(DEFAULT_THETA_PRIME)),
        gamma=Field("gamma"),
        state=Field("vector", [1, 0]),
    )

    def check(self, parameters):
        parameters["state"] = state_parameter(parameters["state"], 2, "state")

    def run(self, parameters):
        theta, theta_prime = parameters["theta_deg"], parameters["theta_prime_deg"]
        c = WhichWayConfig(theta, theta_prime, parameters["gamma"])
        r = whichway_povm(c)
        p = distribution(parameters["state"], r).probabilities

        lam, mu = whichway_nonideality(c)
        e, f = polarization_pvm(theta), polarization_pvm(theta_prime)
        report = check_martens(r, e, f)
        nonideality = (
            *lam.lam.ravel(),
            *mu.lam.ravel(),
            row_entropy_measure(lam),
            row_entropy_measure(mu),
            report.rhs,
            report.slack,
        )

        rows = [
            (m, n, p[i, j], *nonideality)
            for (i, m), (j, n) in product(enumerate(OUTCOME_VALUES), repeat=2)
        ]
        return ResultTable(COLUMNS, rows, checks_passed=report.satisfied)
