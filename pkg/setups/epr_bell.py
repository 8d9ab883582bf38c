from itertools import product

from measurement.eprbell import (
    OUTCOME_VALUES,
    EprBellConfig,
    chsh_from_distribution,
    eprbell_povm,
)
from measurement.povm import distribution
from measurement.state import entangled_pair_state
from runner.experiment import Experiment, Field, state_parameter
from runner.result_table import ResultTable

OUTCOME_COLUMNS = ("m1", "n1", "m2", "n2")
CHSH_COLUMNS = ("e_ab", "e_ab_prime", "e_a_prime_b", "e_a_prime_b_prime", "s_value")

ANGLE_FIELDS = dict(
    theta1_deg=Field("angle", 0.0),
    theta1_prime_deg=Field("angle", 45.0),
    theta2_deg=Field("angle", 22.5),
    theta2_prime_deg=Field("angle", 67.5),
)
# no state means the entangled pair
STATE_FIELD = dict(state=Field("vector", None))


def check_pair_state(parameters):
    if parameters["state"] is None:
        parameters["state"] = entangled_pair_state()
    else:
        parameters["state"] = state_parameter(parameters["state"], 4, "state")


def angles(parameters):
    return tuple(parameters[name] for name in ANGLE_FIELDS)


def eprbell_config(parameters):
    return EprBellConfig.from_angles(
        *angles(parameters), parameters["gamma1"], parameters["gamma2"]
    )


def outcome_quadruples():
    """(index, valuation) of every (m1, n1, m2, n2), in row-major order"""
    indices = product(range(2), repeat=4)
    return [(index, tuple(OUTCOME_VALUES[list(index)])) for index in indices]


class EprBell(Experiment):
    kind = "epr-bell"
    fields = dict(
        **ANGLE_FIELDS,
        gamma1=Field("gamma", 0.5),
        gamma2=Field("gamma", 0.5),
        **STATE_FIELD,
    )

    def check(self, parameters):
        check_pair_state(parameters)

    def run(self, parameters):
        r = eprbell_povm(eprbell_config(parameters))
        dist = distribution(parameters["state"], r)
        chsh = chsh_from_distribution(dist)
        chsh_values = (*chsh.correlations, chsh.s_value)

        p = dist.probabilities
        rows = [
            (*values, p[index], *chsh_values) for index, values in outcome_quadruples()
        ]
        columns = (*OUTCOME_COLUMNS, "probability", *CHSH_COLUMNS)
        return ResultTable(columns, rows, checks_passed=not chsh.violates)
