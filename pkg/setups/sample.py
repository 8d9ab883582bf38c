from measurement.povm import OutcomeDistribution, total_variation
from measurement.sampling import sample_counts, tv_bound
from runner.experiment import Experiment, Field
from runner.result_table import ResultTable

from .epr_bell import (
    ANGLE_FIELDS,
    OUTCOME_COLUMNS,
    STATE_FIELD,
    check_pair_state,
    eprbell_config,
    outcome_quadruples,
)

COLUMNS = (
    *OUTCOME_COLUMNS,
    "count",
    "frequency",
    "probability",
    "tv_distance",
    "tv_bound",
)


class Sample(Experiment):
    kind = "sample"
    fields = dict(
        **ANGLE_FIELDS,
        gamma1=Field("gamma", 0.5),
        gamma2=Field("gamma", 0.5),
        **STATE_FIELD,
        n_samples=Field("integer", 10_000, minimum=1),
        seed=Field("integer", 0, minimum=0),
    )

    def check(self, parameters):
        check_pair_state(parameters)

    def run(self, parameters):
        n_samples = parameters["n_samples"]
        self.log(f"SAMPLE {n_samples} pairs, seed {parameters['seed']}")

        counts, exact = sample_counts(
            parameters["state"],
            eprbell_config(parameters),
            n_samples,
            parameters["seed"],
        )
        frequencies = counts / n_samples
        distance = total_variation(OutcomeDistribution(frequencies), exact)
        bound = tv_bound(n_samples)

        p = exact.probabilities
        rows = [
            (*values, counts[index], frequencies[index], p[index], distance, bound)
            for index, values in outcome_quadruples()
        ]
        return ResultTable(COLUMNS, rows, checks_passed=distance < bound)
