import math
from dataclasses import astuple, fields as dataclass_fields

from measurement.whichway import (
    DEFAULT_THETA,
    DEFAULT_THETA_PRIME,
    SWEEP_SLACK_TOL,
    SweepRow,
    martens_sweep,
)
from runner.experiment import Experiment, Field
from runner.result_table import ResultTable

COLUMNS = tuple(f.name for f in dataclass_fields(SweepRow))


class MartensSweep(Experiment):
    kind = "martens-sweep"
    fields = dict(
        theta_deg=Field("angle", math.degrees(DEFAULT_THETA)),
        theta_prime_deg=Field("angle", math.degrees(DEFAULT_THETA_PRIME)),
        n_points=Field("integer", 101, minimum=2),
        workers=Field("integer", None, minimum=1),
    )

    def run(self, parameters):
        n_points = parameters["n_points"]
        self.log(f"SWEEP {n_points} points")

        rows = martens_sweep(
            parameters["theta_deg"],
            parameters["theta_prime_deg"],
            n_points,
            max_workers=parameters["workers"],
        )
        passed = all(row.slack >= -SWEEP_SLACK_TOL for row in rows)
        rows = [astuple(row) for row in rows]
        return ResultTable(COLUMNS, rows, checks_passed=passed)
