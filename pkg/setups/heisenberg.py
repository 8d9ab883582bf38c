from measurement.nonideality import check_heisenberg
from runner.experiment import ConfigError, Experiment, Field, state_parameter
from runner.result_table import ResultTable


class Heisenberg(Experiment):
    kind = "heisenberg"
    fields = dict(
        state=Field("vector"),
        a=Field("matrix"),
        b=Field("matrix"),
    )

    def check(self, parameters):
        dim = len(parameters["a"])
        if len(parameters["b"]) != dim:
            raise ConfigError(f"expected a {dim} x {dim} matrix", "b")
        parameters["state"] = state_parameter(parameters["state"], dim, "state")

    def run(self, parameters):
        report = check_heisenberg(parameters["state"], parameters["a"], parameters["b"])
        row = (report.lhs, report.rhs, report.slack, float(report.satisfied))
        return ResultTable(
            ("lhs", "rhs", "slack", "satisfied"), [row], checks_passed=report.satisfied
        )
