from measurement.eprbell import chsh_pasted_aspect
from runner.experiment import Experiment
from runner.result_table import ResultTable

from .epr_bell import ANGLE_FIELDS, CHSH_COLUMNS, STATE_FIELD, angles, check_pair_state


class ChshPasted(Experiment):
    kind = "chsh-pasted"
    fields = dict(**ANGLE_FIELDS, **STATE_FIELD)

    def check(self, parameters):
        check_pair_state(parameters)

    def run(self, parameters):
        chsh = chsh_pasted_aspect(parameters["state"], *angles(parameters))
        row = (*chsh.correlations, chsh.s_value, float(chsh.violates))
        if chsh.violates:
            self.log(f"VIOLATION S = {chsh.s_value:.6f}")

        # a violation is the expected outcome, nothing to assert
        return ResultTable((*CHSH_COLUMNS, "violates"), [row])
