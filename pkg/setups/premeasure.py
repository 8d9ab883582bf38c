from itertools import product

import numpy as np

from measurement.errors import MeasurementError
from measurement.operator import as_operator, is_hermitian, is_unitary
from measurement.premeasurement import (
    PremeasurementModel,
    induced_povm,
    pointer_consistency,
)
from measurement.state import DensityOperator, Pvm, basis_pvm
from measurement.tolerance import TOL
from runner.experiment import ConfigError, Experiment, Field, density_parameter
from runner.result_table import ResultTable


def _columns(dim):
    entries = [f"{i}{j}" for i, j in product(range(dim), repeat=2)]
    return (
        "outcome",
        *(f"re_{ij}" for ij in entries),
        *(f"im_{ij}" for ij in entries),
        "consistency",
    )


class Premeasure(Experiment):
    """
    POVM induced on the object by a unitary coupling with an apparatus,
    U is given directly or as exp(-i H T)
    """

    kind = "premeasure"
    fields = dict(
        dim_object=Field("integer", minimum=1),
        unitary=Field("matrix", None),
        hamiltonian=Field("matrix", None),
        time=Field("number", 1.0),
        rho_a=Field("matrix", None),  # defaults to the first apparatus basis state
        pointer=Field("matrices", None),  # defaults to the apparatus basis
        rho_o=Field("matrix", None),  # defaults to the maximally mixed state
    )

    def check(self, parameters):
        dim_object = parameters["dim_object"]
        unitary, hamiltonian = parameters["unitary"], parameters["hamiltonian"]
        if (unitary is None) == (hamiltonian is None):
            raise ConfigError("give either a unitary or a hamiltonian", "unitary")

        name, op = "unitary", unitary
        if hamiltonian is not None:
            name, op = "hamiltonian", hamiltonian

        if len(op) % dim_object:
            msg = f"dimension {len(op)} is not a multiple of {dim_object}"
            raise ConfigError(msg, name)

        if unitary is not None and not is_unitary(as_operator(unitary), TOL.check):
            raise ConfigError("the matrix is not unitary", name)

        if hamiltonian is not None and not is_hermitian(as_operator(hamiltonian)):
            raise ConfigError("the matrix is not Hermitian", name)

        dim_apparatus = len(op) // dim_object
        parameters["dim_apparatus"] = dim_apparatus
        self._check_apparatus(parameters, dim_apparatus)

        if parameters["rho_o"] is None:
            parameters["rho_o"] = DensityOperator(np.eye(dim_object) / dim_object)
        else:
            rho_o = density_parameter(parameters["rho_o"], dim_object, "rho_o")
            parameters["rho_o"] = rho_o

    @staticmethod
    def _check_apparatus(parameters, dim):
        if parameters["rho_a"] is None:
            ground = np.zeros((dim, dim))
            ground[0, 0] = 1.0
            parameters["rho_a"] = DensityOperator(ground)
        else:
            parameters["rho_a"] = density_parameter(parameters["rho_a"], dim, "rho_a")

        if parameters["pointer"] is None:
            parameters["pointer"] = basis_pvm(dim)
            return

        projectors = parameters["pointer"]
        if any(len(p) != dim for p in projectors):
            raise ConfigError(f"pointer projectors must be {dim} x {dim}", "pointer")

        try:
            labels = tuple(range(len(projectors)))
            parameters["pointer"] = Pvm(tuple(projectors), labels)

        except MeasurementError as e:
            raise ConfigError(str(e), "pointer") from e

    def _model(self, parameters):
        rho_a, pointer = parameters["rho_a"], parameters["pointer"]
        if parameters["unitary"] is not None:
            return PremeasurementModel(
                rho_a,
                parameters["unitary"],
                pointer,
                parameters["dim_object"],
                parameters["dim_apparatus"],
            )

        return PremeasurementModel.from_generator(
            rho_a,
            parameters["hamiltonian"],
            parameters["time"],
            pointer,
            parameters["dim_object"],
        )

    def run(self, parameters):
        model = self._model(parameters)
        povm = induced_povm(model)
        consistency = float(pointer_consistency(parameters["rho_o"], model))

        rows = [
            (label, *effect.real.ravel(), *effect.imag.ravel(), consistency)
            for label, effect in zip(model.pointer.labels, povm.effects)
        ]
        return ResultTable(
            _columns(model.dim_object), rows, checks_passed=consistency < TOL.check
        )
