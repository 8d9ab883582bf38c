"""
POVMs induced by a premeasurement

object & apparatus interact through a unitary U (tensor order object x apparatus),
the pointer PVM is read on the apparatus, M_m = Tr_a (I x rho_a) U^+ (I x E_am) U
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ModelInconsistencyError, PovmError
from .operator import (
    adjoint,
    as_operator,
    exp_hermitian_generator,
    is_unitary,
    partial_trace_second,
    tensor_product,
)
from .povm import Povm
from .state import DensityOperator, Pvm

MODEL_TOL = 1e-8  # largest closure/positivity residual of an induced POVM


@dataclass(frozen=True)
class PremeasurementModel:
    rho_a: DensityOperator
    u: np.ndarray
    pointer: Pvm
    dim_object: int
    dim_apparatus: int

    def __post_init__(self):
        u = as_operator(self.u)
        object.__setattr__(self, "u", u)

        if u.shape[0] != self.dim_object * self.dim_apparatus:
            raise DimensionError(
                f"unitary of dimension {u.shape[0]} on "
                f"{self.dim_object} x {self.dim_apparatus}"
            )

        if not is_unitary(u):
            raise ModelInconsistencyError("the interaction is not unitary")

        if not self.rho_a.dim == self.pointer.dim == self.dim_apparatus:
            raise DimensionError(
                f"apparatus state & pointer must have dimension {self.dim_apparatus}"
            )

    @classmethod
    def from_generator(cls, rho_a, h, t, pointer, dim_object):
        """U = exp(-i H T), hbar = 1"""
        u = exp_hermitian_generator(as_operator(h), t)
        return cls(rho_a, u, pointer, dim_object, rho_a.dim)

    def lift(self, apparatus_op):
        """I x A on the joint space"""
        return tensor_product(np.eye(self.dim_object), apparatus_op)


def evolve_joint(rho_o, model):
    if rho_o.dim != model.dim_object:
        raise DimensionError(
            f"object state of dimension {rho_o.dim}, expected {model.dim_object}"
        )

    joint = tensor_product(rho_o.op, model.rho_a.op)
    u = model.u
    return DensityOperator(u @ joint @ adjoint(u))


def induced_povm(model):
    u, u_dag = model.u, adjoint(model.u)
    weight = model.lift(model.rho_a.op)
    effects = []
    for e_am in model.pointer.projectors:
        m_m = partial_trace_second(
            weight @ u_dag @ model.lift(e_am) @ u,
            model.dim_object,
            model.dim_apparatus,
        )
        effects.append(0.5 * (m_m + adjoint(m_m)))  # Hermitian up to round-off

    labels = tuple(f"{label:g}" for label in model.pointer.labels)
    try:
        return Povm(tuple(effects), labels, MODEL_TOL)

    except PovmError as e:
        raise ModelInconsistencyError(f"induced POVM is invalid: {e}") from e


def pointer_consistency(rho_o, model):
    """max_m |Tr rho_oaf (I x E_am) - Tr rho_o M_m|"""
    rho_oaf = evolve_joint(rho_o, model)
    povm = induced_povm(model)
    return max(
        abs(np.trace(rho_oaf.op @ model.lift(e_am)) - np.trace(rho_o.op @ m_m))
        for e_am, m_m in zip(model.pointer.projectors, povm.effects)
    )
