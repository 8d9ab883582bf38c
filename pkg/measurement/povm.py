"""
generalized observables

Povm, BivariatePovm & QuadrivariatePovm validate themselves when built,
an invalid effect list can't be represented
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, PovmError, ValidationError
from .operator import as_operator, herm_eig, is_hermitian
from .tolerance import TOL

PLUS, MINUS = "+", "-"
DETECTION_LABELS = (PLUS, MINUS)
QUAD_AXES = ("m1", "n1", "m2", "n2")


def check_effects(effects, tol=None):
    tol = TOL.get(tol)
    if len(effects) == 0:
        raise PovmError("a POVM needs at least one effect")

    dim = effects[0].shape[0]
    for i, effect in enumerate(effects):
        if effect.shape != (dim, dim):
            raise DimensionError(
                f"effect {i} has shape {effect.shape}, expected {(dim, dim)}"
            )

        if not is_hermitian(effect, tol):
            residual = np.max(np.abs(effect - np.conj(effect).T))
            raise PovmError(f"effect {i} is not Hermitian", i, residual)

        lowest = herm_eig(effect, tol).eigenvalues[0]
        if lowest < -tol:
            raise PovmError(
                f"effect {i} is not positive (eigenvalue {lowest:.3g})", i, lowest
            )

    closure = np.max(np.abs(sum(effects) - np.eye(dim)))
    if closure > tol:
        raise PovmError(f"effects don't sum to identity ({closure:.3g})", None, closure)


def _frozen_grid(grid):
    grid = np.array(grid, dtype=np.complex128)
    if not np.all(np.isfinite(grid)):
        raise ValidationError("effect entries must be finite")
    grid.setflags(write=False)
    return grid


class _EffectGrid:
    """effects laid out on an outcome grid of shape outcome_shape + (dim, dim)"""

    @property
    def outcome_shape(self):
        return self.grid.shape[:-2]

    @property
    def dim(self):
        return self.grid.shape[-1]

    @property
    def flat_effects(self):
        return tuple(self.grid.reshape(-1, self.dim, self.dim))

    def _validate(self):
        check_effects(self.flat_effects)


@dataclass(frozen=True)
class Povm(_EffectGrid):
    effects: tuple
    outcome_labels: tuple = None
    tol: float = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        effects = tuple(as_operator(e) for e in self.effects)
        labels = self.outcome_labels or tuple(str(i) for i in range(len(effects)))
        if len(labels) != len(effects):
            raise ValidationError(
                f"{len(labels)} labels for {len(effects)} effects"
            )
        object.__setattr__(self, "effects", effects)
        object.__setattr__(self, "outcome_labels", tuple(labels))
        check_effects(effects, self.tol)

    @property
    def grid(self):
        return np.array(self.effects)


@dataclass(frozen=True)
class BivariatePovm(_EffectGrid):
    grid: np.ndarray
    row_labels: tuple = DETECTION_LABELS
    col_labels: tuple = DETECTION_LABELS

    def __post_init__(self):
        grid = _frozen_grid(self.grid)
        if grid.ndim != 4 or grid.shape[:2] != (
            len(self.row_labels),
            len(self.col_labels),
        ):
            raise DimensionError(f"bivariate grid of shape {grid.shape}")
        object.__setattr__(self, "grid", grid)
        self._validate()


@dataclass(frozen=True)
class QuadrivariatePovm(_EffectGrid):
    grid: np.ndarray
    axis_labels: tuple = QUAD_AXES

    def __post_init__(self):
        grid = _frozen_grid(self.grid)
        if grid.shape != (2, 2, 2, 2, 4, 4):
            raise DimensionError(f"quadrivariate grid of shape {grid.shape}")
        object.__setattr__(self, "grid", grid)
        self._validate()


@dataclass(frozen=True)
class OutcomeDistribution:
    probabilities: np.ndarray

    def __post_init__(self):
        p = np.array(self.probabilities, dtype=float)
        tol = TOL.check
        if np.min(p) < -tol:
            raise ValidationError(f"negative probability {np.min(p):.3g}")

        if abs(np.sum(p) - 1) > tol:
            raise ValidationError(f"probabilities sum to {np.sum(p):.12g}")

        p.setflags(write=False)
        object.__setattr__(self, "probabilities", p)

    @property
    def shape(self):
        return self.probabilities.shape


def validate_povm(effects, outcome_labels=None):
    return Povm(tuple(effects), outcome_labels)


def is_pvm(p, tol=None):
    tol = TOL.get(tol)
    return all(np.max(np.abs(e @ e - e)) <= tol for e in p.flat_effects)


def distribution(rho, p):
    if rho.dim != p.dim:
        raise DimensionError(f"state of dimension {rho.dim} vs POVM {p.dim}")

    # Tr(rho E) for every effect of the grid
    values = np.einsum("ij,...ji->...", rho.op, p.grid)
    if np.max(np.abs(values.imag)) > TOL.check:
        raise ValidationError("complex outcome probability")

    return OutcomeDistribution(values.real)


def marginal(b, axis):
    """row: sum over n of R_mn, col: sum over m of R_mn"""
    if axis == "row":
        return Povm(tuple(b.grid.sum(axis=1)), b.row_labels)

    if axis == "col":
        return Povm(tuple(b.grid.sum(axis=0)), b.col_labels)

    raise ValidationError(f"axis must be 'row' or 'col', got {axis!r}")


def _axis_index(axis, labels):
    if axis in labels:
        return labels.index(axis)

    if isinstance(axis, int) and 0 <= axis < len(labels):
        return axis

    raise ValidationError(f"unknown axis {axis!r}, expected one of {labels}")


def _pair_axes(axis_i, axis_j, labels):
    i, j = _axis_index(axis_i, labels), _axis_index(axis_j, labels)
    if i == j:
        raise ValidationError(f"marginal over identical axes {labels[i]}")
    return i, j


def marginal_pair(q, axis_i, axis_j):
    i, j = _pair_axes(axis_i, axis_j, q.axis_labels)
    grid = np.moveaxis(q.grid, (i, j), (0, 1)).sum(axis=(2, 3))
    return BivariatePovm(grid)


def marginal_distribution(dist, keep_axes, labels=QUAD_AXES):
    """probabilities summed over every axis not in keep_axes, in keep_axes order"""
    keep = [_axis_index(axis, labels) for axis in keep_axes]
    if len(set(keep)) != len(keep):
        raise ValidationError(f"repeated axes in {keep_axes}")

    p = dist.probabilities
    others = tuple(k for k in range(p.ndim) if k not in keep)
    reduced = p.sum(axis=others)
    order = sorted(keep)
    return OutcomeDistribution(np.transpose(reduced, [order.index(k) for k in keep]))


def total_variation(p, q):
    if p.shape != q.shape:
        raise DimensionError(f"distributions of shapes {p.shape} and {q.shape}")
    return 0.5 * float(np.sum(np.abs(p.probabilities - q.probabilities)))
