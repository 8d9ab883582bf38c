import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from measurement.errors import MeasurementError
from measurement.state import density_operator, pure_state
from tools.log import log

# auto register all Experiment subclasses, check Experiment.__init_subclass__
Experiment_classes = []

REQUIRED = object()


class ConfigError(ValueError):
    def __init__(self, msg, path=""):
        super().__init__(f"{path}: {msg}" if path else msg)
        self.path = path


def _number(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {value!r}", path)

    if not math.isfinite(value):
        raise ConfigError(f"expected a finite number, got {value!r}", path)
    return float(value)


def _complex(value, path):
    """a number or a [re, im] pair"""
    if isinstance(value, list):
        if len(value) != 2:
            raise ConfigError(f"expected a [re, im] pair, got {value!r}", path)
        re, im = value
        return complex(_number(re, f"{path}[0]"), _number(im, f"{path}[1]"))
    return complex(_number(value, path))


def _vector(value, path):
    if not isinstance(value, list) or not value:
        raise ConfigError("expected a nonempty list of [re, im] pairs", path)
    return np.array([_complex(v, f"{path}[{i}]") for i, v in enumerate(value)])


def _matrix(value, path):
    if not isinstance(value, list) or not value:
        raise ConfigError("expected a nonempty list of rows", path)

    rows = [_vector(row, f"{path}[{i}]") for i, row in enumerate(value)]
    if any(len(row) != len(rows) for row in rows):
        raise ConfigError(f"expected a square matrix, got {len(rows)} rows", path)
    return np.array(rows)


def _matrices(value, path):
    if not isinstance(value, list) or not value:
        raise ConfigError("expected a nonempty list of matrices", path)
    return [_matrix(m, f"{path}[{i}]") for i, m in enumerate(value)]


def _integer(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {value!r}", path)
    return value


def state_parameter(vector, dim, path):
    """a pure state from its amplitudes"""
    if len(vector) != dim:
        raise ConfigError(f"expected {dim} amplitudes, got {len(vector)}", path)

    try:
        return pure_state(vector)

    except MeasurementError as e:
        raise ConfigError(str(e), path) from e


def density_parameter(matrix, dim, path):
    if len(matrix) != dim:
        raise ConfigError(f"expected a {dim} x {dim} matrix, got {len(matrix)}", path)

    try:
        return density_operator(matrix)

    except MeasurementError as e:
        raise ConfigError(str(e), path) from e


@dataclass(frozen=True)
class Field:
    """a typed config parameter, angles are given in degrees"""

    kind: str
    default: object = REQUIRED
    minimum: float = None
    maximum: float = None

    converters = dict(
        number=_number,
        angle=lambda value, path: math.radians(_number(value, path)),
        gamma=_number,
        integer=_integer,
        vector=_vector,
        matrix=_matrix,
        matrices=_matrices,
    )

    def convert(self, value, path):
        converted = self.converters[self.kind](value, path)
        if self.kind == "gamma" and not 0.0 <= converted <= 1.0:
            raise ConfigError(f"must be in [0, 1], got {value}", path)

        if self.minimum is not None and converted < self.minimum:
            raise ConfigError(f"must be >= {self.minimum}, got {value}", path)

        if self.maximum is not None and converted > self.maximum:
            raise ConfigError(f"must be <= {self.maximum}, got {value}", path)
        return converted


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    parameters: dict = field(default_factory=dict)  # converted, radians
    raw: dict = field(default_factory=dict)  # as written in the file


class Experiment(ABC):
    kind = None
    fields = {}

    def __init_subclass__(cls):
        """register subclasses"""
        if cls.kind:
            Experiment_classes.append(cls)

    def log(self, *args, **kwargs):
        args = list(args)
        args[0] = f"{args[0]}, {self.kind}"
        log(*args, **kwargs)

    def parse(self, raw):
        """strict: unknown fields are rejected, missing ones get their default"""
        unknown = sorted(set(raw) - set(self.fields) - {"kind"})
        if unknown:
            raise ConfigError(f"unknown field(s) {', '.join(unknown)}", unknown[0])

        parameters = {}
        for name, spec in self.fields.items():
            if name in raw:
                parameters[name] = spec.convert(raw[name], name)

            elif spec.default is REQUIRED:
                raise ConfigError("missing required field", name)

            elif spec.default is None:
                parameters[name] = None

            else:
                parameters[name] = spec.convert(spec.default, name)

        self.check(parameters)
        return ExperimentConfig(self.kind, parameters, dict(raw))

    def check(self, parameters):
        """cross field validation, raise ConfigError"""

    @abstractmethod
    def run(self, parameters):
        """return a ResultTable"""

    def update(self, config):
        self.log("RUN")
        table = self.run(config.parameters)
        table.stamp(config.raw)
        if table.checks_passed:
            self.log("DONE")
        else:
            self.log("CHECK FAILED", error=True)
        return table
