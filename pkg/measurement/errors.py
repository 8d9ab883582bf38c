class MeasurementError(Exception):
    """base of every domain error"""


class DimensionError(MeasurementError, ValueError):
    pass


class ValidationError(MeasurementError, ValueError):
    pass


class PovmError(ValidationError):
    def __init__(self, msg, index=None, residual=None):
        super().__init__(msg)
        self.index = index
        self.residual = residual


class NotJointMeasurementError(ValidationError):
    pass


class ModelInconsistencyError(ValidationError):
    pass


class SolverError(MeasurementError):
    """the iterate that was reached is kept in best"""

    def __init__(self, msg, best=None, residual=None):
        super().__init__(msg)
        self.best = best
        self.residual = residual
