class TOL:
    check = 1e-9  # hermiticity, positivity, closure, normalization
    boundary = 1e-6  # Martens equality detection
    joint = 1e-6  # largest marginal residual of a joint nonideal measurement
    exact = 1e-7  # recovery residual below which m is a nonideal version of n

    @classmethod
    def set_check(cls, tol):
        if not tol > 0:
            raise ValueError(f"tolerance must be positive, got {tol}")
        cls.check = float(tol)

    @classmethod
    def get(cls, tol=None):
        return cls.check if tol is None else tol
