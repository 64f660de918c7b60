"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid grid, scheme, metric or run configuration."""


class GeometryError(ValueError):
    """Degenerate metric (e.g. graphene strain amplitude reaching f >= 1)."""


class KrylovError(RuntimeError):
    """Non-finite values encountered inside an iterative solve."""


class StepFailureError(RuntimeError):
    """A transport solve did not converge; the simulation cannot continue."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BudgetError(RuntimeError):
    """An oracle or reference computation exceeded its configured size budget."""


class SimulationError(RuntimeError):
    """Propagation halted (NaN or solver failure); carries the last good state."""

    def __init__(self, message, step=None, diagnostics=None):
        super().__init__(message)
        self.step = step
        self.diagnostics = diagnostics or []
