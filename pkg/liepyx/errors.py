"""
Typed errors raised by liepyx.

Errors caused by bad input derive from ValueError; errors that signal an internal defect derive from RuntimeError.

Programmer: liepyx team
Since: 2026-10
"""


class InvalidRootSystemError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class VariableUniverseError(ValueError):
    pass


class UnboundVariableError(ValueError):
    pass


class PolynomialFormatError(ValueError):
    pass


class NotInImageError(ValueError):
    pass


class SeedError(ValueError):
    pass


class CheckpointMismatchError(ValueError):
    pass


class ConfigurationError(ValueError):
    pass


class SliceSelectionError(RuntimeError):
    def __init__(self, message: str, height: int):
        super().__init__(message)
        self.height = height


class ChevalleyConsistencyError(RuntimeError):
    pass


class InductionOrderError(RuntimeError):
    pass
