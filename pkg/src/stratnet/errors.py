"""Exception hierarchy. Every pipeline failure derives from ``StratnetError``."""


class StratnetError(Exception):
    exit_code = 3


class GraphError(StratnetError, ValueError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotIsg(StratnetError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class ConsistencyError(StratnetError, RuntimeError):
    """Two independent routes to the same quantity disagree."""

    exit_code = 4


class NonPositiveOmega(StratnetError, ValueError):
    pass


class ConvergenceFailure(StratnetError):
    pass


class EigenvalueCollision(StratnetError):
    pass


class WeightMismatch(ConsistencyError):
    pass


class InfeasibleRow(StratnetError):
    pass


class DimensionMismatch(StratnetError, ValueError):
    pass


class NotHermitian(StratnetError, ValueError):
    pass


class NotScheme(StratnetError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TooSmall(StratnetError, ValueError):
    pass


class TooLarge(StratnetError, ValueError):
    pass


class UnknownPreset(StratnetError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class TooManyQubits(StratnetError, ValueError):
    pass


class RestrictionNotAffine(ConsistencyError):
    pass


class InfeasibleStratum(InfeasibleRow):
    pass
