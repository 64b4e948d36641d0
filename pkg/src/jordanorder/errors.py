"""Exception hierarchy shared by all modules."""


class JordanOrderError(Exception):
    pass


class DescriptorMismatch(JordanOrderError, TypeError):
    pass


class NoOrder(JordanOrderError):
    """Raised when an order-dependent operation meets an unordered ring."""


class NotInvertible(JordanOrderError, ArithmeticError):
    pass


class LeavesChart(JordanOrderError):
    """The image of a chart point is not representable in V + {infinity}."""


class InternalInvariantViolation(JordanOrderError, AssertionError):
    pass


class NotTransversal(JordanOrderError, ValueError):
    pass


class NormalizationFailed(InternalInvariantViolation):
    pass


class DegenerateEndpoint(JordanOrderError, ValueError):
    pass


class NotApplicable(JordanOrderError, ValueError):
    pass


class EqualPoints(JordanOrderError, ValueError):
    pass


class UnsupportedSize(JordanOrderError, ValueError):
    pass


class UnsupportedProjection(JordanOrderError, ValueError):
    pass


class PreconditionViolation(JordanOrderError, ValueError):
    pass


class ConfigError(JordanOrderError, ValueError):
    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)
