"""Exception hierarchy shared by all paracontact modules."""


class ParacontactError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ParacontactError):
    """Malformed expression text. Carries the 0-based offset of the failure."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownCoordinateError(ParacontactError):
    """An identifier is not a coordinate of the active chart."""


class ZeroDenominatorError(ParacontactError, ZeroDivisionError):
    """Division by the zero polynomial / zero rational function."""


class PoleError(ParacontactError, ZeroDivisionError):
    """Evaluation at a point where a denominator vanishes."""


class MissingCoordinateError(ParacontactError):
    """An evaluation point does not assign every coordinate."""


class DegenerateMetricError(ParacontactError):
    """Metric determinant vanishes (identically, or at the requested point)."""


class DegenerateFrameError(ParacontactError):
    """Frame component matrix has identically zero determinant."""


class NotAntisymmetricError(ParacontactError):
    """A two-form argument is not antisymmetric."""


class NotConformalError(ParacontactError):
    """Lie derivative of the metric is not a pointwise multiple of the metric."""


class NoAlphaError(ParacontactError):
    """dPhi is nonzero while eta^Phi vanishes identically; no alpha exists."""


class ClassMismatchError(ParacontactError):
    """An identity suite was requested for an unsupported structure class."""


class NotASolitonError(ParacontactError):
    """A derived-consequence suite was invoked on a non-soliton candidate."""


class SchemaError(ParacontactError):
    """Manifold definition file violates the input schema."""
