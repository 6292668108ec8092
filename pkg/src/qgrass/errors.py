"""Exception hierarchy shared by every module of the package."""


class QGrassError(Exception):
    """Base class for all package errors."""


class NotDivisible(QGrassError, ArithmeticError):
    pass


class OddOrNegativeExponent(QGrassError, ValueError):
    pass


class CyclicQuiver(QGrassError, ValueError):
    pass


class MalformedSpec(QGrassError, ValueError):
    pass


class LengthMismatch(QGrassError, ValueError):
    pass


class EmptyWord(QGrassError, ValueError):
    pass


class ZeroElement(QGrassError, ValueError):
    pass


class NotDynkin(QGrassError, ValueError):
    pass


class NoFactorization(QGrassError, ValueError):
    pass


class WeightMismatch(QGrassError, ValueError):
    pass


class NotTypeA(QGrassError, ValueError):
    pass


class DisconnectedSupport(QGrassError, ValueError):
    pass


class ShapeMismatch(QGrassError, ValueError):
    pass


class NegativeExt(QGrassError, ArithmeticError):
    pass


class NoRigidPartition(QGrassError, RuntimeError):
    pass


class MultipleRigidPartitions(QGrassError, RuntimeError):
    pass


class NonTerminating(QGrassError, RuntimeError):
    pass


class ConventionMismatch(QGrassError, ArithmeticError):
    pass


class DimensionExceeds(QGrassError, ValueError):
    pass


class OrderAssumptionFails(QGrassError, RuntimeError):
    """The lexicographic root order is not adapted to the orientation for this weight."""
