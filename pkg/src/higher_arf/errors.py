"""Exception hierarchy shared by all modules."""


class ArfError(Exception):
    """Base class for every error raised by this package."""


# exact / combinatorial layer

class NotHyperbolic(ArfError, ValueError):
    pass


class NotCoprime(ArfError, ValueError):
    pass


class NotLiftable(ArfError, ValueError):
    pass


class LengthMismatch(ArfError, ValueError):
    pass


class NotApplicable(ArfError, ValueError):
    pass


class BudgetExceeded(ArfError, RuntimeError):
    pass


class ClassificationMismatch(ArfError, AssertionError):
    """An orbit partition disagrees with the type classification (a bug)."""


class NormalFormUnreachable(ArfError, AssertionError):
    pass


# numeric layer

class Degenerate(ArfError, ValueError):
    pass


class SharedAxis(ArfError, ValueError):
    pass


class Infinite(ArfError, ValueError):
    """A fixed point sits at infinity; conjugate first."""


class ModulusMismatch(ArfError, ValueError):
    pass


class NumericallyAmbiguous(ArfError, ArithmeticError):
    pass


class SearchFailed(ArfError, RuntimeError):
    pass


class Unsupported(ArfError, NotImplementedError):
    pass


class RelationFailed(ArfError, AssertionError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
