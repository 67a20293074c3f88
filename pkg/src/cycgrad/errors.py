"""Exception hierarchy shared by every cycgrad module."""


class CycGradError(Exception):
    """Base class for all library errors."""


class ContextMismatchError(CycGradError, ValueError):
    """Operands live in algebras with different numbers of indeterminates."""


class IndexOutOfRangeError(CycGradError, ValueError):
    """A variable index falls outside ``1..n``."""


class ArityMismatchError(CycGradError, ValueError):
    """A tuple of polynomials does not have exactly ``n`` entries."""


class NotAGradientError(CycGradError):
    """Raised by ``anti_gradient`` when the commutator obstruction is nonzero.

    The obstruction polynomial is kept on ``self.obstruction``.
    """

    def __init__(self, obstruction):
        super().__init__(f"tuple is not a cyclic gradient; obstruction = {obstruction}")
        self.obstruction = obstruction


class NotInKernelError(CycGradError):
    """Raised by ``kernel_decompose`` when the cyclic symmetrization is nonzero.

    ``self.obstruction`` holds ``C(p)``.
    """

    def __init__(self, obstruction):
        super().__init__(f"polynomial is not in the kernel; C(p) = {obstruction}")
        self.obstruction = obstruction


class InternalConsistencyError(CycGradError, AssertionError):
    """Two routes to the same mathematical fact disagreed. Always a bug."""


class ParseError(CycGradError, ValueError):
    """Syntax error in a polynomial expression, with 1-based line/column."""

    def __init__(self, message, text="", pos=0):
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")
        self.message = message


class FormatError(CycGradError, ValueError):
    """Malformed interchange document (bad version, kind, or payload)."""


class DimensionMismatchError(CycGradError, ValueError):
    """Matrices in a tuple disagree in shape or count."""
