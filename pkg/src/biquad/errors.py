"""Exception hierarchy.

Every domain error carries a stable ``kind`` string; the CLI serializes it
as the ``error`` field of its structured error output.
"""


class BiquadError(Exception):
    kind = "BiquadError"

    def __init__(self, message=""):
        super().__init__(message or self.kind)
        self.message = message or self.kind


class DivisionByZero(BiquadError, ZeroDivisionError):
    kind = "DivisionByZero"


class NotBiquadratic(BiquadError, ValueError):
    """One of a1, a2, a1*a2 is a rational square."""

    kind = "NotBiquadratic"

    def __init__(self, which, value=None):
        self.which = which
        self.value = value
        super().__init__(f"{which} = {value} is a square in Q")


class MixedConfig(BiquadError, ValueError):
    kind = "MixedConfig"


class NotInSubfield(BiquadError, ValueError):
    kind = "NotInSubfield"


class ZeroElement(BiquadError, ValueError):
    kind = "ZeroElement"


class NotNormOne(BiquadError, ValueError):
    kind = "NotNormOne"


class NormNotOne(NotNormOne):
    """alpha_i does not have norm one down to E_i."""

    kind = "NormNotOne"

    def __init__(self, i, norm=None):
        self.i = i
        self.norm = norm
        super(NotNormOne, self).__init__(f"N_(E/E{i})(alpha{i}) = {norm}, expected 1")


class CompatibilityFailed(BiquadError, ValueError):
    kind = "CompatibilityFailed"


class NotInKernel(BiquadError, ValueError):
    kind = "NotInKernel"


class ValueNotInF(BiquadError, ValueError):
    kind = "ValueNotInF"


class ZeroValue(BiquadError, ValueError):
    kind = "ZeroValue"


class ZeroInput(BiquadError, ValueError):
    kind = "ZeroInput"


class TooLarge(BiquadError, ValueError):
    kind = "TooLarge"


class InvalidModule(BiquadError, ValueError):
    kind = "InvalidModule"


class ParseError(BiquadError, ValueError):
    kind = "ParseError"

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at offset {position}")
