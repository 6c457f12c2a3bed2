class PermpolyError(Exception):
    """Base class for all errors raised by permpoly."""


class CompositeModulus(PermpolyError, ValueError):
    def __init__(self, n: int) -> None:
        super().__init__(f"Modulus is not prime: {n}")
        self.n = n


class OutOfRange(PermpolyError, ValueError):
    pass


class ModulusMismatch(PermpolyError, ValueError):
    def __init__(self, p: int, q: int) -> None:
        super().__init__(f"Operands live over different moduli: {p} and {q}")
        self.moduli = (p, q)


class DivisionByZero(PermpolyError, ZeroDivisionError):
    pass


class NotARoot(PermpolyError, ArithmeticError):
    pass


class InexactDivision(PermpolyError, ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class DegeneratePair(PermpolyError, ValueError):
    pass


class EvenModulus(PermpolyError, ValueError):
    pass


class KOutOfRange(PermpolyError, ValueError):
    pass


class TooLarge(PermpolyError, ValueError):
    pass


class MalformedInput(PermpolyError, ValueError):
    pass


class VerificationFailure(PermpolyError, AssertionError):
    """
    Raised when a verification suite finds a failing check.

    Carries the full report, so callers can still inspect the checks that passed.
    """

    def __init__(self, report, check) -> None:
        message = f"Check '{check.name}' failed for p={report.p}"
        if check.witness is not None:
            message += f" (witness: {check.witness})"
        super().__init__(message)
        self.report = report
        self.check = check
