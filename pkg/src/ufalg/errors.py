"""Exception hierarchy shared by the kernel and the CLI."""


class UfaError(Exception):
    """Base class for all errors raised by ufalg."""


class DomainError(UfaError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """A documented precondition (monic divisor, odd degree, ...) failed."""


class StructuralError(UfaError, ValueError):
    """Operands live over incompatible variable tables."""


class BasisNotCertified(DomainError):
    """A symbolic quotient has no certifiable free basis over the coefficient ring."""


class DegreeBoundExceeded(DomainError):
    pass


class SearchLimitExceeded(DomainError):
    pass


class ParseError(UfaError, ValueError):
    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)
