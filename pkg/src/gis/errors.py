"""Exception hierarchy.

``GisError`` subclasses split in two families.  ``InputError`` covers text
or values that are malformed or refer to unknown names; ``PreconditionError``
covers well-formed requests an operation cannot serve, such as asking for
all elements of an infinite G(E).  The CLI maps the first family to exit
status 1 and the second to exit status 2.
"""


class GisError(Exception):
    pass


class InputError(GisError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class UnknownIdentifier(InputError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class InvalidElement(InputError):
    pass


class NotAPartialOrder(InputError):
    pass


class NotAHomomorphism(InputError):
    pass


class NotIsomorphism(InputError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotACongruence(InputError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class PreconditionError(GisError):
    pass


class CyclicGraph(PreconditionError):
    pass


class SizeGuard(PreconditionError):
    pass


class BoundExceeded(PreconditionError):
    pass


class NotInjective(PreconditionError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotSimpleAcyclic(PreconditionError):
    pass


class HypothesisFails(PreconditionError):
    pass


class InvalidPath(InputError):
    pass
