"""Exception types.

Errors that signal a broken *input* (not a group, not symmetric, ...) derive
from ``InputError``. Errors that signal a broken *invariant* the theory
guarantees (a smash product that is not well defined, a globalization that
fails its axioms) derive from ``ConsistencyError``; seeing one means either
the input violated a precondition that was not checked or there is a bug.
"""


class PartialHopfError(Exception):
    pass


class InputError(PartialHopfError, ValueError):
    pass


class ConsistencyError(PartialHopfError, AssertionError):
    pass


class DimensionMismatch(InputError):
    pass


class NotInvertible(PartialHopfError, ArithmeticError):
    pass


class AntipodeNotBijectiveOnCounital(ConsistencyError):
    pass


class AntipodeNotInvertible(InputError):
    pass


class NotAGroup(InputError):
    pass


class NotAGroupoid(InputError):
    pass


class NotAnIdentity(InputError):
    pass


class NotARightIdeal(InputError):
    pass


class NotUnitalSubalgebra(InputError):
    pass


class NotSymmetric(InputError):
    pass


class NotAGroupoidAlgebra(InputError):
    pass


class NotAPartialAction(InputError):
    pass


class BoundExceeded(InputError):
    pass


class WellDefinednessFailure(ConsistencyError):
    pass


class GlobalizationAxiomFailure(ConsistencyError):
    pass


class IllDefined(ConsistencyError):
    pass


class ClosureFailure(ConsistencyError):
    pass
