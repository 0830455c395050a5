"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes): ``InputError``
for malformed or structurally invalid data, ``PreconditionError`` when the
data is well formed but a mathematical hypothesis fails.
"""


class NSPairsError(Exception):
    pass


class InputError(NSPairsError, ValueError):
    pass


class PreconditionError(NSPairsError, ValueError):
    pass


class DimensionError(InputError):
    pass


class StructureError(InputError):
    pass


class GermSyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotAGermError(InputError):
    pass


class UnsupportedCaseError(PreconditionError):
    pass


class DegenerateInputError(PreconditionError):
    pass


class NonIsolatedError(PreconditionError):
    pass


class RadiusTooLargeError(PreconditionError):
    pass


class InconclusiveError(PreconditionError):
    pass


class ContradictionError(PreconditionError):
    pass


class ImpossibleDegreeError(PreconditionError):
    pass


class InsufficientDataError(PreconditionError):
    pass


class SpunUndefinedError(PreconditionError):
    pass


class HypothesisError(PreconditionError):
    """A construction was asked for outside the hypotheses that make it valid."""
