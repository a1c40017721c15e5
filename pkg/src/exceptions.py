# src/exceptions.py

"""
Error hierarchy for the graph-product toolkit.

Every error carries the exit code the command-line surface reports for it.
"""


class GraphProductError(ValueError):
    """Base class for all toolkit errors"""

    exit_code = 1


class InputError(GraphProductError):
    """Malformed documents, unknown vertices, violated preconditions"""

    exit_code = 2


class PresentationMismatchError(InputError):
    """Operands built over different presentations"""


class BijectionError(InputError):
    """Letter maps that are not bijections fixing the identity"""


class RelationError(GraphProductError):
    """A label relation table is malformed or cannot decide a needed pair"""

    exit_code = 3


class UnsupportedLabelError(GraphProductError):
    """Element arithmetic requested under a higman or opaque label"""

    exit_code = 4


class EnumerationError(GraphProductError):
    """A finite enumeration was requested that cannot be carried out"""

    exit_code = 5
