"""Exception hierarchy.

Two families matter for callers (and for the CLI's exit codes):

* ``InputError`` -- the caller handed us something malformed or out of
  contract (bad JSON, a non-dominant weight where one is required,
  elements over mismatched root data).  CLI exit code 1.
* ``InternalError`` -- an internal invariant failed (an exact division
  that should have succeeded, a search bound exceeded).  These signal a
  bug in the library or a broken root datum, never user error.  CLI
  exit code 2.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class DatumMismatchError(InputError):
    """Elements over different root data were combined."""


class NonDominantError(InputError):
    """A dominant weight/coweight was required."""


class InternalError(RuntimeError):
    """An internal invariant was violated."""


class InexactDivisionError(InternalError):
    """An exact division left a remainder; signals a convention bug upstream."""


class SearchBoundExceededError(InternalError):
    """A bounded search (length-zero representatives, recursion depth) overran its cap."""
