"""Exception hierarchy.

Three families, matching the CLI exit-code contract: malformed input
(exit 2), a mathematical precondition that the input data fails to
satisfy (exit 3), and a configured search/precision bound being
exceeded (exit 4).
"""


class PhantomavError(Exception):
    """Base class for all library errors."""


class InputError(PhantomavError):
    """Malformed or structurally invalid input (CLI exit code 2)."""


class MathPreconditionError(PhantomavError):
    """Input is well-formed but violates a mathematical hypothesis (exit 3)."""


class BoundExceededError(PhantomavError):
    """A configured search or precision bound was exhausted (exit 4)."""


# -- arith ------------------------------------------------------------------

class ZeroInput(InputError):
    """Zero was passed where a nonzero value is required (valuation is +inf)."""


class EmptyInput(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotSquarefree(MathPreconditionError):
    pass


class PrecisionExhausted(BoundExceededError):
    """Retained for API compatibility; the number-field backend of the
    p-adic factorization is exact and never raises this."""


class Singular(MathPreconditionError):
    """A square matrix required to be invertible is singular."""


class NotInvariant(MathPreconditionError):
    """The given subspace is not invariant under the operator."""


# -- weil -------------------------------------------------------------------

class NotMonic(InputError):
    pass


class ZeroConstantTerm(InputError):
    pass


class LengthMismatch(InputError):
    """Polygons with different total horizontal length cannot be compared."""


# -- honda_tate -------------------------------------------------------------

class NotIrreducible(MathPreconditionError):
    pass


class NotWeil(MathPreconditionError):
    """Some root does not have absolute value sqrt(q)."""


class NotOrdinary(MathPreconditionError):
    """Newton and Hodge polygons do not coincide."""


class NewtonBelowHodge(MathPreconditionError):
    """The Newton polygon dips below the Hodge polygon; inconsistent with
    any genuine smooth projective variety."""


# -- projector --------------------------------------------------------------

class SingularPairing(MathPreconditionError):
    pass


class NotPolarized(MathPreconditionError):
    """The correspondence composed with its adjoint is singular on the
    adjoint image, so the supplied pairings cannot both be polarizations
    compatible with the map."""


class DecompositionFails(MathPreconditionError):
    """One of the orthogonal-decomposition identities fails exactly."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class HardLefschetzFails(MathPreconditionError):
    pass


# -- quadric ----------------------------------------------------------------

class FieldMismatch(InputError):
    pass


class ZeroDiscriminant(MathPreconditionError):
    pass


class SearchBoundExceeded(BoundExceededError):
    """Point enumeration would exceed the configured limit.

    Carries diagnostics: the required extension degree and the size of the
    search space that was refused.
    """

    def __init__(self, message, required_degree=None, points_required=None):
        super().__init__(message)
        self.required_degree = required_degree
        self.points_required = points_required


class MissingDoubleCoverData(InputError):
    """Even fiber dimension needs the Betti data of the double cover."""


class InvalidGenus(InputError):
    """A connected-cover Prym needs genus >= 1."""
