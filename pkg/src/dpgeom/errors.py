"""Exception hierarchy shared by all dpgeom modules.

Every error raised on bad user input derives from DpgeomError and carries a
stable ``code`` string so the CLI can emit machine-parseable diagnostics.
"""


class DpgeomError(Exception):
    """Base class for all dpgeom domain errors."""

    code = "error"


class ShapeError(DpgeomError):
    """Array dimensions inconsistent with the container or operation."""

    code = "shape_mismatch"


class DomainError(DpgeomError):
    """A value outside the mathematical domain of the operation."""

    code = "domain_error"


class EmptyInput(DpgeomError):
    """An operation received no usable samples/pixels/points."""

    code = "empty_input"


class ParseError(DpgeomError):
    """Malformed file content. ``offset`` is the byte offset when known."""

    code = "parse_error"

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (byte offset {offset})")
        self.offset = offset


class DegenerateFit(DpgeomError):
    """Least-squares design matrix is rank deficient."""

    code = "degenerate_fit"


class InconsistentOptics(DpgeomError):
    """Fitted or supplied optical parameters are physically impossible."""

    code = "inconsistent_optics"


class NotASaddle(DpgeomError):
    """Quadratic refinement found a definite Hessian instead of a saddle."""

    code = "not_a_saddle"


class Diverged(DpgeomError):
    """Iterative refinement left its trust region."""

    code = "diverged"


class InsufficientShots(DpgeomError):
    """Too few phase-shift images to recover a wrapped phase."""

    code = "insufficient_shots"


class DegenerateLights(DpgeomError):
    """Light directions do not span 3D (design matrix rank < 3)."""

    code = "degenerate_lights"


class OutOfBall(DpgeomError):
    """Specular highlight lies outside the chrome-ball silhouette."""

    code = "out_of_ball"
