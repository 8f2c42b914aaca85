"""Exception hierarchy.

Every error raised by the library derives from :class:`PseudocircleError`,
so callers (and the CLI) can separate malformed input from bugs.
"""


class PseudocircleError(ValueError):
    """Base class for all library errors."""


# --- plane maps -----------------------------------------------------------

class MapError(PseudocircleError):
    """A rotation system is malformed or not a connected spherical map."""


class NotInvolution(MapError):
    pass


class NotPermutation(MapError):
    pass


class Disconnected(MapError):
    pass


class EulerViolation(MapError):
    pass


class ParseError(MapError):
    pass


class OddVertex(PseudocircleError):
    pass


class NotFourRegular(PseudocircleError):
    pass


class NotCubic(PseudocircleError):
    pass


class NotCocycle(PseudocircleError):
    pass


class DuplicateEdge(PseudocircleError):
    pass


# --- arrangements ---------------------------------------------------------

class ArrangementError(PseudocircleError):
    pass


class MissingCurves(ArrangementError):
    pass


class NotDegreeFour(ArrangementError):
    pass


class NonTransversalVertex(ArrangementError):
    pass


class CurveNotClosed(ArrangementError):
    pass


class TangentOrTriplePoint(ArrangementError):
    pass


class NotIntersecting(ArrangementError):
    pass


class NotAutomorphism(ArrangementError):
    pass


# --- constructions --------------------------------------------------------

class NotPentagon(PseudocircleError):
    pass


class NeighborNotTriangle(PseudocircleError):
    pass


class SharedOutwardEdge(PseudocircleError):
    pass


class EvenFace(PseudocircleError):
    pass


class IsolatedCurve(PseudocircleError):
    pass


class SameSite(PseudocircleError):
    pass


class SiteNotOnBundle(PseudocircleError):
    pass


class BadIndex(PseudocircleError):
    pass


class DegenerateFace(PseudocircleError):
    """A face visits some vertex more than once."""


# --- coloring -------------------------------------------------------------

class NotProper(PseudocircleError):
    pass


class NotThreeColors(PseudocircleError):
    pass


class Bridged(PseudocircleError):
    def __init__(self, message, bridge=None):
        super().__init__(message)
        self.bridge = bridge


class NoColoring(PseudocircleError):
    pass


class NoCubicPremedial(PseudocircleError):
    pass


class BridgedPremedial(PseudocircleError):
    pass


class NotFourChromatic(PseudocircleError):
    pass


class NoInvolution(PseudocircleError):
    pass


class AdjacentAntipodes(PseudocircleError):
    pass


class NotVertexCritical(PseudocircleError):
    pass


class InteriorNotThreeColorable(PseudocircleError):
    """Raised when a side of a curve is not 3-colorable; this cannot happen
    for intersecting arrangements, so it signals a broken input or a bug."""


class NotTwoDegenerate(PseudocircleError):
    pass


class NegativeWeight(PseudocircleError):
    pass


# --- harness --------------------------------------------------------------

class UnknownFixture(PseudocircleError):
    pass
