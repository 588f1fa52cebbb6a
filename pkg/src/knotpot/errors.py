"""Exception types raised by the knotpot pipeline."""


class KnotpotError(Exception):
    """Base class for all knotpot errors."""


class CurveParseError(KnotpotError):
    """Syntax error in a curve expression. Carries the 0-based position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class OpenCurveError(KnotpotError):
    """The parametrization does not close up: r(0) != r(2*pi)."""


class SingularCurveError(KnotpotError):
    """|r'(t)| vanishes somewhere, so the curve is not an immersion."""


class TooCloseToKnotError(KnotpotError):
    """Evaluation point is inside the quadrature exclusion radius."""

    def __init__(self, distance, min_distance):
        super().__init__(
            f"evaluation point is {distance:.6g} from the knot, closer than the "
            f"reliable quadrature distance {min_distance:.6g}"
        )
        self.distance = distance
        self.min_distance = min_distance


class DegenerateCriticalPointError(KnotpotError):
    """A located critical point has a near-zero Hessian eigenvalue."""

    def __init__(self, position, eigenvalues):
        super().__init__(
            f"degenerate critical point at {tuple(position)}: Hessian eigenvalues "
            f"{tuple(eigenvalues)} include one too close to zero; perturb the knot "
            "slightly to restore nondegeneracy"
        )
        self.position = position
        self.eigenvalues = eigenvalues


class NoCriticalPointsError(KnotpotError):
    """The multistart search converged nowhere: a misconfigured search."""


class BoundaryClipError(KnotpotError):
    """A grid boundary vertex reaches the level, so the surface would be cut."""


class NonManifoldMeshError(KnotpotError):
    """An extracted mesh has an edge not shared by exactly two triangles."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class LevelTooCloseError(KnotpotError):
    """A requested surface level is too close to a critical value."""

    def __init__(self, level, critical_value):
        super().__init__(
            f"level {level:.9g} is too close to the critical value "
            f"{critical_value:.9g}; it is not safely regular"
        )
        self.level = level
        self.critical_value = critical_value


class ClusterSeparationError(KnotpotError):
    """Critical-value clusters are too close to choose safe regular values."""


class ConfigError(KnotpotError):
    """Invalid or malformed run configuration."""


class MeshExportError(KnotpotError):
    """Mesh could not be written (empty mesh, I/O failure)."""
