"""Exception types shared across the package."""


class PelleisError(Exception):
    """Base class for all library-specific errors."""


class IndexCapExceeded(PelleisError):
    """Requested sequence index lies beyond the configured cap."""

    def __init__(self, index: int, cap: int):
        super().__init__(f"index {index} exceeds cap {cap}")
        self.index = index
        self.cap = cap


class InvalidRange(PelleisError):
    """Lower range bound exceeds the upper bound."""


class InvalidRegion(PelleisError):
    """Rectangle is degenerate or has non-finite corners."""


class DegreeCapExceeded(PelleisError):
    """Exact computation would produce a denominator above the degree cap."""


class ZeroArgument(PelleisError):
    """Functional equation undefined at z = 0 (needs 1/z or -1/z)."""


class EmptyGrid(PelleisError):
    """Every grid point was skipped; no residual was computed."""


class PoleProximity(PelleisError):
    """A term denominator Q_j z + Q_{j-1} vanishes (or nearly) at the point."""

    def __init__(self, index: int, point: complex, side: str | None = None):
        self.index = index
        self.point = point
        self.side = side
        super().__init__(self._render())

    def _render(self) -> str:
        tag = f" [{self.side}]" if self.side else ""
        return f"term j={self.index} is singular near z={self.point!r}{tag}"


class DidNotConverge(PelleisError):
    """Tail bound stayed above the target tolerance at the maximum window."""

    def __init__(self, half_width: int, tail_bound: float,
                 point: complex | None = None, side: str | None = None):
        self.half_width = half_width
        self.tail_bound = tail_bound
        self.point = point
        self.side = side
        tag = f" [{self.side}]" if side else ""
        super().__init__(
            f"tail bound {tail_bound!r} above tolerance at half-width "
            f"{half_width} for z={point!r}{tag}"
        )
