"""Pole locations of the series terms and domain classification.

Term j contributes a simple real pole at p_j = -Q_{j-1}/Q_j.  The locations
converge to 1 - sqrt(2) as j -> +inf and to 1 + sqrt(2) as j -> -inf,
alternating around the limit with strictly shrinking distance, so the two
limits are the only accumulation points of the pole set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .geometry import Rect
from .sequence import SILVER_CONJUGATE, SILVER_RATIO, pell_lucas, pole_ratio

DEFAULT_POLE_TOL = 1e-6
DEFAULT_ACCUM_TOL = 1e-3
DEFAULT_J_CAP = 60

_pole_float_cache: dict[int, float] = {}


def accumulation_points() -> tuple[float, float]:
    """(1 - sqrt(2), 1 + sqrt(2)) as correctly rounded doubles."""
    return (SILVER_CONJUGATE, SILVER_RATIO)


@dataclass(frozen=True)
class Pole:
    """One term pole: exact rational location plus its rounded double."""

    index: int
    location: Fraction
    location_float: float


class DomainTag(Enum):
    REGULAR = "regular"
    POLE = "pole"
    NEAR_POLE = "near-pole"
    NEAR_ACCUMULATION = "near-accumulation"


@dataclass(frozen=True)
class DomainClass:
    """Classification of a point against the pole set."""

    tag: DomainTag
    index: int | None = None       # pole index for POLE / NEAR_POLE
    distance: float | None = None  # distance to that pole for NEAR_POLE
    limit: float | None = None     # accumulation point for NEAR_ACCUMULATION

    @property
    def is_regular(self) -> bool:
        return self.tag is DomainTag.REGULAR


def _pole_float(j: int) -> float:
    v = _pole_float_cache.get(j)
    if v is None:
        v = float(pole_ratio(j))
        _pole_float_cache[j] = v
    return v


def poles_in_rect(region: Rect, j_cap: int = DEFAULT_J_CAP) -> list[Pole]:
    """All poles with |j| <= j_cap inside the closed region, by location.

    Containment is decided on the exact rational location (the poles are
    real, so anything off the axis is excluded by the region bounds).
    """
    if j_cap < 0:
        raise ValueError("j_cap must be nonnegative")
    found = []
    for j in range(-j_cap, j_cap + 1):
        loc = pole_ratio(j)
        if region.contains(loc, 0):
            found.append(Pole(j, loc, _pole_float(j)))
    found.sort(key=lambda p: (p.location, abs(p.index)))
    return found


def classify(z: complex, pole_tol: float = DEFAULT_POLE_TOL,
             accum_tol: float = DEFAULT_ACCUM_TOL,
             j_cap: int = DEFAULT_J_CAP) -> DomainClass:
    """Tag z as REGULAR, POLE, NEAR_POLE or NEAR_ACCUMULATION.

    The nearest feature wins; among equidistant poles the smallest |j|
    wins, and a pole that ties an accumulation point defers to it (for
    large |j| the rounded locations merge with the limit and are not
    distinguishable in double precision).
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"point must be finite, got {z!r}")
    if pole_tol <= 0 or accum_tol <= 0:
        raise ValueError("tolerances must be positive")

    best_d = math.inf
    best_j = 0
    best_exact = False
    for j in range(-j_cap, j_cap + 1):
        loc = _pole_float(j)
        d = math.hypot(z.real - loc, z.imag)
        if d < best_d or (d == best_d and abs(j) < abs(best_j)):
            best_d = d
            best_j = j
            best_exact = z.imag == 0.0 and z.real == loc

    d_minus = abs(z - SILVER_CONJUGATE)
    d_plus = abs(z - SILVER_RATIO)
    d_acc, limit = ((d_minus, SILVER_CONJUGATE) if d_minus <= d_plus
                    else (d_plus, SILVER_RATIO))

    if d_acc < accum_tol and d_acc <= best_d:
        return DomainClass(DomainTag.NEAR_ACCUMULATION, limit=limit)
    if best_exact:
        return DomainClass(DomainTag.POLE, index=best_j)
    if best_d < pole_tol:
        return DomainClass(DomainTag.NEAR_POLE, index=best_j, distance=best_d)
    if d_acc < accum_tol:
        return DomainClass(DomainTag.NEAR_ACCUMULATION, limit=limit)
    return DomainClass(DomainTag.REGULAR)
