"""Numerical evaluation of the bilateral sum of (Q_j z + Q_{j-1})^(-m).

Terms die off like |Q_j|^(-m) once z stays away from the real poles
-Q_{j-1}/Q_j, so a symmetric window |j| <= J plus a certified tail bound
gives an evaluation with a machine-checkable error estimate.  The bound
rests on two consequences of the recurrence:

* Q_{n+1} >= 2 Q_n > 0 for n >= 1, hence |Q_j| >= Q_J * 2^(|j| - J)
  whenever |j| >= J >= 1.

* Q_{j-1} Q_{j+1} - Q_j^2 = 8 (-1)^(j-1), hence consecutive pole
  locations p_j = -Q_{j-1}/Q_j step in alternating directions with
  strictly shrinking step sizes.  Every pole beyond the window edge
  therefore lies inside the closed interval spanned by the next two
  poles p_{J+1}, p_{J+2} (and likewise on the negative side).

Writing d+ and d- for the distances from z to those two intervals,

    tail(J)  <=  (d+^-m + d-^-m) * Q_J^-m * 2^-m / (1 - 2^-m).

Interval endpoints are rounded outward and small multiplicative slack
absorbs float rounding, so the computed bound stays a true upper bound.
Distances <= 0 (z inside an interval hull) yield the MaxReal sentinel inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DidNotConverge, PoleProximity
from .geometry import Rect
from .sequence import (SILVER_CONJUGATE, SILVER_RATIO, SequenceTable,
                       pell_lucas, pole_ratio)

DEFAULT_TARGET_TOL = 1e-12
DEFAULT_MAX_HALF_WIDTH = 200
DEFAULT_POLE_GUARD = 1e-8

MIN_TAIL_HALF_WIDTH = 2   # containment interval needs poles J+1, J+2
_DIST_SHAVE = 1.0 - 1e-12      # deflate distances against rounding
_BOUND_SLACK = 1.0 + 1e-9      # inflate the bound against rounding
_BOUND_FLOOR = 2e-300          # stay clear of subnormal arithmetic

# Conservative float hulls of the out-of-window pole sets, keyed by J.
_hull_cache: dict[int, tuple[float, float, float, float]] = {}


@dataclass(frozen=True)
class EvalSettings:
    """Knobs for adaptive summation."""

    target_tol: float = DEFAULT_TARGET_TOL
    max_half_width: int = DEFAULT_MAX_HALF_WIDTH
    pole_guard: float = DEFAULT_POLE_GUARD

    def __post_init__(self):
        if not (self.target_tol > 0 and math.isfinite(self.target_tol)):
            raise ValueError("target_tol must be a positive finite float")
        if self.max_half_width < 4:
            raise ValueError("max_half_width must be at least 4")
        if not (self.pole_guard > 0 and math.isfinite(self.pole_guard)):
            raise ValueError("pole_guard must be a positive finite float")


@dataclass(frozen=True)
class EvalResult:
    """value = minus_part + plus_part exactly (one IEEE addition)."""

    value: complex
    minus_part: complex    # indices j <= 0
    plus_part: complex     # indices j >= 1
    tail_bound: float
    terms_used: int        # final half-width J


class _CompensatedSum:
    """Neumaier-compensated accumulator, one per real component."""

    __slots__ = ("_sr", "_cr", "_si", "_ci")

    def __init__(self):
        self._sr = self._cr = self._si = self._ci = 0.0

    def add(self, v: complex) -> None:
        x = v.real
        t = self._sr + x
        if abs(self._sr) >= abs(x):
            self._cr += (self._sr - t) + x
        else:
            self._cr += (x - t) + self._sr
        self._sr = t
        y = v.imag
        t = self._si + y
        if abs(self._si) >= abs(y):
            self._ci += (self._si - t) + y
        else:
            self._ci += (y - t) + self._si
        self._si = t

    def total(self) -> complex:
        return complex(self._sr + self._cr, self._si + self._ci)


def _require_weight(m) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"weight must be an integer >= 2, got {m!r}")


def _require_point(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"point must be finite, got {z!r}")
    return z


def term_value(j: int, z: complex, m: int,
               pole_guard: float = DEFAULT_POLE_GUARD,
               table: SequenceTable | None = None) -> complex:
    """One term (Q_j z + Q_{j-1})^(-m) in double precision.

    The reciprocal is taken first and powered by repeated multiplication,
    so huge |Q_j| underflows gracefully to 0 instead of overflowing.
    Raises PoleProximity when |Q_j z + Q_{j-1}| < pole_guard * |Q_j|,
    i.e. when z is within pole_guard of the term's pole.
    """
    _require_weight(m)
    z = _require_point(z)
    qj = pell_lucas(j, table)
    qjm1 = pell_lucas(j - 1, table)
    try:
        fj = float(qj)
        fjm1 = float(qjm1)
    except OverflowError:
        # |Q_j| beyond double range: the term is zero unless z sits
        # essentially on the pole.
        if abs(z - float(pole_ratio(j, table))) < pole_guard:
            raise PoleProximity(j, z) from None
        return 0j
    w = fj * z + fjm1
    if abs(w) < pole_guard * abs(fj):
        raise PoleProximity(j, z)
    r = 1.0 / w
    out = r
    for _ in range(m - 1):
        out *= r
    return out


def _hull(half_width: int) -> tuple[float, float, float, float]:
    cached = _hull_cache.get(half_width)
    if cached is not None:
        return cached
    pa = pole_ratio(half_width + 1)
    pb = pole_ratio(half_width + 2)
    if pb < pa:
        pa, pb = pb, pa
    na = pole_ratio(-(half_width + 1))
    nb = pole_ratio(-(half_width + 2))
    if nb < na:
        na, nb = nb, na
    # Round endpoints outward so the true hull is contained.
    hull = (
        math.nextafter(float(pa), -math.inf),
        math.nextafter(float(pb), math.inf),
        math.nextafter(float(na), -math.inf),
        math.nextafter(float(nb), math.inf),
    )
    _hull_cache[half_width] = hull
    return hull


def _dist_to_interval(z: complex, lo: float, hi: float) -> float:
    x = z.real
    if x < lo:
        dx = lo - x
    elif x > hi:
        dx = x - hi
    else:
        dx = 0.0
    return math.hypot(dx, z.imag)


def tail_bound(half_width: int, z: complex, m: int) -> float:
    """Certified upper bound on the sum of |terms| with |j| > half_width.

    Returns math.inf (the MaxReal sentinel) when z touches one of the
    pole containment intervals, i.e. when no finite bound is available.
    """
    _require_weight(m)
    z = _require_point(z)
    if half_width < MIN_TAIL_HALF_WIDTH:
        raise ValueError(
            f"tail bound needs half_width >= {MIN_TAIL_HALF_WIDTH}")
    lo_p, hi_p, lo_n, hi_n = _hull(half_width)
    d_pos = _dist_to_interval(z, lo_p, hi_p) * _DIST_SHAVE
    d_neg = _dist_to_interval(z, lo_n, hi_n) * _DIST_SHAVE
    if d_pos <= 0.0 or d_neg <= 0.0:
        return math.inf
    try:
        q_inv = 1.0 / float(pell_lucas(half_width))
    except OverflowError:
        q_inv = 0.0
    geo = 2.0 ** (-m) / (1.0 - 2.0 ** (-m))
    bound = (d_pos ** (-m) + d_neg ** (-m)) * q_inv ** m * geo * _BOUND_SLACK
    if math.isinf(bound) or math.isnan(bound):
        return math.inf
    return max(bound, _BOUND_FLOOR)


def eval_series(z: complex, m: int, settings: EvalSettings | None = None,
                table: SequenceTable | None = None,
                trace: list | None = None) -> EvalResult:
    """Adaptive evaluation of the full bilateral series at z with weight m.

    Terms are accumulated in two compensated sums (j <= 0 and j >= 1) in a
    fixed interleaved order, so results are bit-reproducible.  The window
    grows until tail_bound(J, z, m) <= target_tol; if `trace` is a list it
    receives (J, bound) pairs for every checked window.

    Raises PoleProximity when a term denominator nearly vanishes and
    DidNotConverge when the bound cannot reach the tolerance (immediately
    so within pole_guard of the accumulation points 1 +/- sqrt(2), where
    poles cluster and the bound stays at the sentinel forever).
    """
    s = settings or EvalSettings()
    _require_weight(m)
    z = _require_point(z)
    acc_dist = min(abs(z - SILVER_CONJUGATE), abs(z - SILVER_RATIO))
    if acc_dist <= s.pole_guard:
        raise DidNotConverge(0, math.inf, point=z)

    guard = s.pole_guard
    minus = _CompensatedSum()
    plus = _CompensatedSum()
    minus.add(term_value(0, z, m, guard, table))
    bound = math.inf
    half_width = 0
    for level in range(1, s.max_half_width + 1):
        plus.add(term_value(level, z, m, guard, table))
        minus.add(term_value(-level, z, m, guard, table))
        half_width = level
        if level < MIN_TAIL_HALF_WIDTH:
            continue
        bound = tail_bound(level, z, m)
        if trace is not None:
            trace.append((level, bound))
        if bound <= s.target_tol:
            break
    else:
        raise DidNotConverge(half_width, bound, point=z)

    minus_part = minus.total()
    plus_part = plus.total()
    return EvalResult(
        value=minus_part + plus_part,
        minus_part=minus_part,
        plus_part=plus_part,
        tail_bound=bound,
        terms_used=half_width,
    )


def eval_grid(region: Rect, nx: int, ny: int, m: int,
              settings: EvalSettings | None = None,
              table: SequenceTable | None = None):
    """Evaluate at every cell center of an nx-by-ny lattice over region.

    Returns a row-major list of (point, EvalResult-or-error); per-point
    PoleProximity/DidNotConverge are recorded, not raised.
    """
    if nx < 1 or ny < 1:
        raise ValueError("grid must have at least one cell per axis")
    out = []
    for z in region.cell_centers(nx, ny):
        try:
            out.append((z, eval_series(z, m, settings, table)))
        except (PoleProximity, DidNotConverge) as exc:
            out.append((z, exc))
    return out
