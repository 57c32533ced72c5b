"""Numeric residuals of the functional equations on points and grids."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .analysis import classify
from .equations import EquationId
from .errors import EmptyGrid, PelleisError, ZeroArgument
from .evaluator import EvalSettings, eval_series
from .geometry import Rect
from .sequence import SequenceTable

DEFAULT_K_CAP = 8  # keeps |z|^(2k) within double range on the usual grids
_REL_FLOOR = 1e-300


@dataclass(frozen=True)
class ResidualReport:
    point: complex
    k: int
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    lhs_tail: float
    rhs_tail: float


@dataclass
class GridSummary:
    equation: EquationId
    k: int
    points_tested: int
    points_skipped: int
    points_failed: int
    max_rel_residual: float
    worst_point: complex | None
    reports: list[ResidualReport] = field(default_factory=list)
    failures: list[tuple[complex, PelleisError]] = field(default_factory=list)


def _require_k(k, k_cap: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}")
    if k > k_cap:
        raise ValueError(f"k={k} above cap {k_cap}")


def _pow_int(base: complex, n: int) -> complex:
    out = 1.0 + 0.0j
    for _ in range(n):
        out *= base
    return out


def _arguments(equation: EquationId, z: complex) -> tuple[complex, complex]:
    """(left-side argument, right-side argument) of the equation at z."""
    if equation.needs_nonzero_argument and z == 0:
        raise ZeroArgument(f"{equation.value} undefined at z = 0")
    a, b, c, d = equation.lhs_coeffs
    lhs_z = (a * z + b) / (c * z + d)
    rhs_z = 1 / z if equation.rhs_reciprocal else z
    return lhs_z, rhs_z


_REFINE_ROUNDS = 2
_REFINE_TOL_FLOOR = 1e-250


def residual(equation: EquationId, z: complex, k: int,
             settings: EvalSettings | None = None,
             k_cap: int = DEFAULT_K_CAP,
             table: SequenceTable | None = None) -> ResidualReport:
    """Evaluate both sides of the equation at z for weight 2k.

    target_tol is treated relative to the side magnitudes: after a first
    pass, both sides are re-evaluated with the tolerance scaled down to
    max(|lhs|, |rhs|) * target_tol, so the relative residual reflects the
    identity rather than the flat truncation error.  Tail bounds stay
    certified throughout.  The prefactor z^(+-2k) is applied to the right
    side by repeated multiplication and scales the right tail accordingly.
    Evaluation errors carry side="lhs" or side="rhs".  Both arguments
    should classify REGULAR; every term is re-guarded during summation.
    """
    _require_k(k, k_cap)
    z = complex(z)
    m = 2 * k
    lhs_z, rhs_z = _arguments(equation, z)
    base = settings or EvalSettings()

    sign = equation.prefactor_sign
    if sign == 0:
        prefactor = 1.0 + 0.0j
    else:
        prefactor = _pow_int(z if sign > 0 else 1 / z, m)
    pref_mag = abs(prefactor)

    lhs_settings = rhs_settings = base
    for _ in range(_REFINE_ROUNDS + 1):
        try:
            left = eval_series(lhs_z, m, lhs_settings, table)
        except PelleisError as exc:
            exc.side = "lhs"
            raise
        try:
            right = eval_series(rhs_z, m, rhs_settings, table)
        except PelleisError as exc:
            exc.side = "rhs"
            raise
        rhs = prefactor * right.value
        rhs_tail = pref_mag * right.tail_bound
        scale = max(abs(left.value), abs(rhs))
        if (scale < _REFINE_TOL_FLOOR
                or left.tail_bound + rhs_tail <= 4.0 * scale * base.target_tol):
            break
        lhs_tol = max(scale * base.target_tol, _REFINE_TOL_FLOOR)
        rhs_tol = max(scale * base.target_tol / max(pref_mag, 1e-300),
                      _REFINE_TOL_FLOOR)
        if (lhs_tol >= lhs_settings.target_tol
                and rhs_tol >= rhs_settings.target_tol):
            break  # no tighter than what we already have
        lhs_settings = EvalSettings(min(lhs_tol, lhs_settings.target_tol),
                                    base.max_half_width, base.pole_guard)
        rhs_settings = EvalSettings(min(rhs_tol, rhs_settings.target_tol),
                                    base.max_half_width, base.pole_guard)

    abs_res = abs(left.value - rhs)
    rel_res = abs_res / max(abs(left.value), abs(rhs), _REL_FLOOR)
    return ResidualReport(
        point=z, k=k, lhs=left.value, rhs=rhs,
        abs_residual=abs_res, rel_residual=rel_res,
        lhs_tail=left.tail_bound, rhs_tail=rhs_tail,
    )


def verify_grid(equation: EquationId, region: Rect, nx: int, ny: int, k: int,
                settings: EvalSettings | None = None,
                k_cap: int = DEFAULT_K_CAP,
                table: SequenceTable | None = None) -> GridSummary:
    """Residuals at every cell center whose arguments both classify REGULAR.

    Non-regular points (and z = 0 where the equation needs 1/z) are
    skipped; evaluation failures at regular points are recorded as
    failures.  Raises EmptyGrid when no point could be tested.
    """
    _require_k(k, k_cap)
    summary = GridSummary(equation, k, 0, 0, 0, 0.0, None)
    for z in region.cell_centers(nx, ny):
        try:
            lhs_z, rhs_z = _arguments(equation, z)
        except ZeroArgument:
            summary.points_skipped += 1
            continue
        if not (classify(lhs_z).is_regular and classify(rhs_z).is_regular):
            summary.points_skipped += 1
            continue
        try:
            report = residual(equation, z, k, settings, k_cap, table)
        except PelleisError as exc:
            summary.points_failed += 1
            summary.failures.append((z, exc))
            continue
        summary.points_tested += 1
        summary.reports.append(report)
        if report.rel_residual > summary.max_rel_residual:
            summary.max_rel_residual = report.rel_residual
            summary.worst_point = z
    if summary.points_tested == 0:
        raise EmptyGrid(
            f"no testable points for {equation.value} on the given grid")
    return summary
