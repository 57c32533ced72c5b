"""Pell-Lucas numbers over signed indices, memoized in exact integer arithmetic.

The sequence satisfies Q_n = 2 Q_{n-1} + Q_{n-2} with Q_0 = Q_1 = 2 and is
extended backward through Q_{n-2} = Q_n - 2 Q_{n-1}, giving
... 34, -14, 6, -2, 2, 2, 6, 14, 34, ...  and Q_{-n} = (-1)^n Q_n.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import IndexCapExceeded, InvalidRange

DEFAULT_INDEX_CAP = 100_000

# Limits of the pole ratios -Q_{j-1}/Q_j as j -> +/- infinity, i.e. the two
# roots of x^2 - 2x - 1.  These are the correctly rounded doubles; note that
# the naive 1 - math.sqrt(2) lands two ulps below the true 1 - sqrt(2)
# (tests certify both literals by exact rational comparison against both
# neighboring doubles).
SILVER_CONJUGATE = -0.41421356237309503  # 1 - sqrt(2)
SILVER_RATIO = 2.414213562373095         # 1 + sqrt(2)


class SequenceTable:
    """Append-only table of Q_n over a contiguous signed index range.

    Entries are immutable once computed.  Growth happens under a lock and
    publishes values before widening the advertised range, so concurrent
    readers always see a consistent table.
    """

    def __init__(self, index_cap: int = DEFAULT_INDEX_CAP):
        if index_cap < 1:
            raise ValueError("index_cap must be at least 1")
        self.index_cap = index_cap
        self._values: dict[int, int] = {0: 2, 1: 2}
        self._lo = 0
        self._hi = 1
        self._lock = threading.Lock()

    @property
    def computed_range(self) -> tuple[int, int]:
        return (self._lo, self._hi)

    def value(self, n: int) -> int:
        if abs(n) > self.index_cap:
            raise IndexCapExceeded(n, self.index_cap)
        if self._lo <= n <= self._hi:  # lock-free fast path; entries never change
            return self._values[n]
        with self._lock:
            self._grow_to(n)
        return self._values[n]

    def _grow_to(self, n: int) -> None:
        vals = self._values
        while self._hi < n:
            k = self._hi + 1
            vals[k] = 2 * vals[k - 1] + vals[k - 2]
            self._hi = k
        while self._lo > n:
            k = self._lo - 1
            vals[k] = vals[k + 2] - 2 * vals[k + 1]
            self._lo = k

    def range(self, lo: int, hi: int) -> list[int]:
        if lo > hi:
            raise InvalidRange(f"lo={lo} exceeds hi={hi}")
        self.value(lo)
        self.value(hi)
        return [self._values[n] for n in range(lo, hi + 1)]

    def pole_ratio(self, j: int) -> Fraction:
        """Location -Q_{j-1}/Q_j of the real pole contributed by term j."""
        return Fraction(-self.value(j - 1), self.value(j))


_DEFAULT_TABLE = SequenceTable()


def pell_lucas(n: int, table: SequenceTable | None = None) -> int:
    """Q_n for any signed index within the cap."""
    return (table or _DEFAULT_TABLE).value(n)


def pell_lucas_range(lo: int, hi: int,
                     table: SequenceTable | None = None) -> list[int]:
    """[Q_lo, ..., Q_hi] inclusive; raises InvalidRange if lo > hi."""
    return (table or _DEFAULT_TABLE).range(lo, hi)


def pole_ratio(j: int, table: SequenceTable | None = None) -> Fraction:
    """-Q_{j-1}/Q_j in lowest terms (Fraction normalizes automatically)."""
    return (table or _DEFAULT_TABLE).pole_ratio(j)
