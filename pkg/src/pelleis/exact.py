"""Exact rational-function arithmetic and finite-window identity checks.

Everything here runs over Fraction coefficients, so equality means
coefficient-by-coefficient equality of canonical forms: numerator and
denominator coprime, denominator monic.

The identity checks exploit that each term 1/(Q_j z + Q_{j-1})^m is carried
to another term (up to the stated power of z) by the argument map of every
functional equation.  Over a symmetric window |j| <= J the reindexing is a
bijection for the reflection and shifts the window by one slot for the
other three equations, leaving one extra term at each edge.  Those edge
terms are returned explicitly; residual minus boundary must cancel to the
zero rational function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .equations import EquationId
from .errors import DegreeCapExceeded
from .sequence import pell_lucas

DEFAULT_DEGREE_CAP = 400
WINDOW_HALF_WIDTH_GUARD = 8
WINDOW_WEIGHT_GUARD = 6

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Polynomial:
    """Dense univariate polynomial, Fraction coefficients in ascending order.

    Trailing zero coefficients are stripped; the zero polynomial has empty
    coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(tuple(a * c for a in self.coeffs))

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        q = [_ZERO] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            factor = rem[k + dd] / lead
            if factor:
                q[k] = factor
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= factor * c
        return Polynomial(q), Polynomial(rem[:dd] if dd > 0 else ())

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction x, complex otherwise."""
        if isinstance(x, (int, Fraction)):
            acc = _ZERO
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial((v,))
    raise TypeError(f"cannot treat {type(v).__name__} as a polynomial")


def _int_coeffs(p: Polynomial) -> list[int]:
    """Primitive integer coefficient list (positive leading coefficient)."""
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _int_rem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of a by b over Z, scaled freely; content is stripped later."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            return r
        shift = len(r) - 1 - db
        top = r[-1]
        g = math.gcd(top, lb)
        scale = lb // g
        mult = top // g
        if scale != 1:
            r = [c * scale for c in r]
        for i in range(db + 1):
            r[shift + i] -= mult * b[i]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via a primitive remainder sequence over the integers.

    Fraction-based Euclid suffers badly from coefficient blowup at the
    degrees window sums reach; integer remainders with content stripping
    keep the growth tame.
    """
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    A, B = _int_coeffs(a), _int_coeffs(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _int_rem(A, B)
        if R:
            g = 0
            for c in R:
                g = math.gcd(g, c)
            if R[-1] < 0:
                g = -g
            R = [c // g for c in R]
        A, B = B, R
    lead = Fraction(A[-1])
    return Polynomial([Fraction(c) / lead for c in A])


class RationalFunction:
    """Quotient of polynomials kept in canonical form.

    Canonical means numerator and denominator coprime and the denominator
    monic, so __eq__ is plain coefficient comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Polynomial((1,)) if den is None else _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero:
            self.num = Polynomial()
            self.den = Polynomial((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial())

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Polynomial.x())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _as_rf(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def evaluate(self, x):
        """Exact Fraction value at a rational point, complex otherwise.

        Raises ZeroDivisionError at a pole of the canonical denominator.
        """
        n = self.num.evaluate(x)
        d = self.den.evaluate(x)
        return n / d

    def __repr__(self):
        return (f"RationalFunction({list(self.num.coeffs)!r}, "
                f"{list(self.den.coeffs)!r})")


def _as_rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, (int, Fraction, Polynomial)):
        return RationalFunction(v)
    raise TypeError(f"cannot treat {type(v).__name__} as a rational function")


class MobiusMap:
    """Invertible map z -> (a z + b)/(c z + d) with rational entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("degenerate map: zero determinant")

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """Map acting as self after other: (self.compose(other))(z) = self(other(z))."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        # Equal as maps: entries may differ by a common nonzero scale (of
        # either sign), which moves all six 2x2 cross products to zero.
        return (self.a * other.b == self.b * other.a
                and self.a * other.c == self.c * other.a
                and self.a * other.d == self.d * other.a
                and self.b * other.c == self.c * other.b
                and self.b * other.d == self.d * other.b
                and self.c * other.d == self.d * other.c)

    def __hash__(self):
        raise TypeError("MobiusMap equality is projective; not hashable")

    def __repr__(self):
        return f"MobiusMap({self.a}, {self.b}, {self.c}, {self.d})"


RECIPROCAL_MAP = MobiusMap(0, 1, 1, 0)


def term_rf(j: int, m: int) -> RationalFunction:
    """The exact term 1/(Q_j z + Q_{j-1})^m as a canonical rational function."""
    if m < 1:
        raise ValueError("term power must be at least 1")
    lin = Polynomial((pell_lucas(j - 1), pell_lucas(j)))
    return RationalFunction(1, lin ** m)


def window_sum(half_width: int, m: int,
               degree_cap: int = DEFAULT_DEGREE_CAP) -> RationalFunction:
    """Sum of term_rf(j, m) over |j| <= half_width, combined exactly.

    The canonical denominator has degree (2*half_width + 1) * m because the
    term denominators are pairwise coprime; the cap is checked up front.
    """
    if half_width < 1 or m < 1:
        raise ValueError("window needs half_width >= 1 and m >= 1")
    if half_width > WINDOW_HALF_WIDTH_GUARD or m > WINDOW_WEIGHT_GUARD:
        raise ValueError(
            f"window guard: half_width <= {WINDOW_HALF_WIDTH_GUARD} "
            f"and m <= {WINDOW_WEIGHT_GUARD}")
    if (2 * half_width + 1) * m > degree_cap:
        raise DegreeCapExceeded(
            f"window denominator degree {(2 * half_width + 1) * m} "
            f"exceeds cap {degree_cap}")
    total = RationalFunction.zero()
    for j in range(-half_width, half_width + 1):
        total = total + term_rf(j, m)
    return total


def substitute(f: RationalFunction, t: MobiusMap) -> RationalFunction:
    """f composed with t, i.e. z -> f((a z + b)/(c z + d)), exactly.

    Both parts of f are cleared by the same power of (c z + d), so the
    result is again a ratio of polynomials.
    """
    if f.is_zero:
        return RationalFunction.zero()
    nt = Polynomial((t.b, t.a))
    dt = Polynomial((t.d, t.c))
    p = max(f.num.degree, f.den.degree)
    npow = [Polynomial((1,))]
    dpow = [Polynomial((1,))]
    for _ in range(p):
        npow.append(npow[-1] * nt)
        dpow.append(dpow[-1] * dt)

    def clear(poly: Polynomial) -> Polynomial:
        out = Polynomial()
        for i, c in enumerate(poly.coeffs):
            if c:
                out = out + (npow[i] * dpow[p - i]).scale(c)
        return out

    return RationalFunction(clear(f.num), clear(f.den))


@dataclass
class ExactIdentityReport:
    """Outcome of a finite-window functional-equation check."""

    equation: EquationId
    half_width: int
    weight: int
    residual: RationalFunction
    boundary_terms: list[RationalFunction]
    defect: RationalFunction

    @property
    def holds(self) -> bool:
        return self.defect.is_zero

    @property
    def verdict(self) -> str:
        if self.residual.is_zero and not self.boundary_terms:
            return "EXACT-ZERO"
        if self.defect.is_zero:
            return "EXACT-ZERO-AFTER-BOUNDARY"
        return "NONZERO"


def verify_identity_exact(equation: EquationId, half_width: int, k: int,
                          degree_cap: int = DEFAULT_DEGREE_CAP
                          ) -> ExactIdentityReport:
    """Check one functional equation on the window |j| <= half_width, weight 2k.

    Returns the residual lhs - rhs, the boundary terms produced by the
    window reindexing, and the defect residual - sum(boundary).  The defect
    is the zero rational function exactly when the identity holds.
    """
    if half_width < 2:
        raise ValueError("identity check needs half_width >= 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    m = 2 * k
    if (2 * half_width + 3) * m > degree_cap:
        raise DegreeCapExceeded(
            f"identity check at half_width {half_width}, weight {m} "
            f"needs denominator degree up to {(2 * half_width + 3) * m}, "
            f"cap is {degree_cap}")

    window = window_sum(half_width, m, degree_cap=degree_cap)
    lhs = substitute(window, MobiusMap(*equation.lhs_coeffs))

    z_pow = RationalFunction(Polynomial.x() ** m)
    if equation is EquationId.REFLECTION:
        rhs = window
        boundary: list[RationalFunction] = []
    elif equation is EquationId.INVERSION:
        rhs = z_pow * window
        boundary = [
            z_pow * term_rf(half_width + 1, m),
            -(z_pow * term_rf(-half_width, m)),
        ]
    else:  # SHIFT and NEGATION share the right side z^(-2k) S(1/z)
        z_neg = RationalFunction(1, Polynomial.x() ** m)
        rhs = z_neg * substitute(window, RECIPROCAL_MAP)
        boundary = [
            z_neg * substitute(term_rf(half_width + 1, m), RECIPROCAL_MAP),
            -(z_neg * substitute(term_rf(-half_width, m), RECIPROCAL_MAP)),
        ]

    residual = lhs - rhs
    defect = residual
    for b in boundary:
        defect = defect - b
    return ExactIdentityReport(equation, half_width, m, residual,
                               boundary, defect)
