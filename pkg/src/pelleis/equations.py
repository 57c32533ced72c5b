"""The four functional-equation forms satisfied by the even-weight series.

Writing S_m(z) for the bilateral sum of (Q_j z + Q_{j-1})^(-m) and m = 2k:

    inversion:   S(-1/z)  =  z^(2k)  * S(z)
    reflection:  S(2-z)   =            S(z)
    shift:       S(z+2)   =  z^(-2k) * S(1/z)
    negation:    S(-z)    =  z^(-2k) * S(1/z)

Each left side is S at a Mobius image of z; each right side is S at z or
1/z times a power of z.  Both the numeric and the exact checkers read the
equation shape from here.
"""

from enum import Enum

_LHS_COEFFS = {
    "inversion": (0, -1, 1, 0),   # -1/z
    "reflection": (-1, 2, 0, 1),  # 2 - z
    "shift": (1, 2, 0, 1),        # z + 2
    "negation": (-1, 0, 0, 1),    # -z
}

_RHS_RECIPROCAL = {
    "inversion": False,
    "reflection": False,
    "shift": True,
    "negation": True,
}

_PREFACTOR_SIGN = {
    "inversion": 1,
    "reflection": 0,
    "shift": -1,
    "negation": -1,
}


class EquationId(Enum):
    INVERSION = "inversion"
    REFLECTION = "reflection"
    SHIFT = "shift"
    NEGATION = "negation"

    @property
    def lhs_coeffs(self) -> tuple[int, int, int, int]:
        """(a, b, c, d) of the left-side argument map (a z + b)/(c z + d)."""
        return _LHS_COEFFS[self.value]

    @property
    def rhs_reciprocal(self) -> bool:
        """True when the right side evaluates the series at 1/z."""
        return _RHS_RECIPROCAL[self.value]

    @property
    def prefactor_sign(self) -> int:
        """Sign s of the right-side prefactor z^(s*2k); 0 means no prefactor."""
        return _PREFACTOR_SIGN[self.value]

    @property
    def needs_nonzero_argument(self) -> bool:
        """True when either side of the equation involves 1/z or -1/z."""
        return self.rhs_reciprocal or self is EquationId.INVERSION
