"""Monic Chebyshev polynomials T_d, normalized by T_d(z + 1/z) = z^d + z^-d.

T_1 = x, T_2 = x^2 - 2, and T_d = x*T_{d-1} - T_{d-2}.  These are monic with
integer coefficients, satisfy the nesting identity T_{nm} = T_n(T_m), and are
odd/even functions according to the parity of d.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import IntPoly

# Coefficient evaluation is used below this degree; past it cheb_eval switches
# to nesting on the factorization of d (or a matrix power for large primes).
_COEFF_DEGREE_CAP = 64


class ChebPoly:
    """Degree-d monic Chebyshev polynomial with its coefficient form."""

    __slots__ = ("d", "poly")

    def __init__(self, d: int, poly: IntPoly):
        if d < 1:
            raise ValueError("degree must be >= 1 (T_0 convention excluded)")
        if poly.degree != d or poly.coeffs[-1] != 1:
            raise ValueError("not a monic degree-d polynomial")
        # Parity: T_d is an odd function for odd d, even for even d.
        for i, c in enumerate(poly.coeffs):
            if c != 0 and i % 2 != d % 2:
                raise ValueError("parity invariant violated")
        self.d = d
        self.poly = poly

    def __call__(self, x):
        return cheb_eval(self.d, x)

    def __repr__(self):
        return f"ChebPoly(d={self.d}, {self.poly!r})"


@lru_cache(maxsize=None)
def _cheb_coeffs(d: int) -> IntPoly:
    if d == 1:
        return IntPoly([0, 1])
    if d == 2:
        return IntPoly([-2, 0, 1])
    prev2, prev1 = _cheb_coeffs(d - 2), _cheb_coeffs(d - 1)
    return IntPoly([0, 1]) * prev1 - prev2


def cheb(d: int) -> ChebPoly:
    """The monic degree-d Chebyshev polynomial."""
    if d < 1:
        raise ValueError("degree must be >= 1 (T_0 convention excluded)")
    return ChebPoly(d, _cheb_coeffs(d))


def _eval_recurrence(d: int, x):
    # T_d via the two-term recurrence, linear in d; used as the second route
    # for the dual-path agreement check.
    if d == 1:
        return x
    a, b = x, x * x - 2  # T_1, T_2
    for _ in range(d - 2):
        a, b = b, x * b - a
    return b


def _smallest_factor(d: int) -> int:
    f = 2
    while f * f <= d:
        if d % f == 0:
            return f
        f += 1
    return d


def cheb_eval(d: int, x):
    """T_d(x), exactly, for rational or integer x.

    Dual path: Horner on the coefficients for d <= 64 (checked against the
    recurrence), nesting T_{ab} = T_a(T_b) on the factorization beyond, with
    a logarithmic matrix-power fallback for large prime d.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if isinstance(x, int):
        x = Fraction(x)
    if d <= _COEFF_DEGREE_CAP:
        horner = _cheb_coeffs(d)(x)
        assert horner == _eval_recurrence(d, x), "Chebyshev dual-path mismatch"
        return horner
    f = _smallest_factor(d)
    if f < d:
        return cheb_eval(f, cheb_eval(d // f, x))
    return _eval_matrix_power(d, x)


def _eval_matrix_power(d: int, x):
    # (T_d, T_{d-1}) from [[x, -1], [1, 0]]^(d-1) applied to (T_1, T_0=2).
    m = ((x, Fraction(-1)), (Fraction(1), Fraction(0)))
    r = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    e = d - 1

    def matmul(a, b):
        return (
            (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
        )

    while e:
        if e & 1:
            r = matmul(r, m)
        m = matmul(m, m)
        e >>= 1
    return r[0][0] * x + r[0][1] * 2


def special_values(d: int) -> dict[Fraction, Fraction]:
    """Values of T_d on {0, +-1, +-2} for d not divisible by 3.

    Odd d acts as the identity on the set; d = 2 mod 4 sends 0 to -2, +-2 to
    2 and +-1 to -1; d = 0 mod 4 sends both 0 and +-2 to 2 and +-1 to -1.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d % 3 == 0:
        raise ValueError("values at +-1 differ when 3 | d; table not applicable")
    pts = [Fraction(v) for v in (0, 1, -1, 2, -2)]
    if d % 2 == 1:
        table = {v: v for v in pts}
    elif d % 4 == 2:
        table = {Fraction(0): Fraction(-2), Fraction(1): Fraction(-1),
                 Fraction(-1): Fraction(-1), Fraction(2): Fraction(2),
                 Fraction(-2): Fraction(2)}
    else:
        table = {Fraction(0): Fraction(2), Fraction(1): Fraction(-1),
                 Fraction(-1): Fraction(-1), Fraction(2): Fraction(2),
                 Fraction(-2): Fraction(2)}
    for v, expected in table.items():
        assert cheb_eval(d, v) == expected, "special-value table mismatch"
    return table


def growth_floor(d: int, x) -> bool:
    """Verify |T_d(x)| >= 7 for |x| >= 3, d >= 2, by direct evaluation.

    This is the bound that confines integral points on Chebyshev curves to
    {0, +-1, +-2}: |T_2(3)| = 7 and |T_n| is monotone in n for |x| >= 2.
    """
    x = Fraction(x)
    if d < 2:
        raise ValueError("d must be >= 2")
    if abs(x) < 3:
        raise ValueError("growth floor applies to |x| >= 3 only")
    return abs(cheb_eval(d, x)) >= 7
