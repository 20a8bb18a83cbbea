"""First-order reflection-differential operator and its eigenfunction checks.

The operator acts on polynomials as

    L p = g0(x) * (p(-x) - p(x)) + g1(x) * d/dx[p(-x)],

with g0 = ((alpha+beta+1) x^2 + (c*alpha - beta) x + c) / x^2 and
g1 = 2 (x-1)(x+c) / x.  The derivative factor is the derivative of the
reflected polynomial (chain rule included); with that reading the image of
every polynomial is again a polynomial, which the implementation enforces by
exact division by x^2.  All arithmetic is carried out on coefficient vectors
and stays exact for rational inputs; its eigenfunctions are the two-interval
endpoint family produced by ``cmvpencil.maps.big_m1_recurrence``, used here
without any further affine change of variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameterError, OperatorImageError
from .maps import big_m1_recurrence
from .recurrences import MonicThreeTerm

__all__ = [
    "PolynomialCoeffs",
    "DunklReport",
    "apply_dunkl",
    "dunkl_eigenvalue",
    "verify_eigenfunction",
    "third_kind_coeffs",
    "fourth_kind_coeffs",
    "third_kind_identity_residual",
    "fourth_kind_identity_residual",
]


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(p, q):
    n = max(len(p), len(q))
    return tuple(
        (p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)
    )


def _scale(p, s):
    return tuple(s * ck for ck in p)


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] = out[i + j] + pi * qj
    return tuple(out)


def _reflect(p):
    return tuple(ck if k % 2 == 0 else -ck for k, ck in enumerate(p))


def _derivative(p):
    if len(p) == 1:
        return (0 * p[0],)
    return tuple(k * p[k] for k in range(1, len(p)))


@dataclass(frozen=True)
class PolynomialCoeffs:
    """Dense polynomial in coefficient form, index k -> coefficient of x^k.

    Coefficients may be Fractions/ints (exact mode) or floats; arithmetic
    preserves the type.  The zero polynomial is the single coefficient 0.
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = x * 0
        for ck in reversed(self.coeffs):
            acc = acc * x + ck
        return acc

    def max_abs(self) -> float:
        return max(abs(float(ck)) for ck in self.coeffs)

    def is_zero(self) -> bool:
        return all(ck == 0 for ck in self.coeffs)

    @staticmethod
    def from_three_term(rec: MonicThreeTerm, n: int) -> "PolynomialCoeffs":
        """Monic degree-n polynomial of a recurrence, as exact coefficients."""
        if n < 0:
            raise InvalidParameterError("degree must be >= 0")
        p_prev = (Fraction(1),)
        if n == 0:
            return PolynomialCoeffs(p_prev)
        p_cur = (-rec.b(0), 1)
        for k in range(1, n):
            shifted = (0, *p_cur)  # x * p_cur
            p_next = _add(
                _add(shifted, _scale(p_cur, -rec.b(k))), _scale(p_prev, -rec.u(k))
            )
            p_prev, p_cur = p_cur, p_next
        return PolynomialCoeffs(p_cur)


def apply_dunkl(alpha, beta, c, p: PolynomialCoeffs) -> PolynomialCoeffs:
    """Image of a polynomial under the reflection-differential operator.

    Forms the numerator
    N(x) = [(alpha+beta+1) x^2 + (c*alpha - beta) x + c] * (p(-x) - p(x))
           + 2 x (x-1)(x+c) * d/dx[p(-x)]
    and divides by x^2; the division must be exact.

    Raises
    ------
    OperatorImageError
        If the division leaves a remainder (the image would not be a
        polynomial), which signals invalid input or a bug.
    """
    coeffs = p.coeffs
    g_num = (c, c * alpha - beta, alpha + beta + 1)
    reflected = _reflect(coeffs)
    diff = _add(reflected, _scale(coeffs, -1))
    term_reflection = _mul(g_num, diff)
    # 2 x (x - 1)(x + c) = 2x^3 + 2(c-1)x^2 - 2c x
    cubic = (0, -2 * c, 2 * (c - 1), 2)
    term_derivative = _mul(cubic, _derivative(reflected))
    numerator = _add(term_reflection, term_derivative)
    remainder = numerator[:2] if len(numerator) >= 2 else numerator
    if any(r != 0 for r in remainder):
        exact = all(not isinstance(r, float) for r in remainder)
        if exact or max(abs(float(r)) for r in remainder) > 1e-9 * max(
            1.0, p.max_abs()
        ):
            raise OperatorImageError(remainder)
    quotient = numerator[2:] if len(numerator) > 2 else (0 * coeffs[0],)
    return PolynomialCoeffs(quotient)


def dunkl_eigenvalue(n: int, alpha, beta):
    """Eigenvalue on the degree-n eigenfunction: 2n for even n,
    -2*(alpha + beta + n + 1) for odd n."""
    if n < 0:
        raise InvalidParameterError("degree must be >= 0")
    if n % 2 == 0:
        return 2 * n
    return -2 * (alpha + beta + n + 1)


@dataclass(frozen=True)
class DunklReport:
    """Residual report of one eigenfunction verification."""

    n: int
    alpha: object
    beta: object
    c: object
    eigenvalue: object
    residual: PolynomialCoeffs
    max_abs_residual: float
    exact: bool

    @property
    def passed(self) -> bool:
        return self.residual.is_zero() if self.exact else self.max_abs_residual <= 1e-9


def verify_eigenfunction(alpha, beta, c, n: int) -> DunklReport:
    """Coefficientwise residual of L P_n - eigenvalue * P_n.

    P_n is the monic degree-n polynomial of ``big_m1_recurrence(alpha, beta,
    c)``, used directly in the operator variable (the identification needs no
    further affine change; the scale bookkeeping lives inside the recurrence
    construction).  With rational inputs the residual is exactly zero, never
    merely small.
    """
    rec = big_m1_recurrence(alpha, beta, c)
    p = PolynomialCoeffs.from_three_term(rec, n)
    image = apply_dunkl(alpha, beta, c, p)
    eig = dunkl_eigenvalue(n, alpha, beta)
    residual = PolynomialCoeffs(_add(image.coeffs, _scale(p.coeffs, -eig)))
    exact = all(
        not isinstance(v, float)
        for v in (alpha, beta, c, *p.coeffs, *image.coeffs)
    )
    return DunklReport(
        n=n,
        alpha=alpha,
        beta=beta,
        c=c,
        eigenvalue=eig,
        residual=residual,
        max_abs_residual=0.0 if residual.is_zero() else residual.max_abs(),
        exact=exact,
    )


def third_kind_coeffs(n: int) -> PolynomialCoeffs:
    """Third-kind Chebyshev polynomial on [-1, 1], exact coefficients.

    V_0 = 1, V_1 = 2x - 1, V_{n+1} = 2x V_n - V_{n-1}.
    """
    return _chebyshev(n, Fraction(-1))


def fourth_kind_coeffs(n: int) -> PolynomialCoeffs:
    """Fourth-kind Chebyshev polynomial on [-1, 1]: W_1 = 2x + 1."""
    return _chebyshev(n, Fraction(1))


def _chebyshev(n: int, const) -> PolynomialCoeffs:
    if n < 0:
        raise InvalidParameterError("degree must be >= 0")
    p_prev = (Fraction(1),)
    if n == 0:
        return PolynomialCoeffs(p_prev)
    p_cur = (const, Fraction(2))
    for _ in range(1, n):
        doubled = (0, *_scale(p_cur, 2))
        p_prev, p_cur = p_cur, _add(doubled, _scale(p_prev, -1))
    return PolynomialCoeffs(p_cur)


def _first_order_identity_residual(p: PolynomialCoeffs, edge, n: int) -> PolynomialCoeffs:
    # residual of 2(x - edge_sign) * d/dx[p(-x)] + p(-x) - (-1)^n (2n+1) p(x)
    reflected = _reflect(p.coeffs)
    linear = (edge, Fraction(2))  # 2x + edge
    lhs = _add(_mul(linear, _derivative(reflected)), reflected)
    factor = (2 * n + 1) * (1 if n % 2 == 0 else -1)
    return PolynomialCoeffs(_add(lhs, _scale(p.coeffs, -factor)))


def third_kind_identity_residual(n: int) -> PolynomialCoeffs:
    """Residual of the third-kind eigenidentity
    2(x-1) d/dx[V_n(-x)] + V_n(-x) = (-1)^n (2n+1) V_n(x); zero expected."""
    return _first_order_identity_residual(third_kind_coeffs(n), Fraction(-2), n)


def fourth_kind_identity_residual(n: int) -> PolynomialCoeffs:
    """Residual of the fourth-kind eigenidentity
    2(x+1) d/dx[W_n(-x)] + W_n(-x) = (-1)^n (2n+1) W_n(x); zero expected."""
    return _first_order_identity_residual(fourth_kind_coeffs(n), Fraction(2), n)
