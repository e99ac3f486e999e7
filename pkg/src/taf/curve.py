"""The genus-2 curve family y^2 = x(x^4 - 2*alpha*x^2 + beta) and its charts.

The affine chart at infinity is v^2 = u(1 - 2*alpha*u^2 + beta*u^4) via
x = 1/u, y = v/u^3; the origin of that chart is the branch point at
infinity.  Near it the curve is a graph u = u(v), the distinguished
differential du/2v expands as dv/(1 - 6*alpha*u^2 + 5*beta*u^4), and
integrating gives the curve logarithm.  A second local parameter t with
u = t^2, v = t*sqrt(1 - 2*alpha*t^4 + beta*t^8) produces the Legendre form
of the same logarithm (see `legendre.log_phiL`).

Symbolic identity checks (curve automorphisms, the quintic derivative
identity) run in a small sympy layer local to this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .exact import ALPHA, BETA, GradedPoly, InputError, ONE, ZERO
from .series import TruncSeries, compose, integrate, revert, series_div, sqrt_unit

# Smoothness of the quintic model requires beta*(alpha^2 - beta) != 0.


def smoothness_violation(a0: Fraction, b0: Fraction) -> str | None:
    """Name of the vanishing smoothness factor, or None if smooth."""
    if b0 == 0:
        return "beta"
    if a0 * a0 - b0 == 0:
        return "alpha^2 - beta"
    return None


# ---------------------------------------------------------------------------
# Chart solve and logarithms
# ---------------------------------------------------------------------------


def _quintic_value(u: TruncSeries) -> TruncSeries:
    """u - 2*alpha*u^3 + beta*u^5 evaluated on a series."""
    u2 = u * u
    u3 = u2 * u
    u5 = u3 * u2
    return u + u3.scale(ALPHA.scale(-2)) + u5.scale(BETA)


def _quintic_derivative(u: TruncSeries) -> TruncSeries:
    """1 - 6*alpha*u^2 + 5*beta*u^4 evaluated on a series."""
    n = u.order
    u2 = u * u
    u4 = u2 * u2
    return TruncSeries.one(n) + u2.scale(ALPHA.scale(-6)) + u4.scale(BETA.scale(5))


def quintic_derivative_precheck() -> bool:
    """Symbolic sanity: 1 - 6au^2 + 5bu^4 = d/du [u(1 - 2au^2 + bu^4)]."""
    a, b, u = sp.symbols("a b u")
    lhs = 1 - 6 * a * u**2 + 5 * b * u**4
    rhs = sp.diff(u * (1 - 2 * a * u**2 + b * u**4), u)
    return sp.expand(lhs - rhs) == 0


def solve_u_of_v(N: int) -> TruncSeries:
    """The unique series u(v) with u - 2*alpha*u^3 + beta*u^5 = v^2 through
    order N; only exponents = 2 (mod 4) occur.

    Newton iteration on the quintic, seeded at u = v^2.
    """
    if N < 2:
        raise InputError("order must be >= 2")
    v_squared = TruncSeries.monomial(ONE, 2, N)
    u = v_squared
    while True:
        residual = _quintic_value(u) - v_squared
        if residual.is_zero():
            break
        u = u - series_div(residual, _quintic_derivative(u))
    return u


def log_phi(N: int) -> TruncSeries:
    """The curve logarithm: integral of dv/(1 - 6*alpha*u(v)^2 + 5*beta*u(v)^4)
    through order N; odd-4 with linear coefficient 1."""
    if N < 1:
        raise InputError("order must be >= 1")
    if N < 2:
        return TruncSeries.identity(N)
    u = solve_u_of_v(N - 1)
    integrand = series_div(TruncSeries.one(N - 1), _quintic_derivative(u))
    return integrate(integrand)


def v_of_t(N: int) -> TruncSeries:
    """v(t) = t * (1 - 2*alpha*t^4 + beta*t^8)^(1/2) through order N; all
    coefficient denominators are powers of 2."""
    if N < 1:
        raise InputError("order must be >= 1")
    base = TruncSeries(
        {
            0: ONE,
            4: ALPHA.scale(-2),
            8: BETA,
        }.get(k, ZERO)
        for k in range(N)
    )
    root = sqrt_unit(TruncSeries(base.coeffs, N - 1))
    return TruncSeries([ZERO] + root.coeffs, N)


def t_of_v(N: int) -> TruncSeries:
    """Compositional inverse of v(t): t(v) = v + alpha*v^5 + O(v^9)."""
    return revert(v_of_t(N))


def differential_check(N: int) -> bool:
    """Exact identity du(t)/2v(t) = dt/sqrt(1 - 2*alpha*t^4 + beta*t^8)
    through order N, checked cross-multiplied so no series inverse of the
    odd v(t) is needed: 2t * sqrt(..) = 2v(t)."""
    if N < 1:
        raise InputError("order must be >= 1")
    return _differential_residual(v_of_t(N), N).is_zero()


def _differential_residual(v: TruncSeries, N: int) -> TruncSeries:
    base = TruncSeries(
        [
            {0: ONE, 4: ALPHA.scale(-2), 8: BETA}.get(k, ZERO)
            for k in range(N)
        ],
        N - 1,
    )
    root = TruncSeries([ZERO] + sqrt_unit(base).coeffs, N)
    # du/dt = 2t, so the identity is t * sqrt(..) = v(t).
    t_times_root = root  # sqrt shifted by one power of t
    return t_times_root - v


def on_curve_check(N: int) -> bool:
    """The parametrization (u, v) = (t^2, v(t)) satisfies the chart equation
    v^2 = u(1 - 2*alpha*u^2 + beta*u^4) exactly through order 2N."""
    order = 2 * N
    v = v_of_t(order)
    u = TruncSeries.monomial(ONE, 2, order)
    lhs = v * v
    rhs = _quintic_value(u)
    return (lhs - rhs).truncate(order).is_zero()


def solve_residual_check(N: int) -> bool:
    """Defining property of u(v): substituting back into the chart equation
    vanishes identically through order N."""
    u = solve_u_of_v(N)
    v_squared = TruncSeries.monomial(ONE, 2, N)
    return (_quintic_value(u) - v_squared).is_zero()


def log_phi_consistency(N: int) -> bool:
    """log_phi = log_phiL o t(v) exactly through order N (the isomorphism of
    the two parametrizations)."""
    from .legendre import log_phiL

    return log_phi(N) == compose(log_phiL(N), t_of_v(N))


# ---------------------------------------------------------------------------
# Normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """Rescaled model of a smooth member of the family."""

    kind: str  # "bolza" or "generic"
    j: Fraction | None
    equation: str


def curve_normal_form(a0: Fraction | int, b0: Fraction | int) -> NormalForm:
    """Normal form of the member at rational (alpha, beta) = (a0, b0):
    the Bolza curve Y^2 = X^5 + X at a0 = 0, otherwise
    Y^2 = X^5 + X^3 + j*X with j = b0/(4*a0^2), j not in {0, 1/4}."""
    a0, b0 = Fraction(a0), Fraction(b0)
    bad = smoothness_violation(a0, b0)
    if bad is not None:
        raise InputError(f"singular member: {bad} = 0")
    if a0 == 0:
        return NormalForm("bolza", None, "Y^2 = X^5 + X")
    j = b0 / (4 * a0 * a0)
    # Smoothness rules out the degenerate j values.
    assert j != 0 and j != Fraction(1, 4)
    return NormalForm("generic", j, f"Y^2 = X^5 + X^3 + ({j})*X")


# ---------------------------------------------------------------------------
# Symbolic automorphism checks
# ---------------------------------------------------------------------------

_A, _B, _G, _X, _Y = sp.symbols("a b g x y")
_EQUATION = _Y**2 - _X * (_X**4 - 2 * _A * _X**2 + _B)


def order4_check(unit=sp.I) -> bool:
    """(x, y) -> (-x, unit*y) maps the curve equation to -1 times itself
    (same vanishing locus) exactly when unit = i."""
    image = _EQUATION.subs({_X: -_X, _Y: unit * _Y}, simultaneous=True)
    return sp.expand(image + _EQUATION) == 0


def order4_square_is_involution() -> bool:
    """Applying the order-4 map twice gives the hyperelliptic involution."""
    x1, y1 = -_X, sp.I * _Y
    x2, y2 = -x1, sp.I * y1
    return x2 == _X and sp.expand(y2 + _Y) == 0


def inversion_check() -> bool:
    """(x, y) -> (g^2/x, -g^3*y/x^3) preserves the equation modulo g^4 = b."""
    image = _EQUATION.subs(
        {_X: _G**2 / _X, _Y: -(_G**3) * _Y / _X**3}, simultaneous=True
    )
    # Clear the pole at x = 0 and compare up to the unit factor g^6/x^6.
    cleared = sp.expand(image * _X**6 / _G**6)
    residual = sp.expand(cleared - _EQUATION)
    # Reduce modulo g^4 - b by eliminating g in favor of b.
    reduced = sp.expand(residual.subs(_B, _G**4))
    return sp.simplify(reduced) == 0


def automorphism_checks() -> bool:
    """All symbolic curve-automorphism identities at once."""
    return (
        order4_check()
        and order4_square_is_involution()
        and inversion_check()
        and quintic_derivative_precheck()
    )
