"""
Analytic Functions on the Disk.

Derived expressions of single analytic functions, disk automorphisms and the
validation grid used for the flags of maps.
"""

import functools

import numpy as np

from ..config import EPS_BOUNDARY, TAYLOR_ORDER, VALIDATION_ANGLES, VALIDATION_RADII, VALIDATION_RMAX
from ..expr import Z, Evaluation, NotAnalyticAtZeroError, const, differentiate, evaluate_grid, is_constant
from ..expr import series_exp, series_integrate, taylor_expand
from ..expr.node import is_const
from .exceptions import DegenerateFunctionError, MapSpecError, NotSensePreservingError


@functools.lru_cache(maxsize=None)
def validation_grid():
    """
    Polar grid of `VALIDATION_RADII` radii times `VALIDATION_ANGLES` angles up to `VALIDATION_RMAX`.

    >>> validation_grid().shape
    (2048,)
    """
    radii = np.linspace(0.0, VALIDATION_RMAX, VALIDATION_RADII)
    angles = np.linspace(0.0, 2 * np.pi, VALIDATION_ANGLES, endpoint=False)
    grid = (radii[:, np.newaxis] * np.exp(1j * angles)[np.newaxis, :]).reshape(-1)
    grid.flags.writeable = False
    return grid


def require_nondegenerate(expr, what, order=TAYLOR_ORDER):
    """Raise :any:`DegenerateFunctionError` if `expr` vanishes identically."""
    if is_const(expr, 0):
        raise DegenerateFunctionError("%s vanishes identically." % what)
    if not is_constant(expr):
        try:
            series = taylor_expand(expr, order)
        except NotAnalyticAtZeroError:
            return
        if np.all(np.abs(series.coefficients) < 1e-14):
            raise DegenerateFunctionError("%s vanishes identically up to order %d." % (what, order))
    elif abs(evaluate_grid(expr, [0])[0]) == 0:
        raise DegenerateFunctionError("%s vanishes identically." % what)


def pre_schwarzian_analytic(h, order=TAYLOR_ORDER):
    """
    Pre-Schwarzian derivative `h''/h'` of an analytic function.

    >>> from disknorm.expr import parse, evaluate
    >>> abs(evaluate(pre_schwarzian_analytic(parse("1/(1-z)")), 0.5) - 4) < 1e-12
    True
    >>> pre_schwarzian_analytic(parse("z"))
    Expr('0')
    >>> pre_schwarzian_analytic(parse("1 + 0*z"))
    Traceback (most recent call last):
      ...
    disknorm.maps.exceptions.DegenerateFunctionError: h' vanishes identically.
    """
    first = differentiate(h)
    require_nondegenerate(first, "h'", order)
    return differentiate(first) / first


def schwarzian_analytic(h, order=TAYLOR_ORDER):
    """
    Schwarzian derivative `P' - P^2/2` with `P = h''/h'`.

    >>> from disknorm.expr import parse, evaluate
    >>> abs(evaluate(schwarzian_analytic(parse("exp(z)")), 0.3) + 0.5) < 1e-12
    True
    """
    pre = pre_schwarzian_analytic(h, order)
    return differentiate(pre) - const(0.5) * pre**2


def dilatation(h, g, validate=True):
    """
    Second complex dilatation `g'h/(gh')` of `f = h conj(g)`.

    Keyword Args:
        validate (bool): require `|omega| < 1` on the validation grid.

    >>> from disknorm.expr import parse, evaluate
    >>> omega = dilatation(parse("z/(1-z)"), parse("1/(1-z)"))
    >>> abs(evaluate(omega, 0.3 + 0.2j) - (0.3 + 0.2j)) < 1e-12
    True
    >>> dilatation(parse("1/(1-z)"), parse("1"))
    Expr('0')
    >>> dilatation(parse("z"), parse("exp(2*z)"))  # doctest: +ELLIPSIS
    Traceback (most recent call last):
      ...
    disknorm.maps.exceptions.NotSensePreservingError: Map is not sense-preserving: |omega(...)| = ...
    """
    omega = (differentiate(g) * h) / (g * differentiate(h))
    if validate:
        check_self_map(omega)
    return omega


def check_self_map(omega, zs=None):
    """Raise :any:`NotSensePreservingError` unless `|omega| < 1 - EPS_BOUNDARY` at `zs`."""
    zs = validation_grid() if zs is None else np.asarray(zs, dtype=complex)
    modulus = np.abs(evaluate_grid(omega, zs))
    bad = ~(modulus < 1 - EPS_BOUNDARY)
    if bad.any():
        index = int(np.flatnonzero(bad)[0])
        raise NotSensePreservingError(complex(zs[index]), float(modulus[index]))


def cross_check_dilatation(omega, derived, zs=None):
    """Raise :any:`MapSpecError` unless `omega` and `derived` agree where both are defined."""
    zs = validation_grid() if zs is None else np.asarray(zs, dtype=complex)
    ev = Evaluation(zs)
    given, expected = ev(omega), ev(derived)
    both = np.isfinite(given) & np.isfinite(expected)
    if np.any(np.abs(given[both] - expected[both]) > 1e-8 * (1 + np.abs(expected[both]))):
        raise MapSpecError("Dilatation %r does not match %r." % (omega, derived))


def exp_integral_series(integrand, order=TAYLOR_ORDER):
    """Series of `exp(int_0^z integrand)`, value 1 at the origin."""
    if order == 0:
        return series_exp(taylor_expand(const(0), 0))
    return series_exp(series_integrate(taylor_expand(integrand, order - 1)))


def coanalytic_from_dilatation(h, omega, order=TAYLOR_ORDER):
    """
    Series of `g = exp(int_0^z omega h'/h)`, normalized by `g(0) = 1`.

    >>> from disknorm.expr import parse
    >>> coanalytic_from_dilatation(parse("1/(1-z)"), parse("z"), 3)
    TaylorSeries([1, 0, 0.5, 0.3333333333333333])
    >>> coanalytic_from_dilatation(parse("z/(1-z)"), parse("z"), 3)
    TaylorSeries([1, 1, 1, 1])
    """
    return exp_integral_series((omega * differentiate(h)) / h, order)


def _hyperbolic_derivative(omega, ev):
    w = ev(omega)
    dw = ev(differentiate(omega))
    denominator = boundary_distance(w, ev)
    return np.abs(dw) * (1 - np.abs(ev.zs) ** 2) / denominator


def boundary_distance(w, ev):
    """
    `1 - |w|^2`.

    Pointwise evaluation raises for `|w| >= 1 - EPS_BOUNDARY`. Grid evaluation only
    drops `|w| >= 1`, since samples close to the boundary are legitimate there.
    """
    modulus = np.abs(w)
    if ev.strict:
        bad = modulus >= 1 - EPS_BOUNDARY
        if bad.any():
            index = int(np.flatnonzero(bad.reshape(-1))[0])
            raise NotSensePreservingError(complex(ev.zs.reshape(-1)[index]), float(modulus.reshape(-1)[index]))
    else:
        modulus = np.where(modulus >= 1, np.nan, modulus)
    return 1 - modulus**2


def hyperbolic_derivative(omega, z):
    """
    Hyperbolic derivative `|omega'|(1 - |z|^2)/(1 - |omega|^2)` at `z`.

    >>> from disknorm.expr import parse
    >>> hyperbolic_derivative(parse("z^2"), 0.5)
    0.8
    >>> hyperbolic_derivative(parse("0.5"), 0.3)
    0.0
    """
    return float(_hyperbolic_derivative(omega, Evaluation([z], strict=True))[0])


def hyperbolic_derivative_grid(omega, zs):
    """Hyperbolic derivative at all `zs`, `nan` where undefined."""
    return _hyperbolic_derivative(omega, Evaluation(zs))


def automorphism(alpha, rotation=1):
    """
    Disk automorphism `rotation (z - alpha)/(1 - conj(alpha) z)`.

    >>> automorphism(0)
    Expr('z')
    >>> automorphism(0.5)
    Expr('(z - 0.5)/(1 - 0.5*z)')
    """
    alpha = complex(alpha)
    if not abs(alpha) < 1:
        raise ValueError("Automorphism needs |alpha| < 1, got %r." % (alpha,))
    return const(rotation) * ((Z - const(alpha)) / (const(1) - const(alpha.conjugate()) * Z))


def blaschke_product(zeros, rotation=1):
    """
    Finite Blaschke product with the given `zeros` inside the disk.

    >>> blaschke_product([0, 0.5])
    Expr('z*((z - 0.5)/(1 - 0.5*z))')
    """
    product = const(rotation)
    for zero in zeros:
        product = product * automorphism(zero)
    return product
