"""
Constructions of Logharmonic Maps.

* :any:`power_construct`: `f = H'^lambda1 conj(G'^lambda2)`.
* :any:`affine_transform_log` and :any:`koebe_transform_log`: affine and
  Koebe transforms of the harmonic map `F = log f` of a normalized `f`.
"""

import cmath
import logging

from ..config import NORMALIZATION_TOL, TAYLOR_ORDER
from ..expr import Evaluation, const, differentiate, evaluate, is_constant, power, substitute
from .analytic import automorphism, require_nondegenerate
from .branch import RadialBranch
from .exceptions import DegenerateFunctionError, InvalidExponentError, NormalizationError
from .harmonic import HarmonicMap
from .logharmonic import LogharmonicMap


def power_construct(H, G, lambda1, lambda2, name=None, validate=True, order=TAYLOR_ORDER):
    """
    Logharmonic map `f = H'^lambda1 conj(G'^lambda2)` with branch-safe powers.

    Args:
        H (Expr): locally univalent analytic function.
        G (Expr): locally univalent analytic function.
        lambda1 (float): positive exponent of `H'`.
        lambda2 (float): positive exponent of `G'`.

    Keyword Args:
        name (str): label used in reports.
        validate (bool): require all flags of the result.
        order (int): truncation order of the degeneracy checks.

    The dilatation is `(lambda2/lambda1) (G''/G') (H'/H'')`, the constant
    `lambda2/lambda1` when `H == G`. Values of the powers come from radial
    continuation of `lambda log H'`, starting at the principal logarithm of `H'(0)`.

    >>> from disknorm.expr import parse
    >>> k = parse("z/(1-z)^2")
    >>> f = power_construct(k, k, 2, 1)
    >>> f.omega
    Expr('0.5')
    >>> abs(f.value(0.5) / 1728 - 1) < 1e-9
    True
    >>> power_construct(k, k, 1, 0)
    Traceback (most recent call last):
      ...
    disknorm.maps.exceptions.InvalidExponentError: Exponents must be positive, got 1 and 0.
    """
    # pylint: disable=R0913,R0914
    if not (lambda1 > 0 and lambda2 > 0):
        raise InvalidExponentError("Exponents must be positive, got %r and %r." % (lambda1, lambda2))
    H1, G1 = differentiate(H), differentiate(G)
    H2, G2 = differentiate(H1), differentiate(G1)
    require_nondegenerate(H1, "H'", order)
    require_nondegenerate(G1, "G'", order)
    require_nondegenerate(H2, "H''", order)
    h_logderiv = const(lambda1) * H2 / H1
    g_logderiv = const(lambda2) * G2 / G1
    if H == G:
        omega = const(lambda2 / lambda1)
    else:
        omega = const(lambda2 / lambda1) * (G2 / G1) * (H1 / H2)
    h = power(H1, lambda1)
    g = power(G1, lambda2)
    return LogharmonicMap.from_parts(
        h_logderiv,
        const(lambda1 - 1) * H2 / H1 + differentiate(H2) / H2,
        g_logderiv,
        omega,
        name=name,
        validate=validate,
        h=h,
        h_branch=_power_branch(H1, h_logderiv, lambda1),
        g=g,
        g_prime=differentiate(g) if is_constant(G1) else None,
        g_branch=_power_branch(G1, g_logderiv, lambda2),
    )


def _power_branch(derivative, logderiv, exponent):
    if is_constant(derivative):
        return None
    start = evaluate(derivative, 0)
    if start == 0:
        raise DegenerateFunctionError("Derivative vanishes at the origin.")
    return RadialBranch(logderiv, exponent * cmath.log(start))


def require_normalized(f):
    """Raise :any:`NormalizationError` unless `h(0) = g(0) = h'(0) = 1`."""
    h0, g0, h1 = f.h_value(0), f.g_value(0), complex(f.h_derivative_values([0], strict=True)[0])
    if max(abs(h0 - 1), abs(g0 - 1), abs(h1 - 1)) > NORMALIZATION_TOL:
        msg = "Map is not normalized: h(0)=%r, g(0)=%r, h'(0)=%r."
        raise NormalizationError(msg % (h0, g0, h1))


def _check_result(F):
    start = complex(Evaluation([0], strict=True)(F.H_prime)[0])
    if abs(start - 1) > NORMALIZATION_TOL:
        raise NormalizationError("Transform is not normalized: H'(0)=%r." % (start,))
    return F


def affine_transform_log(f, s, name=None, validate=True):
    """
    Affine transform `(F + s conj(F))/(1 + s conj(F_z(0)))` of `F = log f`.

    Args:
        f (LogharmonicMap): normalized map, `h(0) = g(0) = h'(0) = 1`.
        s (complex): parameter with `|s| < 1`.

    The result is `log f_a` with `f_a = f^(1/a) conj(f)^(s/a)` and `a = 1 + s g'(0)`,
    given through its derivatives and normalized by `H(0) = G(0) = 0`, `H'(0) = 1`.

    >>> from disknorm.expr import parse
    >>> f = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"))
    >>> affine_transform_log(f, 0).H_prime == f.h_logderiv
    True
    >>> F = affine_transform_log(f, 0.3)
    >>> abs(F.H_series(1)[1] - 1) < 1e-12
    True
    """
    s = complex(s)
    if not abs(s) < 1:
        raise ValueError("Affine transform needs |s| < 1, got %r." % (s,))
    require_normalized(f)
    a = 1 + s * complex(f.g_derivative_values([0], strict=True)[0])
    logging.getLogger(__name__).debug("Affine transform with s=%r, a=%r.", s, a)
    H_prime = (f.h_logderiv + const(s) * f.g_logderiv) / const(a)
    G_prime = const((s / a).conjugate()) * f.h_logderiv + const((1 / a).conjugate()) * f.g_logderiv
    return _check_result(HarmonicMap.from_derivatives(H_prime, G_prime, name=name, validate=validate))


def koebe_transform_log(f, alpha, name=None, validate=True):
    """
    Koebe transform `(F(phi) - F(phi(0)))/(F_z(phi(0)) phi'(0))` of `F = log f`.

    Args:
        f (LogharmonicMap): normalized map, `h(0) = g(0) = h'(0) = 1`.
        alpha (complex): parameter of `phi(z) = (z - alpha)/(1 - conj(alpha) z)`.

    With `phi(0) = -alpha` and `phi'(0) = 1 - |alpha|^2` the scale is
    `b = (1 - |alpha|^2) h'(-alpha)/h(-alpha)`. The result is normalized by
    `H(0) = G(0) = 0` and `H'(0) = 1`.

    >>> from disknorm.expr import parse
    >>> f = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"))
    >>> koebe_transform_log(f, 0).G_prime == f.g_logderiv
    True
    >>> F = koebe_transform_log(f, 0.4)
    >>> abs(F.H_series(1)[1] - 1) < 1e-12
    True
    """
    alpha = complex(alpha)
    require_normalized(f)
    phi = automorphism(alpha)
    phi_prime = differentiate(phi)
    b = (1 - abs(alpha) ** 2) * evaluate(f.h_logderiv, -alpha)
    logging.getLogger(__name__).debug("Koebe transform with alpha=%r, b=%r.", alpha, b)
    H_prime = substitute(f.h_logderiv, phi) * phi_prime / const(b)
    G_prime = substitute(f.g_logderiv, phi) * phi_prime / const(b.conjugate())
    return _check_result(HarmonicMap.from_derivatives(H_prime, G_prime, name=name, validate=validate))
