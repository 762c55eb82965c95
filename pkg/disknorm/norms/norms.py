"""
Norms and Seminorms of Disk Maps.

Every norm is a :any:`weighted_sup` of a vectorized objective built from the
derived expressions of a map.
"""

import functools

import numpy as np

from ..expr import Expr, differentiate, evaluate_grid
from ..maps import (
    HarmonicMap,
    LogharmonicMap,
    associated_pre_schwarzian_grid,
    hyperbolic_derivative_grid,
    pre_schwarzian_analytic,
    pre_schwarzian_harmonic_grid,
    pre_schwarzian_logharmonic_grid,
    schwarzian_analytic,
    schwarzian_harmonic_grid,
)
from ..maps.analytic import check_self_map
from .engine import weighted_sup
from .estimate import KINDS


def _modulus(expr):
    return functools.partial(_kernel_modulus, evaluate_grid, expr)


def _kernel_modulus(kernel, subject, zs):
    return np.abs(kernel(subject, zs))


def _sum_modulus(first, second, zs):
    return np.abs(evaluate_grid(first, zs)) + np.abs(evaluate_grid(second, zs))


def norm_objective(kind, f):
    """
    Objective and weight power of the norm `kind` of `f`.

    Args:
        kind (str): one of :any:`KINDS`.
        f: analytic :any:`Expr`, :any:`LogharmonicMap` or :any:`HarmonicMap`. The
            self-map `omega` for `"hyperbolic_sup"`. For `"preschwarzian_analytic"`
            a logharmonic map stands for its analytic part `h`.

    Returns `(objective, weight_power)` for :any:`weighted_sup` and :any:`objective_grid`.

    >>> from disknorm.expr import parse
    >>> objective, weight_power = norm_objective("schwarzian_analytic", parse("exp(z)"))
    >>> round(float(objective(np.array([0j]))[0]), 12), weight_power
    (0.5, 2)
    """
    # pylint: disable=R0911,R0912
    if kind == "preschwarzian_analytic":
        if isinstance(f, LogharmonicMap):
            return _modulus(f.h_pre_schwarzian), 1
        if isinstance(f, Expr):
            return _modulus(pre_schwarzian_analytic(f)), 1
    elif kind == "preschwarzian_logharmonic" and isinstance(f, LogharmonicMap):
        return functools.partial(_kernel_modulus, pre_schwarzian_logharmonic_grid, f), 1
    elif kind == "preschwarzian_harmonic" and isinstance(f, HarmonicMap):
        return functools.partial(_kernel_modulus, pre_schwarzian_harmonic_grid, f), 1
    elif kind == "preschwarzian_associated" and isinstance(f, LogharmonicMap):
        return functools.partial(_kernel_modulus, associated_pre_schwarzian_grid, f), 1
    elif kind == "schwarzian_analytic" and isinstance(f, Expr):
        return _modulus(schwarzian_analytic(f)), 2
    elif kind == "schwarzian_harmonic" and isinstance(f, HarmonicMap):
        return functools.partial(_kernel_modulus, schwarzian_harmonic_grid, f), 2
    elif kind == "bloch_analytic" and isinstance(f, Expr):
        return _modulus(differentiate(f)), 1
    elif kind == "bloch_logharmonic" and isinstance(f, LogharmonicMap):
        return functools.partial(_sum_modulus, f.h_logderiv, f.g_logderiv), 1
    elif kind == "bloch_harmonic" and isinstance(f, HarmonicMap):
        return functools.partial(_sum_modulus, f.H_prime, f.G_prime), 1
    elif kind == "hyperbolic_sup" and isinstance(f, Expr):
        check_self_map(f)
        return functools.partial(hyperbolic_derivative_grid, f), 0
    elif kind not in KINDS:
        raise ValueError("Unknown norm kind %r." % (kind,))
    raise TypeError("Cannot take the %s norm of %r." % (kind, f))


def _sup(kind, f, cfg):
    objective, weight_power = norm_objective(kind, f)
    return weighted_sup(objective, weight_power, cfg, kind=kind)


def bloch_seminorm_analytic(u, cfg=None):
    """
    Bloch seminorm `sup (1 - |z|^2)|u'(z)|` of an analytic function.

    >>> from disknorm.expr import parse
    >>> from disknorm.norms import SupConfig
    >>> cfg = SupConfig(radial_levels=16, angular_base=32)
    >>> bloch_seminorm_analytic(parse("z"), cfg).value
    1.0
    >>> abs(bloch_seminorm_analytic(parse("-log(1-z)"), cfg).value - 2) < 1e-4
    True
    """
    return _sup("bloch_analytic", u, cfg)


def log_bloch_seminorm(f, part="h", cfg=None):
    """
    Bloch seminorm of `log h` or `log g` of a logharmonic map, from `h'/h` or `g'/g`.

    Args:
        f (LogharmonicMap): map.
        part (str): `"h"` or `"g"`.
    """
    if part not in ("h", "g"):
        raise ValueError("part must be 'h' or 'g', got %r." % (part,))
    logderiv = f.h_logderiv if part == "h" else f.g_logderiv
    return weighted_sup(_modulus(logderiv), 1, cfg, kind="bloch_analytic")


def logharmonic_bloch_norm(f, cfg=None):
    """
    Logharmonic Bloch seminorm `sup (1 - |z|^2)(|h'/h| + |g'/g|)` and norm `|f(0)| + seminorm`.

    Returns a tuple `(NormEstimate, float)`.

    >>> from disknorm.expr import parse
    >>> from disknorm.maps import LogharmonicMap
    >>> from disknorm.norms import SupConfig
    >>> f = LogharmonicMap(parse("exp(z)"), parse("1"))
    >>> est, norm = logharmonic_bloch_norm(f, SupConfig(radial_levels=16, angular_base=32))
    >>> abs(est.value - 1) < 1e-12, abs(norm - 2) < 1e-12
    (True, True)
    """
    origin = abs(f.value(0))
    est = _sup("bloch_logharmonic", f, cfg)
    return est, origin + est.value


def bloch_seminorm_harmonic(f, cfg=None):
    """Bloch seminorm `sup (1 - |z|^2)(|H'| + |G'|)` of a harmonic map `H + conj(G)`."""
    return _sup("bloch_harmonic", f, cfg)


def pre_schwarzian_norm(f, cfg=None):
    """
    Pre-Schwarzian norm `sup (1 - |z|^2)|P(z)|`.

    Args:
        f: analytic :any:`Expr`, :any:`LogharmonicMap` or :any:`HarmonicMap`.

    >>> from disknorm.expr import parse
    >>> from disknorm.norms import SupConfig
    >>> est = pre_schwarzian_norm(parse("exp(z)"), SupConfig(radial_levels=16, angular_base=32))
    >>> abs(est.value - 1) < 1e-12, est.kind
    (True, 'preschwarzian_analytic')
    """
    if isinstance(f, Expr):
        return _sup("preschwarzian_analytic", f, cfg)
    if isinstance(f, LogharmonicMap):
        return _sup("preschwarzian_logharmonic", f, cfg)
    if isinstance(f, HarmonicMap):
        return _sup("preschwarzian_harmonic", f, cfg)
    raise TypeError("Cannot take the pre-Schwarzian norm of %r." % (f,))


def associated_pre_schwarzian_norm(f, cfg=None):
    """Pre-Schwarzian norm of the analytic map `psi` with `psi' = h'g`."""
    return _sup("preschwarzian_associated", f, cfg)


def schwarzian_norm(f, cfg=None):
    """
    Schwarzian norm `sup (1 - |z|^2)^2 |S(z)|`.

    Args:
        f: analytic :any:`Expr` or :any:`HarmonicMap`.

    >>> from disknorm.expr import parse
    >>> from disknorm.norms import SupConfig
    >>> cfg = SupConfig(radial_levels=16, angular_base=32)
    >>> schwarzian_norm(parse("(z - 0.5)/(1 - 0.5*z)"), cfg).value < 1e-12
    True
    >>> abs(schwarzian_norm(parse("exp(z)"), cfg).value - 0.5) < 1e-12
    True
    """
    if isinstance(f, Expr):
        return _sup("schwarzian_analytic", f, cfg)
    if isinstance(f, HarmonicMap):
        return _sup("schwarzian_harmonic", f, cfg)
    raise TypeError("Cannot take the Schwarzian norm of %r." % (f,))


def hyperbolic_sup(omega, cfg=None):
    """
    Supremum of the hyperbolic derivative `|omega'|(1 - |z|^2)/(1 - |omega|^2)` of a self-map.

    >>> from disknorm.expr import parse
    >>> from disknorm.norms import SupConfig
    >>> cfg = SupConfig(radial_levels=16, angular_base=32)
    >>> hyperbolic_sup(parse("0.5"), cfg).value
    0.0
    >>> abs(hyperbolic_sup(parse("z"), cfg).value - 1) < 1e-12
    True
    """
    return _sup("hyperbolic_sup", omega, cfg)


def analytic_part_pre_schwarzian_norm(f, cfg=None):
    """Pre-Schwarzian norm `sup (1 - |z|^2)|h''/h'|` of the analytic part of a logharmonic map."""
    return _sup("preschwarzian_analytic", f, cfg)
