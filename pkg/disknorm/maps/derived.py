"""
Derived Quantities of Harmonic and Logharmonic Maps.

Every quantity has a pointwise form, which raises at bad points, and a grid
form, which returns `nan` there. Both share one kernel working on an
:any:`Evaluation`.

Pre-Schwarzian derivatives are not analytic, they depend on `z` and `conj(z)`.
"""

import numpy as np

from ..expr import Evaluation, PoleEncounteredError
from .analytic import boundary_distance


def _pre_schwarzian_logharmonic(f, ev):
    w = ev(f.omega)
    return ev(f.h_pre_schwarzian) + ev(f.g_logderiv) - np.conj(w) * ev(f.omega_prime) / boundary_distance(w, ev)


def _pre_schwarzian_harmonic(f, ev):
    w = ev(f.omega)
    return ev(f.H_pre_schwarzian) - np.conj(w) * ev(f.omega_prime) / boundary_distance(w, ev)


def _schwarzian_harmonic(f, ev):
    w = ev(f.omega)
    w1 = ev(f.omega_prime)
    scale = np.conj(w) / boundary_distance(w, ev)
    return ev(f.H_schwarzian) + scale * (ev(f.H_pre_schwarzian) * w1 - ev(f.omega_second)) - 1.5 * (w1 * scale) ** 2


def _jacobian_logharmonic(f, ev):
    w = ev(f.omega)
    f_z = f.h_derivative_values(ev.zs, ev.strict) * f.g_values(ev.zs, ev.strict)
    return np.abs(f_z) ** 2 * (1 - np.abs(w) ** 2)


def _pde_residual(f, ev):
    h = f.h_values(ev.zs, ev.strict)
    g = f.g_values(ev.zs, ev.strict)
    value = h * np.conj(g)
    f_z = f.h_derivative_values(ev.zs, ev.strict) * np.conj(g)
    f_zbar = h * np.conj(f.g_derivative_values(ev.zs, ev.strict))
    with np.errstate(all="ignore"):
        residual = np.abs(np.conj(f_zbar) / np.conj(value) - ev(f.omega) * f_z / value)
    broken = ~np.isfinite(residual)
    if ev.strict and broken.any():
        raise PoleEncounteredError(complex(ev.zs[broken].flat[0]))
    return residual


def _pointwise(kernel, f, z):
    return kernel(f, Evaluation([z], strict=True))[0]


def eval_pre_schwarzian_logharmonic(f, z):
    """
    Pre-Schwarzian `P_f = h''/h' + g'/g - conj(omega) omega'/(1 - |omega|^2)` of a logharmonic map.

    >>> from disknorm.expr import parse
    >>> from disknorm.maps import LogharmonicMap
    >>> f = LogharmonicMap(parse("z/(1-z)"), parse("1/(1-z)"))
    >>> abs(eval_pre_schwarzian_logharmonic(f, 0) - 3) < 1e-12
    True
    """
    return complex(_pointwise(_pre_schwarzian_logharmonic, f, z))


def pre_schwarzian_logharmonic_grid(f, zs):
    return _pre_schwarzian_logharmonic(f, Evaluation(zs))


def associated_pre_schwarzian_grid(f, zs):
    """Pre-Schwarzian `h''/h' + g'/g` of the analytic map `psi` with `psi' = h'g`."""
    return Evaluation(zs)(f.associated_pre_schwarzian)


def eval_pre_schwarzian_harmonic(f, z):
    """
    Pre-Schwarzian `P_f = H''/H' - conj(omega) omega'/(1 - |omega|^2)` of a harmonic map.

    >>> from disknorm.expr import parse
    >>> from disknorm.maps import HarmonicMap
    >>> f = HarmonicMap(parse("-log(1-z)"), omega=parse("z"))
    >>> abs(eval_pre_schwarzian_harmonic(f, 0) - 1) < 1e-12
    True
    """
    return complex(_pointwise(_pre_schwarzian_harmonic, f, z))


def pre_schwarzian_harmonic_grid(f, zs):
    return _pre_schwarzian_harmonic(f, Evaluation(zs))


def eval_schwarzian_harmonic(f, z):
    """
    Schwarzian derivative of a harmonic map.

    With `c = conj(omega)/(1 - |omega|^2)` it reads
    `S_f = S_H + c (H''omega'/H' - omega'') - 3/2 (c omega')^2`.

    >>> from disknorm.expr import parse
    >>> from disknorm.maps import HarmonicMap
    >>> f = HarmonicMap(parse("exp(z)"))
    >>> abs(eval_schwarzian_harmonic(f, 0.4) + 0.5) < 1e-12
    True
    """
    return complex(_pointwise(_schwarzian_harmonic, f, z))


def schwarzian_harmonic_grid(f, zs):
    return _schwarzian_harmonic(f, Evaluation(zs))


def jacobian_logharmonic(f, z):
    """
    Jacobian `|h'g|^2 (1 - |omega|^2)` of a logharmonic map.

    >>> from disknorm.expr import parse
    >>> from disknorm.maps import LogharmonicMap
    >>> f = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"))
    >>> jacobian_logharmonic(f, 0)
    1.0
    """
    return float(_pointwise(_jacobian_logharmonic, f, z))


def jacobian_logharmonic_grid(f, zs):
    return _jacobian_logharmonic(f, Evaluation(zs))


def pde_residual(f, z):
    """
    Residual `|conj(f_zbar)/conj(f) - omega f_z/f|` of the logharmonic equation.

    `f_z = h' conj(g)` and `f_zbar = h conj(g')` are built from the parts, so the
    residual measures how well `g` and `omega` fit together.

    >>> from disknorm.expr import parse
    >>> from disknorm.maps import LogharmonicMap
    >>> f = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"))
    >>> pde_residual(f, 0.3 + 0.4j) < 1e-10
    True
    >>> bad = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"), omega=parse("z/2"), validate=False)
    >>> pde_residual(bad, 0.5) > 1e-3
    True
    """
    return float(_pointwise(_pde_residual, f, z))


def pde_residual_grid(f, zs):
    return _pde_residual(f, Evaluation(zs))
