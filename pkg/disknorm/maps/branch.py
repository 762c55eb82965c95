"""
Branch-safe logarithms by radial continuation.

The principal logarithm of a nonvanishing analytic function can jump inside
the disk. :any:`RadialBranch` integrates the logarithmic derivative along the
segment from the origin instead, which yields the analytic branch.
"""

import numpy as np
from scipy.integrate import quad_vec

from ..config import BRANCH_TOL
from ..expr import PoleEncounteredError, evaluate_grid


def radial_integral(derivative, zs, start=0, tol=BRANCH_TOL, strict=False):
    """
    Primitive `start + int_0^1 derivative(t z) z dt` at all points `zs`.

    Args:
        derivative (Expr): integrand, analytic on the segments `[0, z]`.
        zs: complex points, any shape.

    Keyword Args:
        start (complex): value of the primitive at the origin.
        tol (float): absolute and relative quadrature tolerance.
        strict (bool): raise :any:`PoleEncounteredError` instead of returning `nan`
            where a segment runs into a pole.

    >>> from disknorm.expr import parse
    >>> radial_integral(parse("2*z"), [0.5, 1j]).real.round(12).tolist()
    [0.25, -1.0]
    """
    zs = np.asarray(zs, dtype=complex)
    flat = zs.reshape(-1)
    bad = np.zeros(flat.shape, dtype=bool)

    def integrand(t):
        values = evaluate_grid(derivative, t * flat) * flat
        broken = ~np.isfinite(values)
        bad[broken] = True
        values = np.where(broken, 0, values)
        return np.concatenate((values.real, values.imag))

    if flat.size:
        stacked, _ = quad_vec(integrand, 0.0, 1.0, epsabs=tol, epsrel=tol, norm="max")
        result = start + stacked[: flat.size] + 1j * stacked[flat.size :]
    else:
        result = np.zeros(0, dtype=complex)
    if bad.any():
        if strict:
            raise PoleEncounteredError(complex(flat[bad][0]))
        result = np.where(bad, np.nan, result)
    return result.reshape(zs.shape)


class RadialBranch:
    """
    Analytic logarithm `L` with `L' = logderiv` and `L(0) = log0`.

    Args:
        logderiv (Expr): logarithmic derivative `u'/u` of the function `u`.
        log0 (complex): chosen value of `log u(0)`.

    Keyword Args:
        tol (float): absolute and relative quadrature tolerance.

    >>> import cmath
    >>> from disknorm.expr import parse
    >>> branch = RadialBranch(parse("-2/(1-z)"), 0)
    >>> abs(branch.value(0.5) - 0.25) < 1e-12
    True
    >>> abs(branch.log(-0.5) - 2 * cmath.log(1.5)) < 1e-12
    True
    """

    def __init__(self, logderiv, log0, tol=BRANCH_TOL):
        self.logderiv = logderiv
        self.log0 = complex(log0)
        self.tol = tol

    def __repr__(self):
        return "%s(%r, %r)" % (self.__class__.__name__, self.logderiv, self.log0)

    def logs(self, zs, strict=False):
        """Branch values `L(zs)`, `nan` where the segment meets a pole unless `strict`."""
        return radial_integral(self.logderiv, zs, start=self.log0, tol=self.tol, strict=strict)

    def values(self, zs, strict=False):
        """Branch values `exp(L(zs))`."""
        return np.exp(self.logs(zs, strict=strict))

    def log(self, z):
        """`L(z)` at a single point."""
        return complex(self.logs([z], strict=True)[0])

    def value(self, z):
        """`exp(L(z))` at a single point."""
        return complex(np.exp(self.log(z)))
