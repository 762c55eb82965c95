"""
Harmonic Mappings `f = H + conj(G)`.
"""

import numpy as np

from ..config import EPS_BOUNDARY, TAYLOR_ORDER
from ..expr import Evaluation, const, differentiate, series_integrate, taylor_expand
from ..expr.node import is_const
from .analytic import check_self_map, cross_check_dilatation, require_nondegenerate, validation_grid
from .branch import radial_integral
from .exceptions import DegenerateFunctionError


class HarmonicMap:
    """
    Sense-preserving harmonic map `f = H + conj(G)` on the unit disk.

    Args:
        H (Expr): analytic part.

    Keyword Args:
        G (Expr): co-analytic part, stored as analytic function of `z`.
        omega (Expr): dilatation `G'/H'`, used for `G'` when `G` is missing.
        name (str): label used in reports.
        validate (bool): require `H'` nonvanishing and `|omega| < 1` on the validation grid.

    Without `G` and `omega` the map is analytic.

    >>> from disknorm.expr import parse
    >>> f = HarmonicMap(parse("z"), omega=parse("z/2"))
    >>> f.G_prime
    Expr('z/2')
    >>> f.flags
    {'H_locally_univalent': True, 'sense_preserving': True}
    >>> HarmonicMap(parse("z"), parse("2*z"))
    Traceback (most recent call last):
      ...
    disknorm.maps.exceptions.NotSensePreservingError: Map is not sense-preserving: |omega(0j)| = 2.0.
    """

    def __init__(self, H, G=None, omega=None, name=None, validate=True):
        H_prime = differentiate(H)
        require_nondegenerate(H_prime, "H'")
        if G is not None:
            G_prime = differentiate(G)
            derived = G_prime / H_prime
            if omega is not None and validate:
                cross_check_dilatation(omega, derived)
        elif omega is not None:
            G_prime = omega * H_prime
        else:
            G, G_prime = const(0), const(0)
        self._setup(H, G, H_prime, G_prime, omega, name, validate)

    @classmethod
    def from_derivatives(cls, H_prime, G_prime, name=None, validate=True):
        """
        Harmonic map given by `H'` and `G'`, normalized by `H(0) = G(0) = 0`.

        >>> from disknorm.expr import parse
        >>> f = HarmonicMap.from_derivatives(parse("1/(1-z)"), parse("z/(1-z)"))
        >>> f.omega
        Expr('z/(1 - z)/(1/(1 - z))')
        >>> f.H_series(3)
        TaylorSeries([0, 1, 0.5, 0.3333333333333333])
        """
        require_nondegenerate(H_prime, "H'")
        f = cls.__new__(cls)
        f._setup(None, None, H_prime, G_prime, None, name, validate)
        return f

    def _setup(self, H, G, H_prime, G_prime, omega, name, validate):
        # pylint: disable=W0201,R0913
        self.H = H
        self.G = G
        self.H_prime = H_prime
        self.G_prime = G_prime
        self.omega = G_prime / H_prime if omega is None else omega
        self.omega_prime = differentiate(self.omega)
        self.omega_second = differentiate(self.omega_prime)
        self.H_pre_schwarzian = differentiate(H_prime) / H_prime
        self.H_schwarzian = differentiate(self.H_pre_schwarzian) - const(0.5) * self.H_pre_schwarzian**2
        self.name = name
        self.flags = _flags(self)
        if validate:
            self.validate()

    def __repr__(self):
        if self.H is not None:
            args = [repr(self.H), repr(self.G)]
        else:
            args = ["H_prime=%r" % (self.H_prime,), "G_prime=%r" % (self.G_prime,)]
        if self.name:
            args.append("name=%r" % (self.name,))
        return "%s(%s)" % (self.__class__.__name__, ", ".join(args))

    def validate(self):
        """Raise unless all flags hold."""
        if not self.flags["H_locally_univalent"]:
            raise DegenerateFunctionError("H' vanishes on the validation grid.")
        if not self.flags["sense_preserving"]:
            check_self_map(self.omega)

    @property
    def is_analytic(self):
        """`G' = 0`."""
        return is_const(self.G_prime, 0)

    def H_series(self, order=TAYLOR_ORDER):
        """Taylor series of `H`."""
        return _part_series(self.H, self.H_prime, order)

    def G_series(self, order=TAYLOR_ORDER):
        """Taylor series of `G`."""
        return _part_series(self.G, self.G_prime, order)

    def H_values(self, zs, strict=False):
        return _part_values(self.H, self.H_prime, zs, strict)

    def G_values(self, zs, strict=False):
        return _part_values(self.G, self.G_prime, zs, strict)

    def values(self, zs, strict=False):
        """Values `H + conj(G)` at `zs`."""
        return self.H_values(zs, strict) + np.conj(self.G_values(zs, strict))

    def value(self, z):
        return complex(self.values([z], strict=True)[0])


def _part_series(part, derivative, order):
    if part is not None:
        return taylor_expand(part, order)
    if order == 0:
        return taylor_expand(const(0), 0)
    return series_integrate(taylor_expand(derivative, order - 1))


def _part_values(part, derivative, zs, strict):
    if part is not None:
        return Evaluation(zs, strict=strict)(part)
    return radial_integral(derivative, zs, strict=strict)


def _flags(f):
    ev = Evaluation(validation_grid())
    pre = ev(f.H_pre_schwarzian)
    modulus = np.abs(ev(f.omega))
    return {
        "H_locally_univalent": bool(np.isfinite(pre).all()),
        "sense_preserving": bool((modulus < 1 - EPS_BOUNDARY).all()),
    }
