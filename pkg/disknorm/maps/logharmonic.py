"""
Logharmonic Mappings `f = h conj(g)`.
"""

import cmath

import numpy as np

from ..config import EPS_BOUNDARY, EPS_POLE, TAYLOR_ORDER
from ..expr import Z, Evaluation, ExprError, branch_nodes, differentiate, evaluate, substitute
from .analytic import (
    check_self_map,
    coanalytic_from_dilatation,
    cross_check_dilatation,
    dilatation,
    exp_integral_series,
    require_nondegenerate,
    validation_grid,
)
from .branch import RadialBranch
from .exceptions import DegenerateFunctionError, MapSpecError
from .harmonic import HarmonicMap


class LogharmonicMap:
    """
    Nonvanishing logharmonic map `f = h conj(g)` on the unit disk.

    Args:
        h (Expr): analytic part.

    Keyword Args:
        g (Expr): co-analytic part, stored as analytic function of `z`.
        omega (Expr): second complex dilatation `g'h/(gh')`. Without `g` the
            co-analytic part is `exp(int_0^z omega h'/h)`, normalized by `g(0) = 1`.
        name (str): label used in reports.
        validate (bool): cross-check `g` against `omega` and require all flags.
        order (int): truncation order of Taylor expansions.

    At least one of `g` and `omega` is needed.

    >>> import cmath
    >>> from disknorm.expr import parse, evaluate
    >>> f = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"))
    >>> abs(evaluate(f.omega, 0.3j) - 0.3j) < 1e-12
    True
    >>> f.flags
    {'h_locally_univalent': True, 'g_nonvanishing': True, 'sense_preserving': True}

    Given the dilatation instead, `g` comes from its series and radial continuation:

    >>> f = LogharmonicMap(parse("1/(1-z)"), omega=parse("z"))
    >>> f.g_series.truncate(3)
    TaylorSeries([1, 0, 0.5, 0.3333333333333333])
    >>> abs(f.g_value(0.5) - cmath.exp(-0.5) / 0.5) < 1e-10
    True
    """

    def __init__(self, h, g=None, omega=None, name=None, validate=True, order=TAYLOR_ORDER):
        # pylint: disable=R0913
        if g is None and omega is None:
            raise MapSpecError("A logharmonic map needs g or omega.")
        h_prime = differentiate(h)
        require_nondegenerate(h_prime, "h'", order)
        h_logderiv = h_prime / h
        parts = dict(
            h=h,
            h_prime=h_prime,
            h_branch=_closed_form_branch(h, h_logderiv),
        )
        if g is not None:
            g_prime = differentiate(g)
            g_logderiv = g_prime / g
            derived = dilatation(h, g, validate=False)
            if omega is not None and validate:
                cross_check_dilatation(omega, derived)
            parts.update(g=g, g_prime=g_prime, g_branch=_closed_form_branch(g, g_logderiv))
            omega = derived if omega is None else omega
        else:
            g_logderiv = (omega * h_prime) / h
            parts.update(g_series=coanalytic_from_dilatation(h, omega, order), g_branch=RadialBranch(g_logderiv, 0))
        self._setup(h_logderiv, differentiate(h_prime) / h_prime, g_logderiv, omega, name, validate, **parts)

    @classmethod
    def from_parts(cls, h_logderiv, h_pre_schwarzian, g_logderiv, omega, name=None, validate=True, **parts):
        """
        Map assembled from its derived expressions.

        Args:
            h_logderiv (Expr): `h'/h`.
            h_pre_schwarzian (Expr): `h''/h'`.
            g_logderiv (Expr): `g'/g`.
            omega (Expr): dilatation, equal to `g_logderiv / h_logderiv`.

        Keyword Args:
            name (str): label used in reports.
            validate (bool): require all flags.
            h, h_prime, h_branch, g, g_prime, g_branch, g_series: optional closed forms,
                :any:`RadialBranch` values and the series of `g`.
        """
        # pylint: disable=R0913
        f = cls.__new__(cls)
        f._setup(h_logderiv, h_pre_schwarzian, g_logderiv, omega, name, validate, **parts)
        return f

    @classmethod
    def from_log_derivative(cls, h_logderiv, omega=Z, name=None, validate=True, order=TAYLOR_ORDER):
        """
        Map given through `h'/h` and the dilatation, normalized by `h(0) = g(0) = 1`.

        >>> from disknorm.expr import parse, evaluate
        >>> f = LogharmonicMap.from_log_derivative(parse("1/(1-0.5*z)"))
        >>> abs(evaluate(f.h_pre_schwarzian, 0) - 1.5) < 1e-12
        True
        >>> abs(f.h_value(0.5) - 1 / 0.75 ** 2) < 1e-10
        True
        """
        # pylint: disable=R0913
        require_nondegenerate(h_logderiv, "h'/h", order)
        g_logderiv = omega * h_logderiv
        return cls.from_parts(
            h_logderiv,
            differentiate(h_logderiv) / h_logderiv + h_logderiv,
            g_logderiv,
            omega,
            name=name,
            validate=validate,
            h_branch=RadialBranch(h_logderiv, 0),
            g_branch=RadialBranch(g_logderiv, 0),
            g_series=exp_integral_series(g_logderiv, order),
        )

    def _setup(
        self,
        h_logderiv,
        h_pre_schwarzian,
        g_logderiv,
        omega,
        name,
        validate,
        h=None,
        h_prime=None,
        h_branch=None,
        g=None,
        g_prime=None,
        g_branch=None,
        g_series=None,
    ):
        # pylint: disable=W0201,R0913,R0914
        self.h = h
        self.h_prime = h_prime
        self.h_logderiv = h_logderiv
        self.h_pre_schwarzian = h_pre_schwarzian
        self.h_branch = h_branch
        self.g = g
        self.g_prime = g_prime
        self.g_logderiv = g_logderiv
        self.g_branch = g_branch
        self.g_series = g_series
        self.omega = omega
        self.omega_prime = differentiate(omega)
        self.associated_pre_schwarzian = h_pre_schwarzian + g_logderiv
        self.name = name
        self.flags = _flags(self)
        if validate:
            self.validate()

    def __repr__(self):
        args = ["h=%r" % (self.h,) if self.h is not None else "h_logderiv=%r" % (self.h_logderiv,)]
        args.append("g=%r" % (self.g,) if self.g is not None else "omega=%r" % (self.omega,))
        if self.name:
            args.append("name=%r" % (self.name,))
        return "%s(%s)" % (self.__class__.__name__, ", ".join(args))

    def validate(self):
        """Raise unless all flags hold."""
        if not self.flags["h_locally_univalent"]:
            raise DegenerateFunctionError("h' vanishes on the validation grid.")
        if not self.flags["g_nonvanishing"]:
            raise DegenerateFunctionError("g vanishes on the validation grid.")
        if not self.flags["sense_preserving"]:
            check_self_map(self.omega)

    def compose(self, phi, validate=True):
        """
        Precomposition `f o phi` with an analytic self-map `phi` of the disk.

        Closed-form parts are substituted. Otherwise the derived expressions follow
        the chain rule and the branches continue from `phi(0)`.

        >>> from disknorm.expr import parse
        >>> from disknorm.maps.analytic import automorphism
        >>> f = LogharmonicMap(parse("1/(1-z)"), parse("1"))
        >>> f.compose(automorphism(0)).h == f.h
        True
        """
        name = "%s o phi" % self.name if self.name else None
        if self.h is not None and self.g is not None and self.h_branch is None and self.g_branch is None:
            return LogharmonicMap(substitute(self.h, phi), substitute(self.g, phi), name=name, validate=validate)
        phi_prime = differentiate(phi)
        start = evaluate(phi, 0)
        h_logderiv = substitute(self.h_logderiv, phi) * phi_prime
        g_logderiv = substitute(self.g_logderiv, phi) * phi_prime
        return LogharmonicMap.from_parts(
            h_logderiv,
            substitute(self.h_pre_schwarzian, phi) * phi_prime + differentiate(phi_prime) / phi_prime,
            g_logderiv,
            substitute(self.omega, phi),
            name=name,
            validate=validate,
            h_branch=RadialBranch(h_logderiv, _log_at(self.h, self.h_branch, start)),
            g_branch=RadialBranch(g_logderiv, _log_at(self.g, self.g_branch, start)),
        )

    def log_map(self, validate=True):
        """Harmonic map `log f = log h + conj(log g)`, normalized by `log f(0) = 0` up to constants."""
        name = "log %s" % self.name if self.name else None
        return HarmonicMap.from_derivatives(self.h_logderiv, self.g_logderiv, name=name, validate=validate)

    def h_values(self, zs, strict=False):
        """Values of `h`, from radial continuation where `h` has no usable closed form."""
        return _part_values(self.h, self.h_branch, zs, strict)

    def g_values(self, zs, strict=False):
        """Values of `g`, from radial continuation where `g` has no usable closed form."""
        return _part_values(self.g, self.g_branch, zs, strict)

    def h_derivative_values(self, zs, strict=False):
        """Values of `h'`."""
        return _derivative_values(self.h, self.h_prime, self.h_logderiv, self.h_branch, zs, strict)

    def g_derivative_values(self, zs, strict=False):
        """Values of `g'`."""
        return _derivative_values(self.g, self.g_prime, self.g_logderiv, self.g_branch, zs, strict)

    def values(self, zs, strict=False):
        """Values `h conj(g)` at `zs`."""
        return self.h_values(zs, strict) * np.conj(self.g_values(zs, strict))

    def value(self, z):
        return complex(self.values([z], strict=True)[0])

    def h_value(self, z):
        return complex(self.h_values([z], strict=True)[0])

    def g_value(self, z):
        return complex(self.g_values([z], strict=True)[0])


def _closed_form_branch(expr, logderiv):
    """Radial branch of `expr` if it contains principal logarithms or powers."""
    if not branch_nodes(expr):
        return None
    try:
        start = evaluate(expr, 0)
    except ExprError:
        return None
    if start == 0:
        return None
    return RadialBranch(logderiv, cmath.log(start))


def _log_at(part, branch, z):
    if branch is not None:
        return branch.log(z)
    return cmath.log(evaluate(part, z))


def _part_values(part, branch, zs, strict):
    if branch is not None:
        return branch.values(zs, strict=strict)
    return Evaluation(zs, strict=strict)(part)


def _derivative_values(part, prime, logderiv, branch, zs, strict):
    # pylint: disable=R0913
    if branch is None and prime is not None:
        return Evaluation(zs, strict=strict)(prime)
    return Evaluation(zs, strict=strict)(logderiv) * _part_values(part, branch, zs, strict)


def _flags(f):
    ev = Evaluation(validation_grid())
    pre = ev(f.h_pre_schwarzian)
    if f.g is not None:
        modulus = np.abs(ev(f.g))
        g_ok = np.isfinite(modulus) & (modulus > EPS_POLE)
    else:
        g_ok = np.isfinite(ev(f.g_logderiv))
    omega = np.abs(ev(f.omega))
    return {
        "h_locally_univalent": bool(np.isfinite(pre).all()),
        "g_nonvanishing": bool(g_ok.all()),
        "sense_preserving": bool((omega < 1 - EPS_BOUNDARY).all()),
    }
