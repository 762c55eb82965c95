"""
Sharpness Family with Moebius Dilatation.

The maps `F = H conj(G)` with `H = 1/(1-z)` and dilatation `(t - z)/(1 - tz)`
have pre-Schwarzian profile `E(r)` on the positive radius. Its maximum `N_t`
is a lower bound of `||P_F||` and tends to 7 as `t` tends to 1.
"""

import math

import numpy as np
from scipy.optimize import minimize_scalar

from ..util import _repr


class DomainError(ValueError):
    """Parameter outside the domain of a formula."""


def _check_t(t):
    if not 0 < t < 1:
        raise DomainError("Parameter t must lie in (0, 1), got %r." % (t,))


def extremal_radius(t):
    """
    Maximizer `r0 = (1 - sqrt(1 - t^2))/t = t/(1 + sqrt(1 - t^2))` of the profile.

    >>> abs(extremal_radius(0.6) - 1 / 3) < 1e-15
    True
    >>> round(extremal_radius(0.01), 6)
    0.005
    >>> extremal_radius(1)
    Traceback (most recent call last):
      ...
    disknorm.theorems.family.DomainError: Parameter t must lie in (0, 1), got 1.
    """
    _check_t(t)
    return t / (1 + math.sqrt(1 - t * t))


def profile_E(r, t):
    """
    Profile `E(r) = 1 + r + ((1 + t)(1 - r^2) - (r - t))/(1 - tr)`, vectorized in `r`.

    >>> abs(profile_E(1 / 3, 0.6) - 31 / 9) < 1e-14
    True
    >>> profile_E(0, 0.25)
    2.5
    """
    _check_t(t)
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("Radius must lie in [0, 1), got %r." % (r.tolist(),))
    value = 1 + r + ((1 + t) * (1 - r * r) - (r - t)) / (1 - t * r)
    return float(value) if value.ndim == 0 else value


def n_t(t):
    """
    Maximum `N_t = E(r0)` of the profile.

    The closed form `(2 - 2s + t(4 + t - 4s))/t^2` with `s = sqrt(1 - t^2)` is
    evaluated as `1 + (2 + 4t)/(1 + s)`, which avoids the cancellation for small `t`.

    >>> abs(n_t(0.6) - 31 / 9) < 1e-14
    True
    >>> n_t(0.999) > 6.9
    True
    """
    _check_t(t)
    return 1 + (2 + 4 * t) / (1 + math.sqrt(1 - t * t))


def argmax_profile(t, xatol=1e-12):
    """
    Maximizer of `E(., t)` on `[0, 1)` by bounded scalar search.

    >>> abs(argmax_profile(0.6) - 1 / 3) < 1e-6
    True
    """
    _check_t(t)
    result = minimize_scalar(
        lambda r: -profile_E(r, t), bounds=(0.0, 1.0 - 1e-12), method="bounded", options={"xatol": xatol}
    )
    return float(result.x)


def brute_force_nt(t, points=10**6):
    """
    Largest value of `E(., t)` on `points` equidistant radii in `[0, 1)`.

    >>> abs(brute_force_nt(0.1) - n_t(0.1)) < 1e-8
    True
    """
    radii = np.arange(points) / points
    return float(np.max(profile_E(radii, t)))


class SharpnessFamily:
    """
    Member `t` of the family with its extremal radius and profile maximum.

    >>> member = SharpnessFamily(0.6)
    >>> round(member.r0, 12), round(member.nt, 12)
    (0.333333333333, 3.444444444444)
    >>> member.map().name
    'mobius_family(0.6)'
    """

    def __init__(self, t):
        _check_t(t)
        self.t = float(t)
        self.r0 = float(extremal_radius(t))
        self.nt = float(n_t(t))
        if self.nt > 7:  # pragma: no cover
            raise AssertionError("N_t exceeds 7 for t=%r." % (t,))

    def __repr__(self):
        return _repr(self)

    def profile(self, r):
        """`E(r)` of this member."""
        return profile_E(r, self.t)

    def map(self):
        """The catalog map of this member."""
        # pylint: disable=C0415
        from ..maps import catalog

        return catalog("mobius_family(%r)" % (self.t,)).map
