import numpy as np

from ..util import _repr


class SupConfig:
    """
    Sampling and refinement settings of :any:`weighted_sup`.

    Keyword Args:
        radial_levels (int): number of radii `r_k = 1 - 2^(-k/2)`, starting at `r_0 = 0`.
        r_max (float): largest radius, `r_max < 1`. Radii are capped there and a final
            boundary ring is sampled at `r_max`.
        angular_base (int): angles on the first ring, doubled every four levels.
        refine_iters (int): iteration limit of every scalar search of the refinement.
        abs_tol (float): convergence tolerance.

    >>> cfg = SupConfig(radial_levels=4, angular_base=8)
    >>> cfg
    SupConfig(abs_tol=0.0001, angular_base=8, r_max=0.99999999, radial_levels=4, refine_iters=60)
    >>> [(round(r, 6), n) for r, n in cfg.rings()]
    [(0.0, 1), (0.292893, 8), (0.5, 8), (0.646447, 8), (0.99999999, 8)]
    >>> SupConfig(r_max=1)
    Traceback (most recent call last):
      ...
    ValueError: r_max must lie in (0, 1), got 1.
    """

    def __init__(self, radial_levels=24, r_max=1 - 1e-8, angular_base=128, refine_iters=60, abs_tol=1e-4):
        # pylint: disable=R0913
        if not 0 < r_max < 1:
            raise ValueError("r_max must lie in (0, 1), got %r." % (r_max,))
        for key, value in (("radial_levels", radial_levels), ("angular_base", angular_base)):
            if int(value) != value or value < 1:
                raise ValueError("%s must be a positive integer, got %r." % (key, value))
        if refine_iters < 0 or abs_tol <= 0:
            raise ValueError("refine_iters must be nonnegative and abs_tol positive.")
        self.radial_levels = int(radial_levels)
        self.r_max = float(r_max)
        self.angular_base = int(angular_base)
        self.refine_iters = int(refine_iters)
        self.abs_tol = float(abs_tol)

    def __repr__(self):
        return _repr(self)

    def __eq__(self, other):
        return isinstance(other, SupConfig) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash(tuple(sorted(self.__dict__.items())))

    def replace(self, **kwargs):
        """Copy with some settings replaced."""
        settings = dict(self.__dict__)
        settings.update(kwargs)
        return SupConfig(**settings)

    def radius(self, level):
        """`r_k = 1 - 2^(-k/2)`, capped at `r_max`."""
        return min(1.0 - 2.0 ** (-level / 2.0), self.r_max)

    def angles(self, level):
        """Number of angles on ring `level`."""
        return self.angular_base * 2 ** (level // 4)

    def rings(self):
        """
        Yield `(radius, angles)` of every ring in scan order.

        The origin is a single sample. Rings stop at `r_max`, which closes the ladder.
        """
        yield 0.0, 1
        count = self.angular_base
        for level in range(1, self.radial_levels):
            radius = self.radius(level)
            if radius >= self.r_max:
                break
            count = self.angles(level)
            yield radius, count
        yield self.r_max, count

    def grid(self, radii=None, angles=None):
        """
        Uniform dump grid of `radii` ladder radii times `angles` angles as `(r, theta)` arrays.

        >>> r, theta = SupConfig().grid(2, 2)
        >>> r.tolist(), (theta / np.pi).tolist()
        ([0.0, 0.0, 0.2928932188134524, 0.2928932188134524], [0.0, 1.0, 0.0, 1.0])
        """
        radii = self.radial_levels if radii is None else radii
        angles = self.angular_base if angles is None else angles
        rs = np.array([self.radius(level) for level in range(radii)])
        thetas = 2 * np.pi * np.arange(angles) / angles
        return np.repeat(rs, angles), np.tile(thetas, radii)
