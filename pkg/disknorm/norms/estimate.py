import cmath

from ..util import _repr

KINDS = (
    "preschwarzian_analytic",
    "preschwarzian_logharmonic",
    "preschwarzian_harmonic",
    "preschwarzian_associated",
    "schwarzian_analytic",
    "schwarzian_harmonic",
    "bloch_analytic",
    "bloch_logharmonic",
    "bloch_harmonic",
    "hyperbolic_sup",
)


class NormEstimate:
    """
    Result of :any:`weighted_sup`.

    Args:
        value (float): largest sampled weighted objective, a lower bound of the supremum.
        r (float): radius of the maximizer.
        theta (float): angle of the maximizer in `[0, 2 pi)`.
        trace (list): running maximum after every ring, then after the refinement.

    Keyword Args:
        converged (bool): the refinement moved the value by less than `abs_tol`, the
            ring maxima do not diverge and at most one percent of the samples were skipped.
        kind (str): one of :any:`KINDS` or `None` for raw objectives.
        skipped (int): samples without a finite value.
        samples (int): number of samples.

    >>> est = NormEstimate(2.0, 0.5, 0.0, [1.0, 2.0], converged=True, kind="bloch_analytic", samples=9)
    >>> est
    NormEstimate(value=2.0, r=0.5, theta=0.0, converged=True, kind='bloch_analytic', skipped=0, samples=9)
    >>> est.location
    (0.5, 0.0)
    >>> est.z
    (0.5+0j)
    """

    def __init__(self, value, r, theta, trace, converged=False, kind=None, skipped=0, samples=0):
        # pylint: disable=R0913
        if kind is not None and kind not in KINDS:
            raise ValueError("Unknown norm kind %r." % (kind,))
        self.value = value
        self.r = r
        self.theta = theta
        self.trace = trace
        self.converged = converged
        self.kind = kind
        self.skipped = skipped
        self.samples = samples

    def __repr__(self):
        args = ["%s=%r" % (key, getattr(self, key)) for key in ("value", "r", "theta", "converged", "kind")]
        args += ["skipped=%r" % (self.skipped,), "samples=%r" % (self.samples,)]
        return "%s(%s)" % (self.__class__.__name__, ", ".join(args))

    def __eq__(self, other):
        return isinstance(other, NormEstimate) and self.__dict__ == other.__dict__

    __hash__ = None

    @property
    def location(self):
        """Maximizer in polar coordinates `(r, theta)`."""
        return (self.r, self.theta)

    @property
    def z(self):
        """Maximizer as a complex number."""
        return cmath.rect(self.r, self.theta)

    @property
    def skipped_ratio(self):
        return self.skipped / self.samples if self.samples else 0.0


class RingTrace:
    """Ring maxima of one :any:`weighted_sup` run, for the divergence test."""

    def __init__(self, ratio=1.2, window=3, floor=1e-9):
        self.maxima = []
        self.ratio = ratio
        self.window = window
        self.floor = floor

    def __repr__(self):
        return _repr(self)

    def append(self, value):
        self.maxima.append(value)

    @property
    def diverging(self):
        """
        The last `window` consecutive ratios of ring maxima are all at least `ratio`.

        Maxima below `floor` never count as growth.

        >>> trace = RingTrace()
        >>> for value in (1, 2, 4, 8):
        ...     trace.append(value)
        >>> trace.diverging
        True
        >>> trace.append(8.5)
        >>> trace.diverging
        False
        """
        tail = self.maxima[-(self.window + 1) :]
        if len(tail) <= self.window:
            return False
        for previous, current in zip(tail, tail[1:]):
            if not (previous > self.floor and current >= self.ratio * previous):
                return False
        return True
