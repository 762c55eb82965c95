"""
Weighted Suprema over the Unit Disk.

:any:`weighted_sup` estimates `sup (1 - |z|^2)^p objective(z)` by sampling rings
of a geometric radius ladder and refining the best sample with bounded scalar
searches. The result is the largest value sampled and therefore a lower bound.

Objectives take an array of complex points and return real values of the same
shape, `nan` where they are undefined. Such samples are skipped and counted.
"""

import logging

import numpy as np
from scipy.optimize import minimize_scalar

from .. import config
from .estimate import NormEstimate, RingTrace
from .exceptions import NoFiniteSamplesError
from .supconfig import SupConfig

# Share of skipped samples above which an estimate counts as unconverged.
SKIP_LIMIT = 0.01

# Limit on the alternating theta and r searches of the refinement.
REFINE_ROUNDS = 16


def _weight(r, weight_power):
    return ((1.0 - r) * (1.0 + r)) ** weight_power


def _samples(objective, weight_power, radius, thetas):
    zs = radius * np.exp(1j * thetas)
    with np.errstate(all="ignore"):
        values = np.asarray(objective(zs), dtype=float).reshape(thetas.shape) * _weight(radius, weight_power)
    return np.where(np.isfinite(values), values, np.nan)


def _sample(objective, weight_power, r, theta):
    value = _samples(objective, weight_power, r, np.array([theta]))[0]
    return value if np.isfinite(value) else -np.inf


def weighted_sup(objective, weight_power, cfg=None, kind=None):
    """
    Estimate `sup (1 - |z|^2)^weight_power objective(z)` over the unit disk.

    Args:
        objective: vectorized real function of complex points, `nan` where undefined.
        weight_power (int): 0, 1 or 2. Power 0 is for objectives carrying their own weight.

    Keyword Args:
        cfg (SupConfig): sampling settings, defaults to `SupConfig()`.
        kind (str): label of the quantity, see :any:`KINDS`.

    The rings are scanned radius-major and angle-minor. The first maximal sample
    wins. The refinement alternates a search in `theta` over the neighbouring
    angles and a search in `r` between the neighbouring rings until a round stops
    improving. Only strict improvements are accepted.

    >>> import numpy as np
    >>> cfg = SupConfig(radial_levels=12, angular_base=16)
    >>> est = weighted_sup(lambda zs: np.ones(zs.shape), 1, cfg)
    >>> est.value, est.location, est.converged
    (1.0, (0.0, 0.0), True)
    >>> weighted_sup(lambda zs: np.zeros(zs.shape), 2, cfg).value
    0.0
    >>> est = weighted_sup(lambda zs: np.abs(1 / (1 - zs)), 1, cfg)
    >>> abs(est.value - 2) < 1e-6, est.converged
    (True, True)
    >>> weighted_sup(lambda zs: np.full(zs.shape, np.nan), 1, cfg)
    Traceback (most recent call last):
      ...
    disknorm.norms.exceptions.NoFiniteSamplesError: No finite sample among 497.
    """
    # pylint: disable=R0914
    cfg = cfg or SupConfig()
    if weight_power not in (0, 1, 2):
        raise ValueError("weight_power must be 0, 1 or 2, got %r." % (weight_power,))
    logger = logging.getLogger(__name__)
    rings = list(cfg.rings())
    best, best_level, best_theta = -np.inf, None, None
    trace, maxima = [], RingTrace()
    skipped = samples = 0
    for level, (radius, count) in enumerate(rings):
        thetas = 2 * np.pi * np.arange(count) / count
        values = _samples(objective, weight_power, radius, thetas)
        finite = int(np.isfinite(values).sum())
        samples += count
        skipped += count - finite
        ring_max = np.nan
        if finite:
            index = int(np.nanargmax(values))
            ring_max = float(values[index])
            maxima.append(ring_max)
            if ring_max > best:
                best, best_level, best_theta = ring_max, level, float(thetas[index])
        if best_level is not None:
            trace.append(best)
        logger.debug("Level %d: r=%.12g, %d angles, ring max %r, running max %r.", level, radius, count, ring_max, best)
    if best_level is None:
        raise NoFiniteSamplesError("No finite sample among %d." % (samples,))
    best, best_r, best_theta = _refine(objective, weight_power, cfg, rings, best, best_level, best_theta)
    trace.append(best)
    if config.ASSERTIONS:  # pragma: no branch
        assert all(a <= b for a, b in zip(trace, trace[1:])), "Running maximum decreased: %r" % (trace,)
    converged = trace[-1] - trace[-2] < cfg.abs_tol and not maxima.diverging and skipped <= SKIP_LIMIT * samples
    logger.debug(
        "Refined to %.15g at r=%.15g, theta=%.15g (converged=%s, skipped %d of %d).",
        best,
        best_r,
        best_theta,
        converged,
        skipped,
        samples,
    )
    return NormEstimate(best, best_r, best_theta, trace, converged=converged, kind=kind, skipped=skipped, samples=samples)


def _refine(objective, weight_power, cfg, rings, best, level, theta):
    # pylint: disable=R0913
    radii = np.array([radius for radius, _ in rings])
    r = float(radii[level])
    options = {"maxiter": cfg.refine_iters, "xatol": 1e-14}
    if cfg.refine_iters == 0:
        return best, r, theta
    for _ in range(REFINE_ROUNDS):
        start = best
        if r > 0:
            step = 2 * np.pi / rings[level][1]
            result = minimize_scalar(
                lambda t, r=r: -_sample(objective, weight_power, r, t),
                bounds=(theta - step, theta + step),
                method="bounded",
                options=options,
            )
            if -result.fun > best:
                best, theta = float(-result.fun), float(result.x) % (2 * np.pi)
        low, high = radii[max(level - 1, 0)], radii[min(level + 1, len(radii) - 1)]
        if high > low:
            result = minimize_scalar(
                lambda s, theta=theta: -_sample(objective, weight_power, s, theta),
                bounds=(low, high),
                method="bounded",
                options=options,
            )
            if -result.fun > best:
                best, r = float(-result.fun), float(result.x)
                level = int(np.abs(radii - r).argmin())
        if best - start <= 1e-12 * max(1.0, abs(best)):
            break
    return best, r, theta


def objective_grid(objective, weight_power, cfg=None, grid=None):
    """
    Weighted objective on the uniform dump grid of :any:`SupConfig.grid`.

    Keyword Args:
        grid (tuple): `(radii, angles)`, defaults to `(cfg.radial_levels, cfg.angular_base)`.

    Returns `(r, theta, value)` arrays, radius-major, `nan` where undefined.

    >>> r, theta, value = objective_grid(lambda zs: np.ones(zs.shape), 1, grid=(1, 1))
    >>> r.tolist(), theta.tolist(), value.tolist()
    ([0.0], [0.0], [1.0])
    """
    cfg = cfg or SupConfig()
    radii, angles = grid if grid is not None else (cfg.radial_levels, cfg.angular_base)
    rs, thetas = cfg.grid(radii, angles)
    zs = rs * np.exp(1j * thetas)
    with np.errstate(all="ignore"):
        values = np.asarray(objective(zs), dtype=float).reshape(zs.shape) * _weight(rs, weight_power)
    return rs, thetas, np.where(np.isfinite(values), values, np.nan)
