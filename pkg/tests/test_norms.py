# -*- coding: utf-8 -*-
import math

import numpy as np

from disknorm.expr import parse
from disknorm.maps import HarmonicMap, LogharmonicMap, NotSensePreservingError, automorphism, catalog
from disknorm.norms import (
    analytic_part_pre_schwarzian_norm,
    associated_pre_schwarzian_norm,
    bloch_seminorm_analytic,
    bloch_seminorm_harmonic,
    hyperbolic_sup,
    log_bloch_seminorm,
    logharmonic_bloch_norm,
    norm_objective,
    pre_schwarzian_norm,
    schwarzian_norm,
)

from .helper import FAST, assert_raises, close_, eq_


def test_pre_schwarzian_norm():
    """Catalog values are attained on the radius to 1."""
    f = catalog("geometric_gap").map
    est = pre_schwarzian_norm(f, FAST)
    eq_(est.kind, "preschwarzian_logharmonic")
    close_(est.value, 5, 1e-6)
    close_(est.z, FAST.r_max, 1e-6)
    est = associated_pre_schwarzian_norm(f, FAST)
    eq_(est.kind, "preschwarzian_associated")
    close_(est.value, 6, 1e-6)
    close_(analytic_part_pre_schwarzian_norm(f, FAST).value, 4, 1e-6)
    close_(pre_schwarzian_norm(catalog("rational_gap").map, FAST).value, 5, 1e-6)


def test_pre_schwarzian_norm_analytic():
    est = pre_schwarzian_norm(parse("z/(1-z)^2"), FAST)
    eq_(est.kind, "preschwarzian_analytic")
    close_(est.value, 6, 1e-6)
    close_(pre_schwarzian_norm(catalog("exp_h(0.5)").map, FAST).value, 0.5, 1e-12)


def test_pre_schwarzian_norm_harmonic():
    """(1 - |z|^2)|P_f| = |(1 - conj(z))/(1 - z)| = 1 for H = -log(1-z), omega = z."""
    f = HarmonicMap(parse("-log(1-z)"), omega=parse("z"))
    est = pre_schwarzian_norm(f, FAST)
    eq_(est.kind, "preschwarzian_harmonic")
    close_(est.value, 1, 1e-6)


def test_schwarzian_norm():
    close_(schwarzian_norm(parse("exp(z)"), FAST).value, 0.5, 1e-12)
    est = schwarzian_norm(HarmonicMap(parse("exp(z)")), FAST)
    eq_(est.kind, "schwarzian_harmonic")
    close_(est.value, 0.5, 1e-12)
    close_(schwarzian_norm(parse("z/(1-z)^2"), FAST).value, 6, 1e-6)
    assert schwarzian_norm(automorphism(0.5), FAST).value < 1e-12


def test_norm_type_errors():
    f = LogharmonicMap(parse("exp(z)"), parse("1"))
    with assert_raises(TypeError, "Cannot take the Schwarzian norm of %r." % (f,)):
        schwarzian_norm(f, FAST)
    with assert_raises(TypeError, "Cannot take the pre-Schwarzian norm of 'z'."):
        pre_schwarzian_norm("z", FAST)
    with assert_raises(TypeError, "Cannot take the bloch_analytic norm of %r." % (f,)):
        norm_objective("bloch_analytic", f)
    with assert_raises(ValueError, "Unknown norm kind 'nope'."):
        norm_objective("nope", parse("z"))


def test_bloch():
    close_(bloch_seminorm_analytic(parse("z"), FAST).value, 1)
    close_(bloch_seminorm_analytic(parse("-log(1-z)"), FAST).value, 2, 1e-6)
    f = catalog("geometric_gap").map
    for part in ("h", "g"):
        est = log_bloch_seminorm(f, part, FAST)
        eq_(est.kind, "bloch_analytic")
        close_(est.value, 2, 1e-6)
    with assert_raises(ValueError, "part must be 'h' or 'g', got 'x'."):
        log_bloch_seminorm(f, "x", FAST)


def test_logharmonic_bloch_norm():
    """(1 - r^2)(|h'/h| + |g'/g|) = (1 + r)^2 on the radius to 1, and |f(0)| = 1."""
    est, norm = logharmonic_bloch_norm(catalog("geometric_gap").map, FAST)
    eq_(est.kind, "bloch_logharmonic")
    close_(est.value, 4, 1e-6)
    close_(norm, 5, 1e-6)


def test_bloch_harmonic():
    """(1 - r^2)(1 + r/2) peaks inside the disk."""
    r = (math.sqrt(7) - 2) / 3
    est = bloch_seminorm_harmonic(HarmonicMap(parse("z"), parse("z^2/4")), FAST)
    eq_(est.kind, "bloch_harmonic")
    close_(est.value, (1 - r**2) * (1 + r / 2), 1e-9)
    close_(est.r, r, 1e-4)


def test_hyperbolic_sup():
    """Automorphisms are hyperbolic isometries."""
    est = hyperbolic_sup(automorphism(0.3), FAST)
    eq_(est.kind, "hyperbolic_sup")
    close_(est.value, 1, 1e-6)
    close_(hyperbolic_sup(parse("z^2"), FAST).value, 1, 1e-6)
    with assert_raises(NotSensePreservingError, "Map is not sense-preserving: |omega(0j)| = 2.0."):
        hyperbolic_sup(parse("2 + z"), FAST)


def test_norm_objective():
    """Objectives are shared by estimates and grid dumps."""
    f = catalog("geometric_gap").map
    objective, weight_power = norm_objective("preschwarzian_logharmonic", f)
    eq_(weight_power, 1)
    close_(objective(np.array([0.5]))[0], 5 - 0.5 / 0.75)
    objective, weight_power = norm_objective("preschwarzian_analytic", f)
    close_(objective(np.array([0.5]))[0], 4)
    objective, weight_power = norm_objective("bloch_logharmonic", f)
    close_(objective(np.array([0.5]))[0], 3)
    objective, weight_power = norm_objective("hyperbolic_sup", parse("z^2"))
    eq_(weight_power, 0)
    close_(objective(np.array([0.5]))[0], 0.8)
    eq_(norm_objective("schwarzian_harmonic", f.log_map())[1], 2)
