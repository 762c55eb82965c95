# -*- coding: utf-8 -*-
import cmath
import math

import numpy as np

from disknorm.expr import PoleEncounteredError, evaluate, parse
from disknorm.maps import (
    CATALOG,
    DegenerateFunctionError,
    HarmonicMap,
    InvalidExponentError,
    LogharmonicMap,
    MapError,
    MapSpecError,
    NormalizationError,
    NotSensePreservingError,
    RadialBranch,
    UnknownCatalogNameError,
    affine_transform_log,
    associated_pre_schwarzian_grid,
    automorphism,
    blaschke_product,
    catalog,
    coanalytic_from_dilatation,
    eval_pre_schwarzian_harmonic,
    eval_pre_schwarzian_logharmonic,
    eval_schwarzian_harmonic,
    hyperbolic_derivative,
    hyperbolic_derivative_grid,
    jacobian_logharmonic,
    jacobian_logharmonic_grid,
    koebe_transform_log,
    pde_residual,
    power_construct,
    pre_schwarzian_analytic,
    pre_schwarzian_logharmonic_grid,
    radial_integral,
    schwarzian_analytic,
    schwarzian_harmonic_grid,
)

from .helper import assert_raises, close_, eq_


def geometric_gap():
    return LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"), name="geometric_gap")


def test_logharmonic():
    f = geometric_gap()
    eq_(f.name, "geometric_gap")
    eq_(f.flags, {"h_locally_univalent": True, "g_nonvanishing": True, "sense_preserving": True})
    for z in (0, 0.5, -0.3 + 0.6j):
        close_(evaluate(f.omega, z), z)
    close_(f.value(0.5), 4 * math.exp(-0.5))
    close_(f.value(0.5j), 1 / (1 - 0.5j) * (cmath.exp(-0.5j) / (1 - 0.5j)).conjugate())
    eq_(repr(f), "LogharmonicMap(h=Expr('1/(1 - z)'), g=Expr('exp(-z)/(1 - z)'), name='geometric_gap')")


def test_logharmonic_from_dilatation():
    """Without g the co-analytic part comes from the dilatation."""
    f = LogharmonicMap(parse("1/(1-z)"), omega=parse("z"))
    eq_(f.g, None)
    for z in (0.5, -0.4j, 0.2 + 0.3j):
        close_(f.g_value(z), cmath.exp(-z) / (1 - z), 1e-9)
    close_(f.value(0.5), geometric_gap().value(0.5), 1e-9)
    eq_(repr(f), "LogharmonicMap(h=Expr('1/(1 - z)'), omega=Expr('z'))")


def test_logharmonic_invalid():
    with assert_raises(MapSpecError, "A logharmonic map needs g or omega."):
        LogharmonicMap(parse("1/(1-z)"))
    with assert_raises(DegenerateFunctionError, "h' vanishes identically."):
        LogharmonicMap(parse("1"), parse("1"))
    with assert_raises(NotSensePreservingError, "Map is not sense-preserving: |omega(0j)| = 2.0."):
        LogharmonicMap(parse("exp(z)"), parse("exp(2*z)"))
    f = LogharmonicMap(parse("exp(z)"), parse("exp(2*z)"), validate=False)
    eq_(f.flags["sense_preserving"], False)
    try:
        LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"), omega=parse("z/2"))
    except MapSpecError as exc:
        assert str(exc).startswith("Dilatation Expr('z/2') does not match"), str(exc)
    else:  # pragma: no cover
        assert False


def test_logharmonic_from_log_derivative():
    f = LogharmonicMap.from_log_derivative(parse("1/(1-0.5*z)"))
    eq_(f.h, None)
    close_(f.h_value(0.5), 1 / 0.75**2, 1e-10)
    close_(evaluate(f.h_pre_schwarzian, 0), 1.5)
    close_(f.g_series[1], 0)
    close_(f.g_series[2], 0.5)
    assert repr(f).startswith("LogharmonicMap(h_logderiv=")


def test_logharmonic_compose():
    """Precomposition with a disk automorphism."""
    phi = automorphism(0.3)
    f = geometric_gap()
    for z in (0.2, -0.1 + 0.4j):
        w = evaluate(phi, z)
        close_(f.compose(phi).value(z), f.value(w), 1e-12)
    g = LogharmonicMap(parse("1/(1-z)"), omega=parse("z"), name="omega_only")
    composed = g.compose(phi)
    eq_(composed.name, "omega_only o phi")
    for z in (0.2, -0.1 + 0.4j):
        close_(composed.value(z), g.value(evaluate(phi, z)), 1e-8)


def test_log_map():
    """log f is harmonic with H' = h'/h and G' = g'/g."""
    F = geometric_gap().log_map()
    eq_(F.name, "log geometric_gap")
    series = F.H_series(3)
    for index, expected in enumerate((0, 1, 0.5, 1 / 3)):
        close_(series[index], expected)
    close_(F.value(0.5), 2 * math.log(2) - 0.5, 1e-9)


def test_harmonic():
    f = HarmonicMap(parse("z"), parse("z^2/4"))
    eq_(f.is_analytic, False)
    close_(f.value(0.5), 0.5625)
    close_(f.value(0.5j), 0.5j + (-0.0625 + 0j).conjugate())
    close_(evaluate(f.omega, 0.4), 0.2)
    eq_(repr(f), "HarmonicMap(Expr('z'), Expr('z^2/4'))")
    g = HarmonicMap(parse("z"), name="id")
    eq_(g.is_analytic, True)
    eq_(repr(g), "HarmonicMap(Expr('z'), Expr('0'), name='id')")
    h = HarmonicMap(parse("z"), omega=parse("z/2"))
    eq_(repr(h.G_series(3)), "TaylorSeries([0, 0, 0.25, 0])")
    close_(h.value(0.5), 0.5625, 1e-10)
    eq_(h.flags, {"H_locally_univalent": True, "sense_preserving": True})


def test_harmonic_invalid():
    with assert_raises(DegenerateFunctionError, "H' vanishes identically."):
        HarmonicMap(parse("2"))
    with assert_raises(NotSensePreservingError, "Map is not sense-preserving: |omega(0j)| = 2.0."):
        HarmonicMap(parse("z"), parse("2*z"))
    try:
        HarmonicMap(parse("z"), parse("z^2/4"), omega=parse("z"))
    except MapSpecError as exc:
        assert str(exc).startswith("Dilatation Expr('z') does not match"), str(exc)
    else:  # pragma: no cover
        assert False


def test_derived_logharmonic():
    """P_f = 2/(1-z) + z/(1-z) - conj(z)/(1-|z|^2) for the geometric gap map."""
    f = geometric_gap()
    close_(eval_pre_schwarzian_logharmonic(f, 0), 2)
    close_(eval_pre_schwarzian_logharmonic(f, 0.5), 5 - 0.5 / 0.75)
    values = pre_schwarzian_logharmonic_grid(f, [0, 0.5, 1])
    close_(values[1], 5 - 0.5 / 0.75)
    eq_(np.isnan(values).tolist(), [False, False, True])
    close_(associated_pre_schwarzian_grid(f, [0.5])[0], 5)
    close_(jacobian_logharmonic(f, 0), 1)
    close_(jacobian_logharmonic_grid(f, [0.5])[0], 64 * math.exp(-1) * 0.75, 1e-12)
    assert pde_residual(f, 0.3 + 0.4j) < 1e-10
    with assert_raises(PoleEncounteredError, "Pole encountered at z=(1+0j)."):
        eval_pre_schwarzian_logharmonic(f, 1)


def test_kernels_near_boundary():
    """Extremal values on the radius to 1 survive evaluation at r = 1 - 1e-8."""
    r = 1 - 1e-8
    weight = 1 - r * r
    # (1 - r^2) P_f(r) = 2 + 2r + r^2 for h = 1/(1-z), omega = z
    values = pre_schwarzian_logharmonic_grid(catalog("geometric_gap").map, [r])
    close_(weight * abs(values[0]), 5, 1e-6)
    close_(weight * evaluate(pre_schwarzian_analytic(parse("z/(1-z)^2")), r).real, 6, 1e-6)
    f = catalog("koebe_power(2, 1)").map
    eq_(f.flags, {"h_locally_univalent": True, "g_nonvanishing": True, "sense_preserving": True})
    close_(weight * evaluate(f.h_logderiv, r).real, 12, 1e-6)
    assert np.isfinite(pre_schwarzian_logharmonic_grid(f, [r, -r, 1j * r])).all()


def test_derived_harmonic():
    f = HarmonicMap(parse("-log(1-z)"), omega=parse("z"))
    close_(eval_pre_schwarzian_harmonic(f, 0), 1)
    close_(eval_pre_schwarzian_harmonic(f, 0.5), 2 - 0.5 / 0.75)
    close_(eval_schwarzian_harmonic(HarmonicMap(parse("exp(z)")), 0.4), -0.5)
    close_(schwarzian_harmonic_grid(HarmonicMap(parse("z")), [0.3])[0], 0)


def test_analytic():
    close_(evaluate(pre_schwarzian_analytic(parse("1/(1-z)")), 0.5), 4)
    close_(evaluate(schwarzian_analytic(parse("z/(1-z)^2")), 0), -6)
    with assert_raises(DegenerateFunctionError, "h' vanishes identically up to order 64."):
        pre_schwarzian_analytic(parse("exp(z) - exp(z)"))
    eq_(repr(coanalytic_from_dilatation(parse("z/(1-z)"), parse("z"), 3)), "TaylorSeries([1, 1, 1, 1])")


def test_automorphism():
    phi = automorphism(0.5)
    close_(evaluate(phi, 0.5), 0)
    close_(abs(evaluate(phi, cmath.exp(0.7j))), 1)
    close_(evaluate(automorphism(0.5j, rotation=-1), 0), 0.5j)
    with assert_raises(ValueError, "Automorphism needs |alpha| < 1, got (1+0j)."):
        automorphism(1)
    b = blaschke_product([0, 0.5])
    close_(evaluate(b, 0.5), 0)
    close_(abs(evaluate(b, -1j)), 1)


def test_hyperbolic_derivative():
    close_(hyperbolic_derivative(parse("z"), 0.5), 1)
    close_(hyperbolic_derivative(parse("z^2"), 0.5), 0.8)
    close_(hyperbolic_derivative(automorphism(0.3), 0.6), 1)
    values = hyperbolic_derivative_grid(parse("2*z"), [0, 0.6])
    close_(values[0], 2)
    eq_(np.isnan(values).tolist(), [False, True])
    with assert_raises(NotSensePreservingError, "Map is not sense-preserving: |omega((0.6+0j))| = 1.2."):
        hyperbolic_derivative(parse("2*z"), 0.6)


def test_radial_integral():
    values = radial_integral(parse("1/(1+z)"), [0.5, -0.5j, 0])
    close_(values[0], math.log(1.5), 1e-10)
    close_(values[1], cmath.log(1 - 0.5j), 1e-10)
    close_(values[2], 0)
    eq_(radial_integral(parse("z"), np.zeros((2, 3))).shape, (2, 3))
    eq_(radial_integral(parse("z"), []).shape, (0,))
    eq_(np.isnan(radial_integral(parse("1/(z - z)"), [0.5])).tolist(), [True])
    with assert_raises(PoleEncounteredError, "Pole encountered at z=(0.5+0j)."):
        radial_integral(parse("1/(z - z)"), [0.5], strict=True)


def test_radial_branch():
    """The continued logarithm stays analytic across the principal cut."""
    branch = RadialBranch(parse("-2/(1-z)"), 0)
    close_(branch.value(0.5), 0.25, 1e-10)
    close_(branch.log(-0.5), 2 * cmath.log(1.5), 1e-10)
    eq_(repr(RadialBranch(parse("z"), 1)), "RadialBranch(Expr('z'), (1+0j))")
    # the principal log of (z - 2)^3 jumps on the real axis
    u = RadialBranch(parse("3/(z - 2)"), 3 * cmath.log(-2))
    for z in (0.9j, -0.9j, -0.9):
        close_(u.value(z), (z - 2) ** 3, 1e-8)


def test_power_construct():
    k = parse("z/(1-z)^2")
    f = power_construct(k, k, 2, 1, name="k")
    eq_(f.name, "k")
    close_(evaluate(f.omega, 0.3), 0.5)
    close_(f.value(0.5) / 1728, 1, 1e-9)
    g = power_construct(parse("exp(z)"), parse("exp(z/2)"), 1, 1)
    close_(evaluate(g.omega, 0.7j), 0.5)
    close_(g.value(0.3), 0.5 * math.exp(0.45), 1e-9)
    with assert_raises(InvalidExponentError, "Exponents must be positive, got 1 and 0."):
        power_construct(k, k, 1, 0)
    with assert_raises(DegenerateFunctionError, "H'' vanishes identically."):
        power_construct(parse("z"), k, 1, 1)


def test_affine_transform_log():
    f = geometric_gap()
    eq_(affine_transform_log(f, 0).H_prime, f.h_logderiv)
    F = affine_transform_log(f, 0.3, name="affine")
    eq_(F.name, "affine")
    close_(evaluate(F.H_prime, 0), 1)
    close_(evaluate(F.G_prime, 0), 0.3)
    with assert_raises(ValueError, "Affine transform needs |s| < 1, got (1+0j)."):
        affine_transform_log(f, 1)


def test_koebe_transform_log():
    """The dilatation of the transform at the origin is omega(-alpha)."""
    f = geometric_gap()
    eq_(koebe_transform_log(f, 0).G_prime, f.g_logderiv)
    F = koebe_transform_log(f, 0.4)
    close_(evaluate(F.H_prime, 0), 1)
    close_(evaluate(F.G_prime, 0), -0.4)


def test_transform_normalization():
    f = catalog("exp_h").map
    for transform in (affine_transform_log, koebe_transform_log):
        try:
            transform(f, 0.2)
        except NormalizationError as exc:
            assert str(exc).startswith("Map is not normalized: "), str(exc)
        else:  # pragma: no cover
            assert False


def test_catalog():
    eq_(
        list(CATALOG),
        ["geometric_gap", "rational_gap", "mobius_family", "koebe_power", "exp_h", "identity", "pole_family"],
    )
    entry = catalog("geometric_gap")
    eq_(entry.name, "geometric_gap")
    eq_(entry.expected["pre_schwarzian"].value, 5.0)
    eq_(entry.expected["pre_schwarzian"].sense, "equal")
    eq_(catalog(" exp_h ( 0.5 ) ").name, "exp_h(0.5)")
    eq_(catalog("pole_family(0.5)").expected["pre_schwarzian"].sense, "upper")
    eq_(catalog("koebe_power(2, 1)").expected["log_bloch_h"].value, 12.0)
    mobius = catalog("mobius_family(0.5)")
    close_(evaluate(mobius.map.omega, 0), 0.5)
    close_(mobius.map.g_value(0), 1, 1e-12)


def test_catalog_invalid():
    for name in ("unknown", "mobius_family(a)", "identity(1)", "exp_h(1, 2)", "geometric_gap("):
        with assert_raises(UnknownCatalogNameError, "Unknown catalog name %r." % (name,)):
            catalog(name)
    with assert_raises(MapSpecError, "mobius_family needs 0 < t < 1, got 2.0."):
        catalog("mobius_family(2)")
    with assert_raises(MapSpecError, "pole_family needs |c| < 1, got 1.0."):
        catalog("pole_family(1)")
    assert issubclass(UnknownCatalogNameError, MapError)


def test_catalog_aliases():
    eq_(catalog("thm31_ex1").name, "geometric_gap")
    eq_(catalog("thm31_ex2").name, "rational_gap")
    entry = catalog("thm36_family(0.5)")
    eq_(entry.name, "mobius_family(0.5)")
    eq_(entry.expected, catalog("mobius_family(0.5)").expected)
    for name in ("thm31_ex1(1)", "thm36_family", "thm99"):
        with assert_raises(UnknownCatalogNameError, "Unknown catalog name %r." % (name,)):
            catalog(name)
