"""
Check Suites.

* :any:`known_value_suite`: known values and bounds of the catalog maps.
* :any:`property_suite`: seeded randomized identities behind the norm estimates.
"""

import logging

import numpy as np

from ..expr import Z, const, differentiate, evaluate, evaluate_grid, exp, parse, substitute
from ..maps import (
    LogharmonicMap,
    automorphism,
    blaschke_product,
    catalog,
    eval_pre_schwarzian_logharmonic,
    hyperbolic_derivative_grid,
    pde_residual,
    validation_grid,
)
from ..norms import SupConfig, bloch_seminorm_analytic, hyperbolic_sup, logharmonic_bloch_norm
from .checks import (
    check_analytic_part_gap,
    check_associated_class_bound,
    check_associated_gap,
    check_becker_condition,
    check_bloch_equivalence,
    check_coefficient_bound,
    check_family_formula,
    check_pole_family,
    check_power_growth,
    check_schwarzian_regressions,
    check_uniform_local_univalence,
    convex_log,
    koebe_log_derivative,
)
from .report import Check

DEFAULT_SEED = 42

CATALOG_SAMPLES = (
    "geometric_gap",
    "rational_gap",
    "mobius_family(0.5)",
    "koebe_power(1, 0.5)",
    "exp_h",
    "identity",
    "pole_family(0.5)",
)

FAMILY_TS = (0.5, 0.9, 0.999)

# Slack of the gap inequalities on catalog maps.
GAP_TOL = 2e-3


def known_value_suite(cfg=None, tol=1e-3):
    """
    Known values and bounds: the gap examples, the sharpness family, Koebe growth,
    coefficient bounds and Schwarzian regressions.
    """
    cfg = cfg or SupConfig()
    logging.getLogger(__name__).info("Running the known-value suite with tol=%r.", tol)
    geometric = catalog("geometric_gap")
    rational = catalog("rational_gap")
    family = catalog("mobius_family(0.5)")
    identity = catalog("identity")
    reports = [
        check_associated_gap(geometric.map, cfg, tol, geometric.expected),
        check_associated_gap(rational.map, cfg, tol, rational.expected),
        check_associated_class_bound(rational.map, "univalent", cfg, tol),
        check_associated_class_bound(LogharmonicMap(convex_log(), const(1), name="convex_log"), "convex", cfg, tol),
        check_associated_class_bound(catalog("mobius_family(0.9)").map, "univalent", cfg, tol),
        check_becker_condition(catalog("exp_h").map, cfg, tol, expect=True),
        check_becker_condition(geometric.map, cfg, tol, expect=False),
        check_becker_condition(
            LogharmonicMap(parse("exp(0.5*z)"), omega=const(0.5), name="constant_dilatation"), cfg, tol, expect=True
        ),
        check_bloch_equivalence(geometric.map, cfg, tol, geometric.expected),
        check_bloch_equivalence(identity.map, cfg, tol),
        check_bloch_equivalence(family.map, cfg, tol, family.expected),
        check_analytic_part_gap(identity.map, cfg, tol),
    ]
    for t in FAMILY_TS:
        entry = catalog("mobius_family(%r)" % (t,))
        reports.append(check_analytic_part_gap(entry.map, cfg, tol, entry.expected, family_t=t))
    reports += [
        check_uniform_local_univalence(geometric.map, cfg, tol),
        check_uniform_local_univalence(identity.map, cfg, tol),
        check_uniform_local_univalence(family.map, cfg, tol),
        check_coefficient_bound(convex_log(), 20, cfg),
        check_coefficient_bound(Z, 1, cfg),
        check_coefficient_bound(koebe_log_derivative(), 20, cfg),
    ]
    for index, r in enumerate((0.1, 0.5, 0.9)):
        reports.append(check_power_growth(1, 0.5, r, cfg, tol, with_norm=index == 0))
    reports += [
        check_pole_family(0.5, cfg, tol),
        check_pole_family(0.9, cfg, tol),
        check_schwarzian_regressions(cfg, tol),
        check_family_formula(np.linspace(0.05, 0.95, 20)),
    ]
    return reports


def _points(rng, count, radius=0.9):
    r = radius * np.sqrt(rng.uniform(size=count))
    return r * np.exp(2j * np.pi * rng.uniform(size=count))


def _random_automorphism(rng, radius=0.7):
    alpha = complex(_points(rng, 1, radius)[0])
    return automorphism(alpha, rotation=complex(np.exp(2j * np.pi * rng.uniform())))


def _random_bloch_polynomial(rng):
    c1 = complex(rng.normal(), rng.normal())
    c2 = 0.25 * abs(c1) * complex(np.exp(2j * np.pi * rng.uniform())) * rng.uniform()
    return const(c1) * Z + const(c2) * Z**2


def property_suite(cfg=None, seed=DEFAULT_SEED, instances=200, engine_instances=3):
    """
    Seeded randomized checks.

    Every check evaluates its identity pointwise on `instances` random instances
    and runs the supremum engine on the first `engine_instances` of them.
    """
    cfg = cfg or SupConfig()
    logging.getLogger(__name__).info("Running the property suite with seed=%r.", seed)
    rng = np.random.default_rng(seed)
    options = dict(cfg=cfg, seed=seed, instances=instances, engine_instances=engine_instances)
    reports = [
        schwarz_pick_cap(rng, **options),
        mobius_invariance_analytic(rng, **options),
        mobius_invariance_logharmonic(rng, **options),
        composition_rule(rng, seed=seed, instances=instances),
        pde_residuals(rng, seed=seed, instances=instances),
        coefficient_bounds(rng, **options),
    ]
    for name in CATALOG_SAMPLES:
        f = catalog(name).map
        reports.append(check_associated_gap(f, cfg, GAP_TOL))
        reports.append(check_analytic_part_gap(f, cfg, GAP_TOL))
    return reports


def schwarz_pick_cap(rng, cfg, seed, instances, engine_instances):
    """Hyperbolic derivatives of random Blaschke products stay below 1."""
    # pylint: disable=R0913,R0914
    check = Check("schwarz_pick_cap", 1e-12, seed=seed, instances=instances)
    worst, engine_worst = 0.0, 0.0
    # Near the boundary 1 - |omega|^2 loses digits, the engine stops a little earlier.
    boundary_cfg = cfg.replace(r_max=min(cfg.r_max, 1 - 1e-6))
    for index in range(instances):
        zeros = _points(rng, int(rng.integers(1, 4)), 0.9)
        omega = blaschke_product(zeros, rotation=complex(np.exp(2j * np.pi * rng.uniform())))
        worst = max(worst, float(np.max(hyperbolic_derivative_grid(omega, _points(rng, 16)))))
        if index < engine_instances:
            engine_worst = max(engine_worst, hyperbolic_sup(omega, boundary_cfg).value)
    check.upper("pointwise", worst, 1.0, "Schwarz-Pick lemma")
    check.upper("engine", engine_worst, 1.0, "Schwarz-Pick lemma", tolerance=1e-9)
    automorphism_value = hyperbolic_sup(_random_automorphism(rng), boundary_cfg).value
    check.equal("automorphism", automorphism_value, 1.0, "equality for automorphisms", tolerance=1e-4)
    return check.report()


def mobius_invariance_analytic(rng, cfg, seed, instances, engine_instances):
    """`(1 - |z|^2)|(u o phi)'(z)| = (1 - |phi(z)|^2)|u'(phi(z))|` and equal Bloch seminorms."""
    # pylint: disable=R0913
    check = Check("mobius_invariance_analytic", 1e-9, seed=seed, instances=instances)
    worst, engine_worst = 0.0, 0.0
    for index in range(instances):
        u = _random_bloch_polynomial(rng)
        phi = _random_automorphism(rng)
        composed = substitute(u, phi)
        zs = _points(rng, 16)
        ws = evaluate_grid(phi, zs)
        lhs = (1 - np.abs(zs) ** 2) * np.abs(evaluate_grid(differentiate(composed), zs))
        rhs = (1 - np.abs(ws) ** 2) * np.abs(evaluate_grid(differentiate(u), ws))
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / (1 + rhs))))
        if index < engine_instances:
            difference = abs(bloch_seminorm_analytic(composed, cfg).value - bloch_seminorm_analytic(u, cfg).value)
            engine_worst = max(engine_worst, difference)
    check.upper("pointwise", worst, 0.0, "Schwarz-Pick equality for automorphisms")
    check.upper("engine", engine_worst, 0.0, "invariance of the Bloch seminorm", tolerance=5 * cfg.abs_tol)
    return check.report()


def mobius_invariance_logharmonic(rng, cfg, seed, instances, engine_instances):
    """Same invariance for `(1 - |z|^2)(|h'/h| + |g'/g|)` under `f -> f o phi`."""
    # pylint: disable=R0913,R0914
    check = Check("mobius_invariance_logharmonic", 1e-9, seed=seed, instances=instances)
    worst, engine_worst = 0.0, 0.0
    for index in range(instances):
        p = _random_bloch_polynomial(rng)
        c = 0.9 * complex(_points(rng, 1, 1.0)[0])
        f = LogharmonicMap(exp(p), exp(const(c) * p), name="exp_polynomial")
        phi = _random_automorphism(rng)
        composed = f.compose(phi)
        zs = _points(rng, 16)
        ws = evaluate_grid(phi, zs)
        lhs = (1 - np.abs(zs) ** 2) * _bloch_density(composed, zs)
        rhs = (1 - np.abs(ws) ** 2) * _bloch_density(f, ws)
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / (1 + rhs))))
        if index < engine_instances:
            difference = abs(logharmonic_bloch_norm(composed, cfg)[0].value - logharmonic_bloch_norm(f, cfg)[0].value)
            engine_worst = max(engine_worst, difference)
    check.upper("pointwise", worst, 0.0, "Schwarz-Pick equality for automorphisms")
    check.upper("engine", engine_worst, 0.0, "invariance of the logharmonic Bloch seminorm", tolerance=5 * cfg.abs_tol)
    return check.report()


def _bloch_density(f, zs):
    return np.abs(evaluate_grid(f.h_logderiv, zs)) + np.abs(evaluate_grid(f.g_logderiv, zs))


def composition_rule(rng, seed, instances):
    """`P_{f o phi} = P_f(phi) phi' + phi''/phi'` for automorphisms `phi`."""
    check = Check("composition_rule", 1e-9, seed=seed, instances=instances)
    maps = [catalog(name).map for name in CATALOG_SAMPLES]
    worst = 0.0
    for index in range(instances):
        f = maps[index % len(maps)]
        phi = _random_automorphism(rng, 0.5)
        composed = f.compose(phi, validate=False)
        z = complex(_points(rng, 1, 0.8)[0])
        phi1 = evaluate(differentiate(phi), z)
        phi2 = evaluate(differentiate(differentiate(phi)), z)
        expected = eval_pre_schwarzian_logharmonic(f, evaluate(phi, z)) * phi1 + phi2 / phi1
        worst = max(worst, abs(eval_pre_schwarzian_logharmonic(composed, z) - expected) / (1 + abs(expected)))
    check.upper("pointwise", worst, 0.0, "chain rule of the pre-Schwarzian derivative")
    return check.report()


def pde_residuals(rng, seed, instances):
    """Catalog maps solve `conj(f_zbar)/conj(f) = omega f_z/f`."""
    check = Check("pde_residual", 1e-10, seed=seed, instances=instances)
    maps = [catalog(name).map for name in CATALOG_SAMPLES]
    worst = 0.0
    for index in range(instances):
        z = complex(_points(rng, 1, 0.9)[0])
        worst = max(worst, pde_residual(maps[index % len(maps)], z))
    check.upper("residual", worst, 0.0, "logharmonic equation")
    return check.report()


def coefficient_bounds(rng, cfg, seed, instances, engine_instances):
    """
    `|a_n| <= 2 beta_u` for random polynomials.

    The Bloch seminorm comes from the validation grid, a lower bound, and from
    the engine for the first `engine_instances` polynomials.
    """
    # pylint: disable=R0913
    check = Check("coefficient_bound", 1e-9, seed=seed, instances=instances)
    grid = validation_grid()
    weight = 1 - np.abs(grid) ** 2
    worst, engine_worst = -np.inf, -np.inf
    for index in range(instances):
        coefficients = rng.normal(size=4) + 1j * rng.normal(size=4)
        u = const(0)
        for power, coefficient in enumerate(coefficients, start=1):
            u = u + const(complex(coefficient)) * Z**power
        u_prime = differentiate(u)
        beta = float(np.max(weight * np.abs(evaluate_grid(u_prime, grid))))
        largest = float(np.max(np.abs(coefficients)))
        worst = max(worst, largest - 2 * beta)
        if index < engine_instances:
            engine_worst = max(engine_worst, largest - 2 * bloch_seminorm_analytic(u, cfg).value)
    check.upper("grid_margin", worst, 0.0, "|a_n| - 2 beta_u")
    check.upper("engine_margin", engine_worst, 0.0, "|a_n| - 2 beta_u")
    return check.report()
