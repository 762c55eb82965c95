"""
Executable Checks of the Norm Estimates.

Every checker returns a :any:`CheckReport`. Engine values are lower bounds of
suprema, so inequalities of the form `norm <= bound` are checked one-sided
with tolerance. Known values are checked two-sided.

Most checkers accept `expected`, a mapping of quantity names to
:any:`Expected` as carried by catalog entries. Known quantities found there
are compared as well.
"""

import numpy as np

from ..expr import Evaluation, Z, differentiate, evaluate_grid, log, parse, pretty_print, taylor_expand
from ..maps import automorphism, catalog, require_normalized, schwarzian_analytic
from ..maps.catalog import KOEBE
from ..norms import (
    analytic_part_pre_schwarzian_norm,
    associated_pre_schwarzian_norm,
    bloch_seminorm_analytic,
    hyperbolic_sup,
    log_bloch_seminorm,
    logharmonic_bloch_norm,
    pre_schwarzian_norm,
    schwarzian_norm,
)
from .family import DomainError, argmax_profile, brute_force_nt, extremal_radius, n_t, profile_E
from .report import Check

BOUNDS = {"univalent": 7.0, "convex": 5.0}


def _describe(f):
    if getattr(f, "name", None):
        return f.name
    return repr(f)


def _known(check, name, value, expected):
    if expected and name in expected:
        known = expected[name]
        check.compare(name, value, known.value, known.provenance, sense=known.sense)


def check_associated_gap(f, cfg=None, tol=1e-3, expected=None):
    """
    `| ||P_f|| - ||P_psi|| | <= 1` for `psi' = h'g`.

    >>> from disknorm.maps import LogharmonicMap
    >>> from disknorm.norms import SupConfig
    >>> f = LogharmonicMap(parse("exp(z)"), parse("1"), name="exp")
    >>> report = check_associated_gap(f, SupConfig(radial_levels=12, angular_base=16))
    >>> report.passed, report.computed["gap"] < 1e-12
    (True, True)
    """
    check = Check("associated_gap", tol, map=_describe(f))
    pre = pre_schwarzian_norm(f, cfg)
    associated = associated_pre_schwarzian_norm(f, cfg)
    check.record("pre_schwarzian", pre.value)
    check.record("associated_pre_schwarzian", associated.value)
    check.upper("gap", abs(pre.value - associated.value), 1.0, "gap of the pre-Schwarzian norms of f and psi")
    _known(check, "pre_schwarzian", pre.value, expected)
    _known(check, "associated_pre_schwarzian", associated.value, expected)
    return check.report()


def check_associated_class_bound(f, psi_class, cfg=None, tol=1e-3):
    """
    `||P_f|| <= 7` for univalent `psi` and `||P_f|| <= 5` for convex `psi`.

    The class of `psi` is asserted by the caller and not verified.
    """
    if psi_class not in BOUNDS:
        raise ValueError("psi_class must be one of %s, got %r." % (", ".join(sorted(BOUNDS)), psi_class))
    check = Check("associated_class_bound", tol, map=_describe(f), psi_class=psi_class)
    pre = pre_schwarzian_norm(f, cfg)
    check.upper("pre_schwarzian", pre.value, BOUNDS[psi_class], "bound for %s psi" % psi_class)
    return check.report()


def check_becker_condition(f, cfg=None, tol=1e-3, expect=None):
    """
    Hypothesis `||P_f|| + ||omega*|| <= 1` of the univalence criterion for `psi`.

    The verdict is `"hypothesis_holds"` or `"inconclusive"`. Without `expect` the
    check passes either way. With `expect` it passes if the hypothesis holds
    exactly when expected.

    >>> from disknorm.maps import catalog
    >>> from disknorm.norms import SupConfig
    >>> report = check_becker_condition(catalog("exp_h").map, SupConfig(radial_levels=12, angular_base=16))
    >>> report.verdict, round(report.computed["sum"], 9)
    ('hypothesis_holds', 0.2)
    """
    check = Check("becker_condition", tol, map=_describe(f))
    pre = pre_schwarzian_norm(f, cfg)
    hyperbolic = hyperbolic_sup(f.omega, cfg)
    check.record("pre_schwarzian", pre.value)
    check.record("hyperbolic", hyperbolic.value)
    total = check.record("sum", pre.value + hyperbolic.value)
    holds = total <= 1 + tol
    check.verdict = "hypothesis_holds" if holds else "inconclusive"
    if expect is not None:
        check.require("verdict", holds == expect)
    return check.report()


def check_bloch_equivalence(f, cfg=None, tol=1e-3, expected=None):
    """
    `beta_{log h} <= beta_f <= 2 beta_{log h}` and `beta_{log g} <= beta_{log h}`.

    `|g'/g| = |omega||h'/h| <= |h'/h|` gives both sides.
    """
    check = Check("bloch_equivalence", tol, map=_describe(f))
    seminorm, norm = logharmonic_bloch_norm(f, cfg)
    beta_h = log_bloch_seminorm(f, "h", cfg).value
    beta_g = log_bloch_seminorm(f, "g", cfg).value
    check.record("log_bloch_norm", norm)
    check.lower("log_bloch", seminorm.value, beta_h, "beta_f >= beta_{log h}")
    check.upper("log_bloch_upper", seminorm.value, 2 * beta_h, "beta_f <= 2 beta_{log h}")
    check.record("log_bloch_h", beta_h)
    check.upper("log_bloch_g", beta_g, beta_h, "beta_{log g} <= beta_{log h}")
    _known(check, "log_bloch_h", beta_h, expected)
    _known(check, "log_bloch_g", beta_g, expected)
    return check.report()


def check_analytic_part_gap(f, cfg=None, tol=1e-3, expected=None, family_t=None):
    """
    `| ||P_f|| - ||P_h|| | <= beta_{log g} + 1`.

    Keyword Args:
        family_t (float): `f` is the member `t` of the sharpness family, which
            adds `N_t <= ||P_f|| <= 7`.
    """
    # pylint: disable=R0913
    check = Check("analytic_part_gap", tol, map=_describe(f), family_t=family_t)
    pre = pre_schwarzian_norm(f, cfg)
    pre_h = analytic_part_pre_schwarzian_norm(f, cfg)
    beta_g = log_bloch_seminorm(f, "g", cfg).value
    check.record("pre_schwarzian", pre.value)
    check.record("pre_schwarzian_h", pre_h.value)
    check.record("log_bloch_g", beta_g)
    check.upper("gap", abs(pre.value - pre_h.value), beta_g + 1, "beta_{log g} + 1")
    if family_t is not None:
        check.lower("pre_schwarzian_floor", pre.value, n_t(family_t), "N_t = E(r0)")
        check.upper("pre_schwarzian_ceiling", pre.value, 7.0, "||P_F|| <= 7 for the family")
    _known(check, "pre_schwarzian", pre.value, expected)
    _known(check, "pre_schwarzian_h", pre_h.value, expected)
    _known(check, "log_bloch_g", beta_g, expected)
    return check.report()


def check_uniform_local_univalence(f, cfg=None, tol=1e-3):
    """
    `||P_{log f}|| <= 2 + 4 beta_{log h}` with a converged estimate of `||P_{log f}||`.

    >>> from disknorm.maps import LogharmonicMap
    >>> from disknorm.norms import SupConfig
    >>> f = LogharmonicMap(parse("exp(z)"), parse("1"), name="exp")
    >>> report = check_uniform_local_univalence(f, SupConfig(radial_levels=12, angular_base=16))
    >>> report.passed, report.computed["pre_schwarzian_log"] < 1e-12
    (True, True)
    """
    require_normalized(f)
    check = Check("uniform_local_univalence", tol, map=_describe(f))
    pre = pre_schwarzian_norm(f.log_map(), cfg)
    beta_h = log_bloch_seminorm(f, "h", cfg).value
    check.record("log_bloch_h", beta_h)
    check.upper("pre_schwarzian_log", pre.value, 2 + 4 * beta_h, "2 + 4 beta_{log h}")
    check.require("converged", pre.converged)
    return check.report()


def check_coefficient_bound(u, order=20, cfg=None, tol=1e-9):
    """
    `|a_n| <= 2 beta_u` for the Taylor coefficients `a_n`, `n >= 1`.

    >>> from disknorm.norms import SupConfig
    >>> report = check_coefficient_bound(parse("z"), 1, SupConfig(radial_levels=12, angular_base=16))
    >>> report.passed, report.computed["max_coefficient"]
    (True, 1.0)
    """
    check = Check("coefficient_bound", tol, u=pretty_print(u), order=order)
    coefficients = np.abs(taylor_expand(u, order).coefficients[1:])
    beta = bloch_seminorm_analytic(u, cfg).value
    check.record("bloch", beta)
    check.upper("max_coefficient", float(coefficients.max()) if coefficients.size else 0.0, 2 * beta, "2 beta_u")
    return check.report()


def check_power_growth(lambda1, lambda2, r, cfg=None, tol=1e-3, rel_tol=1e-9, with_norm=True):
    """
    Growth of `f = k'^lambda1 conj(k'^lambda2)` for the Koebe function `k`.

    On the positive radius `|h|`, `|g|` and `|f|` attain
    `((1 + r)/(1 - r)^3)^lambda`, on the negative radius `((1 - r)/(1 + r)^3)^lambda`
    with `lambda` equal to `lambda1`, `lambda2` and `lambda1 + lambda2`. Optionally
    the engine confirms `sup (1 - |z|^2)|f_z/f| = 6 lambda1`.

    >>> report = check_power_growth(1, 0.5, 0.5, with_norm=False)
    >>> report.passed, round(report.computed["f_upper"], 6)
    (True, 41.569219)
    """
    # pylint: disable=R0913,R0914
    if not 0 <= r < 1:
        raise DomainError("Radius must lie in [0, 1), got %r." % (r,))
    if lambda1 > 0 and lambda2 > 0 and not lambda1 > lambda2:
        raise DomainError("Growth check needs lambda1 > lambda2, got %r and %r." % (lambda1, lambda2))
    entry = catalog("koebe_power(%r, %r)" % (float(lambda1), float(lambda2)))
    f = entry.map
    check = Check("power_growth", tol, lambda1=lambda1, lambda2=lambda2, r=r)
    upper = (1 + r) / (1 - r) ** 3
    lower = (1 - r) / (1 + r) ** 3
    parts = (
        ("h", f.h_value, lambda1),
        ("g", f.g_value, lambda2),
        ("f", f.value, lambda1 + lambda2),
    )
    for name, value, exponent in parts:
        provenance = "growth bound with exponent %r" % (exponent,)
        check.equal("%s_upper" % name, abs(value(r)), upper**exponent, provenance, tolerance=rel_tol, relative=True)
        check.equal("%s_lower" % name, abs(value(-r)), lower**exponent, provenance, tolerance=rel_tol, relative=True)
    if with_norm:
        est = log_bloch_seminorm(f, "h", cfg)
        check.equal("log_bloch_h", est.value, 6.0 * lambda1, "lambda1 ||P_k|| = 6 lambda1")
    return check.report()


def check_pole_family(eps, cfg=None, tol=1e-3, omega=Z):
    """`||P_f|| <= 7` for `h'/h = 1/(1 - eps(z))`."""
    entry = catalog("pole_family(%r)" % (float(eps),)) if omega is Z else None
    if entry is None:
        # pylint: disable=C0415
        from ..maps.catalog import pole_family

        entry = pole_family(eps, omega)
    check = Check("pole_family", tol, map=entry.name, omega=pretty_print(omega))
    pre = pre_schwarzian_norm(entry.map, cfg)
    check.upper("pre_schwarzian", pre.value, 7.0, entry.expected["pre_schwarzian"].provenance)
    return check.report()


def _frozen_pre_schwarzian(f, zs, frozen):
    ev = Evaluation(zs, strict=True)
    w = ev(f.omega)
    return ev(f.H_pre_schwarzian) - frozen * ev(f.omega_prime) / (1 - w * frozen)


def harmonic_identity_residual(f, z, step=1e-5):
    """
    `|S_f - ((P_f)_z - P_f^2/2)|` at `z`, with the `z`-derivative by central differences.

    The Wirtinger derivative keeps `conj(omega)` fixed at its value at `z`.
    """
    # pylint: disable=C0415
    from ..maps import eval_pre_schwarzian_harmonic, eval_schwarzian_harmonic

    frozen = np.conj(evaluate_grid(f.omega, [z])[0])
    left, right = _frozen_pre_schwarzian(f, [z - step, z + step], frozen)
    derivative = (right - left) / (2 * step)
    pre = eval_pre_schwarzian_harmonic(f, z)
    return abs(eval_schwarzian_harmonic(f, z) - (derivative - 0.5 * pre**2))


def check_schwarzian_regressions(cfg=None, tol=1e-3, points=None):
    """
    Schwarzian derivative of Moebius maps, Schwarzian norm of the Koebe function
    and the identity `S_f = (P_f)_z - P_f^2/2` on logarithms of catalog maps.
    """
    check = Check("schwarzian_regressions", tol)
    zs = np.asarray(points if points is not None else [0, 0.3, -0.5j, 0.4 + 0.4j, -0.7 + 0.1j], dtype=complex)
    mobius = automorphism(0.3 + 0.2j, rotation=1j)
    residual = float(np.max(np.abs(evaluate_grid(schwarzian_analytic(mobius), zs))))
    check.upper("mobius_schwarzian", residual, 0.0, "S = 0 for Moebius maps", tolerance=1e-12)
    check.equal("koebe_schwarzian_norm", schwarzian_norm(KOEBE, cfg).value, 6.0, "S_k = -6/(1 - z^2)^2")
    worst = 0.0
    for name in ("geometric_gap", "mobius_family(0.5)", "pole_family(0.5)"):
        harmonic = catalog(name).map.log_map()
        worst = max([worst] + [harmonic_identity_residual(harmonic, complex(z)) for z in zs])
    check.upper("harmonic_identity", worst, 0.0, "S_f = (P_f)_z - P_f^2/2", tolerance=1e-6)
    return check.report()


def check_family_formula(ts, points=10**6, tol=1e-8):
    """
    `N_t` against `E(r0, t)`, the bounded search for the maximizer and a grid maximum.
    """
    check = Check("family_formula", tol, ts=[float(t) for t in ts], points=points)
    closed, argmax, brute = 0.0, 0.0, 0.0
    for t in ts:
        closed = max(closed, abs(n_t(t) - profile_E(extremal_radius(t), t)))
        argmax = max(argmax, abs(argmax_profile(t) - extremal_radius(t)))
        brute = max(brute, abs(brute_force_nt(t, points) - n_t(t)))
    check.upper("closed_form_error", closed, 0.0, "N_t = E(r0)", tolerance=1e-12)
    check.upper("argmax_error", argmax, 0.0, "E is maximal at r0", tolerance=1e-6)
    check.upper("brute_force_error", brute, 0.0, "grid maximum of E")
    return check.report()


def koebe_log_derivative():
    """`log k'` for the Koebe function `k`, analytic at the origin with value 0."""
    return log(differentiate(KOEBE))


def convex_log():
    """`-log(1 - z)`."""
    return parse("-log(1-z)")
