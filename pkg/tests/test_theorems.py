# -*- coding: utf-8 -*-
import math

import numpy as np

from disknorm.expr import parse
from disknorm.maps import LogharmonicMap, NormalizationError, catalog
from disknorm.norms import SupConfig
from disknorm.theorems import (
    Check,
    CheckReport,
    DomainError,
    SharpnessFamily,
    argmax_profile,
    brute_force_nt,
    check_analytic_part_gap,
    check_associated_class_bound,
    check_associated_gap,
    check_becker_condition,
    check_bloch_equivalence,
    check_coefficient_bound,
    check_family_formula,
    check_pole_family,
    check_power_growth,
    check_uniform_local_univalence,
    extremal_radius,
    harmonic_identity_residual,
    known_value_suite,
    n_t,
    profile_E,
    property_suite,
)
from disknorm.theorems.checks import koebe_log_derivative

from .helper import FAST, assert_raises, close_, eq_


def test_extremal_radius():
    close_(extremal_radius(0.6), 1 / 3, 1e-15)
    for t in (0.01, 0.5, 0.99):
        s = math.sqrt(1 - t * t)
        close_(extremal_radius(t), (1 - s) / t, 1e-12)
    for t in (0, 1, -0.5, 2):
        with assert_raises(DomainError, "Parameter t must lie in (0, 1), got %r." % (t,)):
            extremal_radius(t)


def test_profile_E():
    eq_(profile_E(0, 0.25), 2.5)
    close_(profile_E(1 / 3, 0.6), 31 / 9, 1e-14)
    values = profile_E(np.array([0.0, 0.5]), 0.5)
    eq_(values.shape, (2,))
    close_(values[1], 3)
    with assert_raises(DomainError, "Radius must lie in [0, 1), got 1.0."):
        profile_E(1, 0.5)
    with assert_raises(DomainError, "Radius must lie in [0, 1), got [-0.1, 0.5]."):
        profile_E([-0.1, 0.5], 0.5)


def test_n_t():
    """The stable form agrees with the closed form and increases from 2 to 7."""
    close_(n_t(0.6), 31 / 9, 1e-14)
    for t in (0.1, 0.5, 0.9):
        s = math.sqrt(1 - t * t)
        close_(n_t(t), (2 - 2 * s + t * (4 + t - 4 * s)) / t**2, 1e-12)
        close_(n_t(t), profile_E(extremal_radius(t), t), 1e-12)
    values = [n_t(t) for t in np.linspace(0.01, 0.99, 50)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(value < 7 for value in values)
    close_(n_t(1 - 1e-12), 7, 1e-5)
    close_(n_t(1e-9), 2, 1e-8)


def test_argmax_profile():
    for t in (0.2, 0.6, 0.95):
        close_(argmax_profile(t), extremal_radius(t), 1e-6)
    close_(brute_force_nt(0.5, 1000), n_t(0.5), 1e-4)
    assert brute_force_nt(0.5, 1000) <= n_t(0.5)


def test_sharpness_family():
    member = SharpnessFamily(0.6)
    eq_(member.t, 0.6)
    close_(member.r0, 1 / 3, 1e-15)
    close_(member.nt, 31 / 9, 1e-14)
    close_(member.profile(member.r0), member.nt, 1e-14)
    eq_(member.map().name, "mobius_family(0.6)")
    with assert_raises(DomainError, "Parameter t must lie in (0, 1), got 1."):
        SharpnessFamily(1)


def test_check():
    check = Check("demo", 1e-3, t=0.5)
    eq_(check.equal("a", 1.0005, 1.0, "exact"), True)
    eq_(check.equal("b", 1.002, 1.0, "exact"), False)
    eq_(check.upper("c", 1.0005, 1.0, "bound"), True)
    eq_(check.lower("d", 0.9995, 1.0, "bound"), True)
    eq_(check.lower("e", 0.99, 1.0, "bound"), False)
    eq_(check.equal("f", 101.0, 100.0, "relative", tolerance=0.02, relative=True), True)
    eq_(check.record("g", 3), 3)
    eq_(check.require("h", True), True)
    eq_(check.require("i", False), False)
    with assert_raises(ValueError, "Unknown comparison sense 'both'."):
        check.compare("j", 1.0, 1.0, "none", sense="both")
    eq_(check.failures, ["b", "e", "i"])
    report = check.report()
    eq_(report.check_id, "demo")
    eq_(report.inputs, {"t": 0.5})
    eq_(report.passed, False)
    eq_(report.tolerance, 1e-3)
    eq_(sorted(report.computed), ["a", "b", "c", "d", "e", "f", "g"])
    eq_(report.expected["c"], {"value": 1.0, "provenance": "bound", "sense": "upper"})
    assert isinstance(report.runtime_ms, int)
    eq_(Check("empty", 0.0).report().passed, True)


def test_check_report():
    report = CheckReport("demo", computed={"x": 1.0}, passed=True)
    eq_(report, CheckReport("demo", computed={"x": 1.0}, passed=True))
    assert report != CheckReport("demo", computed={"x": 1.0})
    eq_(report.inputs, {})
    eq_(report.verdict, None)


def test_check_associated_gap():
    entry = catalog("geometric_gap")
    report = check_associated_gap(entry.map, FAST, 1e-3, entry.expected)
    eq_(report.check_id, "associated_gap")
    eq_(report.inputs, {"map": "geometric_gap"})
    eq_(report.passed, True)
    close_(report.computed["pre_schwarzian"], 5, 1e-6)
    close_(report.computed["associated_pre_schwarzian"], 6, 1e-6)
    close_(report.computed["gap"], 1, 1e-6)
    eq_(report.expected["pre_schwarzian"]["sense"], "equal")


def test_check_associated_class_bound():
    report = check_associated_class_bound(catalog("rational_gap").map, "univalent", FAST)
    eq_(report.passed, True)
    eq_(report.inputs["psi_class"], "univalent")
    eq_(report.expected["pre_schwarzian"]["value"], 7.0)
    with assert_raises(ValueError, "psi_class must be one of convex, univalent, got 'starlike'."):
        check_associated_class_bound(catalog("rational_gap").map, "starlike", FAST)


def test_check_becker_condition():
    report = check_becker_condition(catalog("exp_h").map, FAST, expect=True)
    eq_(report.verdict, "hypothesis_holds")
    eq_(report.passed, True)
    close_(report.computed["sum"], 0.2, 1e-9)
    geometric = catalog("geometric_gap").map
    report = check_becker_condition(geometric, FAST)
    eq_(report.verdict, "inconclusive")
    eq_(report.passed, True)
    eq_(check_becker_condition(geometric, FAST, expect=True).passed, False)


def test_check_bloch_equivalence():
    entry = catalog("geometric_gap")
    report = check_bloch_equivalence(entry.map, FAST, 1e-3, entry.expected)
    eq_(report.passed, True)
    close_(report.computed["log_bloch"], 4, 1e-6)
    close_(report.computed["log_bloch_h"], 2, 1e-6)
    close_(report.computed["log_bloch_norm"], 5, 1e-6)


def test_check_analytic_part_gap():
    report = check_analytic_part_gap(catalog("identity").map, FAST)
    eq_(report.passed, True)
    eq_(report.inputs, {"map": "identity", "family_t": None})
    close_(report.computed["gap"], 0, 1e-12)
    close_(report.computed["log_bloch_g"], 0, 1e-12)


def test_check_uniform_local_univalence():
    report = check_uniform_local_univalence(catalog("identity").map, FAST)
    eq_(report.passed, True)
    close_(report.computed["log_bloch_h"], 1, 1e-12)
    f = LogharmonicMap(parse("2*exp(z)"), parse("1"), name="scaled")
    with assert_raises(NormalizationError, "Map is not normalized: h(0)=(2+0j), g(0)=(1+0j), h'(0)=(2+0j)."):
        check_uniform_local_univalence(f, FAST)


def test_check_coefficient_bound():
    report = check_coefficient_bound(parse("-log(1-z)"), 20, FAST)
    eq_(report.passed, True)
    close_(report.computed["max_coefficient"], 1, 1e-12)
    close_(report.computed["bloch"], 2, 1e-6)
    report = check_coefficient_bound(koebe_log_derivative(), 20, FAST)
    eq_(report.passed, True)
    close_(report.computed["max_coefficient"], 4, 1e-12)


def test_check_power_growth():
    """|k'(r)| = (1 + r)/(1 - r)^3 and |k'(-r)| = (1 - r)/(1 + r)^3."""
    report = check_power_growth(1, 0.5, 0.5, with_norm=False)
    eq_(report.passed, True)
    close_(report.computed["f_upper"], 12**1.5, 1e-9)
    close_(report.computed["h_lower"], 0.5 / 1.5**3, 1e-12)
    with assert_raises(DomainError, "Radius must lie in [0, 1), got 1."):
        check_power_growth(1, 0.5, 1)
    with assert_raises(DomainError, "Growth check needs lambda1 > lambda2, got 0.5 and 1."):
        check_power_growth(0.5, 1, 0.5)


def test_check_pole_family():
    report = check_pole_family(0.5, FAST)
    eq_(report.passed, True)
    eq_(report.inputs, {"map": "pole_family(0.5)", "omega": "z"})
    assert report.computed["pre_schwarzian"] <= 7


def test_check_family_formula():
    report = check_family_formula([0.3, 0.6], points=10**5)
    eq_(report.passed, True)
    eq_(report.inputs, {"ts": [0.3, 0.6], "points": 10**5})
    assert report.computed["argmax_error"] < 1e-6


def test_harmonic_identity_residual():
    """S_f = (P_f)_z - P_f^2/2 for the logarithm of a logharmonic map."""
    F = catalog("geometric_gap").map.log_map()
    for z in (0, 0.3, -0.4 + 0.2j):
        assert harmonic_identity_residual(F, z) < 1e-6


def test_property_suite():
    """Seeded runs are reproducible."""
    first = property_suite(FAST, seed=7, instances=10, engine_instances=1)
    second = property_suite(FAST, seed=7, instances=10, engine_instances=1)
    eq_(
        [report.check_id for report in first[:6]],
        [
            "schwarz_pick_cap",
            "mobius_invariance_analytic",
            "mobius_invariance_logharmonic",
            "composition_rule",
            "pde_residual",
            "coefficient_bound",
        ],
    )
    eq_(len(first), 6 + 2 * 7)
    eq_([report.computed for report in first], [report.computed for report in second])
    eq_([report.inputs for report in first][0], {"seed": 7, "instances": 10})
    for report in first[3:5]:
        eq_(report.passed, True)


def test_known_value_suite():
    """Every known value and bound holds with the default engine settings."""
    reports = known_value_suite(SupConfig(), tol=1e-3)
    eq_([report.check_id for report in reports if not report.passed], [])
    geometric = reports[0]
    eq_(geometric.check_id, "associated_gap")
    close_(geometric.computed["pre_schwarzian"], 5, 1e-3)
    close_(geometric.computed["associated_pre_schwarzian"], 6, 1e-3)
    close_(reports[1].computed["pre_schwarzian"], 5, 1e-3)
    family = [report for report in reports if report.inputs.get("family_t") is not None]
    eq_([report.inputs["family_t"] for report in family], [0.5, 0.9, 0.999])
    close_(family[0].computed["pre_schwarzian_h"], 4, 1e-3)
    close_(family[0].computed["log_bloch_g"], 2, 1e-3)
    for report in family:
        t = report.inputs["family_t"]
        assert n_t(t) - 1e-3 <= report.computed["pre_schwarzian"] <= 7 + 1e-3, (t, report.computed)
    assert n_t(0.999) >= 6.9
    growth = [report for report in reports if report.check_id == "power_growth"]
    eq_([report.inputs["r"] for report in growth], [0.1, 0.5, 0.9])
    close_(growth[0].computed["log_bloch_h"], 6, 1e-3)
    eq_(reports[-1].check_id, "family_formula")
