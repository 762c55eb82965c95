# -*- coding: utf-8 -*-
"""
Checks of Norm Inequalities and Known Values.

* :any:`SharpnessFamily`, :any:`extremal_radius`, :any:`profile_E` and :any:`n_t`: closed forms.
* Checkers returning a :any:`CheckReport`.
* :any:`known_value_suite` and :any:`property_suite`.
"""

from .checks import check_analytic_part_gap  # noqa
from .checks import check_associated_class_bound  # noqa
from .checks import check_associated_gap  # noqa
from .checks import check_becker_condition  # noqa
from .checks import check_bloch_equivalence  # noqa
from .checks import check_coefficient_bound  # noqa
from .checks import check_family_formula  # noqa
from .checks import check_pole_family  # noqa
from .checks import check_power_growth  # noqa
from .checks import check_schwarzian_regressions  # noqa
from .checks import check_uniform_local_univalence  # noqa
from .checks import harmonic_identity_residual  # noqa
from .family import DomainError  # noqa
from .family import SharpnessFamily  # noqa
from .family import argmax_profile  # noqa
from .family import brute_force_nt  # noqa
from .family import extremal_radius  # noqa
from .family import n_t  # noqa
from .family import profile_E  # noqa
from .report import Check  # noqa
from .report import CheckReport  # noqa
from .suites import DEFAULT_SEED  # noqa
from .suites import known_value_suite  # noqa
from .suites import property_suite  # noqa
