# -*- coding: utf-8 -*-
"""
Weighted Suprema and Norms.

* :any:`SupConfig`: sampling settings.
* :any:`weighted_sup`: supremum estimate, returns a :any:`NormEstimate`.
* Bloch seminorms, pre-Schwarzian and Schwarzian norms, hyperbolic supremum.
"""

from .engine import objective_grid  # noqa
from .engine import weighted_sup  # noqa
from .estimate import KINDS  # noqa
from .estimate import NormEstimate  # noqa
from .estimate import RingTrace  # noqa
from .exceptions import NoFiniteSamplesError  # noqa
from .norms import analytic_part_pre_schwarzian_norm  # noqa
from .norms import associated_pre_schwarzian_norm  # noqa
from .norms import bloch_seminorm_analytic  # noqa
from .norms import bloch_seminorm_harmonic  # noqa
from .norms import hyperbolic_sup  # noqa
from .norms import log_bloch_seminorm  # noqa
from .norms import logharmonic_bloch_norm  # noqa
from .norms import norm_objective  # noqa
from .norms import pre_schwarzian_norm  # noqa
from .norms import schwarzian_norm  # noqa
from .supconfig import SupConfig  # noqa
