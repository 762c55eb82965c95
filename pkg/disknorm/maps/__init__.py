# -*- coding: utf-8 -*-
"""
Disk Mappings.

* :any:`LogharmonicMap`: `f = h conj(g)` with its dilatation and derived expressions.
* :any:`HarmonicMap`: `f = H + conj(G)`.
* Pre-Schwarzian and Schwarzian derivatives, Jacobian and equation residual.
* :any:`power_construct` and the transforms of `log f`.
* :any:`catalog`: extremal and reference maps.
"""

from .analytic import automorphism  # noqa
from .analytic import blaschke_product  # noqa
from .analytic import coanalytic_from_dilatation  # noqa
from .analytic import dilatation  # noqa
from .analytic import hyperbolic_derivative  # noqa
from .analytic import hyperbolic_derivative_grid  # noqa
from .analytic import pre_schwarzian_analytic  # noqa
from .analytic import schwarzian_analytic  # noqa
from .analytic import validation_grid  # noqa
from .branch import RadialBranch  # noqa
from .branch import radial_integral  # noqa
from .catalog import CATALOG  # noqa
from .catalog import CatalogEntry  # noqa
from .catalog import Expected  # noqa
from .catalog import catalog  # noqa
from .constructions import affine_transform_log  # noqa
from .constructions import koebe_transform_log  # noqa
from .constructions import power_construct  # noqa
from .constructions import require_normalized  # noqa
from .derived import associated_pre_schwarzian_grid  # noqa
from .derived import eval_pre_schwarzian_harmonic  # noqa
from .derived import eval_pre_schwarzian_logharmonic  # noqa
from .derived import eval_schwarzian_harmonic  # noqa
from .derived import jacobian_logharmonic  # noqa
from .derived import jacobian_logharmonic_grid  # noqa
from .derived import pde_residual  # noqa
from .derived import pde_residual_grid  # noqa
from .derived import pre_schwarzian_harmonic_grid  # noqa
from .derived import pre_schwarzian_logharmonic_grid  # noqa
from .derived import schwarzian_harmonic_grid  # noqa
from .exceptions import DegenerateFunctionError  # noqa
from .exceptions import InvalidExponentError  # noqa
from .exceptions import MapError  # noqa
from .exceptions import MapSpecError  # noqa
from .exceptions import NormalizationError  # noqa
from .exceptions import NotSensePreservingError  # noqa
from .exceptions import UnknownCatalogNameError  # noqa
from .harmonic import HarmonicMap  # noqa
from .logharmonic import LogharmonicMap  # noqa
