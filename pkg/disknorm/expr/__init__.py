# -*- coding: utf-8 -*-
"""
Analytic Expressions.

* :any:`Expr`: immutable expression tree of an analytic function of `z`.
* :any:`parse` and :any:`pretty_print`: text form.
* :any:`differentiate`: symbolic derivative.
* :any:`evaluate`, :any:`evaluate_grid`, :any:`Evaluation`: numerical values.
* :any:`TaylorSeries` and :any:`taylor_expand`: truncated power series at the origin.
"""

from .derivative import differentiate  # noqa
from .evaluate import Evaluation  # noqa
from .evaluate import evaluate  # noqa
from .evaluate import evaluate_grid  # noqa
from .exceptions import BranchCutError  # noqa
from .exceptions import ExprError  # noqa
from .exceptions import ExprSyntaxError  # noqa
from .exceptions import NotAnalyticAtZeroError  # noqa
from .exceptions import PoleEncounteredError  # noqa
from .exceptions import TruncationExhaustedError  # noqa
from .exceptions import UnknownIdentifierError  # noqa
from .expansion import taylor_expand  # noqa
from .node import Z  # noqa
from .node import Expr  # noqa
from .node import add  # noqa
from .node import const  # noqa
from .node import div  # noqa
from .node import exp  # noqa
from .node import ipower  # noqa
from .node import log  # noqa
from .node import mul  # noqa
from .node import neg  # noqa
from .node import power  # noqa
from .node import sub  # noqa
from .node import substitute  # noqa
from .parser import parse  # noqa
from .printer import format_number  # noqa
from .printer import pretty_print  # noqa
from .series import TaylorSeries  # noqa
from .series import series_derivative  # noqa
from .series import series_exp  # noqa
from .series import series_integrate  # noqa
from .series import series_log  # noqa
from .series import series_pow  # noqa
from .util import branch_nodes  # noqa
from .util import is_constant  # noqa
