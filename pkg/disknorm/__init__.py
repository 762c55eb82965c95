# -*- coding: utf-8 -*-

"""Pre-Schwarzian and Bloch Norms of Logharmonic Mappings of the Unit Disk."""

__version__ = "1.0.0"
__author__ = "c0fec0de"
__author_email__ = "c0fec0de@gmail.com"
__description__ = """Pre-Schwarzian and Bloch Norms of Logharmonic Mappings of the Unit Disk."""

from . import util  # noqa
from .expr import Expr  # noqa
from .expr import ExprError  # noqa
from .expr import differentiate  # noqa
from .expr import evaluate  # noqa
from .expr import parse  # noqa
from .expr import pretty_print  # noqa
from .iterators import PostOrderIter  # noqa
from .iterators import PreOrderIter  # noqa
from .manifest import RunManifest  # noqa
from .maps import HarmonicMap  # noqa
from .maps import LogharmonicMap  # noqa
from .maps import MapError  # noqa
from .maps import catalog  # noqa
from .norms import NormEstimate  # noqa
from .norms import SupConfig  # noqa
from .norms import weighted_sup  # noqa
from .render import AsciiStyle  # noqa
from .render import ContStyle  # noqa
from .render import RenderTree  # noqa
from .search import CountError  # noqa
from .search import find  # noqa
from .search import find_by_attr  # noqa
from .search import findall  # noqa
from .search import findall_by_attr  # noqa
from .theorems import CheckReport  # noqa
