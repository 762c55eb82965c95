# -*- coding: utf-8 -*-
from collections import OrderedDict

import numpy as np

from disknorm.exporter import DictExporter
from disknorm.expr import parse
from disknorm.importer import DictImporter
from disknorm.manifest import RunManifest
from disknorm.maps import HarmonicMap
from disknorm.norms import NormEstimate, SupConfig
from disknorm.theorems import CheckReport

from .helper import eq_


def test_dict_exporter():
    """Dict Exporter."""
    exporter = DictExporter()
    est = NormEstimate(5.0, 0.9, 0.0, [4.0, 5.0], converged=True, kind="bloch_analytic", samples=10, skipped=2)
    report = CheckReport("demo", inputs={"t": 0.5}, computed={"x": 1.0}, passed=True, runtime_ms=3)
    eq_(
        exporter.export({"estimate": est, "checks": [report]}),
        {
            "estimate": {
                "value": 5.0,
                "r": 0.9,
                "theta": 0.0,
                "converged": True,
                "levels": [4.0, 5.0],
                "skipped": 2,
                "samples": 10,
                "kind": "bloch_analytic",
            },
            "checks": [
                {
                    "check_id": "demo",
                    "inputs": {"t": 0.5},
                    "computed": {"x": 1.0},
                    "expected": {},
                    "tolerance": 0.0,
                    "pass": True,
                    "runtime_ms": 3,
                }
            ],
        },
    )
    eq_(exporter.export(CheckReport("becker", verdict="inconclusive"))["verdict"], "inconclusive")
    eq_(exporter.export((1, "a", None)), [1, "a", None])


def test_dict_exporter_manifest():
    manifest = RunManifest("norm", flags={"kind": "bloch"}, cfg=SupConfig(radial_levels=4), version="1.0.0")
    eq_(
        DictExporter().export(manifest),
        {
            "command": "norm",
            "flags": {"kind": "bloch"},
            "cfg": {"radial_levels": 4, "r_max": 1 - 1e-8, "angular_base": 128, "refine_iters": 60, "abs_tol": 1e-4},
            "version": "1.0.0",
            "seed": None,
            "runtime_ms": 0,
        },
    )
    eq_(DictExporter().export(RunManifest("eval", version="1.0.0"))["cfg"], None)


def test_dict_exporter_maps():
    f = DictImporter().import_({"h": "1/(1-z)", "g": "exp(-z)/(1-z)", "name": "ex"})
    data = DictExporter().export(f)
    eq_(sorted(data), ["g", "h", "name", "omega"])
    eq_(data["h"], "1/(1 - z)")
    eq_(data["g"], "exp(-z)/(1 - z)")
    eq_(data["name"], "ex")
    data = DictExporter().export(HarmonicMap(parse("z"), parse("z^2/4")))
    eq_(sorted(data), ["G", "H", "name", "omega"])
    eq_(data["H"], "z")
    eq_(data["G"], "z^2/4")
    eq_(data["name"], None)


def test_dict_exporter_expr():
    """Expression trees are exported node by node."""
    expr = parse("z^3 - 2")
    eq_(
        DictExporter().export(expr),
        {
            "kind": "sub",
            "children": [{"kind": "ipow", "exponent": 3, "children": [{"kind": "z"}]}, {"kind": "const", "value": [2.0, 0.0]}],
        },
    )
    eq_(DictExporter(maxlevel=1).export(expr), {"kind": "sub"})
    reversed_ = DictExporter(childiter=lambda children: list(reversed(children))).export(expr)
    eq_([child["kind"] for child in reversed_["children"]], ["const", "ipow"])


def test_dict_exporter_filter():
    """Exporter filters attributes."""
    est = NormEstimate(5.0, 0.9, 0.0, [4.0, 5.0])
    exporter = DictExporter(attriter=lambda attrs: [(k, v) for k, v in attrs if k in ("value", "r")])
    eq_(exporter.export(est), {"value": 5.0, "r": 0.9})


def test_dict_exporter_dictcls():
    """Exporter with ordered dictionary."""
    exporter = DictExporter(dictcls=OrderedDict)
    data = exporter.export({"estimate": NormEstimate(np.float64(1.0), 0.0, 0.0, [1.0])})
    assert isinstance(data, OrderedDict)
    assert isinstance(data["estimate"], OrderedDict)
    eq_(list(data["estimate"])[:3], ["value", "r", "theta"])
