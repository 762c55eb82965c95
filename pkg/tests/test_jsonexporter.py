import json
import os

import numpy as np

from disknorm.exporter import DictExporter, JsonExporter
from disknorm.expr import parse
from disknorm.manifest import RunManifest
from disknorm.norms import NormEstimate, SupConfig
from disknorm.theorems import CheckReport

from .helper import assert_raises, eq_


def _report():
    return CheckReport(
        "demo",
        inputs={"ts": np.array([0.5, 0.9])},
        computed={"value": np.float64(2.5), "count": np.int64(3), "z": 1 - 2j, "root": np.complex128(0.5j)},
        expected={"value": {"value": 2.5, "provenance": "hand computation", "sense": "equal"}},
        tolerance=1e-3,
        passed=np.bool_(True),
        runtime_ms=7,
    )


def test_json_exporter():
    """Json Exporter."""
    exporter = JsonExporter(indent=2, sort_keys=True)
    exported = exporter.export(NormEstimate(5.0, 0.5, 0.25, [4.0, 5.0], converged=True)).splitlines()
    lines = [
        "{",
        '  "converged": true,',
        '  "kind": null,',
        '  "levels": [',
        "    4.0,",
        "    5.0",
        "  ],",
        '  "r": 0.5,',
        '  "samples": 0,',
        '  "skipped": 0,',
        '  "theta": 0.25,',
        '  "value": 5.0',
        "}",
    ]
    eq_(exported, lines)


def test_json_exporter_numpy():
    """Numpy values and complex numbers become plain JSON."""
    data = json.loads(JsonExporter().export(_report()))
    eq_(data["inputs"], {"ts": [0.5, 0.9]})
    eq_(data["computed"], {"value": 2.5, "count": 3, "z": [1.0, -2.0], "root": [0.0, 0.5]})
    eq_(data["pass"], True)
    with assert_raises(TypeError, "Object of type object is not JSON serializable"):
        JsonExporter().export({"bad": object()})


def test_json_exporter_deterministic():
    """Sorted keys give byte-identical output for equal results."""
    exporter = JsonExporter(indent=2, sort_keys=True)
    eq_(exporter.export([_report()]), exporter.export([_report()]))


def test_json_exporter_maxlevel():
    exporter = JsonExporter(maxlevel=1)
    eq_(exporter.export(parse("1/(1-z)")), '{"kind": "div"}')
    exporter = JsonExporter(dictexporter=DictExporter(attriter=lambda attrs: [(k, v) for k, v in attrs if k == "kind"]))
    eq_(json.loads(exporter.export(parse("-z"))), {"kind": "neg", "children": [{"kind": "z"}]})


def test_json_exporter_write(tmp_path):
    """Write to a file handle and atomically to a path."""
    exporter = JsonExporter(indent=2, sort_keys=True)
    manifest = RunManifest("verify", flags={"suite": "all"}, cfg=SupConfig(), version="1.0.0", seed=42)
    results = {"manifest": manifest, "checks": [_report()]}
    path = tmp_path / "report.json"
    with open(path, "w", encoding="utf-8") as filehandle:
        exporter.write(results, filehandle)
    eq_(json.loads(path.read_text(encoding="utf-8")), json.loads(exporter.export(results)))
    atomic = tmp_path / "atomic.json"
    exporter.write_atomic(results, str(atomic))
    eq_(atomic.read_text(encoding="utf-8"), exporter.export(results) + "\n")
    eq_(sorted(os.listdir(tmp_path)), ["atomic.json", "report.json"])


def test_json_exporter_write_atomic_failed(tmp_path):
    """Nothing is written if the export fails."""
    path = tmp_path / "report.json"
    path.write_text("old", encoding="utf-8")
    with assert_raises(TypeError, "Object of type object is not JSON serializable"):
        JsonExporter().write_atomic({"bad": object()}, str(path))
    eq_(path.read_text(encoding="utf-8"), "old")
    eq_(os.listdir(tmp_path), ["report.json"])
