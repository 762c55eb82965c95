import os

import numpy as np

from disknorm.exporter import CsvExporter

from .helper import assert_raises, eq_


def test_csv_exporter():
    """Csv Exporter."""
    exporter = CsvExporter()
    columns = (np.array([0.0, 0.5]), np.array([0.0, np.pi]), np.array([0.1, np.nan]))
    eq_(
        exporter.export(columns).splitlines(),
        ["r,theta,value", "0.0,0.0,0.1", "0.5,%r,nan" % (np.pi,)],
    )
    eq_(exporter.export(([], [], [])), "r,theta,value\n")


def test_csv_exporter_header():
    exporter = CsvExporter(header=["r", "theta", "E"])
    eq_(exporter.export(([0.25], [0], [2.5])), "r,theta,E\n0.25,0.0,2.5\n")
    with assert_raises(ValueError, "Expected 3 columns, got 2."):
        exporter.export(([0.25], [0]))


def test_csv_exporter_write_atomic(tmp_path):
    path = tmp_path / "samples.csv"
    CsvExporter().write_atomic(([0.0], [0.0], [1.0]), str(path))
    with open(path, newline="", encoding="utf-8") as filehandle:
        eq_(filehandle.read(), "r,theta,value\n0.0,0.0,1.0\n")
    with assert_raises(ValueError, "Expected 3 columns, got 1."):
        CsvExporter().write_atomic(([0.0],), str(path))
    eq_(os.listdir(tmp_path), ["samples.csv"])
