# -*- coding: utf-8 -*-
import os

from disknorm.util import _repr, atomic_open

from .helper import assert_raises, eq_


class _Sample:
    def __init__(self):
        self.value = 1.5
        self.name = "s"
        self._cache = {}


def test_repr():
    eq_(_repr(_Sample()), "_Sample(name='s', value=1.5)")
    eq_(_repr(_Sample(), args=["1"]), "_Sample(1, name='s', value=1.5)")
    eq_(_repr(_Sample(), nameblacklist=["name", "value"]), "_Sample()")


def test_atomic_open(tmp_path):
    path = tmp_path / "out.txt"
    with atomic_open(str(path)) as filehandle:
        filehandle.write("ä\n")
        eq_(path.exists(), False)
    eq_(path.read_text(encoding="utf-8"), "ä\n")
    eq_(os.listdir(tmp_path), ["out.txt"])


def test_atomic_open_failed(tmp_path):
    """A failing block keeps the previous content and leaves no temporary file."""
    path = tmp_path / "out.txt"
    path.write_text("old", encoding="utf-8")
    with assert_raises(RuntimeError, "boom"):
        with atomic_open(str(path)) as filehandle:
            filehandle.write("new")
            raise RuntimeError("boom")
    eq_(path.read_text(encoding="utf-8"), "old")
    eq_(os.listdir(tmp_path), ["out.txt"])


def test_atomic_open_missing_directory(tmp_path):
    path = tmp_path / "missing" / "out.txt"
    try:
        with atomic_open(str(path)) as filehandle:
            filehandle.write("new")  # pragma: no cover
    except FileNotFoundError:
        pass
    else:  # pragma: no cover
        assert False
    eq_(path.exists(), False)
