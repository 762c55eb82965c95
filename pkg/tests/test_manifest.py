from disknorm import RunManifest, SupConfig, __version__

from .helper import eq_


def test_manifest():
    manifest = RunManifest("norm", flags={"kind": "bloch"}, cfg=SupConfig())
    eq_(manifest.command, "norm")
    eq_(manifest.version, __version__)
    eq_(manifest.seed, None)
    eq_(manifest.runtime_ms, 0)
    eq_(RunManifest("eval").flags, {})


def test_manifest_stop():
    """The runtime covers creation to the last stop."""
    manifest = RunManifest("verify", seed=42)
    runtime_ms = manifest.stop()
    assert isinstance(runtime_ms, int)
    assert runtime_ms >= 0
    eq_(manifest.runtime_ms, runtime_ms)
    assert manifest.stop() >= runtime_ms


def test_manifest_repr():
    manifest = RunManifest("dump", flags={"grid": (1, 1)}, version="0.1")
    eq_(repr(manifest), "RunManifest('dump', cfg=None, flags={'grid': (1, 1)}, runtime_ms=0, seed=None, version='0.1')")
