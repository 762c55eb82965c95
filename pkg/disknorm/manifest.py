"""
Run Manifests.

Every report written by the command line carries a :any:`RunManifest`.
"""

import time

from .util import _repr


class RunManifest:
    """
    Description of one command line run.

    Args:
        command (str): subcommand.

    Keyword Args:
        flags (dict): parsed flags.
        cfg (SupConfig): engine settings.
        version (str): tool version, defaults to the installed one.
        seed (int): seed of randomized checks.

    `runtime_ms` is the wall-clock time from creation to the last :any:`stop`.

    >>> manifest = RunManifest("verify", flags={"suite": "properties"}, version="0.0", seed=42)
    >>> manifest
    RunManifest('verify', cfg=None, flags={'suite': 'properties'}, runtime_ms=0, seed=42, version='0.0')
    """

    def __init__(self, command, flags=None, cfg=None, version=None, seed=None):
        # pylint: disable=R0913
        if version is None:
            # pylint: disable=C0415
            from . import __version__ as version
        self.command = command
        self.flags = flags or {}
        self.cfg = cfg
        self.version = version
        self.seed = seed
        self.runtime_ms = 0
        self._start = time.perf_counter()

    def __repr__(self):
        return _repr(self, args=[repr(self.command)], nameblacklist=["command"])

    def stop(self):
        """Record the elapsed wall-clock time."""
        self.runtime_ms = int(round((time.perf_counter() - self._start) * 1000))
        return self.runtime_ms
