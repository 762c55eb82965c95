import json

import numpy as np

from ..util import atomic_open
from .dictexporter import DictExporter


class JsonExporter:
    """
    Results to JSON exporter.

    Results are converted to dictionaries via `dictexporter` and exported to JSON.
    Numpy scalars and arrays become plain numbers and lists, complex numbers `[re, im]`.

    Keyword Arguments:
        dictexporter: Dictionary Exporter used (see :any:`DictExporter`).
        maxlevel (int): Limit expression export to this number of levels.
        kwargs: All other arguments are passed to
                :any:`json.dump`/:any:`json.dumps`.
                See documentation for reference.

    >>> from disknorm.norms import SupConfig
    >>> exporter = JsonExporter(indent=2, sort_keys=True)
    >>> print(exporter.export(SupConfig(radial_levels=4)))
    {
      "abs_tol": 0.0001,
      "angular_base": 128,
      "r_max": 0.99999999,
      "radial_levels": 4,
      "refine_iters": 60
    }

    .. note:: With `sort_keys=True` equal results give byte-identical JSON.
    """

    def __init__(self, dictexporter=None, maxlevel=None, **kwargs):
        self.dictexporter = dictexporter
        self.maxlevel = maxlevel
        kwargs.setdefault("default", _default)
        self.kwargs = kwargs

    def _export(self, obj):
        dictexporter = self.dictexporter or DictExporter()
        if self.maxlevel is not None:
            dictexporter.maxlevel = self.maxlevel
        return dictexporter.export(obj)

    def export(self, obj):
        """Return JSON for `obj`."""
        data = self._export(obj)
        return json.dumps(data, **self.kwargs)

    def write(self, obj, filehandle):
        """Write JSON for `obj` to `filehandle`."""
        data = self._export(obj)
        return json.dump(data, filehandle, **self.kwargs)

    def write_atomic(self, obj, path):
        """Write JSON for `obj` to a temporary file, then rename it to `path`."""
        text = self.export(obj)
        with atomic_open(path) as filehandle:
            filehandle.write(text)
            filehandle.write("\n")


def _default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return _default(obj.item()) if isinstance(obj.item(), complex) else obj.item()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError("Object of type %s is not JSON serializable" % (obj.__class__.__name__,))
