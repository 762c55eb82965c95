# -*- coding: utf-8 -*-
from ..expr import parse
from ..maps import LogharmonicMap, MapSpecError, catalog, power_construct
from ..maps.analytic import cross_check_dilatation

KEYS = ("h", "g", "omega", "lambda1", "lambda2", "name", "catalog")


class DictImporter:
    """
    Import a logharmonic map from its dictionary specification.

    The keys `h`, `g` and `omega` hold expression strings. With `lambda1` and
    `lambda2` the map is `H'^lambda1 conj(G'^lambda2)` of :any:`power_construct`
    with `H = h` and `G = g`, or `G = h` without `g`. Otherwise it is
    `h conj(g)`, with `g` derived from `omega` if missing. Given both, `g` and
    `omega` are cross-checked. The key `catalog` names a catalog map instead.

    Keyword Args:
        mapcls: class used for maps.

    >>> from disknorm.importer import DictImporter
    >>> importer = DictImporter()
    >>> importer.import_({"h": "1/(1-z)", "omega": "z", "name": "ex"})
    LogharmonicMap(h=Expr('1/(1 - z)'), omega=Expr('z'), name='ex')
    >>> importer.import_({"h": "z/(1-z)^2", "lambda1": 2, "lambda2": 1}).omega
    Expr('0.5')
    >>> importer.import_({"g": "1"})
    Traceback (most recent call last):
      ...
    disknorm.maps.exceptions.MapSpecError: Map specification needs 'h' or 'catalog'.
    """

    def __init__(self, mapcls=LogharmonicMap):
        self.mapcls = mapcls

    def import_(self, data):
        """Import map from `data`."""
        return self.__import(data)

    def __import(self, data):
        if not isinstance(data, dict):
            raise MapSpecError("Map specification must be an object, got %r." % (data,))
        unknown = sorted(set(data) - set(KEYS))
        if unknown:
            raise MapSpecError("Unknown map specification keys %s." % (", ".join(unknown),))
        attrs = {key: value for key, value in data.items() if value is not None}
        if "catalog" in attrs:
            if set(attrs) - {"catalog"}:
                raise MapSpecError("'catalog' excludes all other keys.")
            return catalog(attrs["catalog"]).map
        if "h" not in attrs:
            raise MapSpecError("Map specification needs 'h' or 'catalog'.")
        h, g, omega = (_parse(attrs, key) for key in ("h", "g", "omega"))
        name = attrs.get("name")
        if ("lambda1" in attrs) != ("lambda2" in attrs):
            raise MapSpecError("'lambda1' and 'lambda2' go together.")
        if "lambda1" in attrs:
            f = power_construct(h, g if g is not None else h, attrs["lambda1"], attrs["lambda2"], name=name)
            if omega is not None:
                cross_check_dilatation(omega, f.omega)
            return f
        if g is None and omega is None:
            raise MapSpecError("Map specification needs 'g' or 'omega'.")
        return self.mapcls(h, g=g, omega=omega, name=name)


def _parse(attrs, key):
    text = attrs.get(key)
    return parse(text) if text is not None else None
