# -*- coding: utf-8 -*-
import json

from ..maps import MapSpecError
from .dictimporter import DictImporter


class JsonImporter:
    """
    Import a logharmonic map from its JSON specification.

    The JSON is read and converted to a map via `dictimporter`.

    Keyword Arguments:
        dictimporter: Dictionary Importer used (see :any:`DictImporter`).
        kwargs: All other arguments are passed to
                :any:`json.load`/:any:`json.loads`.
                See documentation for reference.

    >>> from disknorm.importer import JsonImporter
    >>> importer = JsonImporter()
    >>> f = importer.import_('{"h": "1/(1-z)", "g": "exp(-z)/(1-z)", "omega": "z"}')
    >>> f
    LogharmonicMap(h=Expr('1/(1 - z)'), g=Expr('exp(-z)/(1 - z)'))
    >>> importer.import_('{"h": ')
    Traceback (most recent call last):
      ...
    disknorm.maps.exceptions.MapSpecError: Malformed JSON: Expecting value: line 1 column 7 (char 6)
    """

    def __init__(self, dictimporter=None, **kwargs):
        self.dictimporter = dictimporter
        self.kwargs = kwargs

    def __import(self, data):
        dictimporter = self.dictimporter or DictImporter()
        return dictimporter.import_(data)

    def import_(self, data):
        """Read JSON from `data`."""
        return self.__import(self.__load(json.loads, data))

    def read(self, filehandle):
        """Read JSON from `filehandle`."""
        return self.__import(self.__load(json.load, filehandle))

    def __load(self, load, source):
        try:
            return load(source, **self.kwargs)
        except ValueError as exc:
            raise MapSpecError("Malformed JSON: %s" % (exc,)) from None
