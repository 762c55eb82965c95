# -*- coding: utf-8 -*-
import io
import json

from disknorm.importer import DictImporter, JsonImporter
from disknorm.maps import MapSpecError

from .helper import assert_raises, eq_


def test_json_importer():
    """Json Importer."""
    text = json.dumps({"h": "1/(1-z)", "omega": "z", "name": "from_json"})
    f = JsonImporter().import_(text)
    eq_(f.name, "from_json")
    eq_(JsonImporter().read(io.StringIO(text)).name, "from_json")
    eq_(JsonImporter().import_('{"catalog": "geometric_gap"}').name, "geometric_gap")


def test_json_importer_kwargs():
    """Keyword arguments reach the JSON decoder."""
    f = JsonImporter(parse_int=float).import_('{"h": "z/(1-z)^2", "lambda1": 2, "lambda2": 1}')
    eq_(f.name, None)
    importer = JsonImporter(dictimporter=DictImporter())
    eq_(importer.import_('{"catalog": "identity"}').name, "identity")


def test_json_importer_malformed():
    with assert_raises(MapSpecError, "Malformed JSON: Expecting value: line 1 column 7 (char 6)"):
        JsonImporter().import_('{"h": ')
    with assert_raises(MapSpecError, "Map specification must be an object, got 1."):
        JsonImporter().import_("1")
    with assert_raises(MapSpecError, "Malformed JSON: Expecting value: line 1 column 1 (char 0)"):
        JsonImporter().read(io.StringIO(""))
