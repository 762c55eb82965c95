"""Importer."""

from .dictimporter import DictImporter  # noqa
from .jsonimporter import JsonImporter  # noqa
