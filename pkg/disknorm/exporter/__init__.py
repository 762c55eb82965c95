"""Exporter."""

from .csvexporter import CsvExporter  # noqa
from .dictexporter import DictExporter  # noqa
from .jsonexporter import JsonExporter  # noqa
