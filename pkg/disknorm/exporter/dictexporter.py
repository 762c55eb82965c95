from ..expr import Expr, pretty_print
from ..expr.node import CONST, IPOW, POW
from ..manifest import RunManifest
from ..maps import HarmonicMap, LogharmonicMap
from ..norms import NormEstimate, SupConfig
from ..theorems import CheckReport


class DictExporter:
    """
    Results to dictionary exporter.

    Estimates, check reports, manifests, engine settings and maps are converted to
    dictionaries of plain values. Lists and dictionaries are exported item by item,
    other values are kept.
    Expression trees are exported node by node, child nodes to the `children` attribute.

    Keyword Args:
        dictcls: class used as dictionary. :any:`dict` by default.
        attriter: attribute iterator for sorting and/or filtering.
        childiter: child iterator for sorting and/or filtering of expression nodes.
        maxlevel (int): Limit expression export to this number of levels.

    >>> from pprint import pprint  # just for nice printing
    >>> from disknorm.norms import NormEstimate
    >>> from disknorm.expr import parse
    >>> exporter = DictExporter()
    >>> est = NormEstimate(5.0, 0.9, 0.0, [4.0, 5.0], converged=True, kind="preschwarzian_logharmonic", samples=10)
    >>> pprint(exporter.export(est))
    {'converged': True,
     'kind': 'preschwarzian_logharmonic',
     'levels': [4.0, 5.0],
     'r': 0.9,
     'samples': 10,
     'skipped': 0,
     'theta': 0.0,
     'value': 5.0}
    >>> pprint(exporter.export(parse("1/(1-z)")))
    {'children': [{'kind': 'const', 'value': [1.0, 0.0]},
                  {'children': [{'kind': 'const', 'value': [1.0, 0.0]},
                                {'kind': 'z'}],
                   'kind': 'sub'}],
     'kind': 'div'}

    The attribute iterator `attriter` may be used for filtering too.
    For example, just dump the value:

    >>> exporter = DictExporter(attriter=lambda attrs: [(k, v) for k, v in attrs if k == "value"])
    >>> exporter.export(est)
    {'value': 5.0}
    """

    def __init__(self, dictcls=dict, attriter=None, childiter=list, maxlevel=None):
        self.dictcls = dictcls
        self.attriter = attriter
        self.childiter = childiter
        self.maxlevel = maxlevel

    def export(self, obj):
        """Export `obj`."""
        attriter = self.attriter or (lambda attr_values: attr_values)
        if isinstance(obj, (list, tuple)):
            return [self.export(item) for item in obj]
        if isinstance(obj, dict):
            return self.dictcls((key, self.export(value)) for key, value in obj.items())
        if isinstance(obj, Expr):
            return self.__export_expr(obj, attriter)
        for cls, method in self._dispatch():
            if isinstance(obj, cls):
                return self.dictcls(attriter(method(self, obj)))
        return obj

    def __export_expr(self, node, attriter, level=1):
        data = self.dictcls(attriter(self._iter_expr_values(node)))
        maxlevel = self.maxlevel
        if maxlevel is None or level < maxlevel:
            children = [self.__export_expr(child, attriter, level=level + 1) for child in self.childiter(node.children)]
            if children:
                data["children"] = children
        return data

    @staticmethod
    def _dispatch():
        return (
            (NormEstimate, DictExporter._iter_estimate_values),
            (CheckReport, DictExporter._iter_report_values),
            (RunManifest, DictExporter._iter_manifest_values),
            (SupConfig, DictExporter._iter_config_values),
            (LogharmonicMap, DictExporter._iter_logharmonic_values),
            (HarmonicMap, DictExporter._iter_harmonic_values),
        )

    @staticmethod
    def _iter_expr_values(node):
        yield "kind", node.kind
        if node.kind == CONST:
            yield "value", [node.value.real, node.value.imag]
        elif node.kind in (POW, IPOW):
            yield "exponent", node.exponent

    def _iter_estimate_values(self, est):
        yield "value", est.value
        yield "r", est.r
        yield "theta", est.theta
        yield "converged", est.converged
        yield "levels", list(est.trace)
        yield "skipped", est.skipped
        yield "samples", est.samples
        yield "kind", est.kind

    def _iter_report_values(self, report):
        yield "check_id", report.check_id
        yield "inputs", report.inputs
        yield "computed", report.computed
        yield "expected", report.expected
        yield "tolerance", report.tolerance
        yield "pass", report.passed
        yield "runtime_ms", report.runtime_ms
        if report.verdict is not None:
            yield "verdict", report.verdict

    def _iter_manifest_values(self, manifest):
        yield "command", manifest.command
        yield "flags", manifest.flags
        yield "cfg", self.export(manifest.cfg) if manifest.cfg is not None else None
        yield "version", manifest.version
        yield "seed", manifest.seed
        yield "runtime_ms", manifest.runtime_ms

    def _iter_config_values(self, cfg):
        for key in ("radial_levels", "r_max", "angular_base", "refine_iters", "abs_tol"):
            yield key, getattr(cfg, key)

    def _iter_logharmonic_values(self, f):
        yield "h", _text(f.h)
        yield "g", _text(f.g)
        yield "omega", _text(f.omega)
        yield "name", f.name

    def _iter_harmonic_values(self, f):
        yield "H", _text(f.H)
        yield "G", _text(f.G)
        yield "omega", _text(f.omega)
        yield "name", f.name


def _text(expr):
    return pretty_print(expr) if expr is not None else None
