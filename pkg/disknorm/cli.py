"""
Command Line.

::

    disknorm eval --expr "1/(1-z)" --at 0.5
    disknorm norm --kind pre-schwarzian --h "1/(1-z)" --omega "z"
    disknorm verify --suite all --seed 42 --out report.json
    disknorm dump --catalog geometric_gap --grid 24x128 --out samples.csv

Exit codes: 0 success, 1 failed check, 2 parse error, 3 evaluation error,
4 invalid map, 5 internal error, 6 I/O error.
"""

import argparse
import logging
import sys

import numpy as np

from . import __version__
from .exporter import CsvExporter, JsonExporter
from .expr import ExprError, ExprSyntaxError, UnknownIdentifierError, evaluate, is_constant, parse
from .importer import DictImporter, JsonImporter
from .manifest import RunManifest
from .maps import MapError, MapSpecError
from .norms import NoFiniteSamplesError, SupConfig, norm_objective, objective_grid, weighted_sup
from .render import RenderTree
from .theorems import DEFAULT_SEED, DomainError, known_value_suite, profile_E, property_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_EVAL = 3
EXIT_MAP = 4
EXIT_INTERNAL = 5
EXIT_IO = 6

NORM_KINDS = ("pre-schwarzian", "associated", "schwarzian", "bloch", "hyperbolic")

_LOGGER = logging.getLogger(__name__)


def main(argv=None):
    """Run the command line with `argv`, defaulting to `sys.argv`, and return the exit code."""
    parser = _parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (ExprSyntaxError, UnknownIdentifierError) as exc:
        return _parse_error(exc)
    except (ExprError, NoFiniteSamplesError) as exc:
        return _error(EXIT_EVAL, exc)
    except (MapError, DomainError) as exc:
        return _error(EXIT_MAP, exc)
    except OSError as exc:
        return _error(EXIT_IO, exc)
    except Exception:  # pylint: disable=W0703
        _LOGGER.exception("Internal error.")
        return EXIT_INTERNAL


def cmd_eval(args):
    """Print the value of an expression at a point."""
    expr = parse(args.expr)
    at = parse(args.at)
    if not is_constant(at):
        raise MapSpecError("--at must be a number, got %r." % (args.at,))
    if args.tree:
        print(RenderTree(expr).by_attr())
    value = evaluate(expr, evaluate(at, 0))
    print(_format_complex(value))
    return EXIT_OK


def cmd_norm(args):
    """Print a norm estimate and optionally write it as JSON."""
    cfg = _config(args)
    kind, subject = _subject(args)
    manifest = RunManifest("norm", flags=_flags(args), cfg=cfg)
    objective, weight_power = norm_objective(kind, subject)
    est = weighted_sup(objective, weight_power, cfg, kind=kind)
    print("kind: %s" % (est.kind,))
    print("value: %.15f" % (est.value,))
    print("maximizer: r=%.15f theta=%.15f" % est.location)
    print("converged: %s" % (est.converged,))
    if kind == "bloch_logharmonic":
        print("norm: %.15f" % (abs(subject.value(0)) + est.value,))
    if args.out:
        manifest.stop()
        _json().write_atomic({"manifest": manifest, "estimate": est}, args.out)
    return EXIT_OK


def cmd_verify(args):
    """Run check suites, print a summary and optionally write the reports as JSON."""
    cfg = _config(args)
    manifest = RunManifest("verify", flags=_flags(args), cfg=cfg, seed=args.seed)
    reports = []
    try:
        if args.suite in ("paper", "all"):
            reports += known_value_suite(cfg, args.tol)
        if args.suite in ("properties", "all"):
            reports += property_suite(cfg, args.seed)
    except Exception:  # pylint: disable=W0703
        _LOGGER.exception("Suite %r aborted.", args.suite)
        return EXIT_INTERNAL
    manifest.stop()
    width = max([len(report.check_id) for report in reports] + [len("check")])
    print("%-*s  %-6s  %s" % (width, "check", "result", "runtime_ms"))
    for report in reports:
        print("%-*s  %-6s  %d" % (width, report.check_id, "pass" if report.passed else "FAIL", report.runtime_ms))
    failed = [report for report in reports if not report.passed]
    print("%d checks, %d failed." % (len(reports), len(failed)))
    if args.out:
        _json().write_atomic({"manifest": manifest, "checks": reports}, args.out)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_dump(args):
    """Write the weighted objective on a sample grid as CSV."""
    cfg = _config(args)
    radii, angles = args.grid or (cfg.radial_levels, cfg.angular_base)
    if args.profile_t is not None:
        rs = np.linspace(0.0, cfg.r_max, radii * angles, endpoint=False)
        columns = (rs, np.zeros(rs.shape), profile_E(rs, args.profile_t))
    else:
        kind, subject = _subject(args)
        objective, weight_power = norm_objective(kind, subject)
        columns = objective_grid(objective, weight_power, cfg, grid=(radii, angles))
    CsvExporter().write_atomic(columns, args.out)
    _LOGGER.info("Wrote %d rows to %s.", len(columns[0]), args.out)
    return EXIT_OK


def _parser():
    parser = argparse.ArgumentParser(prog="disknorm", description="Norms of logharmonic mappings of the unit disk.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging, twice for debug output")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluation = commands.add_parser("eval", help="evaluate an expression")
    evaluation.add_argument("--expr", required=True, help="expression in z")
    evaluation.add_argument("--at", default="0", help="point, e.g. 0.5 or 0.3+0.4i")
    evaluation.add_argument("--tree", action="store_true", help="print the expression tree")
    evaluation.set_defaults(func=cmd_eval)

    norm = commands.add_parser("norm", help="estimate a norm")
    norm.add_argument("--kind", choices=NORM_KINDS, default="pre-schwarzian")
    _add_map_flags(norm)
    _add_config_flags(norm)
    norm.add_argument("--tol", type=float, default=None, help="convergence tolerance of the engine")
    norm.add_argument("--out", help="JSON report path")
    norm.set_defaults(func=cmd_norm)

    verify = commands.add_parser("verify", help="run check suites")
    verify.add_argument(
        "--suite",
        choices=("paper", "properties", "all"),
        default="all",
        help="paper: known values and bounds, properties: seeded randomized identities",
    )
    verify.add_argument("--tol", type=float, default=1e-3, help="tolerance of known values")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--out", help="JSON report path")
    _add_config_flags(verify)
    verify.set_defaults(func=cmd_verify)

    dump = commands.add_parser("dump", help="write the weighted objective on a grid as CSV")
    dump.add_argument("--kind", choices=NORM_KINDS, default="pre-schwarzian")
    _add_map_flags(dump)
    _add_config_flags(dump)
    dump.add_argument("--profile-t", type=float, default=None, help="dump the profile E(r, t) instead")
    dump.add_argument("--out", required=True, help="CSV path")
    dump.set_defaults(func=cmd_dump)
    return parser


def _add_map_flags(parser):
    parser.add_argument("--h", help="analytic part h")
    parser.add_argument("--g", help="co-analytic part g")
    parser.add_argument("--omega", help="dilatation")
    parser.add_argument("--lambda1", type=float, help="exponent of H' in H'^lambda1 conj(G'^lambda2)")
    parser.add_argument("--lambda2", type=float, help="exponent of G'")
    parser.add_argument("--catalog", help="catalog map, e.g. 'mobius_family(0.5)'")
    parser.add_argument("--map", dest="map_file", help="JSON map specification file")


def _add_config_flags(parser):
    parser.add_argument("--grid", type=_grid, help="RxA: radial levels times angles on the first ring")
    parser.add_argument("--rmax", type=float, help="largest sampled radius")


def _grid(text):
    try:
        radii, angles = (int(part) for part in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError("expected RxA, got %r" % (text,)) from None
    if radii < 1 or angles < 1:
        raise argparse.ArgumentTypeError("grid sizes must be positive, got %r" % (text,))
    return radii, angles


def _config(args):
    settings = {}
    if args.grid:
        settings["radial_levels"], settings["angular_base"] = args.grid
    if args.rmax is not None:
        settings["r_max"] = args.rmax
    if getattr(args, "tol", None) is not None and args.command == "norm":
        settings["abs_tol"] = args.tol
    try:
        return SupConfig(**settings)
    except ValueError as exc:
        raise MapSpecError(str(exc)) from None


def _flags(args):
    return {key: value for key, value in sorted(vars(args).items()) if key != "func"}


def _json():
    return JsonExporter(indent=2, sort_keys=True)


def _subject(args):
    """Norm kind of the engine and the object it applies to."""
    # pylint: disable=R0911
    kind = args.kind
    if args.map_file:
        with open(args.map_file, encoding="utf-8") as filehandle:
            f = JsonImporter().read(filehandle)
    elif args.catalog:
        f = DictImporter().import_({"catalog": args.catalog})
    elif args.h is None:
        if kind == "hyperbolic" and args.omega is not None:
            return "hyperbolic_sup", parse(args.omega)
        raise MapSpecError("Missing map: give --h, --catalog or --map.")
    elif args.g is None and args.omega is None and args.lambda1 is None and args.lambda2 is None:
        return _analytic_subject(kind, parse(args.h))
    else:
        spec = {"h": args.h, "g": args.g, "omega": args.omega, "lambda1": args.lambda1, "lambda2": args.lambda2}
        f = DictImporter().import_(spec)
    if kind == "pre-schwarzian":
        return "preschwarzian_logharmonic", f
    if kind == "associated":
        return "preschwarzian_associated", f
    if kind == "schwarzian":
        return "schwarzian_harmonic", f.log_map()
    if kind == "bloch":
        return "bloch_logharmonic", f
    return "hyperbolic_sup", f.omega


def _analytic_subject(kind, h):
    if kind == "pre-schwarzian":
        return "preschwarzian_analytic", h
    if kind == "schwarzian":
        return "schwarzian_analytic", h
    if kind == "bloch":
        return "bloch_analytic", h
    raise MapSpecError("--kind %s needs --g or --omega." % (kind,))


def _format_complex(value):
    if value.imag == 0:
        return "%.15f" % (value.real,)
    return "%.15f%+.15fi" % (value.real, value.imag)


def _parse_error(exc):
    print("disknorm: error: %s" % (exc,), file=sys.stderr)
    if exc.source is not None:
        print("  %s" % (exc.source,), file=sys.stderr)
        print("  %s^" % (" " * exc.position,), file=sys.stderr)
    return EXIT_PARSE


def _error(code, exc):
    print("disknorm: error: %s" % (exc,), file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
