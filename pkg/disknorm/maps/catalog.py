"""
Catalog of Extremal and Reference Maps.

Every entry carries the quantities it is known to attain, each with a note on
where the value comes from.

>>> entry = catalog("geometric_gap")
>>> entry.map.h
Expr('1/(1 - z)')
>>> entry.expected["pre_schwarzian"]
Expected(value=5.0, provenance='(1-r^2)|P_f(r)| = r^2 + 2r + 2 on the radius to 1', sense='equal')
>>> catalog("mobius_family(0.5)").expected["log_bloch_g"].value
2.0
>>> catalog("koebe_power(1, 0.5)").map.name
'koebe_power(1, 0.5)'
>>> catalog("unknown")
Traceback (most recent call last):
  ...
disknorm.maps.exceptions.UnknownCatalogNameError: Unknown catalog name 'unknown'.
"""

import collections
import re

from ..expr import Z, Expr, const, exp, parse, pretty_print
from .constructions import power_construct
from .exceptions import MapSpecError, UnknownCatalogNameError
from .logharmonic import LogharmonicMap

CatalogEntry = collections.namedtuple("CatalogEntry", ("name", "map", "expected"))

Expected = collections.namedtuple("Expected", ("value", "provenance", "sense"), defaults=("equal",))
"""
Known value of a quantity.

`sense` is `"equal"` for exact values, `"upper"` and `"lower"` for bounds.
"""

KOEBE = parse("z/(1-z)^2")

_NAME = re.compile(r"^\s*([a-z_][a-z0-9_]*)\s*(?:\((.*)\))?\s*$")


def geometric_gap():
    """`h = 1/(1-z)`, `g = exp(-z)/(1-z)`, `omega = z`: the gap between `||P_f||` and `||P_psi||` is attained."""
    f = LogharmonicMap(parse("1/(1-z)"), parse("exp(-z)/(1-z)"), name="geometric_gap")
    return CatalogEntry(
        "geometric_gap",
        f,
        {
            "pre_schwarzian": Expected(5.0, "(1-r^2)|P_f(r)| = r^2 + 2r + 2 on the radius to 1"),
            "associated_pre_schwarzian": Expected(6.0, "P_psi = (2+z)/(1-z), (1+r)(2+r) on the radius to 1"),
            "log_bloch_h": Expected(2.0, "(1-r^2)/(1-r) = 1 + r"),
            "log_bloch_g": Expected(2.0, "g'/g = z/(1-z), r(1+r) on the radius to 1"),
        },
    )


def rational_gap():
    """`h = z/(1-z)`, `g = 1/(1-z)`, `omega = z`."""
    f = LogharmonicMap(parse("z/(1-z)"), parse("1/(1-z)"), name="rational_gap")
    return CatalogEntry(
        "rational_gap",
        f,
        {
            "pre_schwarzian": Expected(5.0, "P_f = 3/(1-z) - conj(z)/(1-|z|^2), 3(1+r) - r on the radius to 1"),
            "associated_pre_schwarzian": Expected(6.0, "P_psi = 3/(1-z), 3(1+r) on the radius to 1"),
            "log_bloch_g": Expected(2.0, "g'/g = 1/(1-z), 1 + r"),
        },
    )


def mobius_family(t):
    """
    `H = exp(-log(1-z))` with dilatation `(t - z)/(1 - tz)`.

    `G = (1-z)(1-tz)^(-(1+t)/t)` solves `G'/G = omega H'/H` with `G(0) = 1`.
    """
    # pylint: disable=C0415
    from ..theorems.family import n_t

    t = float(t)
    if not 0 < t < 1:
        raise MapSpecError("mobius_family needs 0 < t < 1, got %r." % (t,))
    name = "mobius_family(%r)" % (t,)
    H = parse("exp(-log(1-z))")
    G = (1 - Z) * (1 - const(t) * Z) ** (-(1 + t) / t)
    omega = (const(t) - Z) / (1 - const(t) * Z)
    f = LogharmonicMap(H, G, omega=omega, name=name)
    return CatalogEntry(
        name,
        f,
        {
            "pre_schwarzian_h": Expected(4.0, "P_H = 2/(1-z), 2(1+r) on the radius to 1"),
            "log_bloch_g": Expected(2.0, "(1+r)|t-r|/(1-tr) on the radius to 1"),
            "pre_schwarzian": Expected(7.0, "||P_F|| <= 7 for every t", "upper"),
            "pre_schwarzian_floor": Expected(n_t(t), "maximum of the profile E(r) at r0", "lower"),
        },
    )


def koebe_power(lambda1, lambda2):
    """`f = k'^lambda1 conj(k'^lambda2)` for the Koebe function `k`, extremal for growth."""
    lambda1, lambda2 = float(lambda1), float(lambda2)
    name = "koebe_power(%g, %g)" % (lambda1, lambda2)
    f = power_construct(KOEBE, KOEBE, lambda1, lambda2, name=name)
    return CatalogEntry(
        name,
        f,
        {
            "log_bloch_h": Expected(6.0 * lambda1, "h'/h = lambda1 P_k and ||P_k|| = 6"),
            "dilatation": Expected(lambda2 / lambda1, "constant dilatation for H = G"),
        },
    )


def exp_h(eps=0.2):
    """`h = exp(eps z)`, `g = 1`: `P_f = eps` and `omega = 0`."""
    eps = float(eps)
    name = "exp_h(%r)" % (eps,)
    f = LogharmonicMap(exp(const(eps) * Z), const(1), name=name)
    return CatalogEntry(
        name,
        f,
        {
            "pre_schwarzian": Expected(abs(eps), "P_f = eps, sup (1-r^2)|eps| at r = 0"),
            "hyperbolic": Expected(0.0, "omega = 0"),
        },
    )


def identity():
    """`h = exp(z)`, `g = 1`. `h = z` vanishes at the origin and is not admissible."""
    f = LogharmonicMap(parse("exp(z)"), const(1), name="identity")
    return CatalogEntry("identity", f, {"pre_schwarzian": Expected(1.0, "P_f = 1, sup (1-r^2) at r = 0")})


def pole_family(eps, omega=Z):
    """
    `h = exp(int_0^z du/(1 - eps(u)))` for a self-map `eps` fixing the origin.

    A number `c` stands for `eps = c z`. `||P_f|| <= 7` for every dilatation.
    """
    if not isinstance(eps, Expr):
        eps = float(eps)
        if not abs(eps) < 1:
            raise MapSpecError("pole_family needs |c| < 1, got %r." % (eps,))
        name = "pole_family(%r)" % (eps,)
        eps = const(eps) * Z
    else:
        name = "pole_family(%s)" % (pretty_print(eps),)
    f = LogharmonicMap.from_log_derivative(1 / (1 - eps), omega, name=name)
    return CatalogEntry(name, f, {"pre_schwarzian": Expected(7.0, "||P_f|| <= 7 for every dilatation", "upper")})


CATALOG = collections.OrderedDict(
    [
        ("geometric_gap", geometric_gap),
        ("rational_gap", rational_gap),
        ("mobius_family", mobius_family),
        ("koebe_power", koebe_power),
        ("exp_h", exp_h),
        ("identity", identity),
        ("pole_family", pole_family),
    ]
)

# Alternative names accepted by :any:`catalog`.
ALIASES = {
    "thm31_ex1": "geometric_gap",
    "thm31_ex2": "rational_gap",
    "thm36_family": "mobius_family",
}


def catalog(name):
    """
    Catalog entry called `name`, with arguments in parentheses, e.g. `"mobius_family(0.5)"`.

    Names in :any:`ALIASES` resolve to their catalog entry.
    """
    match = _NAME.match(name)
    key = ALIASES.get(match.group(1), match.group(1)) if match else None
    if key not in CATALOG:
        raise UnknownCatalogNameError(name)
    args = match.group(2)
    try:
        values = [float(arg) for arg in args.split(",")] if args and args.strip() else []
        return CATALOG[key](*values)
    except (TypeError, ValueError):
        raise UnknownCatalogNameError(name) from None
