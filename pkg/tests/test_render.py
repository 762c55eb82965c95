# -*- coding: utf-8 -*-
from disknorm import AsciiStyle, ContStyle, RenderTree
from disknorm.expr import parse

from .helper import eq_


def test_render_str():
    """Render string cast."""
    e = parse("z/(1-z)^2")
    eq_(
        str(RenderTree(e)).splitlines(),
        [
            "div",
            "├── z",
            "└── ipow 2",
            "    └── sub",
            "        ├── const 1",
            "        └── z",
        ],
    )
    r = RenderTree(e, childiter=lambda nodes: [n for n in nodes if n.kind != "z"])
    eq_(str(r).splitlines(), ["div", "└── ipow 2", "    └── sub", "        └── const 1"])


def test_render_repr():
    """Render representation."""
    r = RenderTree(parse("-z"))
    eq_(repr(r), "RenderTree(Expr('-z'), style=ContStyle(), childiter=<class 'list'>)")


def test_render():
    """Rendering rows."""
    e = parse("exp(z) - 2.5i")
    result = [(pre, fill, node.label) for pre, fill, node in RenderTree(e, style=AsciiStyle)]
    eq_(
        result,
        [
            ("", "", "sub"),
            ("|-- ", "|   ", "exp"),
            ("|   +-- ", "|       ", "z"),
            ("+-- ", "    ", "const 2.5i"),
        ],
    )


def test_render_by_attr():
    """Multiline attributes continue with the fill."""
    e = parse("log(1 + z^0.5)")
    eq_(
        RenderTree(e, style=ContStyle()).by_attr(lambda node: "%s\n%s" % (node.kind, node.kind.upper())),
        "\n".join(
            [
                "log",
                "LOG",
                "└── add",
                "    ADD",
                "    ├── const",
                "    │   CONST",
                "    └── pow",
                "        POW",
                "        └── z",
                "            Z",
            ]
        ),
    )
    eq_(RenderTree(e, maxlevel=3).by_attr(), "log\n└── add\n    ├── const 1\n    └── pow 0.5")
    eq_(RenderTree(e).by_attr("missing"), "\n".join(["", "└── ", "    ├── ", "    └── ", "        └── "]))
