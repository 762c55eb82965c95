# -*- coding: utf-8 -*-
from disknorm import PostOrderIter, PreOrderIter
from disknorm.expr import parse

from .helper import eq_


def _labels(iterator):
    return [node.label for node in iterator]


def test_preorder():
    """PreOrderIter."""
    e = parse("(1 - z)^0.5 + log(1 - z)")
    eq_(_labels(PreOrderIter(e)), ["add", "pow 0.5", "sub", "const 1", "z", "log", "sub", "const 1", "z"])
    eq_(_labels(PreOrderIter(e, unique=True)), ["add", "pow 0.5", "sub", "const 1", "z", "log"])
    eq_(_labels(PreOrderIter(e, maxlevel=0)), [])
    eq_(_labels(PreOrderIter(e, maxlevel=1)), ["add"])
    eq_(_labels(PreOrderIter(e, maxlevel=2)), ["add", "pow 0.5", "log"])
    eq_(_labels(PreOrderIter(e, filter_=lambda n: n.kind in ("pow", "log"))), ["pow 0.5", "log"])
    eq_(_labels(PreOrderIter(e, stop=lambda n: n.kind == "log")), ["add", "pow 0.5", "sub", "const 1", "z"])
    eq_(_labels(PreOrderIter(parse("z"))), ["z"])


def test_postorder():
    """PostOrderIter."""
    e = parse("(1 - z)^0.5 + log(1 - z)")
    eq_(_labels(PostOrderIter(e)), ["const 1", "z", "sub", "pow 0.5", "const 1", "z", "sub", "log", "add"])
    eq_(_labels(PostOrderIter(e, unique=True)), ["const 1", "z", "sub", "pow 0.5", "log", "add"])
    eq_(_labels(PostOrderIter(e, maxlevel=2)), ["pow 0.5", "log", "add"])
    eq_(_labels(PostOrderIter(e, filter_=lambda n: n.is_leaf)), ["const 1", "z", "const 1", "z"])
    eq_(_labels(PostOrderIter(e, stop=lambda n: n.kind == "sub")), ["pow 0.5", "log", "add"])


def test_postorder_children_first():
    """With `unique=True` every shared subexpression precedes its parents."""
    e = parse("exp(z^2) * (z^2 + exp(z^2))")
    order = list(PostOrderIter(e, unique=True))
    position = {node: index for index, node in enumerate(order)}
    eq_(len(position), len(order))
    for node in order:
        for child in node.children:
            assert position[child] < position[node]


def test_iterator_is_lazy():
    """Iterators start on the first `next`."""
    iterator = PreOrderIter(parse("1/(1-z)"))
    eq_(iter(iterator) is iterator, True)
    eq_(next(iterator).label, "div")
    eq_(next(iterator).label, "const 1")
