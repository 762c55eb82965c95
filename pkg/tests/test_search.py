from disknorm import CountError, find, find_by_attr, findall, findall_by_attr
from disknorm.expr import parse

from .helper import assert_raises, eq_


def test_findall():
    e = parse("exp(z)/(1-z)^2 + log(1+z)")
    eq_(findall(e, filter_=lambda node: node.kind in ("exp", "log")), (parse("exp(z)"), parse("log(1+z)")))
    eq_(len(findall(e, filter_=lambda node: node.kind == "z")), 3)
    eq_(findall(e, filter_=lambda node: node.kind == "z", unique=True), (parse("z"),))
    eq_(findall(e, filter_=lambda node: node.kind == "z", maxlevel=3), ())
    eq_(findall(e, filter_=lambda node: node.kind == "z", stop=lambda node: node.kind == "div"), (parse("z"),))
    with assert_raises(CountError, "Expecting at least 4 elements, but found 3. (Expr('z'), Expr('z'), Expr('z'))"):
        findall(e, filter_=lambda node: node.kind == "z", mincount=4)
    with assert_raises(CountError, "Expecting 2 elements at maximum, but found 3. (Expr('z'), Expr('z'), Expr('z'))"):
        findall(e, filter_=lambda node: node.kind == "z", maxcount=2)
    with assert_raises(CountError, "Expecting at least 1 elements, but found 0."):
        findall(e, filter_=lambda node: node.kind == "pow", mincount=1)


def test_findall_by_attr():
    e = parse("(1-z)^0.5 * z^2 / z^2")
    eq_(findall_by_attr(e, "pow"), (parse("(1-z)^0.5"),))
    eq_(findall_by_attr(e, 2, name="exponent"), (parse("z^2"), parse("z^2")))
    eq_(findall_by_attr(e, 2, name="exponent", unique=True), (parse("z^2"),))
    eq_(findall_by_attr(e, 0.5, name="exponent", maxlevel=2), ())
    eq_(findall_by_attr(e, 1, name="value"), (parse("1"),))
    eq_(findall_by_attr(e, "nope", name="missing"), ())


def test_find():
    e = parse("exp(-z)/(1-z)")
    eq_(find(e, lambda node: node.kind == "neg"), parse("-z"))
    eq_(find(e, lambda node: node.kind == "log"), None)
    eq_(find(e, lambda node: node.kind == "z", unique=True), parse("z"))
    eq_(find(e, lambda node: node.kind == "z", stop=lambda node: node.kind == "exp"), parse("z"))
    with assert_raises(CountError, "Expecting 1 elements at maximum, but found 2. (Expr('z'), Expr('z'))"):
        find(e, lambda node: node.kind == "z")


def test_find_by_attr():
    e = parse("1/(1-z)")
    eq_(find_by_attr(e, "sub"), parse("1-z"))
    eq_(find_by_attr(e, "log"), None)
    eq_(find_by_attr(e, "z", maxlevel=2), None)
    eq_(find_by_attr(e, "z"), parse("z"))
    with assert_raises(CountError, "Expecting 1 elements at maximum, but found 2. (Expr('1'), Expr('1'))"):
        find_by_attr(e, "const")
