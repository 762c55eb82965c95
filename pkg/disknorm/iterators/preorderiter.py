from .abstractiter import AbstractIter


class PreOrderIter(AbstractIter):
    """
    Iterate over expression tree applying pre-order strategy starting at `node`.

    Start at root and go-down until reaching a leaf node.
    Step upwards then, and search for the next leafs.

    >>> from disknorm import RenderTree, AsciiStyle, PreOrderIter
    >>> from disknorm.expr import parse
    >>> e = parse("exp(-z)/(1-z)")
    >>> print(RenderTree(e, style=AsciiStyle()).by_attr("label"))
    div
    |-- exp
    |   +-- neg
    |       +-- z
    +-- sub
        |-- const 1
        +-- z
    >>> [node.label for node in PreOrderIter(e)]
    ['div', 'exp', 'neg', 'z', 'sub', 'const 1', 'z']
    >>> [node.label for node in PreOrderIter(e, unique=True)]
    ['div', 'exp', 'neg', 'z', 'sub', 'const 1']
    >>> [node.label for node in PreOrderIter(e, maxlevel=2)]
    ['div', 'exp', 'sub']
    >>> [node.label for node in PreOrderIter(e, filter_=lambda n: n.kind != 'z')]
    ['div', 'exp', 'neg', 'sub', 'const 1']
    >>> [node.label for node in PreOrderIter(e, stop=lambda n: n.kind == 'exp')]
    ['div', 'sub', 'const 1', 'z']
    """

    @staticmethod
    def _iter(children, filter_, stop, maxlevel, seen):
        return PreOrderIter.__next(children, 1, filter_, stop, maxlevel, seen)

    @staticmethod
    def __next(children, level, filter_, stop, maxlevel, seen):
        if AbstractIter._abort_at_level(level, maxlevel):
            return
        for child in children:
            if AbstractIter._skip(child, stop, seen):
                continue
            if seen is not None:
                seen.add(child)
            if filter_(child):
                yield child
            for descendant in PreOrderIter.__next(child.children, level + 1, filter_, stop, maxlevel, seen):
                yield descendant
