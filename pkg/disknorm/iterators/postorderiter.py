from .abstractiter import AbstractIter


class PostOrderIter(AbstractIter):
    """
    Iterate over expression tree applying post-order strategy starting at `node`.

    Every node is returned after all of its children, which makes this the
    natural order for bottom-up evaluation.

    >>> from disknorm import PostOrderIter
    >>> from disknorm.expr import parse
    >>> e = parse("exp(-z)/(1-z)")
    >>> [node.label for node in PostOrderIter(e)]
    ['z', 'neg', 'exp', 'const 1', 'z', 'sub', 'div']
    >>> [node.label for node in PostOrderIter(e, unique=True)]
    ['z', 'neg', 'exp', 'const 1', 'sub', 'div']
    >>> [node.label for node in PostOrderIter(e, maxlevel=2)]
    ['exp', 'sub', 'div']
    >>> [node.label for node in PostOrderIter(e, stop=lambda n: n.kind == 'sub')]
    ['z', 'neg', 'exp', 'div']

    A node is marked as visited once it has been returned, so with `unique=True`
    a shared subexpression always precedes each of its parents.
    """

    @staticmethod
    def _iter(children, filter_, stop, maxlevel, seen):
        return PostOrderIter.__next(children, 1, filter_, stop, maxlevel, seen)

    @staticmethod
    def __next(children, level, filter_, stop, maxlevel, seen):
        if AbstractIter._abort_at_level(level, maxlevel):
            return
        for child in children:
            if AbstractIter._skip(child, stop, seen):
                continue
            for descendant in PostOrderIter.__next(child.children, level + 1, filter_, stop, maxlevel, seen):
                yield descendant
            if seen is not None:
                seen.add(child)
            if filter_(child):
                yield child
