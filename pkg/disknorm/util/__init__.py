"""Utilities."""

import contextlib
import os
import tempfile


def _repr(obj, args=None, nameblacklist=None):
    """
    Representation of `obj` listing its public attributes sorted by name.

    >>> class Point:
    ...     def __init__(self):
    ...         self.y = 2.0
    ...         self.x = 1
    ...         self._hidden = None
    >>> _repr(Point())
    'Point(x=1, y=2.0)'
    >>> _repr(Point(), args=["'p'"], nameblacklist=["y"])
    "Point('p', x=1)"
    """
    classname = obj.__class__.__name__
    args = args or []
    nameblacklist = nameblacklist or []
    for key, value in filter(
        lambda item: not item[0].startswith("_") and item[0] not in nameblacklist,
        sorted(obj.__dict__.items(), key=lambda item: item[0]),
    ):
        args.append("%s=%r" % (key, value))
    return "%s(%s)" % (classname, ", ".join(args))


@contextlib.contextmanager
def atomic_open(path, newline=None):
    """
    Text file opened for writing at `path`, visible only after the block succeeds.

    The content goes to a temporary file next to `path` which replaces `path` on
    success and is removed on failure.
    """
    directory = os.path.dirname(os.path.abspath(path))
    # pylint: disable=R1732
    handle = tempfile.NamedTemporaryFile(
        "w",
        dir=directory,
        prefix=".%s." % os.path.basename(path),
        suffix=".tmp",
        delete=False,
        newline=newline,
        encoding="utf-8",
    )
    try:
        with handle:
            yield handle
        os.replace(handle.name, path)
    except BaseException:
        if os.path.exists(handle.name):
            os.remove(handle.name)
        raise
