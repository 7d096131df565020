"""Python bindings for the lie-integrate library."""

try:
    from ._lieint import *  # noqa: F401,F403
    from ._lieint import __doc__  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _lieint import *  # noqa: F401,F403
    from _lieint import __doc__  # noqa: F401
