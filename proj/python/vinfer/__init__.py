try:
    from ._vinfer import *  # noqa: F401,F403
    from ._vinfer import __version__  # noqa: F401
except ImportError:
    # Build-tree layout: the extension sits on sys.path as a top-level module.
    from _vinfer import *  # noqa: F401,F403
    from _vinfer import __version__  # noqa: F401
