"""Signed social network analysis: clustering, spectral ranking, link-sign prediction.

Thin re-export of the compiled ``_signet`` extension. The extension lives next
to this package in an installed wheel and at the top level of a plain CMake
build tree (put the build directory on ``PYTHONPATH`` for the latter).
"""

try:
    from ._signet import *  # noqa: F401,F403
    from ._signet import __version__  # noqa: F401
except ImportError:  # plain CMake build tree
    from _signet import *  # noqa: F401,F403
    from _signet import __version__  # noqa: F401

__all__ = [
    "Graph",
    "ConvergenceError",
    "load",
    "loads",
    "dumps",
    "from_edges",
    "generate",
    "stats",
    "clustering",
    "distances",
    "rank",
    "troll_eval",
    "predict",
    "sweep_k",
    "embed",
    "signed_two_paths",
    "self_check",
    "__version__",
]
