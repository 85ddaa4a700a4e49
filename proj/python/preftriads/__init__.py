"""Equivalence classes of preference triangles.

Thin wrapper over the C++ core: triangle classification and canonical
forms, closed-form class counts, graph triangle censuses and
degree-preserving rewiring.
"""

from ._preftriads import *  # noqa: F401,F403
from ._preftriads import __version__  # noqa: F401
