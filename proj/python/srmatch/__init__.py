"""Stable Roommates with short preference lists.

Solvers and enumeration for SRI/SRTI, the egalitarian approximation
pipeline for bounded-degree instances, most-stable matchings, and
executable hardness reductions (vertex cover and SAT gadgets).
"""

from srmatch._core import *  # noqa: F401,F403
from srmatch._core import __doc__ as _core_doc  # noqa: F401
