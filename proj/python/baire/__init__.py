"""Exact combinatorics of Lipschitz maps and isometries on Baire and Cantor space.

Thin wrapper over the compiled extension; everything lives in `baire._baire`.
"""

from baire._baire import *  # noqa: F401,F403
from baire._baire import __doc__ as _core_doc

__doc__ = _core_doc
