"""Toolkit for n-copy three-level antisymmetric bipartite states.

Construction through the Levi-Civita contraction, reduced-state spectra and
entanglement measures, machine-checked entropy/purity bounds, and numerical
entanglement-of-formation minimization over decomposition ensembles.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
