"""Exact computations for quotients of gravitational instantons.

Submodules:

* :mod:`exact` rational turns, monomial unitaries, quadratic-field quaternions, 3x3 rational matrices
* :mod:`dedekind` Dedekind sums
* :mod:`groups` spherical space form groups as multiplication tables
* :mod:`eta` eta invariants of spherical space forms
* :mod:`rokhlin` Rokhlin invariants of Seifert homology spheres
* :mod:`invariants` the ADE catalog, Gauss-Bonnet and signature bookkeeping
* :mod:`monopole` symmetries of monopole configurations and their quotients
"""

from . import dedekind, eta, exact, groups, invariants, monopole, rokhlin

__version__ = "0.1.0"

__all__ = ["dedekind", "eta", "exact", "groups", "invariants", "monopole", "rokhlin", "__version__"]
