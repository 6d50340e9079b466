"""Exact models of the Toeplitz-type operator algebras of the ax+b semigroup over N.

Everything is computed in exact rational arithmetic: supernatural numbers and
coherent residue families, the quasi-lattice ordered pair (Q x| Q*+, N x| Nx),
points of its Nica spectrum with the induced partial action, symbolic
covariance monomials with exact basis-action backends, two transfer-operator
systems with coordinate models of their Hilbert bimodules, and evaluation of
equilibrium states.
"""

from axb.arithmetic import INF, ProfiniteResidue, Supernatural
from axb.semigroup import GroupElement, SemigroupElement, leq, lub

__all__ = [
    "INF",
    "Supernatural",
    "ProfiniteResidue",
    "GroupElement",
    "SemigroupElement",
    "leq",
    "lub",
]

__version__ = "0.1.0"
