"""Exact-arithmetic checks for Hilbert squares of del Pezzo varieties.

Submodules:

* :mod:`flipcheck.hodge` - Hodge diamond arithmetic (Kunneth, twists,
  symmetric squares, projective bundles, blowups, Hilbert squares, hh0)
* :mod:`flipcheck.varieties` - built-in diamonds
* :mod:`flipcheck.motive` - Grothendieck-ring fragment with the Lefschetz
  class, blowup relation, standard-flip difference and Sym^2 calculus
* :mod:`flipcheck.sod` - semiorthogonal-decomposition ledgers, rewrite
  rules, additive invariants and the embedding obstruction
* :mod:`flipcheck.fano` - dimensions, thresholds, flip shapes, codimension
  identities and splitting types for the three del Pezzo families
* :mod:`flipcheck.dsl` - text format and parser for expressions, ledgers
  and rules
* :mod:`flipcheck.cli` - the `flipcheck` command
"""

from . import dsl, fano, hodge, motive, sod, varieties

__version__ = "0.1.0"

__all__ = ["dsl", "fano", "hodge", "motive", "sod", "varieties",
           "__version__"]
