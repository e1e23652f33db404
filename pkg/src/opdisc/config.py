"""Numerical tolerances, kept in one place so tests and the CLI report the values in force."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """The three tolerances that gate most numerical decisions.

    hermiticity:    max-entry deviation allowed in ||A - A^dag|| checks.
    reconstruction: max-entry deviation allowed when rebuilding A from its
                    eigendecomposition.
    optimizer:      value spread at which a simplex search is converged.
    """

    hermiticity: float = 1e-9
    reconstruction: float = 1e-10
    optimizer: float = 1e-9


TOLERANCES = Tolerances()

# Probability vectors must sum to 1 this tightly.
PROBABILITY_TOL = 1e-12

# Kraus completeness: ||sum K^dag K - I||_max must stay below this.
COMPLETENESS_TOL = 1e-9

# Density matrices may have eigenvalues down to -STATE_POSITIVITY_FLOOR.
STATE_POSITIVITY_FLOOR = 1e-9

# Matrices claimed unitary must satisfy ||U^dag U - I||_max below this.
UNITARITY_TOL = 1e-9

# Unitary families count as orthogonal when |Tr[U_m^dag U_n]| (m != n)
# stays below this.
ORTHOGONALITY_TOL = 1e-8

# POVM elements may dip this far below positivity / completeness.
POVM_TOL = 1e-9

# Numeric entanglement advantage must exceed this gap to count.
ENTANGLEMENT_GAP = 1e-7
