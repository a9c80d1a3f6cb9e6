"""Exact determination of perfect squares in Lucas sequences U_n(P, Q).

The package combines a brute-force search oracle, a descent layer that
reduces the square conditions at n = 12 and n = 9 to multiplier-constraint
systems, exact number-field and elliptic-curve arithmetic, and a p-adic
formal-group engine with Strassman root bounds that certifies the final
solution sets.
"""

__version__ = "0.1.0"

from .lucas import LucasParams, SquareWitness, lucas_u, search_square_terms

__all__ = ["LucasParams", "SquareWitness", "lucas_u", "search_square_terms", "__version__"]
