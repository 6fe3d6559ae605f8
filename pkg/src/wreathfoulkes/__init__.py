"""Exact Foulkes characters, descent statistics and coinvariant filtrations for Z_r wr S_n."""
from .combinatorics import BoundaryConvention, Multipartition, StandardTableau
from .exact import BudgetExceeded, Cyclotomic
from .wreath import ColoredPermutation

__version__ = "0.1.0"

__all__ = ["BoundaryConvention", "BudgetExceeded", "ColoredPermutation", "Cyclotomic", "Multipartition",
           "StandardTableau", "__version__"]
