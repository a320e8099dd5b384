"""Exact q-series and Macdonald-polynomial toolkit with a constant-term
identity verifier."""

from .laurent import LaurentPoly, VarSet, combine, ct_of_product, parse_laurent
from .partitions import Partition, parse_partition
from .scalars import ExactScalar, PoleError, parse_scalar
from .symfunc import SymExpansion, monomial_sym, power_sum, schur
from .weights import WeightSpec

__all__ = [
    "ExactScalar", "PoleError", "parse_scalar",
    "LaurentPoly", "VarSet", "combine", "ct_of_product", "parse_laurent",
    "Partition", "parse_partition",
    "SymExpansion", "monomial_sym", "power_sum", "schur",
    "WeightSpec",
]

__version__ = "0.1.0"
