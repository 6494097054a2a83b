"""
__init__.py file to make the constructions directory a proper package.
"""

from constructions.bordered_dcc import bordered_dcc
from constructions.circulant import CirculantSpec, circulant_matrix
from constructions.direct_sum import direct_sum
from constructions.four_block import four_block_code
from constructions.ito_array import ito_array_code
from constructions.mu_circulant import mu_circulant_code
from constructions.neighbor import NeighborError, NeighborSpec, neighbor
from constructions.registry import CONSTRUCTION_CLASSES, FAMILIES, get_construction

__all__ = [
    "CONSTRUCTION_CLASSES",
    "CirculantSpec",
    "FAMILIES",
    "NeighborError",
    "NeighborSpec",
    "bordered_dcc",
    "circulant_matrix",
    "direct_sum",
    "four_block_code",
    "get_construction",
    "ito_array_code",
    "mu_circulant_code",
    "neighbor",
]
