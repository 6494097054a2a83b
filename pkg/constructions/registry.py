"""
Family name -> construction class lookup used by the catalog builder.
"""

from typing import Any, Dict, Optional, Type, Union

from constructions.base_construction import BaseConstruction
from constructions.bordered_dcc import BorderedDoubleCirculantConstruction
from constructions.direct_sum import DirectSumConstruction
from constructions.four_block import FourCirculantConstruction, FourNegacirculantConstruction
from constructions.ito_array import ItoArrayConstruction
from constructions.mu_circulant import MuCirculantConstruction
from constructions.neighbor import NeighborConstruction
from fields.galois_fields import FieldTag

CONSTRUCTION_CLASSES: Dict[str, Type[BaseConstruction]] = {
    cls.family: cls
    for cls in (
        FourCirculantConstruction,
        FourNegacirculantConstruction,
        BorderedDoubleCirculantConstruction,
        MuCirculantConstruction,
        ItoArrayConstruction,
        NeighborConstruction,
        DirectSumConstruction,
    )
}

FAMILIES = tuple(CONSTRUCTION_CLASSES)


def get_construction(family: str, tag: Union[str, FieldTag], config: Optional[Dict[str, Any]] = None) -> BaseConstruction:
    try:
        cls = CONSTRUCTION_CLASSES[family]
    except KeyError:
        raise ValueError(f"Unknown construction family: {family}")
    return cls(tag, config)
