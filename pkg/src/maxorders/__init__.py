"""Maximum orders of cyclic and abelian group actions on surfaces, handlebodies and S^3 splittings."""

from .errors import (
    GroupTooLarge,
    Infeasible,
    InvalidGenus,
    InvalidInput,
    MaxOrdersError,
    NotInvariant,
    SearchTooLarge,
)
from .quantities import (
    ExtType,
    Kind,
    Quantity,
    ch_minus,
    classical_order,
    consistency_check,
    extendable_max,
    extendable_type_max,
    max_order,
)

__version__ = "0.1.0"

__all__ = [
    "ExtType",
    "GroupTooLarge",
    "Infeasible",
    "InvalidGenus",
    "InvalidInput",
    "Kind",
    "MaxOrdersError",
    "NotInvariant",
    "Quantity",
    "SearchTooLarge",
    "ch_minus",
    "classical_order",
    "consistency_check",
    "extendable_max",
    "extendable_type_max",
    "max_order",
]
