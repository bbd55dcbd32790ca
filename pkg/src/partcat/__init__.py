"""partcat: exact combinatorics and linear algebra for two-colored
pairing categories, the groups and matrix models attached to them."""

from .diagrams import (
    PartitionDiagram,
    make_diagram,
    tensor,
    compose,
    involute,
    rotate,
    unrotate,
    flatten,
    is_in_class,
    enumerate_pairings,
)
from .errors import (
    PartcatError,
    MalformedPartition,
    ColorMismatch,
    EmptyUpperRow,
    NotAPairing,
    BudgetExceeded,
    NotSaturated,
    UnknownGeometry,
    SizeOverflow,
)

__all__ = [
    "PartitionDiagram", "make_diagram", "tensor", "compose", "involute",
    "rotate", "unrotate", "flatten", "is_in_class", "enumerate_pairings",
    "PartcatError", "MalformedPartition", "ColorMismatch", "EmptyUpperRow",
    "NotAPairing", "BudgetExceeded", "NotSaturated", "UnknownGeometry",
    "SizeOverflow",
]

__version__ = "0.1.0"
