"""Registry of the named geometries: category generators, membership
predicate (when the category has a closed-form description), and the tag of
the exact sampler used for Brauer-type verification."""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    PartitionDiagram,
    crossing,
    flip_pair,
    flip_strand,
    half_crossing,
)
from .errors import UnknownGeometry


@dataclass(frozen=True)
class GeometrySpec:
    name: str
    category_generators: tuple[PartitionDiagram, ...]
    class_predicate: str | None
    sampler_kind: str | None

    def to_json(self) -> dict:
        return {"name": self.name,
                "category_generators": [str(g) for g in self.category_generators],
                "class_predicate": self.class_predicate,
                "sampler_kind": self.sampler_kind}


def _h1() -> PartitionDiagram:
    # relation [ab*, c*d] = 0
    return PartitionDiagram("wbbw", "bwwb", [(0, 6), (1, 7), (2, 4), (3, 5)])


def _h2() -> PartitionDiagram:
    # relation [ab*, cd*] = 0
    return PartitionDiagram("wbwb", "wbwb", [(0, 6), (1, 7), (2, 4), (3, 5)])


def _registry() -> dict[str, GeometrySpec]:
    flips = (flip_strand("w"), flip_strand("b"))
    x_plain = crossing("w", "w")
    x_mixed = crossing("w", "b")
    halves = tuple(half_crossing(*c)
                   for c in (("w", "w", "w"), ("w", "b", "w"), ("w", "w", "b")))
    specs = [
        GeometrySpec("O_N", flips + (x_plain,), "P2", "orthogonal"),
        GeometrySpec("O_N*", flips + (half_crossing("w", "w", "w"),),
                     "P2star", "antidiag_real_pair"),
        GeometrySpec("O_N+", flips, "NC2", None),
        GeometrySpec("U_N", (x_plain, x_mixed), "calP2", "unitary"),
        GeometrySpec("U_N**", halves, "calP2starstar", None),
        GeometrySpec("U_N+", (), "calNC2", None),
        GeometrySpec("TO_N", (flip_pair(), x_plain, x_mixed),
                     "P2bar", "circle_orthogonal"),
        GeometrySpec("TO_N*", (flip_pair(),) + halves, "P2barstar", None),
        GeometrySpec("TO_N+", (flip_pair(),), "NC2bar", None),
        GeometrySpec("U_Ntimes", (half_crossing("w", "b", "w"),), None, None),
        GeometrySpec("U_Nstar", (_h1(), _h2()), None, "antidiag_complex_pair"),
    ]
    return {s.name: s for s in specs}


REGISTRY = _registry()

GEOMETRY_NAMES = tuple(REGISTRY)

_ALIASES = {name.replace("*", "star").replace("+", "plus"): name
            for name in REGISTRY}


def named_geometry(name: str) -> GeometrySpec:
    """Look up a geometry by canonical name (e.g. "O_N*") or alias
    ("O_Nstar")."""
    if name in REGISTRY:
        return REGISTRY[name]
    if name in _ALIASES:
        return REGISTRY[_ALIASES[name]]
    raise UnknownGeometry(
        f"unknown geometry {name!r}; know {', '.join(REGISTRY)}")
