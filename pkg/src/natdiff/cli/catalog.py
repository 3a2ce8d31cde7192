"""Variety files and the builtin catalog of test varieties."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..quotient import CoordinateRing
from .grammar import check_variables, parse_polynomial


@dataclass(frozen=True)
class VarietyFile:
    name: str
    variables: tuple
    generators: tuple
    order: str = "degrevlex"

    @classmethod
    def from_dict(cls, data: dict) -> "VarietyFile":
        try:
            vf = cls(
                name=str(data["name"]),
                variables=tuple(data["variables"]),
                generators=tuple(data["generators"]),
                order=data.get("order", "degrevlex"),
            )
        except KeyError as exc:
            raise ValueError(f"variety file is missing the field {exc.args[0]!r}") from None
        check_variables(vf.variables)
        if vf.order not in ("degrevlex", "deglex", "lex"):
            raise ValueError(f"unknown order {vf.order!r}")
        return vf

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "variables": list(self.variables),
            "generators": list(self.generators),
            "order": self.order,
        }

    def ring(self, probe: bool = True) -> CoordinateRing:
        gens = [parse_polynomial(g, self.variables, self.order) for g in self.generators]
        return CoordinateRing(self.variables, gens, self.order, name=self.name, probe=probe)


@dataclass(frozen=True)
class CatalogEntry:
    variety: VarietyFile
    expected: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.variety.name


def _entry(name, variables, generators, r, dim, smooth, count):
    vf = VarietyFile(name, tuple(variables), tuple(generators))
    return CatalogEntry(vf, {"r": r, "dim": dim, "smooth": smooth, "generator_count": count})


CATALOG = {
    e.name: e
    for e in [
        _entry("cusp", "xy", ["x^3 - y^2"], 1, 1, False, 1),
        _entry("node", "xy", ["y^2 - x^2*(x + 1)"], 1, 1, False, 1),
        _entry("circle", "xy", ["x^2 + y^2 - 1"], 1, 1, True, 1),
        _entry("twisted_cubic", "xyz", ["y - x^2", "z - x^3"], 2, 1, True, 1),
        _entry("whitney_umbrella", "xyz", ["x^2 - y^2*z"], 1, 2, False, 3),
        _entry("coordinate_1_2", ["x1", "x2"], ["x1"], 1, 1, True, 1),
        _entry("coordinate_2_4", ["x1", "x2", "x3", "x4"], ["x1", "x2"], 2, 2, True, 2),
        _entry("double_cusp", "xyuv", ["x^3 - y^2", "u^3 - v^2"], 2, 2, False, 4),
    ]
}


def catalog_ring(name: str, probe: bool = True) -> CoordinateRing:
    return CATALOG[name].variety.ring(probe=probe)


def load_variety(source) -> VarietyFile:
    """Load a variety from a JSON file path or a catalog name (``cusp`` or ``cusp.json``)."""
    path = Path(source)
    if path.exists():
        return VarietyFile.from_dict(json.loads(path.read_text()))
    stem = path.name[:-5] if path.name.endswith(".json") else path.name
    if stem in CATALOG:
        return CATALOG[stem].variety
    raise FileNotFoundError(f"no variety file or catalog entry named {source!r}")
