"""JSON persistence for regions with lossless exact coordinates.

The region format is

    {
      "schema": "region/1",
      "pieces": [ [ ["x-scalar-text", "y-scalar-text"], ... ], ... ]
    }

with the scalar text form "p/q" or "p/q±r/s√3".  Writing is canonical
(two-space indent, fixed key order, trailing newline), so canonical files
round-trip byte-identically.  A region-list format with schema
"region-list/1" and a "regions" array holds multiwavelet tuples.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .exactfield import Scalar
from .geom2d import ConvexPolygon, Region, Vec2

__all__ = [
    "RegionFormatError",
    "REGION_SCHEMA",
    "REGION_LIST_SCHEMA",
    "region_to_obj",
    "region_from_obj",
    "dumps_region",
    "loads_region",
    "read_region",
    "write_region",
    "loads_region_list",
    "read_region_list",
]

REGION_SCHEMA = "region/1"
REGION_LIST_SCHEMA = "region-list/1"


class RegionFormatError(ValueError):
    """Malformed region JSON, with a field/line diagnostic in the message."""


def region_to_obj(region: Region, bare: bool = False) -> dict:
    obj: dict = {} if bare else {"schema": REGION_SCHEMA}
    obj["pieces"] = [
        [[v.x.to_text(), v.y.to_text()] for v in piece.vertices]
        for piece in region.pieces
    ]
    return obj


def _parse_scalar(text, where: str) -> Scalar:
    if not isinstance(text, str):
        raise RegionFormatError(f"{where}: expected a scalar string, got {type(text).__name__}")
    try:
        return Scalar.parse(text)
    except ValueError as e:
        raise RegionFormatError(f"{where}: {e}") from None


def region_from_obj(obj, where: str = "region") -> Region:
    if not isinstance(obj, dict):
        raise RegionFormatError(f"{where}: expected an object")
    schema = obj.get("schema")
    if schema is not None and schema != REGION_SCHEMA:
        raise RegionFormatError(f"{where}.schema: unsupported schema {schema!r}")
    pieces_obj = obj.get("pieces")
    if not isinstance(pieces_obj, list):
        raise RegionFormatError(f"{where}.pieces: expected an array")
    pieces = []
    for i, piece_obj in enumerate(pieces_obj):
        if not isinstance(piece_obj, list) or len(piece_obj) < 3:
            raise RegionFormatError(f"{where}.pieces[{i}]: expected >= 3 vertices")
        verts = []
        for j, vert_obj in enumerate(piece_obj):
            if not isinstance(vert_obj, list) or len(vert_obj) != 2:
                raise RegionFormatError(
                    f"{where}.pieces[{i}][{j}]: expected a [x, y] pair"
                )
            x = _parse_scalar(vert_obj[0], f"{where}.pieces[{i}][{j}].x")
            y = _parse_scalar(vert_obj[1], f"{where}.pieces[{i}][{j}].y")
            verts.append(Vec2(x, y))
        try:
            pieces.append(ConvexPolygon(verts))
        except ValueError as e:
            raise RegionFormatError(f"{where}.pieces[{i}]: {e}") from None
    return Region(pieces)


def dumps_region(region: Region) -> str:
    return json.dumps(region_to_obj(region), indent=2, ensure_ascii=False) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise RegionFormatError(f"line {e.lineno} column {e.colno}: {e.msg}") from None


def loads_region(text: str) -> Region:
    return region_from_obj(_loads(text))


def read_region(path: Union[str, Path]) -> Region:
    return loads_region(Path(path).read_text(encoding="utf-8"))


def write_region(path: Union[str, Path], region: Region) -> None:
    Path(path).write_text(dumps_region(region), encoding="utf-8")


def loads_region_list(text: str) -> list[Region]:
    obj = _loads(text)
    if not isinstance(obj, dict) or obj.get("schema") != REGION_LIST_SCHEMA:
        raise RegionFormatError(f'expected an object with "schema": "{REGION_LIST_SCHEMA}"')
    regions_obj = obj.get("regions")
    if not isinstance(regions_obj, list) or not regions_obj:
        raise RegionFormatError("regions: expected a nonempty array")
    return [
        region_from_obj(r, where=f"regions[{i}]") for i, r in enumerate(regions_obj)
    ]


def read_region_list(path: Union[str, Path]) -> list[Region]:
    return loads_region_list(Path(path).read_text(encoding="utf-8"))
