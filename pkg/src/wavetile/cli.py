"""Command-line interface.

Subcommands:
  verify          run a wavelet-set / multiwavelet / subspace check
  catalog         list or dump the built-in sets
  render          write an SVG of a set, an orbit, or a standard figure
  build-iterative run the iterative scaling-set construction
  fourier-check   numeric translation-tiling cross-check
  compat          group/dilation compatibility table

Exit codes: 0 success (verification passed), 1 verification failed,
2 bad arguments or input errors.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import builder, catalog, fourier, svg
from .geom2d import Region
from .groups import GROUP_NAMES, HEX, SECTOR_NAMES, Z2, compatible, group, named_sector
from .regionio import (
    RegionFormatError,
    dumps_region,
    read_region,
    read_region_list,
    region_to_obj,
)
from .wavelet import (
    verify_multiwavelet_set,
    verify_subspace_wavelet_set,
    verify_wavelet_set,
)

_LATTICES = {"z2": Z2, "hex": HEX}


def _dump_json(obj, path: Optional[str]) -> None:
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _resolve_set(spec: str) -> Region:
    if spec.startswith("catalog:"):
        return catalog.build(spec[len("catalog:"):]).region
    return read_region(spec)


def _resolve_multiset(spec: str) -> list[Region]:
    if spec.startswith("catalog:"):
        entry = catalog.build(spec[len("catalog:"):])
        if entry.parts is None:
            raise ValueError(f"catalog entry {entry.key!r} is not a multiwavelet split")
        return list(entry.parts)
    return read_region_list(spec)


def _cmd_verify(args) -> int:
    if args.multiset is not None:
        regions = _resolve_multiset(args.multiset)
        if args.transport:
            regions = [builder.transport(args.transport, r) for r in regions]
        verdict = verify_multiwavelet_set(group(args.group), regions, args.dilation)
    elif args.subspace_sector is not None:
        region = _resolve_set(args.set)
        if args.transport:
            region = builder.transport(args.transport, region)
        verdict = verify_subspace_wavelet_set(
            region,
            named_sector(args.subspace_sector),
            _LATTICES[args.lattice],
            args.dilation,
            translation_multiplicity=args.translation_multiplicity,
        )
    else:
        if args.group is None:
            raise ValueError("--group is required unless --subspace-sector is given")
        region = _resolve_set(args.set)
        if args.transport:
            region = builder.transport(args.transport, region)
        verdict = verify_wavelet_set(group(args.group), region, args.dilation)
    _dump_json(verdict.to_obj(), args.output)
    return 0 if verdict.passed else 1


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for key in catalog.KEYS:
            entry = catalog.build(key)
            groups = ",".join(entry.claimed_group_names) or "-"
            kind = "multiwavelet" if entry.parts is not None else "region"
            print(
                f"{key:22s} pieces={len(entry.region.pieces):3d} "
                f"area={entry.region.area().to_text():14s} kind={kind:12s} groups={groups}"
            )
        return 0
    entry = catalog.build(args.key)
    obj = {
        "schema": "catalog-entry/1",
        "key": entry.key,
        "claimed_group_names": list(entry.claimed_group_names),
        "claimed_dilation": entry.claimed_dilation,
        "construction_note": entry.construction_note,
        "area": entry.region.area().to_text(),
        "region": region_to_obj(entry.region, bare=True),
    }
    if entry.parts is not None:
        obj["parts"] = [region_to_obj(p, bare=True) for p in entry.parts]
    _dump_json(obj, args.output)
    return 0


def _cmd_render(args) -> int:
    if args.figure is not None:
        text = svg.render_figure(args.figure, depth=args.depth)
    else:
        region = _resolve_set(args.set)
        if args.transport:
            region = builder.transport(args.transport, region)
        if args.orbit:
            if args.group is None:
                raise ValueError("--orbit requires --group")
            spec = svg.orbit_render_spec(args.group, region)
        else:
            spec = svg.spec_from_items([(region, 0)])
        text = svg.render_svg(spec)
    with open(args.output, "w", encoding="utf-8") as f:
        f.write(text)
    return 0


def _cmd_build_iterative(args) -> int:
    spec = builder.classic_spec(args.depth, args.dilation)
    region = (
        builder.scaling_set(spec) if args.emit == "scaling" else builder.wavelet_from_scaling(spec)
    )
    if args.transport != "none":
        region = builder.transport(args.transport, region)
    if args.output is None or args.output == "-":
        sys.stdout.write(dumps_region(region))
    else:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(dumps_region(region))
    return 0


def _cmd_fourier_check(args) -> int:
    region = _resolve_set(args.set)
    report = fourier.fourier_tiling_check(
        region, _LATTICES[args.lattice], radius=args.radius, tol=args.tol
    )
    _dump_json(report.to_obj(), args.output)
    return 0 if report.passed else 1


def _cmd_compat(args) -> int:
    dilations = (2, 3, 4, 5)
    if args.json:
        obj = {
            "schema": "compat-table/1",
            "dilations": list(dilations),
            "groups": {
                name: [compatible(group(name), d) for d in dilations]
                for name in GROUP_NAMES
            },
        }
        _dump_json(obj, args.output)
        return 0
    header = "group   " + "".join(f"  d={d}" for d in dilations)
    print(header)
    for name in GROUP_NAMES:
        g = group(name)
        row = "".join(f"  {'yes' if compatible(g, d) else ' no'}" for d in dilations)
        print(f"{name:8s}{row}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavetile",
        description="Exact wavelet-set verification for the plane crystallographic groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a set against the wavelet-set conditions")
    p.add_argument("--group", "-g", type=str.lower, choices=GROUP_NAMES, help="wallpaper group name")
    p.add_argument("--set", help='region: "catalog:KEY" or a region JSON file')
    p.add_argument("--multiset", help='multiwavelet tuple: "catalog:KEY" or a region-list JSON file')
    p.add_argument("--transport", choices=("L", "Lp"), help="apply a hexagonal basis-change first")
    p.add_argument("--dilation", "-d", type=int, default=2)
    p.add_argument("--subspace-sector", choices=SECTOR_NAMES, help="run the subspace check in this sector")
    p.add_argument("--lattice", choices=tuple(_LATTICES), default="z2", help="lattice for the subspace check")
    p.add_argument("--translation-multiplicity", type=int, default=1)
    p.add_argument("--output", "-o", help="write the JSON verdict here (default stdout)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("catalog", help="list or dump the built-in sets")
    p.add_argument("action", choices=("list", "dump"))
    p.add_argument("--key", help="catalog key (for dump)")
    p.add_argument("--output", "-o")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("render", help="write an SVG rendering")
    p.add_argument("--set", help='region: "catalog:KEY" or a region JSON file')
    p.add_argument("--figure", type=int, choices=svg.FIGURE_NUMBERS, help="render a standard figure")
    p.add_argument("--group", "-g", type=str.lower, choices=GROUP_NAMES)
    p.add_argument("--orbit", action="store_true", help="draw the point-group orbit, colored by element")
    p.add_argument("--transport", choices=("L", "Lp"))
    p.add_argument("--depth", type=int, default=6, help="truncation depth for figure 1")
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("build-iterative", help="run the iterative scaling-set construction")
    p.add_argument("--dilation", "-d", type=int, default=3)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--transport", choices=("none", "L", "Lp"), default="none")
    p.add_argument("--emit", choices=("wavelet", "scaling"), default="wavelet")
    p.add_argument("--output", "-o")
    p.set_defaults(fn=_cmd_build_iterative)

    p = sub.add_parser("fourier-check", help="numeric translation-tiling cross-check")
    p.add_argument("--set", required=True)
    p.add_argument("--lattice", choices=tuple(_LATTICES), default="z2")
    p.add_argument("--radius", type=float, default=20.0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--output", "-o")
    p.set_defaults(fn=_cmd_fourier_check)

    p = sub.add_parser("compat", help="group/dilation compatibility table")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(fn=_cmd_compat)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.multiset is None and args.set is None:
        parser.error("verify needs --set or --multiset")
    if args.command == "verify" and args.multiset is not None and args.group is None:
        parser.error("--multiset requires --group")
    if args.command == "catalog" and args.action == "dump" and args.key is None:
        parser.error("catalog dump requires --key")
    if args.command == "render" and args.figure is None and args.set is None:
        parser.error("render needs --set or --figure")
    try:
        return args.fn(args)
    except (RegionFormatError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
