"""Exact plane geometry, wallpaper groups, and wavelet-set verification.

The package verifies, with exact field arithmetic over Q(sqrt(3)), the three
set-theoretic conditions that make a planar region a wavelet set for a plane
crystallographic group and an integer dilation: translation tiling by the
group's lattice, measure-disjointness of the point-group orbit, and dilation
tiling of the orbit union.  It ships the full catalog of simple wavelet sets
for all 17 wallpaper groups at dilation 2, an iterative scaling-set builder,
a numeric Fourier cross-check, JSON persistence, an SVG renderer, and a CLI.
"""

from .exactfield import Rational, Scalar, rational
from .geom2d import ConvexPolygon, Isometry, Mat2, Region, Sector, Vec2, Wedge
from .groups import HEX, Z2, Lattice, WallpaperGroup, build_group
from .tiling import (
    TilingReport,
    sector_contains,
    verify_dilation_tiling,
    verify_pairwise_disjoint,
    verify_translation_tiling,
)
from .wavelet import (
    WaveletVerdict,
    glide_equivalence_check,
    verify_multiwavelet_set,
    verify_subspace_wavelet_set,
    verify_wavelet_set,
)

__version__ = "1.0.0"

__all__ = [
    "Rational",
    "Scalar",
    "rational",
    "Vec2",
    "Mat2",
    "Isometry",
    "ConvexPolygon",
    "Region",
    "Wedge",
    "Sector",
    "Lattice",
    "WallpaperGroup",
    "build_group",
    "Z2",
    "HEX",
    "TilingReport",
    "verify_translation_tiling",
    "verify_dilation_tiling",
    "verify_pairwise_disjoint",
    "sector_contains",
    "WaveletVerdict",
    "verify_wavelet_set",
    "verify_multiwavelet_set",
    "verify_subspace_wavelet_set",
    "glide_equivalence_check",
    "__version__",
]
