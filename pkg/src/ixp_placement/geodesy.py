"""Spherical geometry: coordinates, great-circle distances, and distance matrices.

Every distance in this package is a great-circle distance on a sphere of
radius 6371.1 km, computed with the spherical law of cosines. The law of
cosines loses precision for near-antipodal points, which is acceptable here:
the toolkit targets regional location sets a few thousand km across.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InputError, UnknownLocationError, ValidationError

EARTH_RADIUS_KM = 6371.1  # sphere radius; also pins the upper distance bound below
MAX_DISTANCE_KM = math.pi * EARTH_RADIUS_KM  # half circumference, ~20015.4 km

_ISO_CODE_RE = re.compile(r"^[A-Z]{2}$")


@dataclass(frozen=True)
class Coordinate:
    """A geographic point in decimal degrees.

    Latitude must lie in [-90, +90] and longitude in [-180, +180]; both must
    be finite. Values are stored in degrees and converted to radians only
    inside the distance computation.
    """

    latitude_deg: float
    longitude_deg: float

    def __post_init__(self):
        lat, lon = self.latitude_deg, self.longitude_deg
        if not (isinstance(lat, (int, float)) and isinstance(lon, (int, float))):
            raise InputError(f"coordinate values must be numbers, got ({lat!r}, {lon!r})")
        if not (math.isfinite(lat) and math.isfinite(lon)):
            raise InputError(f"coordinate values must be finite, got ({lat}, {lon})")
        if not -90.0 <= lat <= 90.0:
            raise InputError(f"latitude {lat} outside [-90, +90]")
        if not -180.0 <= lon <= 180.0:
            raise InputError(f"longitude {lon} outside [-180, +180]")


@dataclass(frozen=True)
class Location:
    """A named place: two-letter uppercase ISO-3166 code, display name, coordinate."""

    iso_code: str
    name: str
    coordinate: Coordinate

    def __post_init__(self):
        if not isinstance(self.iso_code, str) or not _ISO_CODE_RE.match(self.iso_code):
            raise ValidationError(
                f"iso_code must be exactly two ASCII uppercase letters, got {self.iso_code!r}"
            )


def great_circle_distance(a: Coordinate, b: Coordinate) -> float:
    """Great-circle distance between two coordinates, in kilometers.

    Uses the spherical law of cosines with radius 6371.1 km:
    arccos(cos(x)·cos(m)·cos(y−n) + sin(x)·sin(m)) × R, with the cosine
    argument clamped to [-1, +1] so rounding near identical or antipodal
    points cannot produce NaN.

    Args:
        a, b: Valid coordinates (decimal degrees).

    Returns:
        Distance in km, in [0, π·6371.1]. Identical coordinates return
        exactly 0.0. Swapping the arguments returns the identical float.
    """
    if a == b:
        return 0.0
    x = math.radians(a.latitude_deg)
    m = math.radians(b.latitude_deg)
    # fabs keeps the longitude-difference cosine bit-identical under argument swap
    dlon = math.radians(math.fabs(a.longitude_deg - b.longitude_deg))
    arg = math.cos(x) * math.cos(m) * math.cos(dlon) + math.sin(x) * math.sin(m)
    arg = max(-1.0, min(1.0, arg))
    return math.acos(arg) * EARTH_RADIUS_KM


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise great-circle distances for an ordered set of locations.

    Invariants (checked on construction): square cells matching the location
    count, unique ISO codes, zero diagonal, exact symmetry, and every cell
    finite within [0, π·6371.1] km.
    """

    locations: tuple[Location, ...]
    cells: np.ndarray

    def __post_init__(self):
        locations = tuple(self.locations)
        object.__setattr__(self, "locations", locations)
        codes = [loc.iso_code for loc in locations]
        if len(set(codes)) != len(codes):
            dupes = sorted({c for c in codes if codes.count(c) > 1})
            raise ValidationError(f"duplicate iso codes in location set: {', '.join(dupes)}")
        cells = np.asarray(self.cells, dtype=np.float64).copy()
        n = len(locations)
        if cells.shape != (n, n):
            raise ValidationError(f"cells shape {cells.shape} does not match {n} locations")
        if not np.all(np.isfinite(cells)):
            raise ValidationError("distance cells must be finite")
        if np.any(cells < 0.0) or np.any(cells > MAX_DISTANCE_KM):
            raise ValidationError(f"distance cells must lie in [0, {MAX_DISTANCE_KM:.3f}] km")
        if np.any(np.diagonal(cells) != 0.0):
            raise ValidationError("distance matrix diagonal must be exactly zero")
        if not np.array_equal(cells, cells.T):
            raise ValidationError("distance matrix must be exactly symmetric")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def iso_codes(self) -> tuple[str, ...]:
        return tuple(loc.iso_code for loc in self.locations)

    def index(self, iso_code: str) -> int:
        for i, loc in enumerate(self.locations):
            if loc.iso_code == iso_code:
                return i
        raise UnknownLocationError(f"iso code {iso_code!r} not in matrix")

    def distance(self, iso_a: str, iso_b: str) -> float:
        return float(self.cells[self.index(iso_a), self.index(iso_b)])


def build_distance_matrix(locations) -> DistanceMatrix:
    """Build the validated distance matrix for a set of locations.

    Locations are canonicalized to ISO-code order, so row/column order is
    reproducible no matter how the input was ordered. Each off-diagonal
    distance is computed once and mirrored; the diagonal is exactly zero.

    Args:
        locations: At least two Location values with unique ISO codes.

    Returns:
        DistanceMatrix over the ISO-sorted locations.
    """
    locs = sorted(locations, key=lambda loc: loc.iso_code)
    if len(locs) < 2:
        raise ValidationError(f"need at least 2 locations, got {len(locs)}")
    codes = [loc.iso_code for loc in locs]
    if len(set(codes)) != len(codes):
        dupes = sorted({c for c in codes if codes.count(c) > 1})
        raise ValidationError(f"duplicate iso codes in location set: {', '.join(dupes)}")
    n = len(locs)
    cells = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            d = great_circle_distance(locs[i].coordinate, locs[j].coordinate)
            cells[i, j] = d
            cells[j, i] = d
    return DistanceMatrix(locations=tuple(locs), cells=cells)


class PairDistance(NamedTuple):
    iso_a: str
    iso_b: str
    km: float


def min_max_pairs(matrix: DistanceMatrix) -> tuple[PairDistance, PairDistance]:
    """Return the closest and farthest location pairs of a matrix.

    Ties are broken by the lexicographic order of the (iso_a, iso_b) pair,
    with iso_a < iso_b inside each pair.
    """
    codes = matrix.iso_codes
    n = len(codes)
    if n < 2:
        raise ValidationError("min/max pairs need at least 2 locations")
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = sorted((codes[i], codes[j]))
            pairs.append(PairDistance(a, b, float(matrix.cells[i, j])))
    # lexicographic pre-sort + stable min/max = lexicographic tie-breaking
    pairs.sort(key=lambda p: (p.iso_a, p.iso_b))
    closest = min(pairs, key=lambda p: p.km)
    farthest = max(pairs, key=lambda p: p.km)
    return closest, farthest
