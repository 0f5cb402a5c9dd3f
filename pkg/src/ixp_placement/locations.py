"""Location dataset files: loading, saving, the bundled dataset, validation.

A location file is UTF-8 JSON:

    {"version": 1,
     "locations": [{"iso": "MG", "name": "Antananarivo",
                    "lat": -18.9101, "lon": 47.5257}, ...]}

Floats survive a load/save cycle bit-exactly (JSON uses shortest round-trip
representation). The bundled Indian Ocean dataset carries geocoded capital
city halls and is accepted only because validate_against_reference passes at
2% against the bundled reference distance table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputError, ParseError, ValidationError
from .geodesy import Coordinate, Location, build_distance_matrix
from .matrix_io import LabeledMatrix, import_matrix

LOCATION_FILE_VERSION = 1
_ENTRY_KEYS = {"iso", "name", "lat", "lon"}


def parse_locations(text: str, source: str = "<string>") -> tuple[Location, ...]:
    """Parse and validate location-file text; returns ISO-sorted locations."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{source}: invalid syntax at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from None
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}: top level must be an object")
    version = doc.get("version")
    if version != LOCATION_FILE_VERSION:
        raise ValidationError(
            f"{source}: version must be {LOCATION_FILE_VERSION}, got {version!r}"
        )
    entries = doc.get("locations")
    if not isinstance(entries, list):
        raise ValidationError(f"{source}: 'locations' must be a list")
    if len(entries) < 2:
        raise ValidationError(f"{source}: need at least 2 locations, got {len(entries)}")

    locations = []
    seen = {}
    for idx, entry in enumerate(entries):
        label = f"{source}: entry {idx}"
        if not isinstance(entry, dict):
            raise ValidationError(f"{label}: must be an object")
        if set(entry) != _ENTRY_KEYS:
            raise ValidationError(
                f"{label}: fields must be exactly {sorted(_ENTRY_KEYS)}, got {sorted(entry)}"
            )
        iso = entry["iso"]
        label = f"{source}: entry {idx} ({iso!r})"
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise ValidationError(f"{label}: name must be a non-empty string")
        lat, lon = entry["lat"], entry["lon"]
        for key, value in (("lat", lat), ("lon", lon)):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValidationError(f"{label}: {key} must be a number, got {value!r}")
        try:
            location = Location(iso_code=iso, name=name,
                                coordinate=Coordinate(float(lat), float(lon)))
        except (InputError, ValidationError) as exc:
            raise ValidationError(f"{label}: {exc}") from None
        if iso in seen:
            raise ValidationError(
                f"{label}: duplicate iso code {iso!r} (also entry {seen[iso]})"
            )
        seen[iso] = idx
        locations.append(location)
    return tuple(sorted(locations, key=lambda loc: loc.iso_code))


def load_locations(path) -> tuple[Location, ...]:
    """Load a location file; entries come back sorted by ISO code."""
    path = Path(path)
    return parse_locations(path.read_text(encoding="utf-8"), source=str(path))


def save_locations(path, locations) -> None:
    """Write a location file (canonical ISO order, round-trip safe)."""
    locs = sorted(locations, key=lambda loc: loc.iso_code)
    doc = {
        "version": LOCATION_FILE_VERSION,
        "locations": [
            {
                "iso": loc.iso_code,
                "name": loc.name,
                "lat": loc.coordinate.latitude_deg,
                "lon": loc.coordinate.longitude_deg,
            }
            for loc in locs
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
                          encoding="utf-8")


def bundled_locations_path() -> Path:
    """Path of the packaged Indian Ocean dataset (five capital city halls)."""
    return Path(str(resources.files(__package__) / "data" / "ioa.locations"))


def bundled_reference_path() -> Path:
    """Path of the packaged reference distance table the dataset is validated against."""
    return Path(str(resources.files(__package__) / "data" / "ioa_reference_distances.csv"))


def bundled_locations() -> tuple[Location, ...]:
    return load_locations(bundled_locations_path())


def bundled_reference() -> LabeledMatrix:
    return import_matrix(bundled_reference_path())


@dataclass(frozen=True)
class PairCheck:
    iso_a: str
    iso_b: str
    computed_km: float
    reference_km: float
    relative_error: float
    within: bool


@dataclass(frozen=True)
class ValidationReport:
    tolerance: float
    checks: tuple[PairCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.within for c in self.checks)

    @property
    def worst(self) -> PairCheck:
        return max(self.checks, key=lambda c: c.relative_error)


def validate_against_reference(locations, reference, tolerance: float = 0.02) -> ValidationReport:
    """Check a location set's computed distances against a reference table.

    One check per unordered pair. If the reference is asymmetric (tables
    copied from print sometimes are), the relative error is taken against
    both directed cells and the larger one counts. Passes iff every pair is
    within the tolerance.
    """
    if not 0.0 <= tolerance:
        raise InputError(f"tolerance must be >= 0, got {tolerance}")
    matrix = build_distance_matrix(locations)
    if set(matrix.iso_codes) != set(reference.iso_codes):
        raise ValidationError(
            f"reference covers {sorted(reference.iso_codes)}, "
            f"locations are {sorted(matrix.iso_codes)}"
        )
    ref_index = {iso: i for i, iso in enumerate(reference.iso_codes)}
    checks = []
    codes = matrix.iso_codes
    for i in range(len(codes)):
        for j in range(i + 1, len(codes)):
            a, b = codes[i], codes[j]
            computed = float(matrix.cells[i, j])
            ref_ab = float(reference.cells[ref_index[a], ref_index[b]])
            ref_ba = float(reference.cells[ref_index[b], ref_index[a]])
            errors = []
            for ref in (ref_ab, ref_ba):
                if ref == 0.0:
                    errors.append(0.0 if computed == 0.0 else float("inf"))
                else:
                    errors.append(abs(computed - ref) / ref)
            error = max(errors)
            checks.append(PairCheck(
                iso_a=a,
                iso_b=b,
                computed_km=computed,
                reference_km=ref_ab,
                relative_error=error,
                within=error <= tolerance,
            ))
    return ValidationReport(tolerance=tolerance, checks=tuple(checks))
