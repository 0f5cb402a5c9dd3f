"""Placement analysis for a regional Internet exchange point.

Given a set of geographic locations, this package computes great-circle
distances, turns them into round-trip-time estimates with bundled
distance-to-RTT models, simulates routing every pair through each candidate
hub, and ranks the candidates under reproducible objectives. Results can be
exported as CSV matrices and deterministic SVG heatmaps, from Python or from
the `ixp-placement` command line.
"""

from .errors import (
    GeocodeError,
    GeocodeNotFoundError,
    GeocodeProtocolError,
    GeocodeTransportError,
    InputError,
    ParseError,
    PlacementError,
    UnknownLocationError,
    UnknownModelError,
    ValidationError,
)
from .geodesy import (
    EARTH_RADIUS_KM,
    MAX_DISTANCE_KM,
    Coordinate,
    DistanceMatrix,
    Location,
    PairDistance,
    build_distance_matrix,
    great_circle_distance,
    min_max_pairs,
)
from .geocode import GeocodeCache, GeocoderClient, geocode
from .heatmap import ColorScale, HeatmapSpec, render_heatmap, shared_color_scale
from .hubs import HubScenario, all_scenarios, build_scenario, routed_distance
from .latency import (
    IOA_REGRESSION,
    IOA_REGRESSION_NO_INTERCEPT,
    KRAJSA,
    SPEED_OF_LIGHT,
    WORLD_REGRESSION,
    LatencyModel,
    ModelSelection,
    NegativeDelayWarning,
    evaluate,
    get_model,
    registry,
)
from .locations import (
    bundled_locations,
    bundled_locations_path,
    bundled_reference,
    bundled_reference_path,
    load_locations,
    save_locations,
    validate_against_reference,
)
from .matrix_io import LabeledMatrix, export_matrix, import_matrix
from .ranking import (
    BRIGHT_CELLS,
    CELLWISE_DOMINANCE,
    OBJECTIVES,
    TOTAL_DELAY,
    RankingReport,
    ScoreCard,
    auto_threshold,
    bright_cell_count,
    cellwise_compare,
    rank,
    total_delay,
)

__version__ = "0.1.0"

__all__ = [
    "BRIGHT_CELLS",
    "CELLWISE_DOMINANCE",
    "ColorScale",
    "Coordinate",
    "DistanceMatrix",
    "EARTH_RADIUS_KM",
    "GeocodeCache",
    "GeocodeError",
    "GeocodeNotFoundError",
    "GeocodeProtocolError",
    "GeocodeTransportError",
    "GeocoderClient",
    "HeatmapSpec",
    "HubScenario",
    "InputError",
    "IOA_REGRESSION",
    "IOA_REGRESSION_NO_INTERCEPT",
    "KRAJSA",
    "LabeledMatrix",
    "LatencyModel",
    "Location",
    "MAX_DISTANCE_KM",
    "ModelSelection",
    "NegativeDelayWarning",
    "OBJECTIVES",
    "PairDistance",
    "ParseError",
    "PlacementError",
    "RankingReport",
    "SPEED_OF_LIGHT",
    "ScoreCard",
    "TOTAL_DELAY",
    "UnknownLocationError",
    "UnknownModelError",
    "ValidationError",
    "WORLD_REGRESSION",
    "all_scenarios",
    "auto_threshold",
    "bright_cell_count",
    "build_distance_matrix",
    "build_scenario",
    "bundled_locations",
    "bundled_locations_path",
    "bundled_reference",
    "bundled_reference_path",
    "cellwise_compare",
    "evaluate",
    "export_matrix",
    "geocode",
    "get_model",
    "great_circle_distance",
    "import_matrix",
    "load_locations",
    "min_max_pairs",
    "rank",
    "registry",
    "render_heatmap",
    "routed_distance",
    "save_locations",
    "shared_color_scale",
    "total_delay",
    "validate_against_reference",
]
