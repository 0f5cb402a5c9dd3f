"""Distance-to-RTT latency models.

All models share a single affine form: rtt_ms = slope_ms_per_km * distance_km
+ intercept_ms. Units are fixed package-wide: distances in km, round-trip
times in ms. The physical model is pre-converted to a ms/km slope assuming
signals travel at two thirds of the vacuum speed of light, doubled for the
round trip.

Caveat kept on purpose: the "krajsa" coefficient (0.00128 ms/km) sits well
below the physical round-trip floor in fiber (~0.0100 ms/km). It is bundled
verbatim, unclamped, because reproducing the published constant matters more
here than physical plausibility. "world-regression" has a negative slope and
is excluded from default pipelines; its outputs can go negative at extreme
distances and are reported as-is with a NegativeDelayWarning.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import InputError, UnknownModelError

VACUUM_LIGHT_SPEED_KM_S = 299792.458
FIBER_VELOCITY_FACTOR = 2.0 / 3.0

# stable model ids, used verbatim in CLI flags and report headers
SPEED_OF_LIGHT = "speed-of-light"
WORLD_REGRESSION = "world-regression"
IOA_REGRESSION = "ioa-regression"
IOA_REGRESSION_NO_INTERCEPT = "ioa-regression-no-intercept"
KRAJSA = "krajsa"


class NegativeDelayWarning(UserWarning):
    """A model produced an RTT below 0 ms; the value is reported unclamped."""


@dataclass(frozen=True)
class LatencyModel:
    """An affine distance→RTT mapping: km in, ms out."""

    id: str
    slope_ms_per_km: float
    intercept_ms: float
    description: str


_SPEED_OF_LIGHT_SLOPE = 2.0 / (FIBER_VELOCITY_FACTOR * VACUUM_LIGHT_SPEED_KM_S) * 1000.0

_MODELS = {
    SPEED_OF_LIGHT: LatencyModel(
        SPEED_OF_LIGHT,
        _SPEED_OF_LIGHT_SLOPE,
        0.0,
        "Round trip at two thirds of vacuum light speed; no queuing or processing time.",
    ),
    WORLD_REGRESSION: LatencyModel(
        WORLD_REGRESSION,
        -0.00340391,
        431.557,
        "Affine fit of measured RTTs from the region to worldwide destinations; "
        "slope is negative because traffic detours through remote peering.",
    ),
    IOA_REGRESSION: LatencyModel(
        IOA_REGRESSION,
        0.034018,
        328.092,
        "Affine fit of measured RTTs between Indian Ocean destinations.",
    ),
    IOA_REGRESSION_NO_INTERCEPT: LatencyModel(
        IOA_REGRESSION_NO_INTERCEPT,
        0.034018,
        0.0,
        "Regional fit with the fixed offset removed, modeling local peering.",
    ),
    KRAJSA: LatencyModel(
        KRAJSA,
        0.00128,
        0.0,
        "Delay-per-distance coefficient measured in a densely meshed network.",
    ),
}


def registry() -> list[LatencyModel]:
    """All five bundled models, ordered by id."""
    return [_MODELS[k] for k in sorted(_MODELS)]


def get_model(model_id: str) -> LatencyModel:
    try:
        return _MODELS[model_id]
    except KeyError:
        known = ", ".join(sorted(_MODELS))
        raise UnknownModelError(f"unknown model id {model_id!r}; known ids: {known}") from None


def evaluate(model: LatencyModel, distance_km: float) -> float:
    """RTT in ms predicted by a model for a distance in km.

    Distance must be finite and non-negative. A zero distance returns the
    model intercept. Negative results (possible only for negative-slope
    models at extreme distances) are returned unclamped with a
    NegativeDelayWarning.
    """
    if not isinstance(distance_km, (int, float)):
        raise InputError(f"distance must be a number, got {distance_km!r}")
    if not math.isfinite(distance_km) or distance_km < 0.0:
        raise InputError(f"distance must be finite and >= 0 km, got {distance_km}")
    rtt = model.slope_ms_per_km * distance_km + model.intercept_ms
    if rtt < 0.0:
        warnings.warn(
            f"model {model.id!r} predicts {rtt:.3f} ms at {distance_km} km",
            NegativeDelayWarning,
            stacklevel=2,
        )
    return rtt


@dataclass(frozen=True)
class ModelSelection:
    """Which model fills each heatmap triangle: bottom = lower, top = upper."""

    bottom_model: str = KRAJSA
    top_model: str = IOA_REGRESSION

    def __post_init__(self):
        get_model(self.bottom_model)
        get_model(self.top_model)

    @property
    def ids(self) -> tuple[str, ...]:
        if self.bottom_model == self.top_model:
            return (self.bottom_model,)
        return (self.bottom_model, self.top_model)
