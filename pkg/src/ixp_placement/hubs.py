"""Hub-routing scenarios: what happens when all traffic transits one candidate.

Placing the exchange at a hub h forces every pair (i, j) through it, so the
routed distance is d(i, h) + d(h, j). Two conventions, applied everywhere:

* The diagonal is zero in every matrix: traffic to a local destination never
  leaves the exchange, so its delay is 0 even for models with a nonzero
  intercept.
* Pairs with the hub as an endpoint use the direct distance; traffic
  terminates at the hub instead of bouncing off it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import UnknownModelError, ValidationError
from .geodesy import DistanceMatrix
from .latency import ModelSelection, NegativeDelayWarning, get_model


@dataclass(frozen=True)
class HubScenario:
    """Routed distances and per-model delays when one candidate hosts the hub.

    iso_codes orders the rows/columns of every matrix; delays maps model id
    to an n×n ms matrix with a forced-zero diagonal.
    """

    hub: str
    iso_codes: tuple[str, ...]
    routed_distances: np.ndarray
    delays: Mapping[str, np.ndarray]

    def __post_init__(self):
        if self.hub not in self.iso_codes:
            raise ValidationError(f"hub {self.hub!r} not among scenario locations")
        n = len(self.iso_codes)
        if self.routed_distances.shape != (n, n):
            raise ValidationError("routed_distances shape does not match location count")
        for model_id, cells in self.delays.items():
            if cells.shape != (n, n):
                raise ValidationError(f"delay matrix for {model_id!r} has wrong shape")

    def delay_matrix(self, model_id: str) -> np.ndarray:
        try:
            return self.delays[model_id]
        except KeyError:
            have = ", ".join(sorted(self.delays))
            raise UnknownModelError(
                f"model {model_id!r} not in scenario (has: {have})"
            ) from None


def routed_distance(matrix: DistanceMatrix, hub: str, i: str, j: str) -> float:
    """Distance of the i→j path when forced through the hub, in km.

    0 for a local destination (i == j); the direct distance when the hub is
    an endpoint; otherwise the sum of the two legs through the hub.
    """
    hi = matrix.index(hub)
    ii = matrix.index(i)
    ji = matrix.index(j)
    if ii == ji:
        return 0.0
    if hi in (ii, ji):
        return float(matrix.cells[ii, ji])
    return float(matrix.cells[ii, hi] + matrix.cells[hi, ji])


def _routed_matrix(matrix: DistanceMatrix, hub_index: int) -> np.ndarray:
    legs = matrix.cells[:, hub_index]
    routed = legs[:, None] + legs[None, :]
    routed[hub_index, :] = matrix.cells[hub_index, :]
    routed[:, hub_index] = matrix.cells[:, hub_index]
    np.fill_diagonal(routed, 0.0)
    return routed


def _normalize_models(models) -> tuple[str, ...]:
    if models is None:
        models = ModelSelection()
    if isinstance(models, ModelSelection):
        return models.ids
    ids = tuple(dict.fromkeys(models))  # preserve order, drop duplicates
    if not ids:
        raise ValidationError("at least one model id is required")
    for model_id in ids:
        get_model(model_id)
    return ids


def build_scenario(matrix: DistanceMatrix, hub: str, models=None) -> HubScenario:
    """Build the full scenario for one candidate hub.

    Args:
        matrix: Validated distance matrix.
        hub: ISO code of the candidate; must be in the matrix.
        models: ModelSelection, iterable of model ids, or None for the
            default selection.

    Returns:
        HubScenario with routed distances and one delay matrix per model,
        each delay cell equal to the model applied to the routed distance,
        except the diagonal which is forced to 0.
    """
    model_ids = _normalize_models(models)
    hub_index = matrix.index(hub)
    routed = _routed_matrix(matrix, hub_index)
    off_diagonal = ~np.eye(len(matrix.locations), dtype=bool)
    delays = {}
    for model_id in model_ids:
        model = get_model(model_id)
        cells = model.slope_ms_per_km * routed + model.intercept_ms
        np.fill_diagonal(cells, 0.0)
        if np.any(cells[off_diagonal] < 0.0):
            warnings.warn(
                f"model {model_id!r} predicts negative delays under hub {hub!r}",
                NegativeDelayWarning,
                stacklevel=2,
            )
        cells.setflags(write=False)
        delays[model_id] = cells
    routed.setflags(write=False)
    return HubScenario(
        hub=hub,
        iso_codes=matrix.iso_codes,
        routed_distances=routed,
        delays=delays,
    )


def all_scenarios(matrix: DistanceMatrix, models=None) -> list[HubScenario]:
    """One scenario per location, in ISO-code order."""
    return [
        build_scenario(matrix, iso, models=models)
        for iso in sorted(matrix.iso_codes)
    ]
