"""Scoring and ranking of candidate hubs.

Three objectives are available:

* "total-delay": 1-median style, sums every off-diagonal delay cell of a
  scenario; lower is better. The default.
* "bright-cells": counts off-diagonal cells whose delay exceeds a threshold;
  fewer is better. The "auto" threshold is the median of all off-diagonal
  delays pooled across every candidate scenario, so counts are comparable
  between hubs.
* "cellwise": pairwise head-to-head, comparing the two scenarios cell by
  cell for every unordered location pair; more won cells is better.

All ties break the same way: lower total delay first, then ISO code. Delay
equality uses a 1e-9 ms tolerance, which separates genuine ties (identical
sums) from rounding noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ValidationError
from .hubs import HubScenario
from .latency import KRAJSA

TOTAL_DELAY = "total-delay"
BRIGHT_CELLS = "bright-cells"
CELLWISE_DOMINANCE = "cellwise"
OBJECTIVES = (TOTAL_DELAY, BRIGHT_CELLS, CELLWISE_DOMINANCE)

DELAY_TIE_TOLERANCE_MS = 1e-9
AUTO_THRESHOLD = "auto"


def _off_diagonal(cells: np.ndarray) -> np.ndarray:
    return cells[~np.eye(cells.shape[0], dtype=bool)]


def total_delay(scenario: HubScenario, model_id: str) -> float:
    """Sum of all off-diagonal delay cells, in ms."""
    return float(np.sum(_off_diagonal(scenario.delay_matrix(model_id))))


def auto_threshold(scenarios: Sequence[HubScenario], model_id: str) -> float:
    """Median off-diagonal delay pooled across all candidate scenarios, in ms."""
    if not scenarios:
        raise ValidationError("auto threshold needs at least one scenario")
    pooled = np.concatenate(
        [_off_diagonal(s.delay_matrix(model_id)) for s in scenarios]
    )
    return float(np.median(pooled))


def bright_cell_count(scenario: HubScenario, model_id: str, threshold=AUTO_THRESHOLD,
                      *, context: Sequence[HubScenario] | None = None) -> int:
    """Number of off-diagonal cells with delay strictly above the threshold.

    threshold is a value in ms, or "auto" to use the pooled median over
    `context` (the full candidate scenario list, which must then be given).
    """
    if threshold == AUTO_THRESHOLD:
        if context is None:
            raise ValidationError(
                'threshold "auto" needs context= with all candidate scenarios'
            )
        threshold = auto_threshold(context, model_id)
    return int(np.sum(_off_diagonal(scenario.delay_matrix(model_id)) > threshold))


class CellwiseResult(NamedTuple):
    wins_a: int
    wins_b: int
    ties: int


def cellwise_compare(a: HubScenario, b: HubScenario, model_id: str) -> CellwiseResult:
    """Compare two scenarios cell by cell over unordered location pairs.

    A strictly smaller delay wins the cell; differences within 1e-9 ms tie.
    wins_a + wins_b + ties always equals n(n-1)/2.
    """
    if a.iso_codes != b.iso_codes:
        raise ValidationError(
            f"scenarios cover different location sets: {a.iso_codes} vs {b.iso_codes}"
        )
    da = a.delay_matrix(model_id)
    db = b.delay_matrix(model_id)
    wins_a = wins_b = ties = 0
    n = len(a.iso_codes)
    for i in range(n):
        for j in range(i + 1, n):
            delta = float(da[i, j]) - float(db[i, j])
            if abs(delta) <= DELAY_TIE_TOLERANCE_MS:
                ties += 1
            elif delta < 0.0:
                wins_a += 1
            else:
                wins_b += 1
    return CellwiseResult(wins_a, wins_b, ties)


@dataclass(frozen=True)
class ScoreCard:
    """All three objective scores for one candidate, under one model."""

    hub: str
    total_delay_ms: float
    bright_cells: int
    cellwise_wins: int


@dataclass(frozen=True)
class Elimination:
    hub: str
    reason: str


@dataclass(frozen=True)
class RankingReport:
    objective: str
    model_id: str
    bright_threshold_ms: float
    ordering: tuple[str, ...]
    eliminated: tuple[Elimination, ...]
    scorecards: tuple[ScoreCard, ...]

    @property
    def winner(self) -> str:
        return self.ordering[0]

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "model": self.model_id,
            "bright_threshold_ms": self.bright_threshold_ms,
            "ordering": list(self.ordering),
            "winner": self.winner,
            "eliminated": [{"hub": e.hub, "reason": e.reason} for e in self.eliminated],
            "scorecards": [
                {
                    "hub": c.hub,
                    "total_delay_ms": c.total_delay_ms,
                    "bright_cells": c.bright_cells,
                    "cellwise_wins": c.cellwise_wins,
                }
                for c in self.scorecards
            ],
        }


def _validate_scenarios(scenarios: Sequence[HubScenario], model_id: str):
    if len(scenarios) < 2:
        raise ValidationError(f"ranking needs at least 2 scenarios, got {len(scenarios)}")
    reference = scenarios[0].iso_codes
    hubs = []
    for s in scenarios:
        if s.iso_codes != reference:
            raise ValidationError("scenarios cover different location sets")
        s.delay_matrix(model_id)  # raises UnknownModelError when missing
        hubs.append(s.hub)
    if len(set(hubs)) != len(hubs):
        raise ValidationError("duplicate candidate hubs in scenario list")


def rank(scenarios: Sequence[HubScenario], objective: str = TOTAL_DELAY,
         model_id: str = KRAJSA, threshold=AUTO_THRESHOLD) -> RankingReport:
    """Rank candidate hubs under one objective and one model.

    Returns a report with the best-first ordering, the scorecards, and the
    eliminated candidates worst-first, each with the score that sank it.
    """
    if objective not in OBJECTIVES:
        raise ValidationError(f"unknown objective {objective!r}; choose from {OBJECTIVES}")
    _validate_scenarios(scenarios, model_id)

    if threshold == AUTO_THRESHOLD:
        bright_threshold = auto_threshold(scenarios, model_id)
    else:
        bright_threshold = float(threshold)

    by_hub = {s.hub: s for s in scenarios}
    totals = {h: total_delay(s, model_id) for h, s in by_hub.items()}
    brights = {
        h: bright_cell_count(s, model_id, bright_threshold) for h, s in by_hub.items()
    }
    wins = {h: 0 for h in by_hub}
    hubs_sorted = sorted(by_hub)
    for i, ha in enumerate(hubs_sorted):
        for hb in hubs_sorted[i + 1:]:
            result = cellwise_compare(by_hub[ha], by_hub[hb], model_id)
            wins[ha] += result.wins_a
            wins[hb] += result.wins_b

    if objective == TOTAL_DELAY:
        def key(h):
            return (totals[h], h)
    elif objective == BRIGHT_CELLS:
        def key(h):
            return (brights[h], totals[h], h)
    else:
        def key(h):
            return (-wins[h], totals[h], h)

    ordering = tuple(sorted(by_hub, key=key))

    n = len(scenarios[0].iso_codes)
    cell_count = n * (n - 1)
    pair_count = cell_count // 2
    max_wins = pair_count * (len(scenarios) - 1)

    def describe(h, rank_pos):
        if objective == TOTAL_DELAY:
            return f"total delay {totals[h]:.3f} ms (rank {rank_pos} of {len(ordering)})"
        if objective == BRIGHT_CELLS:
            return (
                f"{brights[h]} of {cell_count} cells above {bright_threshold:.3f} ms "
                f"(rank {rank_pos} of {len(ordering)})"
            )
        return f"{wins[h]} of {max_wins} cellwise wins (rank {rank_pos} of {len(ordering)})"

    def primary_tie(h, other):
        if objective == TOTAL_DELAY:
            return abs(totals[h] - totals[other]) <= DELAY_TIE_TOLERANCE_MS
        if objective == BRIGHT_CELLS:
            return brights[h] == brights[other]
        return wins[h] == wins[other]

    eliminated = []
    for pos in range(len(ordering) - 1, 0, -1):
        hub = ordering[pos]
        better = ordering[pos - 1]
        reason = describe(hub, pos + 1)
        if primary_tie(hub, better):
            if abs(totals[hub] - totals[better]) > DELAY_TIE_TOLERANCE_MS:
                reason += f"; tie with {better} broken by lower total delay"
            else:
                reason += f"; tie with {better} broken by ISO code"
        eliminated.append(Elimination(hub=hub, reason=reason))

    scorecards = tuple(
        ScoreCard(
            hub=h,
            total_delay_ms=totals[h],
            bright_cells=brights[h],
            cellwise_wins=wins[h],
        )
        for h in ordering
    )
    return RankingReport(
        objective=objective,
        model_id=model_id,
        bright_threshold_ms=bright_threshold,
        ordering=ordering,
        eliminated=tuple(eliminated),
        scorecards=scorecards,
    )
