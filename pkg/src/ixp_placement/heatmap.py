"""Deterministic SVG heatmaps of hub scenarios.

Each figure is a split-diagonal grid: the lower triangle shows one model's
delays, the upper triangle another's, and the diagonal is solid black (local
traffic, zero delay). The palette is monotone with LIGHT meaning LONG delay,
so the brightest cells are the slowest pairs. Identical inputs render to
byte-identical documents; goldens can be diffed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .hubs import HubScenario
from .latency import IOA_REGRESSION, KRAJSA

# palette endpoints: dark (short delay) to light (long delay)
_DARK = (16, 24, 44)
_LIGHT = (247, 249, 252)

_CELL = 72
_PAD = 16
_TITLE_H = 30
_HEADER = 36
_LEGEND_BAR_H = 16
_LEGEND_STEPS = 64


@dataclass(frozen=True)
class ColorScale:
    """Shared delay-to-color mapping; min_ms must be strictly below max_ms."""

    min_ms: float
    max_ms: float

    def __post_init__(self):
        if not self.max_ms > self.min_ms:
            raise ValidationError(
                f"degenerate color scale: min {self.min_ms} >= max {self.max_ms}"
            )

    def color(self, value_ms: float) -> str:
        t = (value_ms - self.min_ms) / (self.max_ms - self.min_ms)
        t = max(0.0, min(1.0, t))
        r, g, b = (round(d + (l - d) * t) for d, l in zip(_DARK, _LIGHT))
        return f"#{r:02x}{g:02x}{b:02x}"

    def is_light(self, value_ms: float) -> bool:
        t = (value_ms - self.min_ms) / (self.max_ms - self.min_ms)
        return t > 0.55


@dataclass(frozen=True)
class HeatmapSpec:
    """What to draw: one scenario, two distinct models, one shared scale."""

    scenario: HubScenario
    color_scale: ColorScale
    bottom_model: str = KRAJSA
    top_model: str = IOA_REGRESSION
    cell_labels: bool = True

    def __post_init__(self):
        if self.bottom_model == self.top_model:
            raise ValidationError("bottom and top models must differ")
        self.scenario.delay_matrix(self.bottom_model)
        self.scenario.delay_matrix(self.top_model)


def shared_color_scale(scenarios: Sequence[HubScenario], model_ids: Sequence[str]) -> ColorScale:
    """Scale [0, global max off-diagonal delay] across scenarios and models.

    Using one scale for every candidate keeps brightness comparable between
    figures of the same invocation.
    """
    peak = 0.0
    for scenario in scenarios:
        n = len(scenario.iso_codes)
        mask = ~np.eye(n, dtype=bool)
        for model_id in model_ids:
            peak = max(peak, float(np.max(scenario.delay_matrix(model_id)[mask])))
    return ColorScale(0.0, peak)


def per_figure_color_scale(scenario: HubScenario, model_ids: Sequence[str]) -> ColorScale:
    """Scale normalized to a single figure (not comparable across hubs)."""
    return shared_color_scale([scenario], model_ids)


def render_heatmap(spec: HeatmapSpec) -> str:
    """Render one scenario to an SVG document string."""
    scenario = spec.scenario
    codes = scenario.iso_codes
    n = len(codes)
    scale = spec.color_scale
    bottom = scenario.delay_matrix(spec.bottom_model)
    top = scenario.delay_matrix(spec.top_model)

    x0 = _PAD + _HEADER
    y0 = _PAD + _TITLE_H + _HEADER
    grid_w = n * _CELL
    legend_y = y0 + grid_w + 18
    width = x0 + grid_w + _PAD
    height = legend_y + _LEGEND_BAR_H + 22 + _PAD

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{x0}" y="{_PAD + 14}" font-size="15" fill="#111111">'
        f'Hub {scenario.hub}: round-trip delay [ms]</text>',
        f'<text x="{x0}" y="{_PAD + _TITLE_H + 10}" font-size="11" fill="#444444">'
        f'lower: {spec.bottom_model} / upper: {spec.top_model}</text>',
    ]

    for j, code in enumerate(codes):
        cx = x0 + j * _CELL + _CELL // 2
        parts.append(
            f'<text x="{cx}" y="{y0 - 8}" font-size="13" fill="#111111" '
            f'text-anchor="middle">{code}</text>'
        )
    for i, code in enumerate(codes):
        cy = y0 + i * _CELL + _CELL // 2 + 4
        parts.append(
            f'<text x="{x0 - 8}" y="{cy}" font-size="13" fill="#111111" '
            f'text-anchor="end">{code}</text>'
        )

    for i in range(n):
        for j in range(n):
            x = x0 + j * _CELL
            y = y0 + i * _CELL
            if i == j:
                parts.append(
                    f'<rect class="cell cell-diagonal" x="{x}" y="{y}" '
                    f'width="{_CELL}" height="{_CELL}" fill="#000000" stroke="#333333"/>'
                )
                continue
            if i > j:
                value = float(bottom[i, j])
                css = "cell cell-lower"
            else:
                value = float(top[i, j])
                css = "cell cell-upper"
            fill = scale.color(value)
            parts.append(
                f'<rect class="{css}" x="{x}" y="{y}" width="{_CELL}" height="{_CELL}" '
                f'fill="{fill}" stroke="#333333"/>'
            )
            if spec.cell_labels:
                text_fill = "#1b1b1b" if scale.is_light(value) else "#f2f2f2"
                parts.append(
                    f'<text x="{x + _CELL // 2}" y="{y + _CELL // 2 + 4}" font-size="11" '
                    f'fill="{text_fill}" text-anchor="middle">{value:.2f}</text>'
                )

    parts.append(
        f'<g id="legend" data-min-ms="{scale.min_ms:.6f}" data-max-ms="{scale.max_ms:.6f}">'
    )
    step_w = grid_w / _LEGEND_STEPS
    span = scale.max_ms - scale.min_ms
    for k in range(_LEGEND_STEPS):
        value = scale.min_ms + span * (k + 0.5) / _LEGEND_STEPS
        parts.append(
            f'<rect x="{x0 + k * step_w:.2f}" y="{legend_y}" width="{step_w + 0.5:.2f}" '
            f'height="{_LEGEND_BAR_H}" fill="{scale.color(value)}"/>'
        )
    label_y = legend_y + _LEGEND_BAR_H + 14
    parts.append(
        f'<text id="legend-min" x="{x0}" y="{label_y}" font-size="11" '
        f'fill="#111111">{scale.min_ms:.2f} ms</text>'
    )
    parts.append(
        f'<text id="legend-max" x="{x0 + grid_w}" y="{label_y}" font-size="11" '
        f'fill="#111111" text-anchor="end">{scale.max_ms:.2f} ms</text>'
    )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
