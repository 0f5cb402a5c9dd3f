"""Command-line front end.

Subcommands: distances, evaluate, rank, heatmap, geocode, validate.
Exit status contract: 0 success, 1 domain or validation failure, 2 usage
error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import PlacementError
from .geocode import GeocodeCache, GeocoderClient
from .geodesy import build_distance_matrix
from .heatmap import HeatmapSpec, per_figure_color_scale, render_heatmap, shared_color_scale
from .hubs import all_scenarios, build_scenario
from .latency import KRAJSA, IOA_REGRESSION, registry
from .locations import load_locations, validate_against_reference
from .matrix_io import export_matrix, import_matrix
from .ranking import OBJECTIVES, TOTAL_DELAY, rank

_MODEL_IDS = tuple(m.id for m in registry())
_DEFAULT_HEATMAP_MODELS = (KRAJSA, IOA_REGRESSION)


def _model_list(text: str) -> list[str]:
    ids = [part.strip() for part in text.split(",") if part.strip()]
    if not ids:
        raise argparse.ArgumentTypeError("expected a comma-separated list of model ids")
    for model_id in ids:
        if model_id not in _MODEL_IDS:
            raise argparse.ArgumentTypeError(
                f"unknown model {model_id!r}; known: {', '.join(_MODEL_IDS)}"
            )
    return ids


def _model_pair(text: str) -> list[str]:
    ids = _model_list(text)
    if len(ids) != 2:
        raise argparse.ArgumentTypeError("expected exactly two model ids: BOTTOM,TOP")
    return ids


def _threshold(text: str):
    if text == "auto":
        return "auto"
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"threshold must be a number or 'auto', got {text!r}")


def _print_matrix(iso_codes, cells, unit: str) -> None:
    width = 10
    print("     " + "".join(f"{code:>{width}}" for code in iso_codes))
    for code, row in zip(iso_codes, cells):
        print(f"{code:<5}" + "".join(f"{value:>{width}.3f}" for value in row))
    print(f"({unit})")


def cmd_distances(args) -> int:
    locations = load_locations(args.locations)
    matrix = build_distance_matrix(locations)
    _print_matrix(matrix.iso_codes, matrix.cells, "km")
    if args.out:
        export_matrix(matrix, "distance", args.out)
        print(f"wrote {args.out}")
    return 0


def cmd_evaluate(args) -> int:
    locations = load_locations(args.locations)
    matrix = build_distance_matrix(locations)
    scenario = build_scenario(matrix, args.hub, models=args.models)
    print(f"routed distances via {args.hub}:")
    _print_matrix(scenario.iso_codes, scenario.routed_distances, "km")
    for model_id in args.models:
        print(f"\nmodel {model_id}:")
        _print_matrix(scenario.iso_codes, scenario.delays[model_id], "ms")
    if args.out:
        for path, model_id in zip(_delay_out_paths(args.out, args.models), args.models):
            export_matrix(
                _Labeled(scenario.iso_codes, scenario.delays[model_id]), "delay", path
            )
            print(f"wrote {path}")
    return 0


class _Labeled:
    def __init__(self, iso_codes, cells):
        self.iso_codes = iso_codes
        self.cells = cells


def _delay_out_paths(out, model_ids):
    out = Path(out)
    if len(model_ids) == 1:
        return [out]
    return [out.with_name(f"{out.stem}.{model_id}{out.suffix}") for model_id in model_ids]


def cmd_rank(args) -> int:
    locations = load_locations(args.locations)
    matrix = build_distance_matrix(locations)
    scenarios = all_scenarios(matrix, models=[args.model])
    report = rank(scenarios, objective=args.objective, model_id=args.model,
                  threshold=args.threshold)
    print(f"objective: {report.objective}   model: {report.model_id}")
    print(f"bright-cell threshold: {report.bright_threshold_ms:.3f} ms")
    print()
    print(f"{'hub':<5}{'total_delay_ms':>16}{'bright_cells':>14}{'cellwise_wins':>15}")
    for card in report.scorecards:
        print(f"{card.hub:<5}{card.total_delay_ms:>16.3f}"
              f"{card.bright_cells:>14d}{card.cellwise_wins:>15d}")
    print()
    print("eliminated (worst first):")
    for elimination in report.eliminated:
        print(f"  {elimination.hub}: {elimination.reason}")
    if args.out:
        Path(args.out).write_text(json.dumps(report.to_dict(), indent=2) + "\n",
                                  encoding="utf-8")
        print(f"wrote {args.out}")
    print()
    print(f"winner: {report.winner}")
    return 0


def cmd_heatmap(args) -> int:
    locations = load_locations(args.locations)
    matrix = build_distance_matrix(locations)
    bottom, top = args.models
    scenarios = all_scenarios(matrix, models=args.models)
    if args.hub == "all":
        selected = scenarios
    else:
        matrix.index(args.hub)  # raises UnknownLocationError for bad codes
        selected = [s for s in scenarios if s.hub == args.hub]
    shared = None
    if not args.per_figure_scale:
        shared = shared_color_scale(scenarios, args.models)
    out = Path(args.out)
    single_file = args.hub != "all" and out.suffix == ".svg"
    if single_file:
        out.parent.mkdir(parents=True, exist_ok=True)
    else:
        out.mkdir(parents=True, exist_ok=True)
    for scenario in selected:
        scale = shared if shared is not None else per_figure_color_scale(scenario, args.models)
        spec = HeatmapSpec(
            scenario=scenario,
            color_scale=scale,
            bottom_model=bottom,
            top_model=top,
            cell_labels=not args.no_cell_labels,
        )
        path = out if single_file else out / f"heatmap_{scenario.hub}.svg"
        path.write_text(render_heatmap(spec), encoding="utf-8")
        print(f"wrote {path}")
    return 0


def cmd_geocode(args) -> int:
    cache = GeocodeCache(args.cache) if args.cache else None
    client = GeocoderClient(base_url=args.endpoint, cache=cache)
    coordinate = client.geocode(args.query)
    print(f"{coordinate.latitude_deg} {coordinate.longitude_deg}")
    return 0


def cmd_validate(args) -> int:
    locations = load_locations(args.locations)
    reference = import_matrix(args.reference)
    report = validate_against_reference(locations, reference, tolerance=args.tolerance)
    print(f"{'pair':<8}{'computed_km':>13}{'reference_km':>14}{'rel_error':>11}  status")
    for check in report.checks:
        status = "ok" if check.within else "FAIL"
        print(f"{check.iso_a}-{check.iso_b:<5}{check.computed_km:>13.3f}"
              f"{check.reference_km:>14.3f}{check.relative_error:>11.6f}  {status}")
    verdict = "PASS" if report.passed else "FAIL"
    print(f"result: {verdict} (tolerance {report.tolerance:.2%})")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ixp-placement",
        description="Analyze where a regional Internet exchange point should go.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distances", help="compute the pairwise distance matrix")
    p.add_argument("--locations", required=True, help="location file (JSON)")
    p.add_argument("--out", help="also write the matrix as CSV")
    p.set_defaults(func=cmd_distances)

    p = sub.add_parser("evaluate", help="delay matrices for one candidate hub")
    p.add_argument("--locations", required=True)
    p.add_argument("--hub", required=True, help="ISO code of the candidate hub")
    p.add_argument("--models", type=_model_list, default=list(_DEFAULT_HEATMAP_MODELS),
                   help="comma-separated model ids (default: %(default)s)")
    p.add_argument("--out", help="write delay CSV(s); model id is inserted when several")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("rank", help="score and rank every candidate hub")
    p.add_argument("--locations", required=True)
    p.add_argument("--objective", choices=OBJECTIVES, default=TOTAL_DELAY)
    p.add_argument("--model", choices=_MODEL_IDS, default=KRAJSA)
    p.add_argument("--threshold", type=_threshold, default="auto",
                   help="bright-cell threshold in ms, or 'auto' (pooled median)")
    p.add_argument("--out", help="write the report as JSON")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("heatmap", help="render split-triangle delay heatmaps as SVG")
    p.add_argument("--locations", required=True)
    p.add_argument("--hub", required=True, help="ISO code, or 'all' for one SVG per hub")
    p.add_argument("--out", required=True,
                   help="output .svg file (single hub) or directory")
    p.add_argument("--models", type=_model_pair, default=list(_DEFAULT_HEATMAP_MODELS),
                   help="BOTTOM,TOP model ids (default: %(default)s)")
    p.add_argument("--per-figure-scale", action="store_true",
                   help="normalize each figure separately (not comparable across hubs)")
    p.add_argument("--no-cell-labels", action="store_true")
    p.set_defaults(func=cmd_heatmap)

    p = sub.add_parser("geocode", help="resolve a place name to a coordinate")
    p.add_argument("--query", required=True)
    p.add_argument("--endpoint", help="geocoder base URL (default: $IXP_PLACEMENT_GEOCODER_URL)")
    p.add_argument("--cache", help="cache file path (default: user data dir)")
    p.set_defaults(func=cmd_geocode)

    p = sub.add_parser("validate", help="check computed distances against a reference CSV")
    p.add_argument("--locations", required=True)
    p.add_argument("--reference", required=True, help="reference matrix CSV")
    p.add_argument("--tolerance", type=float, default=0.02)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PlacementError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
