"""Batch driver for the pipeline, report exports and fixture loading.

Subcommands:

* ``analyze``      run the indicator pipeline and/or compile report
                   bundles from fixtures or a store
* ``synthesize``   produce the two-method positive/negative answer
* ``export-graph`` write one goal-pair graph document
* ``stats``        write one method's summary statistics
* ``import``       load fixtures into a service store
* ``serve``        run the HTTP API

Evaluation sources, for every reporting subcommand: ``--store`` (sqlite
path used by the service), ``--expert`` (expert answers CSV) and
``--indicators`` (classified-pairs export or raw indicator time-series
CSV; raw input is run through the correlation pipeline). Outputs are
deterministic for fixed inputs and byte-identical to the corresponding
service endpoints.

Exit codes: 0 success, 1 invariant or format violation, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixture_io, reports
from .analytics import ExpertEvaluations, IndicatorEvaluations, Method, synthesize
from .catalog import load_catalog
from .config import AppConfig
from .correlation import (
    DEFAULT_MIN_OVERLAP,
    load_results_file,
    run_indicator_method,
    write_results_csv,
)
from .errors import FileUnreadable, SdgError
from .indicators import load_indicator_file


def _sniff_indicator_file(path) -> str:
    """'results' for a classified-pairs table, 'raw' for time-series."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
    columns = [c.strip() for c in header.split(",")]
    if columns[:3] == ["target_a", "target_b", "interaction"]:
        return "results"
    if columns[:3] == ["indicator_code", "year", "value"]:
        return "raw"
    raise FileUnreadable(f"{path}: unrecognized header {header!r}")


class Sources:
    """Evaluation snapshots resolved from CLI flags."""

    def __init__(self, args, catalog):
        self.catalog = catalog
        self.expert = None
        self.indicator = None
        self.load_report = None
        if getattr(args, "store", None):
            from .store import Store

            store = Store(args.store, catalog)
            self.expert = store.expert_snapshot()
            self.indicator = store.indicator_snapshot()
        if getattr(args, "expert", None):
            self.expert = fixture_io.load_expert_file(args.expert, catalog)
        if getattr(args, "indicators", None):
            kind = _sniff_indicator_file(args.indicators)
            if kind == "results":
                results = load_results_file(args.indicators, catalog)
                self.indicator = IndicatorEvaluations(results=results, loaded=True)
            else:
                series, self.load_report = load_indicator_file(args.indicators, catalog)
                min_overlap = getattr(args, "min_overlap", DEFAULT_MIN_OVERLAP)
                results = run_indicator_method(series, catalog, min_overlap=min_overlap)
                self.indicator = IndicatorEvaluations(results=results, loaded=True)

    def for_method(self, method: Method):
        if method is Method.EXPERT:
            return self.expert if self.expert is not None else ExpertEvaluations(scores={})
        if self.indicator is not None:
            return self.indicator
        return IndicatorEvaluations(results={}, loaded=False)

    def available_methods(self):
        methods = []
        if self.expert is not None:
            methods.append(Method.EXPERT)
        if self.indicator is not None:
            methods.append(Method.INDICATOR)
        return methods


def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _emit(doc, fmt, out, text_renderer=None):
    rendered = reports.to_json(doc) if fmt == "json" else text_renderer(doc)
    if out:
        _write(Path(out), rendered)
    else:
        sys.stdout.write(rendered)


def cmd_analyze(args) -> int:
    catalog = load_catalog()
    sources = Sources(args, catalog)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    if sources.indicator is not None and getattr(args, "indicators", None):
        with (out_dir / "classified_pairs.csv").open("w", encoding="utf-8", newline="") as fh:
            write_results_csv(sources.indicator.results, fh)
        written.append("classified_pairs.csv")
    if sources.load_report is not None:
        _write(out_dir / "load_report.json", reports.to_json(sources.load_report.to_dict()))
        written.append("load_report.json")

    for method in sources.available_methods():
        evals = sources.for_method(method)
        docs = {
            f"{method.value}_stats": reports.stats_document(catalog, evals),
            f"{method.value}_intra_goal": reports.intra_goal_document(catalog, evals),
            f"{method.value}_targets": reports.verdicts_document(catalog, evals),
            f"{method.value}_positive": reports.pairs_document(catalog, evals, "positive"),
            f"{method.value}_negative": reports.pairs_document(catalog, evals, "negative"),
        }
        for name, doc in docs.items():
            _write(out_dir / f"{name}.json", reports.to_json(doc))
            written.append(f"{name}.json")

    if sources.expert is not None and sources.indicator is not None:
        report = synthesize(catalog, sources.expert, sources.indicator)
        _write(out_dir / "synthesis.json", reports.to_json(reports.synthesis_document(report)))
        written.append("synthesis.json")

    if not written:
        print("nothing to analyze: provide --indicators, --expert or --store", file=sys.stderr)
        return 1
    for name in written:
        print(f"wrote {out_dir / name}")
    return 0


def cmd_synthesize(args) -> int:
    catalog = load_catalog()
    sources = Sources(args, catalog)
    report = synthesize(
        catalog,
        sources.for_method(Method.EXPERT),
        sources.for_method(Method.INDICATOR),
        multi_negative_min=args.multi_negative_min,
    )
    _emit(reports.synthesis_document(report), args.format, args.out, reports.synthesis_text)
    return 0


def cmd_export_graph(args) -> int:
    catalog = load_catalog()
    sources = Sources(args, catalog)
    method = Method(args.method)
    doc = reports.graph_document(catalog, sources.for_method(method), args.a, args.b)
    _emit(doc, "json", args.out)
    return 0


def cmd_stats(args) -> int:
    catalog = load_catalog()
    sources = Sources(args, catalog)
    method = Method(args.method)
    doc = reports.stats_document(catalog, sources.for_method(method))
    _emit(doc, args.format, args.out, reports.stats_text)
    return 0


def cmd_import(args) -> int:
    from .store import Store

    catalog = load_catalog()
    store = Store(args.store, catalog)
    if args.expert:
        evals = fixture_io.load_expert_file(args.expert, catalog)
        rows = (
            (pair, evals.scores[pair], evals.explanations.get(pair, ""))
            for pair in sorted(evals.scores, key=lambda p: p.sort_key())
        )
        count = store.import_expert_answers(rows)
        print(f"imported {count} expert answers")
    if args.indicators:
        kind = _sniff_indicator_file(args.indicators)
        if kind == "results":
            results = load_results_file(args.indicators, catalog)
        else:
            series, _ = load_indicator_file(args.indicators, catalog)
            results = run_indicator_method(series, catalog, min_overlap=args.min_overlap)
        count = store.replace_indicator_results(results)
        print(f"imported {count} indicator pair results (version {store.indicator_version()})")
    if not args.expert and not args.indicators:
        print("nothing to import: provide --expert and/or --indicators", file=sys.stderr)
        return 1
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    config = AppConfig.from_env()
    if args.port is not None:
        config.port = args.port
    if args.store:
        config.store_path = args.store
    if args.batch_size is not None:
        config.batch_size = args.batch_size
    if args.goal_min is not None:
        config.goal_min = args.goal_min
    if args.seed is not None:
        config.rng_seed = args.seed
    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)
    return 0


def _add_source_flags(parser, with_min_overlap=True):
    parser.add_argument("--store", help="sqlite store path (service-compatible)")
    parser.add_argument("--expert", help="expert answers CSV")
    parser.add_argument(
        "--indicators", help="classified-pairs export or raw indicator time-series CSV"
    )
    if with_min_overlap:
        parser.add_argument(
            "--min-overlap",
            dest="min_overlap",
            type=int,
            default=DEFAULT_MIN_OVERLAP,
            help="minimum common years for a defined correlation (default %(default)s)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdgi", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the pipeline / compile report bundles")
    _add_source_flags(p)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synthesize", help="two-method positive/negative answer")
    _add_source_flags(p)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument(
        "--multi-negative-min",
        dest="multi_negative_min",
        type=int,
        default=2,
        help="negatives needed to count as multiply-negative (default %(default)s)",
    )
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("export-graph", help="write one goal-pair graph document")
    _add_source_flags(p)
    p.add_argument("--method", choices=["expert", "indicator"], required=True)
    p.add_argument("--a", type=int, required=True, help="first goal number")
    p.add_argument("--b", type=int, required=True, help="second goal number")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_export_graph)

    p = sub.add_parser("stats", help="summary statistics for one method")
    _add_source_flags(p)
    p.add_argument("--method", choices=["expert", "indicator"], required=True)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("import", help="load fixtures into a service store")
    p.add_argument("--store", required=True)
    p.add_argument("--expert", help="expert answers CSV")
    p.add_argument("--indicators", help="classified-pairs export or raw indicator CSV")
    p.add_argument("--min-overlap", dest="min_overlap", type=int, default=DEFAULT_MIN_OVERLAP)
    p.set_defaults(func=cmd_import)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--store", default=None)
    p.add_argument("--batch-size", dest="batch_size", type=int, default=None)
    p.add_argument("--goal-min", dest="goal_min", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, FileUnreadable, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SdgError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
