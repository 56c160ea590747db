"""Two-method analysis of SDG target interactions.

An expert-evaluation survey service (7-point scale) and an indicator
time-series correlation pipeline, unified by graph analytics that
classify, rank and intersect target interactions.
"""

from .analytics import (
    Bucket,
    Edge,
    EdgeStyle,
    ExpertEvaluations,
    IndicatorEvaluations,
    Method,
    SynthesisReport,
    TargetVerdict,
    graph_query,
    intra_goal_report,
    style_edge,
    summary_stats,
    synthesize,
    verdicts,
)
from .catalog import (
    Catalog,
    TargetId,
    TargetPair,
    all_pairs,
    compare_targets,
    intra_goal_pairs,
    load_catalog,
    parse_target_id,
)
from .correlation import (
    ClassTally,
    InteractionClass,
    TargetMethodResult,
    aggregate_to_target,
    classify,
    run_indicator_method,
    spearman_rho,
)
from .indicators import (
    AlignedPairSample,
    IndicatorId,
    IndicatorSeries,
    align,
    indicator_to_target,
    load_indicator_file,
    parse_indicator_id,
)

__version__ = "0.1.0"

__all__ = [
    "AlignedPairSample",
    "Bucket",
    "Catalog",
    "ClassTally",
    "Edge",
    "EdgeStyle",
    "ExpertEvaluations",
    "IndicatorEvaluations",
    "IndicatorId",
    "IndicatorSeries",
    "InteractionClass",
    "Method",
    "SynthesisReport",
    "TargetId",
    "TargetMethodResult",
    "TargetPair",
    "TargetVerdict",
    "aggregate_to_target",
    "align",
    "all_pairs",
    "classify",
    "compare_targets",
    "graph_query",
    "indicator_to_target",
    "intra_goal_pairs",
    "intra_goal_report",
    "load_catalog",
    "load_indicator_file",
    "parse_indicator_id",
    "parse_target_id",
    "run_indicator_method",
    "spearman_rho",
    "style_edge",
    "summary_stats",
    "synthesize",
    "verdicts",
]
