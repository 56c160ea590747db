"""JSON document builders shared by the HTTP service and the CLI.

Both surfaces must emit byte-identical documents for the same store, so
every results page goes through these builders and through ``to_json``.
Field names and value domains here are the wire contract:

* graph document: ``{"nodes": [{"id", "label", "color"}],
  "edges": [{"a", "b", "hue", "shade", "value", "status"}]}`` where hue
  is one of blue/red/black/gray, shade is 1..3 or null, value is an
  integer score (expert), a class string (indicator) or null, and status
  is "evaluated" or "unevaluated".
* verdicts document: per-target buckets with display colors
  (beautiful=blue, ugly=red, unevaluated=black) plus ugliness/beauty
  rankings.
"""

from __future__ import annotations

import json

from . import analytics
from .analytics import Bucket, Method
from .catalog import Catalog, TargetPair

BUCKET_COLORS = {Bucket.BEAUTIFUL: "blue", Bucket.UGLY: "red", Bucket.UNEVALUATED: "black"}


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _pair_doc(pair: TargetPair) -> dict:
    return {"a": str(pair.a), "b": str(pair.b)}


def graph_document(catalog: Catalog, evals, goal_a: int, goal_b: int) -> dict:
    nodes, edges = analytics.graph_query(catalog, evals, goal_a, goal_b)
    node_docs = []
    for tid in nodes:
        goal = catalog.goal(tid.goal)
        node_docs.append({"id": str(tid), "label": str(tid), "color": goal.color})
    edge_docs = []
    for edge, style in edges:
        if edge.method is Method.EXPERT:
            value = edge.value
        else:
            value = edge.value.value if edge.evaluated else None
        edge_docs.append(
            {
                "a": str(edge.pair.a),
                "b": str(edge.pair.b),
                "hue": style.hue,
                "shade": style.shade,
                "value": value,
                "status": "evaluated" if edge.evaluated else "unevaluated",
            }
        )
    return {
        "method": evals.method.value,
        "goal_a": min(goal_a, goal_b),
        "goal_b": max(goal_a, goal_b),
        "nodes": node_docs,
        "edges": edge_docs,
    }


def stats_document(catalog: Catalog, evals) -> dict:
    return analytics.summary_stats(catalog, evals)


def intra_goal_document(catalog: Catalog, evals) -> dict:
    report = analytics.intra_goal_report(catalog, evals)
    goals = {}
    for goal_number in sorted(report):
        split = report[goal_number]
        goals[str(goal_number)] = {
            "negative": [_pair_doc(p) for p in split["negative"]],
            "negative_count": len(split["negative"]),
            "positive": [_pair_doc(p) for p in split["positive"]],
            "positive_count": len(split["positive"]),
        }
    return {
        "method": evals.method.value,
        "goals": goals,
        "negative_total": sum(len(s["negative"]) for s in report.values()),
        "positive_total": sum(len(s["positive"]) for s in report.values()),
    }


def verdicts_document(catalog: Catalog, evals) -> dict:
    verdict_list = analytics.verdicts(catalog, evals)
    entries = []
    counts = {bucket: 0 for bucket in Bucket}
    for v in verdict_list:
        counts[v.bucket] += 1
        entries.append(
            {
                "target": str(v.target),
                "description": catalog.target(v.target).description,
                "bucket": v.bucket.value,
                "color": BUCKET_COLORS[v.bucket],
                "negatives": v.negatives,
                "positives": v.positives,
                "zeros": v.zeros,
            }
        )
    return {
        "method": evals.method.value,
        "counts": {
            "beautiful": counts[Bucket.BEAUTIFUL],
            "ugly": counts[Bucket.UGLY],
            "unevaluated": counts[Bucket.UNEVALUATED],
        },
        "targets": entries,
        "ugliest": [
            {"target": str(v.target), "negatives": v.negatives}
            for v in analytics.ugliness_ranking(verdict_list)
        ],
        "most_beautiful": [
            {"target": str(v.target), "positives": v.positives}
            for v in analytics.beauty_ranking(verdict_list)
        ],
    }


def pairs_document(catalog: Catalog, evals, kind: str) -> dict:
    """Results page: all evaluated pairs of one sign ("positive"/"negative")."""
    want = 1 if kind == "positive" else -1
    ids = catalog.target_ids()
    rows = []
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            pair = TargetPair(ids[i], ids[j])
            if evals.sign(pair) != want:
                continue
            row = {"a": str(pair.a), "b": str(pair.b), "value": evals.value(pair)}
            if evals.method is Method.EXPERT:
                explanation = evals.explanations.get(pair, "")
                if explanation:
                    row["explanation"] = explanation
            rows.append(row)
    return {"method": evals.method.value, "kind": kind, "count": len(rows), "pairs": rows}


def synthesis_document(report: analytics.SynthesisReport) -> dict:
    return {
        "negative": {
            "common_goals": list(report.negative_common_goals),
            "focus_targets": [str(t) for t in report.negative_focus_targets],
            "common_ugly_targets": [str(t) for t in report.negative_common_ugly],
            "targets": [str(t) for t in report.negative_targets],
        },
        "positive": {
            "common_pairs": [_pair_doc(p) for p in report.positive_common_pairs],
            "prioritized_targets": [str(t) for t in report.positive_prioritized_targets],
            "common_beautiful_targets": [str(t) for t in report.positive_common_beautiful],
            "excluded_pairs": [
                {
                    "a": str(pair.a),
                    "b": str(pair.b),
                    "blocked_by": str(blocker),
                    "reason": "pair reinforces a target already in the negative answer",
                }
                for pair, blocker in report.positive_excluded_pairs
            ],
        },
    }


def stats_text(doc: dict) -> str:
    lines = [f"method: {doc['method']}"]
    for key, value in doc.items():
        if key == "method":
            continue
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def intra_goal_text(doc: dict) -> str:
    lines = [f"method: {doc['method']}"]
    for goal, split in doc["goals"].items():
        if not split["negative"] and not split["positive"]:
            continue
        lines.append(f"SDG {goal}: {split['negative_count']} negative, {split['positive_count']} positive")
        for p in split["negative"]:
            lines.append(f"  - {p['a']} x {p['b']}")
        for p in split["positive"]:
            lines.append(f"  + {p['a']} x {p['b']}")
    return "\n".join(lines) + "\n"


def verdicts_text(doc: dict) -> str:
    counts = doc["counts"]
    lines = [
        f"method: {doc['method']}",
        f"beautiful: {counts['beautiful']}  ugly: {counts['ugly']}  unevaluated: {counts['unevaluated']}",
        "ugliest:",
    ]
    for entry in doc["ugliest"][:10]:
        lines.append(f"  {entry['target']} ({entry['negatives']})")
    lines.append("most beautiful:")
    for entry in doc["most_beautiful"][:10]:
        lines.append(f"  {entry['target']} ({entry['positives']})")
    return "\n".join(lines) + "\n"


def synthesis_text(doc: dict) -> str:
    neg = doc["negative"]
    pos = doc["positive"]
    lines = [
        "negative answer (resolve):",
        f"  common goals: {', '.join(str(g) for g in neg['common_goals']) or '-'}",
        f"  focus targets: {', '.join(neg['focus_targets']) or '-'}",
        f"  common ugly targets: {', '.join(neg['common_ugly_targets']) or '-'}",
        "positive answer (prioritize):",
        f"  common pairs: {', '.join(p['a'] + '-' + p['b'] for p in pos['common_pairs']) or '-'}",
        f"  prioritized targets: {', '.join(pos['prioritized_targets']) or '-'}",
        f"  common beautiful targets: {', '.join(pos['common_beautiful_targets']) or '-'}",
    ]
    return "\n".join(lines) + "\n"
