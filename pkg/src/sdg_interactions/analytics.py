"""Interaction-graph analytics over evaluation snapshots.

Works on immutable per-method snapshots (expert scores, indicator pair
classes), so everything here is a pure function and safe to serve
concurrently.

Styling rules: positive scores and synergies are blue, negative scores
and trade-offs red, zero scores and nonclassified black, unevaluated
gray. Expert edges additionally carry a shade rank equal to the score
magnitude (1..3, darker shades for stronger interactions); indicator
edges and zero edges have no shade.

A target is "ugly" when it has at least one negative incident
interaction, "beautiful" when it has none and at least one evaluated
incident interaction, and unevaluated otherwise. Zero-score edges mark
a target as evaluated but do not add to its positive count.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping

from .catalog import Catalog, TargetId, TargetPair, pairs_between
from .correlation import InteractionClass, TargetMethodResult
from .errors import UnknownGoal

EXPERT_SCORE_MIN = -3
EXPERT_SCORE_MAX = 3

SCALE_LABELS = {
    -3: "cancelling",
    -2: "counteracting",
    -1: "constraining",
    0: "consistent",
    1: "enabling",
    2: "reinforcing",
    3: "indivisible",
}


class Method(enum.Enum):
    EXPERT = "expert"
    INDICATOR = "indicator"

    def __str__(self) -> str:
        return self.value


class Bucket(enum.Enum):
    BEAUTIFUL = "beautiful"
    UGLY = "ugly"
    UNEVALUATED = "unevaluated"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExpertEvaluations:
    """Snapshot of finalized expert scores keyed by pair."""

    scores: Mapping[TargetPair, int]
    explanations: Mapping[TargetPair, str] = field(default_factory=dict)

    method = Method.EXPERT

    def sign(self, pair: TargetPair):
        score = self.scores.get(pair)
        if score is None:
            return None
        return 0 if score == 0 else (1 if score > 0 else -1)

    def value(self, pair: TargetPair):
        return self.scores.get(pair)


@dataclass(frozen=True)
class IndicatorEvaluations:
    """Snapshot of indicator-method pair classes.

    Once a result set is loaded every pair has a class (absent pairs are
    nonclassified), so no edge is "unevaluated"; an unloaded snapshot
    leaves the whole graph gray.
    """

    results: Mapping[TargetPair, TargetMethodResult]
    loaded: bool = True

    method = Method.INDICATOR

    def interaction(self, pair: TargetPair):
        if not self.loaded:
            return None
        result = self.results.get(pair)
        return result.interaction if result else InteractionClass.NONCLASSIFIED

    def sign(self, pair: TargetPair):
        interaction = self.interaction(pair)
        if interaction is None:
            return None
        if interaction is InteractionClass.SYNERGY:
            return 1
        if interaction is InteractionClass.TRADE_OFF:
            return -1
        return 0

    def value(self, pair: TargetPair):
        interaction = self.interaction(pair)
        return None if interaction is None else interaction.value


@dataclass(frozen=True)
class Edge:
    pair: TargetPair
    method: Method
    value: object = None  # expert score or InteractionClass; None when unevaluated

    @property
    def evaluated(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class EdgeStyle:
    hue: str  # blue | red | black | gray
    shade: int | None = None  # 1..3, expert edges with nonzero score only


def style_edge(edge: Edge) -> EdgeStyle:
    """Hue and shade for one edge, per the coloring rules above."""
    if not edge.evaluated:
        return EdgeStyle("gray")
    if edge.method is Method.EXPERT:
        score = int(edge.value)
        if not EXPERT_SCORE_MIN <= score <= EXPERT_SCORE_MAX:
            raise ValueError(f"expert score out of range: {score}")
        if score > 0:
            return EdgeStyle("blue", score)
        if score < 0:
            return EdgeStyle("red", -score)
        return EdgeStyle("black")
    interaction = edge.value
    if interaction is InteractionClass.SYNERGY:
        return EdgeStyle("blue")
    if interaction is InteractionClass.TRADE_OFF:
        return EdgeStyle("red")
    return EdgeStyle("black")


def _edge_for(evals, pair: TargetPair) -> Edge:
    if evals.method is Method.EXPERT:
        return Edge(pair, Method.EXPERT, evals.value(pair))
    return Edge(pair, Method.INDICATOR, evals.interaction(pair))


def graph_query(catalog: Catalog, evals, goal_a: int, goal_b: int):
    """All edges between two goals (intra-goal when equal), styled.

    Returns (nodes, edge list) where nodes are TargetIds of both goals
    and each edge is (Edge, EdgeStyle). Symmetric in its goal arguments.
    """
    for g in (goal_a, goal_b):
        catalog.goal(g)
    lo, hi = min(goal_a, goal_b), max(goal_a, goal_b)
    nodes = list(catalog.goal_targets(lo))
    if hi != lo:
        nodes.extend(catalog.goal_targets(hi))
    edges = []
    for pair in sorted(pairs_between(catalog, lo, hi), key=lambda p: p.sort_key()):
        edge = _edge_for(evals, pair)
        edges.append((edge, style_edge(edge)))
    return nodes, edges


def intra_goal_report(catalog: Catalog, evals):
    """Per goal: evaluated intra-goal pairs split into negative and
    positive lists (zero / nonclassified pairs excluded from both)."""
    report: dict[int, dict[str, list[TargetPair]]] = {
        g.number: {"negative": [], "positive": []} for g in catalog.goals
    }
    for goal in catalog.goals:
        ids = catalog.goal_targets(goal.number)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                pair = TargetPair(ids[i], ids[j])
                sign = evals.sign(pair)
                if sign == -1:
                    report[goal.number]["negative"].append(pair)
                elif sign == 1:
                    report[goal.number]["positive"].append(pair)
    for split in report.values():
        split["negative"].sort(key=lambda p: p.sort_key())
        split["positive"].sort(key=lambda p: p.sort_key())
    return report


@dataclass(frozen=True)
class TargetVerdict:
    target: TargetId
    negatives: int
    positives: int
    zeros: int
    bucket: Bucket


def verdicts(catalog: Catalog, evals) -> list[TargetVerdict]:
    """One verdict per catalog target, in catalog order."""
    negatives = {t: 0 for t in catalog.target_ids()}
    positives = {t: 0 for t in catalog.target_ids()}
    zeros = {t: 0 for t in catalog.target_ids()}
    ids = catalog.target_ids()
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            pair = TargetPair(ids[i], ids[j])
            sign = evals.sign(pair)
            if sign is None:
                continue
            book = negatives if sign == -1 else (positives if sign == 1 else zeros)
            book[pair.a] += 1
            book[pair.b] += 1
    out = []
    for t in ids:
        n, p, z = negatives[t], positives[t], zeros[t]
        if n >= 1:
            bucket = Bucket.UGLY
        elif p + z >= 1:
            bucket = Bucket.BEAUTIFUL
        else:
            bucket = Bucket.UNEVALUATED
        out.append(TargetVerdict(t, n, p, z, bucket))
    return out


def ugliness_ranking(verdict_list: list[TargetVerdict]) -> list[TargetVerdict]:
    """Ugly targets, most negative interactions first."""
    ugly = [v for v in verdict_list if v.bucket is Bucket.UGLY]
    return sorted(ugly, key=lambda v: (-v.negatives, v.target.sort_key()))


def beauty_ranking(verdict_list: list[TargetVerdict]) -> list[TargetVerdict]:
    """Beautiful targets, most positive interactions first."""
    beautiful = [v for v in verdict_list if v.bucket is Bucket.BEAUTIFUL]
    return sorted(beautiful, key=lambda v: (-v.positives, v.target.sort_key()))


def percentage(numerator: int, denominator: int) -> float:
    """Percentage rounded half-up to two decimals; 0 when undefined."""
    if denominator == 0:
        return 0.0
    pct = Decimal(numerator * 100) / Decimal(denominator)
    return float(pct.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def summary_stats(catalog: Catalog, evals) -> dict:
    """Evaluated counts and per-class shares.

    Expert per-class percentages are shares of the evaluated edges (the
    arithmetic used when reporting e.g. 36/1256 = 2.87%); indicator
    percentages are shares of all pairs.
    """
    total = len(catalog.target_ids()) * (len(catalog.target_ids()) - 1) // 2
    counts = {1: 0, 0: 0, -1: 0}
    evaluated = 0
    ids = catalog.target_ids()
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            sign = evals.sign(TargetPair(ids[i], ids[j]))
            if sign is None:
                continue
            evaluated += 1
            counts[sign] += 1
    if evals.method is Method.EXPERT:
        return {
            "method": "expert",
            "total_pairs": total,
            "evaluated": evaluated,
            "evaluated_pct": percentage(evaluated, total),
            "negative": counts[-1],
            "negative_pct": percentage(counts[-1], evaluated),
            "positive": counts[1],
            "positive_pct": percentage(counts[1], evaluated),
            "zero": counts[0],
            "zero_pct": percentage(counts[0], evaluated),
        }
    classified = counts[1] + counts[-1]
    return {
        "method": "indicator",
        "total_pairs": total,
        "evaluated": classified,
        "evaluated_pct": percentage(classified, total),
        "synergy": counts[1],
        "synergy_pct": percentage(counts[1], total),
        "trade_off": counts[-1],
        "trade_off_pct": percentage(counts[-1], total),
        "nonclassified": counts[0],
        "nonclassified_pct": percentage(counts[0], total),
    }


DEFAULT_MULTI_NEGATIVE_MIN = 2


@dataclass(frozen=True)
class SynthesisReport:
    """Two-method intersection: what to resolve and what to prioritize."""

    negative_common_goals: tuple[int, ...]
    negative_focus_targets: tuple[TargetId, ...]
    negative_common_ugly: tuple[TargetId, ...]
    negative_targets: tuple[TargetId, ...]
    positive_common_pairs: tuple[TargetPair, ...]
    positive_prioritized_targets: tuple[TargetId, ...]
    positive_common_beautiful: tuple[TargetId, ...]
    positive_excluded_pairs: tuple[tuple[TargetPair, TargetId], ...]


def synthesize(
    catalog: Catalog,
    expert: ExpertEvaluations,
    indicator: IndicatorEvaluations,
    multi_negative_min: int = DEFAULT_MULTI_NEGATIVE_MIN,
) -> SynthesisReport:
    """Intersect the two methods' findings.

    Negative answer: goals with negative intra-goal interactions under
    both methods, the targets common to both methods' negative intra-goal
    pair sets, and the common targets with at least ``multi_negative_min``
    negative interactions. Positive answer: intra-goal pairs positive
    under both methods and common beautiful targets that have at least
    one positive interaction; any pair touching a negative-answer target
    is excluded from the prioritization list (its partners would only
    qualify by reinforcing a problematic target).
    """
    reports = {m: intra_goal_report(catalog, e) for m, e in ((Method.EXPERT, expert), (Method.INDICATOR, indicator))}
    verdict_lists = {m: verdicts(catalog, e) for m, e in ((Method.EXPERT, expert), (Method.INDICATOR, indicator))}

    neg_goals = {}
    neg_pair_targets = {}
    pos_pairs = {}
    for m in (Method.EXPERT, Method.INDICATOR):
        neg_goals[m] = {g for g, split in reports[m].items() if split["negative"]}
        neg_pair_targets[m] = {
            t for split in reports[m].values() for p in split["negative"] for t in (p.a, p.b)
        }
        pos_pairs[m] = {p for split in reports[m].values() for p in split["positive"]}

    common_goals = tuple(sorted(neg_goals[Method.EXPERT] & neg_goals[Method.INDICATOR]))
    focus = _sorted_targets(neg_pair_targets[Method.EXPERT] & neg_pair_targets[Method.INDICATOR])

    multi_ugly = {}
    beautiful_positive = {}
    for m, vlist in verdict_lists.items():
        multi_ugly[m] = {v.target for v in vlist if v.negatives >= multi_negative_min}
        beautiful_positive[m] = {
            v.target for v in vlist if v.bucket is Bucket.BEAUTIFUL and v.positives >= 1
        }
    common_ugly = _sorted_targets(multi_ugly[Method.EXPERT] & multi_ugly[Method.INDICATOR])
    negative_targets = _sorted_targets(set(focus) | set(common_ugly))

    common_pairs = sorted(
        pos_pairs[Method.EXPERT] & pos_pairs[Method.INDICATOR], key=lambda p: p.sort_key()
    )
    blocked = set(negative_targets)
    kept_pairs = []
    excluded = []
    for pair in common_pairs:
        blocker = next((t for t in (pair.a, pair.b) if t in blocked), None)
        if blocker is None:
            kept_pairs.append(pair)
        else:
            excluded.append((pair, blocker))
    prioritized = _sorted_targets({t for p in kept_pairs for t in (p.a, p.b)})
    common_beautiful = _sorted_targets(
        beautiful_positive[Method.EXPERT] & beautiful_positive[Method.INDICATOR]
    )

    return SynthesisReport(
        negative_common_goals=common_goals,
        negative_focus_targets=focus,
        negative_common_ugly=common_ugly,
        negative_targets=negative_targets,
        positive_common_pairs=tuple(common_pairs),
        positive_prioritized_targets=prioritized,
        positive_common_beautiful=common_beautiful,
        positive_excluded_pairs=tuple(excluded),
    )


def _sorted_targets(targets) -> tuple[TargetId, ...]:
    return tuple(sorted(targets, key=lambda t: t.sort_key()))
