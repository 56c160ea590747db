"""Deterministic builder for the evaluation fixtures in fixtures/.

The appendix tables of the study report (intra-goal interaction lists,
per-target interaction counts, headline totals) pin down large parts of
both methods' evaluation stores but not the full inter-goal edge sets.
This script realizes complete stores that are exactly consistent with
every published figure:

expert method
  * 12 negative + 315 positive intra-goal pairs, verbatim from the lists
  * 36 negative / 981 positive / 239 zero evaluated pairs overall
  * per-target negative counts exactly as listed (13.1 the ugliest at 4),
    51 ugly targets of which 15 have two or more negatives
  * per-target positive counts for the 109 listed beautiful targets
    (7.1 the most beautiful at 65), 116 beautiful total, 2 targets
    without any evaluated interaction

indicator method
  * 23 trade-off + 21 synergy intra-goal pairs, verbatim from the lists
  * 236 trade-offs / 292 synergies overall
  * per-target trade-off counts exactly as listed (3.4 ugliest at 27,
    10.6 and 16.8 at 26); 59 ugly / 110 beautiful targets; among the
    beautiful only 8.5 and 17.5 carry a synergy

The unconstrained inter-goal edges are wired by a greedy exact-degree
realization (largest residual first), which is deterministic; everything
is re-verified by assertions before writing. Run from the repo root:

    python tools/build_fixtures.py
"""

from __future__ import annotations

import csv
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from sdg_interactions.analytics import (  # noqa: E402
    Bucket,
    ExpertEvaluations,
    IndicatorEvaluations,
    intra_goal_report,
    summary_stats,
    synthesize,
    verdicts,
)
from sdg_interactions.catalog import TargetPair, load_catalog, parse_target_id  # noqa: E402
from sdg_interactions.correlation import (  # noqa: E402
    ClassTally,
    InteractionClass,
    TargetMethodResult,
)

CATALOG = load_catalog()
T = lambda text: parse_target_id(text, CATALOG)  # noqa: E731

# ---------------------------------------------------------------------------
# Published data: intra-goal interaction lists and per-target counts.
# ---------------------------------------------------------------------------

# Expert method, negative intra-goal pairs (12).
LIST1 = {
    "3.6": ["3.1", "3.9"],
    "3.7": ["3.9"],
    "4.7": ["4.B"],
    "5.2": ["5.B"],
    "8.2": ["8.6"],
    "10.5": ["10.C"],
    "12.1": ["12.4"],
    "16.1": ["16.5", "16.6"],
    "16.4": ["16.7"],
    "16.A": ["16.B"],
}

# Expert method, positive intra-goal pairs (315).
LIST2 = {
    "1.2": ["1.1", "1.3", "1.4", "1.5", "1.A", "1.B"],
    "1.A": ["1.1", "1.3", "1.4", "1.5", "1.B"],
    "1.B": ["1.1", "1.3", "1.4", "1.5"],
    "1.1": ["1.4", "1.5"],
    "1.3": ["1.4", "1.5"],
    "2.A": ["2.1", "2.2", "2.3", "2.5", "2.B", "2.C"],
    "2.4": ["2.1", "2.3", "2.5", "2.B", "2.C"],
    "2.3": ["2.5", "2.B", "2.C"],
    "2.2": ["2.5", "2.B"],
    "2.C": ["2.1", "2.5"],
    "3.5": ["3.1", "3.2", "3.3", "3.6", "3.9", "3.A", "3.B", "3.C", "3.D"],
    "3.D": ["3.1", "3.2", "3.3", "3.8", "3.A", "3.B", "3.C"],
    "3.A": ["3.4", "3.8", "3.9", "3.B", "3.C"],
    "3.7": ["3.1", "3.2", "3.8", "3.B"],
    "3.3": ["3.1", "3.8", "3.9"],
    "3.6": ["3.2", "3.4", "3.B"],
    "3.8": ["3.9", "3.C"],
    "3.2": ["3.9"],
    "3.4": ["3.B"],
    "4.2": ["4.1", "4.3", "4.4", "4.6", "4.7", "4.A", "4.B"],
    "4.3": ["4.4", "4.5", "4.6", "4.7", "4.B", "4.C"],
    "4.A": ["4.4", "4.6", "4.7", "4.B", "4.C"],
    "4.C": ["4.4", "4.5", "4.6", "4.B"],
    "4.1": ["4.4", "4.5", "4.B"],
    "4.4": ["4.6"],
    "4.5": ["4.7"],
    "5.A": ["5.1", "5.2", "5.3", "5.4", "5.5", "5.6", "5.B", "5.C"],
    "5.C": ["5.1", "5.2", "5.3", "5.4", "5.5", "5.6", "5.B"],
    "5.4": ["5.1", "5.2", "5.3", "5.5", "5.6"],
    "5.1": ["5.2", "5.3", "5.5"],
    "5.6": ["5.3", "5.5", "5.B"],
    "5.2": ["5.5"],
    "5.3": ["5.B"],
    "6.1": ["6.2", "6.3", "6.4", "6.5", "6.6", "6.A"],
    "6.6": ["6.2", "6.3", "6.4", "6.A", "6.B"],
    "6.4": ["6.2", "6.B"],
    "6.5": ["6.3", "6.B"],
    "7.A": ["7.1", "7.3"],
    "8.5": ["8.1", "8.2", "8.3", "8.4", "8.6", "8.10", "8.A", "8.B"],
    "8.9": ["8.1", "8.2", "8.3", "8.4", "8.6", "8.7", "8.8"],
    "8.A": ["8.1", "8.3", "8.4", "8.6", "8.7", "8.10"],
    "8.1": ["8.4", "8.7", "8.8", "8.10"],
    "8.3": ["8.7", "8.8", "8.10", "8.B"],
    "8.2": ["8.8", "8.B"],
    "8.7": ["8.4", "8.6"],
    "9.1": ["9.2", "9.3", "9.5", "9.C"],
    "9.3": ["9.5", "9.A", "9.C"],
    "9.2": ["9.A", "9.B"],
    "9.4": ["9.5", "9.B"],
    "10.4": ["10.2", "10.3", "10.5", "10.7", "10.B", "10.C"],
    "10.1": ["10.2", "10.5", "10.B"],
    "10.3": ["10.6", "10.A", "10.C"],
    "10.6": ["10.5", "10.B"],
    "10.7": ["10.2", "10.A"],
    "10.A": ["10.C"],
    "11.5": ["11.1", "11.2", "11.3", "11.4", "11.6", "11.A", "11.C"],
    "11.2": ["11.1", "11.6", "11.7", "11.A", "11.B"],
    "11.3": ["11.1", "11.4", "11.7", "11.A"],
    "11.1": ["11.6", "11.A"],
    "11.7": ["11.6", "11.C"],
    "11.4": ["11.A"],
    "11.B": ["11.C"],
    "12.6": ["12.1", "12.2", "12.3", "12.4", "12.8", "12.A"],
    "12.5": ["12.3", "12.4", "12.8", "12.B", "12.C"],
    "12.1": ["12.2", "12.7", "12.A", "12.C"],
    "12.8": ["12.4", "12.A", "12.B", "12.C"],
    "12.3": ["12.7", "12.A", "12.C"],
    "12.2": ["12.A", "12.B"],
    "12.C": ["12.7", "12.B"],
    "13.B": ["13.1", "13.3", "13.A"],
    "13.2": ["13.1", "13.3"],
    "14.1": ["14.2", "14.3", "14.4", "14.5", "14.A", "14.B"],
    "14.5": ["14.3", "14.7", "14.A", "14.B"],
    "14.6": ["14.B"],
    "14.7": ["14.A"],
    "15.6": ["15.1", "15.2"],
    "16.2": ["16.3", "16.5", "16.6", "16.8", "16.10", "16.A"],
    "16.7": ["16.5", "16.6", "16.8", "16.9", "16.10", "16.B"],
    "16.B": ["16.1", "16.3", "16.5", "16.8", "16.10"],
    "16.4": ["16.1", "16.3", "16.9", "16.A"],
    "16.5": ["16.3", "16.8", "16.A"],
    "16.10": ["16.3", "16.6", "16.8"],
    "16.1": ["16.9"],
    "16.6": ["16.8"],
    "17.14": ["17.5", "17.6", "17.7", "17.13", "17.17"],
    "17.2": ["17.1", "17.4"],
    "17.5": ["17.3", "17.10"],
    "17.7": ["17.6", "17.10"],
    "17.12": ["17.11", "17.16"],
    "17.8": ["17.19"],
}

# Expert method: ugly targets with two or more negative interactions (15).
LIST3 = {
    "3.6": 2, "3.7": 2, "3.9": 2, "3.A": 2, "5.A": 2, "5.B": 3, "8.2": 3,
    "10.C": 2, "11.6": 2, "12.4": 3, "13.1": 4, "16.1": 3, "16.2": 2,
    "16.7": 2, "16.A": 2,
}

# Expert method: beautiful targets with two or more positive interactions (109).
LIST4 = {
    "1.1": 26, "1.2": 25, "1.3": 31, "1.4": 22, "1.B": 27,
    "2.1": 9, "2.2": 7, "2.3": 15, "2.4": 12, "2.5": 10, "2.A": 16,
    "2.B": 16, "2.C": 13,
    "3.2": 10, "3.3": 11, "3.4": 11, "3.5": 15, "3.8": 17, "3.B": 18,
    "3.C": 11, "3.D": 17,
    "4.1": 9, "4.2": 13, "4.3": 14, "4.4": 10, "4.5": 20, "4.6": 10,
    "4.A": 11, "4.C": 15,
    "5.5": 31, "5.6": 26, "5.C": 26,
    "6.1": 26, "6.2": 10, "6.4": 11, "6.5": 10, "6.A": 15,
    "7.1": 65, "7.2": 7, "7.3": 4, "7.A": 7, "7.B": 7,
    "8.3": 13, "8.5": 17, "8.7": 10, "8.8": 8, "8.9": 16, "8.10": 14,
    "8.A": 17, "8.B": 7,
    "9.1": 11, "9.2": 7, "9.3": 14, "9.4": 6, "9.5": 13, "9.A": 6,
    "9.B": 8, "9.C": 11,
    "10.2": 10, "10.3": 13, "10.4": 19, "10.7": 7, "10.A": 8, "10.B": 7,
    "11.1": 11, "11.2": 20, "11.5": 18, "11.7": 16, "11.A": 17,
    "11.B": 9, "11.C": 9,
    "12.6": 12, "12.8": 28, "12.A": 15, "12.B": 15, "12.C": 16,
    "13.2": 9, "13.A": 7, "13.B": 8,
    "14.1": 7, "14.2": 2, "14.3": 5, "14.4": 5, "14.6": 5, "14.7": 5,
    "14.A": 6, "14.B": 6,
    "15.2": 2, "15.6": 2, "15.9": 4, "15.B": 3,
    "16.3": 12, "16.9": 11, "16.10": 14,
    "17.1": 4, "17.4": 2, "17.5": 4, "17.6": 5, "17.7": 4, "17.8": 2,
    "17.9": 3, "17.10": 4, "17.12": 8, "17.13": 5, "17.14": 9,
    "17.16": 3, "17.17": 8, "17.18": 6, "17.19": 7,
}

# Indicator method, trade-off intra-goal pairs (23).
LIST5 = {
    "1.1": ["1.A"],
    "3.4": ["3.1", "3.2", "3.6", "3.D"],
    "3.6": ["3.5", "3.7", "3.8", "3.D"],
    "3.2": ["3.5", "3.8"],
    "7.2": ["7.1", "7.3"],
    "9.3": ["9.C"],
    "9.5": ["9.A"],
    "10.6": ["10.4", "10.B"],
    "15.5": ["15.1", "15.4"],
    "17.6": ["17.3", "17.4"],
    "17.4": ["17.8", "17.9"],
}

# Indicator method, synergistic intra-goal pairs (21).
LIST6 = {
    "1.1": ["1.2"],
    "3.1": ["3.7", "3.C"],
    "3.2": ["3.3", "3.7"],
    "3.4": ["3.5"],
    "4.2": ["4.B"],
    "6.2": ["6.6"],
    "7.1": ["7.3"],
    "8.1": ["8.2", "8.5"],
    "8.10": ["8.2", "8.6"],
    "9.5": ["9.4", "9.B"],
    "15.1": ["15.A", "15.B"],
    "15.A": ["15.B"],
    "17.6": ["17.8", "17.9"],
    "17.8": ["17.9"],
}

# Indicator method: all ugly targets with their trade-off counts (59).
LIST7 = {
    "1.1": 9, "1.2": 1, "1.A": 3,
    "2.1": 5, "2.5": 1, "2.A": 2,
    "3.1": 7, "3.2": 9, "3.3": 6, "3.4": 27, "3.5": 15, "3.6": 12,
    "3.7": 5, "3.8": 17, "3.C": 2, "3.D": 4,
    "4.2": 3, "4.B": 5,
    "5.5": 1,
    "6.2": 10, "6.6": 11, "6.A": 6,
    "7.1": 9, "7.2": 24, "7.3": 11,
    "8.1": 6, "8.2": 4, "8.4": 6, "8.6": 5, "8.8": 2, "8.10": 7, "8.A": 3,
    "9.2": 14, "9.3": 8, "9.4": 6, "9.5": 6, "9.A": 5, "9.B": 6, "9.C": 6,
    "10.4": 4, "10.6": 26, "10.B": 7,
    "11.1": 9,
    "12.2": 5,
    "14.5": 6,
    "15.1": 4, "15.2": 4, "15.4": 7, "15.5": 25, "15.A": 3, "15.B": 3,
    "16.8": 26,
    "17.2": 1, "17.3": 2, "17.4": 19, "17.6": 11, "17.8": 10, "17.9": 10,
    "17.19": 1,
}

EXPERT_TOTALS = {"negative": 36, "positive": 981, "zero": 239}
EXPERT_BUCKETS = {"beautiful": 116, "ugly": 51, "unevaluated": 2}
INDICATOR_TOTALS = {"synergy": 292, "trade_off": 236}
INDICATOR_BUCKETS = {"beautiful": 110, "ugly": 59}


def expand(adjacency) -> list[TargetPair]:
    pairs = []
    seen = set()
    for left, partners in adjacency.items():
        for right in partners:
            pair = TargetPair(T(left), T(right))
            assert pair not in seen, f"duplicate listed pair {pair}"
            seen.add(pair)
            pairs.append(pair)
    return pairs


def degrees(pairs) -> dict:
    out = {}
    for p in pairs:
        out[p.a] = out.get(p.a, 0) + 1
        out[p.b] = out.get(p.b, 0) + 1
    return out


def realize_exact(residual, used_pairs, fallback_nodes=None):
    """Greedy exact-degree realization: connect the largest remaining
    residual to the next-largest eligible partners (different goal, pair
    unused). Leftover units spill to ``fallback_nodes`` (degree-free)
    when given; units the greedy cannot place are repaired afterwards by
    deterministic edge splits. Returns the new edges."""
    residual = {t: d for t, d in residual.items() if d > 0}
    edges = []
    stuck = []

    def take(a, b):
        pair = TargetPair(a, b)
        assert pair not in used_pairs, f"pair {pair} already used"
        assert a.goal != b.goal, f"{pair} is not inter-goal"
        used_pairs.add(pair)
        edges.append(pair)

    while residual:
        head = sorted(residual, key=lambda t: (-residual[t], t.sort_key()))[0]
        need = residual.pop(head)
        partners = [
            t
            for t in sorted(residual, key=lambda t: (-residual[t], t.sort_key()))
            if t.goal != head.goal and TargetPair(head, t) not in used_pairs
        ]
        for partner in partners[:need]:
            take(head, partner)
            residual[partner] -= 1
            if residual[partner] == 0:
                del residual[partner]
            need -= 1
        if need > 0 and fallback_nodes is not None:
            for candidate in fallback_nodes:
                if need == 0:
                    break
                if candidate.goal == head.goal or TargetPair(head, candidate) in used_pairs:
                    continue
                take(head, candidate)
                need -= 1
        stuck.extend([head] * need)

    _repair(stuck, edges, used_pairs)
    return edges


def _repair(units, edges, used_pairs):
    """Place leftover degree units by splitting existing edges.

    Two pending units x, y (possibly the same node twice) replace an edge
    (u, v) with (x, u) and (y, v): u and v keep their degrees, x and y
    each gain one.
    """
    units = sorted(units, key=lambda t: t.sort_key())
    while units:
        x = units.pop(0)
        assert units, f"odd leftover degree at {x}"
        y = units.pop(0)
        direct = x != y and x.goal != y.goal and TargetPair(x, y) not in used_pairs
        if direct:
            used_pairs.add(TargetPair(x, y))
            edges.append(TargetPair(x, y))
            continue
        done = False
        for idx, pair in enumerate(edges):
            for u, v in ((pair.a, pair.b), (pair.b, pair.a)):
                if u in (x, y) or v in (x, y):
                    continue
                if x.goal == u.goal or TargetPair(x, u) in used_pairs:
                    continue
                if y.goal == v.goal or TargetPair(y, v) in used_pairs:
                    continue
                del edges[idx]
                used_pairs.discard(pair)
                for new_pair in (TargetPair(x, u), TargetPair(y, v)):
                    used_pairs.add(new_pair)
                    edges.append(new_pair)
                done = True
                break
            if done:
                break
        assert done, f"no splittable edge for units {x}, {y}"


def canonical_pad(nodes, used_pairs, count, inter_goal_only=True):
    """First ``count`` unused (inter-goal) pairs over ``nodes`` in
    canonical order."""
    edges = []
    ordered = sorted(set(nodes), key=lambda t: t.sort_key())
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            if len(edges) == count:
                return edges
            a, b = ordered[i], ordered[j]
            if inter_goal_only and a.goal == b.goal:
                continue
            pair = TargetPair(a, b)
            if pair in used_pairs:
                continue
            used_pairs.add(pair)
            edges.append(pair)
    assert len(edges) == count, f"ran out of pairs: {len(edges)}/{count}"
    return edges


def build_expert():
    all_targets = list(CATALOG.target_ids())
    neg_intra = expand(LIST1)
    pos_intra = expand(LIST2)
    assert len(neg_intra) == 12 and len(pos_intra) == 315
    assert not set(neg_intra) & set(pos_intra)

    multi = {T(t): c for t, c in LIST3.items()}
    beautiful_counts = {T(t): c for t, c in LIST4.items()}
    neg_intra_deg = degrees(neg_intra)
    pos_intra_deg = degrees(pos_intra)

    # Targets listed with a single negative must be exactly the non-multi
    # endpoints of the listed negative pairs.
    listed_singles = sorted(
        (t for t in neg_intra_deg if t not in multi), key=lambda t: t.sort_key()
    )
    for t in listed_singles:
        assert neg_intra_deg[t] == 1, f"{t} has {neg_intra_deg[t]} listed negatives"
        assert t not in beautiful_counts, f"{t} is negative but listed beautiful"
    for t, count in multi.items():
        assert neg_intra_deg.get(t, 0) <= count
        assert t not in beautiful_counts

    # Remaining targets split into: extra single-negative uglies, modest
    # beautifuls (at most one positive) and the two unevaluated targets.
    unlisted = [
        t
        for t in all_targets
        if t not in beautiful_counts and t not in multi and t not in set(listed_singles)
    ]
    assert len(unlisted) == 34, len(unlisted)
    forced_single = [t for t in unlisted if pos_intra_deg.get(t, 0) >= 2]
    flexible = [t for t in unlisted if t not in set(forced_single)]
    singles_needed = (
        EXPERT_BUCKETS["ugly"] - len(multi) - len(listed_singles) - len(forced_single)
    )
    assert singles_needed >= 0
    flexible_with_pos = [t for t in flexible if pos_intra_deg.get(t, 0) == 1]
    flexible_bare = [t for t in flexible if pos_intra_deg.get(t, 0) == 0]
    extra_singles = (flexible_with_pos + flexible_bare)[:singles_needed]
    leftover = [t for t in flexible if t not in set(extra_singles)]
    assert all(pos_intra_deg.get(t, 0) == 0 for t in leftover)
    unevaluated = sorted(leftover, key=lambda t: t.sort_key())[-EXPERT_BUCKETS["unevaluated"]:]
    modest = [t for t in leftover if t not in set(unevaluated)]
    singles = sorted(
        set(listed_singles) | set(forced_single) | set(extra_singles),
        key=lambda t: t.sort_key(),
    )
    assert len(singles) == EXPERT_BUCKETS["ugly"] - len(multi) == 36

    used = set(neg_intra) | set(pos_intra)

    # Inter-goal negative edges: finish the multi targets' counts against
    # fresh single-negative targets, then pair up the remaining singles.
    neg_residual = {t: multi[t] - neg_intra_deg.get(t, 0) for t in multi}
    open_singles = [t for t in singles if t not in neg_intra_deg]
    neg_inter = []
    cursor = list(open_singles)
    for head in sorted(neg_residual, key=lambda t: t.sort_key()):
        for _ in range(neg_residual[head]):
            partner = next(t for t in cursor if t.goal != head.goal)
            cursor.remove(partner)
            pair = TargetPair(head, partner)
            assert pair not in used
            used.add(pair)
            neg_inter.append(pair)
    while cursor:
        a = cursor.pop(0)
        partner = next(t for t in cursor if t.goal != a.goal)
        cursor.remove(partner)
        pair = TargetPair(a, partner)
        assert pair not in used
        used.add(pair)
        neg_inter.append(pair)
    negatives = neg_intra + neg_inter
    assert len(negatives) == EXPERT_TOTALS["negative"]
    neg_deg = degrees(negatives)
    for t, count in multi.items():
        assert neg_deg[t] == count, (t, neg_deg[t], count)
    for t in singles:
        assert neg_deg[t] == 1
    assert sum(neg_deg.values()) == 2 * EXPERT_TOTALS["negative"]

    # Inter-goal positive edges: exact residual for every listed beautiful
    # target, spillover and padding onto ugly targets (their positive
    # counts are unreported, hence free).
    pos_residual = {}
    for t, count in beautiful_counts.items():
        residual = count - pos_intra_deg.get(t, 0)
        assert residual >= 0, f"{t}: listed {count} < intra {pos_intra_deg.get(t, 0)}"
        pos_residual[t] = residual
    ugly_nodes = sorted(set(multi) | set(singles), key=lambda t: t.sort_key())
    pos_inter = realize_exact(pos_residual, used, fallback_nodes=ugly_nodes)
    pad = EXPERT_TOTALS["positive"] - len(pos_intra) - len(pos_inter)
    assert pad >= 0, f"positive realization overshot by {-pad} edges"
    pos_inter += canonical_pad(ugly_nodes, used, pad)
    positives = pos_intra + pos_inter
    assert len(positives) == EXPERT_TOTALS["positive"]
    pos_deg = degrees(positives)
    for t, count in beautiful_counts.items():
        assert pos_deg[t] == count, (t, pos_deg.get(t), count)

    # Zero edges: make each modest beautiful evaluated, then pad anywhere
    # except the two unevaluated targets.
    zeros = []
    for i, t in enumerate(modest):
        partner = next(
            u for u in ugly_nodes[i:] + ugly_nodes[:i]
            if u.goal != t.goal and TargetPair(t, u) not in used
        )
        pair = TargetPair(t, partner)
        used.add(pair)
        zeros.append(pair)
    evaluatable = [t for t in all_targets if t not in set(unevaluated) and t not in set(modest)]
    zeros += canonical_pad(evaluatable, used, EXPERT_TOTALS["zero"] - len(zeros))
    assert len(zeros) == EXPERT_TOTALS["zero"]

    for pair in zeros + positives + negatives:
        assert not set((pair.a, pair.b)) & set(unevaluated)

    # Deterministic scores and explanations.
    rows = []
    for i, pair in enumerate(negatives):
        score = -((i % 3) + 1)
        rows.append(
            (pair, score, f"Competing implementation priorities between {pair.a} and {pair.b}.")
        )
    for i, pair in enumerate(positives):
        rows.append((pair, (i % 3) + 1, ""))
    for pair in zeros:
        rows.append((pair, 0, ""))
    rows.sort(key=lambda r: r[0].sort_key())

    verify_expert(rows, multi, singles, unevaluated)
    return rows


def verify_expert(rows, multi, singles, unevaluated):
    evals = ExpertEvaluations(
        scores={pair: score for pair, score, _ in rows},
        explanations={pair: text for pair, _, text in rows if text},
    )
    stats = summary_stats(CATALOG, evals)
    assert stats["evaluated"] == 1256 and stats["evaluated_pct"] == 8.85
    assert stats["negative"] == 36 and stats["negative_pct"] == 2.87
    assert stats["positive"] == 981 and stats["positive_pct"] == 78.11
    assert stats["zero"] == 239 and stats["zero_pct"] == 19.03

    report = intra_goal_report(CATALOG, evals)
    neg_counts = {g: len(split["negative"]) for g, split in report.items()}
    assert neg_counts[16] == 4 and neg_counts[3] == 3
    assert sum(neg_counts.values()) == 12
    pos_counts = {g: len(split["positive"]) for g, split in report.items()}
    assert sum(pos_counts.values()) == 315
    assert pos_counts[3] == 35 and pos_counts[8] == 33 and pos_counts[16] == 29

    verdict_list = verdicts(CATALOG, evals)
    buckets = {b: sum(1 for v in verdict_list if v.bucket is b) for b in Bucket}
    assert buckets[Bucket.BEAUTIFUL] == 116
    assert buckets[Bucket.UGLY] == 51
    assert buckets[Bucket.UNEVALUATED] == 2
    by_target = {v.target: v for v in verdict_list}
    for t, count in multi.items():
        assert by_target[t].negatives == count
    assert max(v.negatives for v in verdict_list) == 4
    assert by_target[T("13.1")].negatives == 4
    for t, count in LIST4.items():
        assert by_target[T(t)].positives == count
    assert by_target[T("7.1")].positives == 65
    multi_neg = sum(1 for v in verdict_list if v.negatives >= 2)
    assert multi_neg == 15
    for t in unevaluated:
        assert by_target[t].bucket is Bucket.UNEVALUATED


def build_indicator():
    trade_intra = expand(LIST5)
    syn_intra = expand(LIST6)
    assert len(trade_intra) == 23 and len(syn_intra) == 21
    assert not set(trade_intra) & set(syn_intra)

    ugly = {T(t): c for t, c in LIST7.items()}
    assert len(ugly) == 59
    assert sum(ugly.values()) == 2 * INDICATOR_TOTALS["trade_off"]
    trade_intra_deg = degrees(trade_intra)
    for t, d in trade_intra_deg.items():
        assert t in ugly and d <= ugly[t]

    used = set(trade_intra) | set(syn_intra)
    trade_residual = {t: ugly[t] - trade_intra_deg.get(t, 0) for t in ugly}
    trade_inter = realize_exact(trade_residual, used)
    trades = trade_intra + trade_inter
    assert len(trades) == INDICATOR_TOTALS["trade_off"]
    trade_deg = degrees(trades)
    for t, count in ugly.items():
        assert trade_deg[t] == count, (t, trade_deg.get(t), count)

    # Synergies: the listed intra-goal ones, one inter-goal synergy tying
    # the two beautiful synergistic targets together (8.5 carries a listed
    # one already, 17.5 needs one), and canonical padding over ugly
    # targets so no other beautiful target picks up a synergy.
    bridge = TargetPair(T("8.5"), T("17.5"))
    assert bridge not in used
    used.add(bridge)
    ugly_nodes = sorted(ugly, key=lambda t: t.sort_key())
    pad = INDICATOR_TOTALS["synergy"] - len(syn_intra) - 1
    synergies = syn_intra + [bridge] + canonical_pad(ugly_nodes, used, pad)
    assert len(synergies) == INDICATOR_TOTALS["synergy"]

    results = {}
    for pair in trades:
        results[pair] = TargetMethodResult(
            pair, InteractionClass.TRADE_OFF, ClassTally(0, 1, 0)
        )
    for pair in synergies:
        assert pair not in results
        results[pair] = TargetMethodResult(pair, InteractionClass.SYNERGY, ClassTally(1, 0, 0))

    verify_indicator(results, ugly)
    return results


def verify_indicator(results, ugly):
    evals = IndicatorEvaluations(results=results, loaded=True)
    stats = summary_stats(CATALOG, evals)
    assert stats["synergy"] == 292 and stats["synergy_pct"] == 2.06
    assert stats["trade_off"] == 236 and stats["trade_off_pct"] == 1.66

    report = intra_goal_report(CATALOG, evals)
    neg_counts = {g: len(split["negative"]) for g, split in report.items()}
    assert neg_counts[3] == 10 and neg_counts[17] == 4
    assert sum(neg_counts.values()) == 23
    pos_counts = {g: len(split["positive"]) for g, split in report.items()}
    assert sum(pos_counts.values()) == 21
    assert pos_counts[3] == 5 and pos_counts[8] == 4

    verdict_list = verdicts(CATALOG, evals)
    buckets = {b: sum(1 for v in verdict_list if v.bucket is b) for b in Bucket}
    assert buckets[Bucket.BEAUTIFUL] == 110 and buckets[Bucket.UGLY] == 59
    by_target = {v.target: v for v in verdict_list}
    for t, count in ugly.items():
        assert by_target[t].negatives == count
    assert by_target[T("3.4")].negatives == 27
    assert by_target[T("10.6")].negatives == 26
    assert by_target[T("16.8")].negatives == 26
    assert sum(1 for v in verdict_list if v.negatives >= 2) == 54
    beautiful_with_synergy = {
        v.target
        for v in verdict_list
        if v.bucket is Bucket.BEAUTIFUL and v.positives >= 1
    }
    assert beautiful_with_synergy == {T("8.5"), T("17.5")}, beautiful_with_synergy


def verify_synthesis(expert_rows, indicator_results):
    expert = ExpertEvaluations(
        scores={pair: score for pair, score, _ in expert_rows},
        explanations={pair: text for pair, _, text in expert_rows if text},
    )
    indicator = IndicatorEvaluations(results=indicator_results, loaded=True)
    report = synthesize(CATALOG, expert, indicator)
    assert set(report.negative_common_goals) == {3, 10}
    assert [str(t) for t in report.negative_focus_targets] == ["3.1", "3.6", "3.7"]
    assert [str(t) for t in report.negative_common_ugly] == ["3.6", "3.7", "8.2"]
    expected_pairs = {
        ("1.1", "1.2"), ("3.1", "3.7"), ("3.2", "3.7"), ("4.2", "4.B"),
        ("6.2", "6.6"), ("8.1", "8.5"), ("9.4", "9.5"),
    }
    got_pairs = {(str(p.a), str(p.b)) for p in report.positive_common_pairs}
    assert got_pairs == expected_pairs, got_pairs
    assert [str(t) for t in report.positive_common_beautiful] == ["8.5", "17.5"]
    expected_priority = ["1.1", "1.2", "4.2", "4.B", "6.2", "6.6", "8.1", "8.5", "9.4", "9.5"]
    assert [str(t) for t in report.positive_prioritized_targets] == expected_priority
    excluded = {(str(p.a), str(p.b)) for p, _ in report.positive_excluded_pairs}
    assert excluded == {("3.1", "3.7"), ("3.2", "3.7")}


def build_sample_timeseries():
    """Four indicators on two targets, all monotone, every cross-target
    indicator pair a perfect rank correlation: exactly one synergy pair."""
    rows = []
    years = list(range(2000, 2017))
    shapes = {
        "3.1.1": lambda i: 100.0 - 2.5 * i,
        "3.1.2": lambda i: 50.0 - i * i * 0.1,
        "3.2.1": lambda i: 10.0 - 0.5 * i,
        "3.2.2": lambda i: 80.0 - 3.0 * i,
    }
    for code, shape in shapes.items():
        for i, year in enumerate(years):
            rows.append((code, year, round(shape(i), 3)))
    # All four series decrease, so every cross pair has rho = 1.
    for a in ("3.1.1", "3.1.2"):
        for b in ("3.2.1", "3.2.2"):
            va = [shape for c, shape in shapes.items() if c == a]
            vb = [shape for c, shape in shapes.items() if c == b]
            xs = [va[0](i) for i in range(len(years))]
            ys = [vb[0](i) for i in range(len(years))]
            assert all(x1 > x2 for x1, x2 in zip(xs, xs[1:]))
            assert all(y1 > y2 for y1, y2 in zip(ys, ys[1:]))
    return rows


def write_fixtures(out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    appendix = out_dir / "appendix"
    appendix.mkdir(exist_ok=True)

    def write_pairs(name, adjacency):
        pairs = sorted(expand(adjacency), key=lambda p: p.sort_key())
        with (appendix / name).open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["target_a", "target_b"])
            for p in pairs:
                w.writerow([str(p.a), str(p.b)])

    def write_counts(name, counts, column):
        with (appendix / name).open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["target", column])
            for t in sorted((T(k) for k in counts), key=lambda t: t.sort_key()):
                w.writerow([str(t), counts[str(t)]])

    write_pairs("list1_expert_negative_intra.csv", LIST1)
    write_pairs("list2_expert_positive_intra.csv", LIST2)
    write_counts("list3_expert_multi_negative.csv", LIST3, "negatives")
    write_counts("list4_expert_multi_positive.csv", LIST4, "positives")
    write_pairs("list5_indicator_tradeoff_intra.csv", LIST5)
    write_pairs("list6_indicator_synergy_intra.csv", LIST6)
    write_counts("list7_indicator_ugly.csv", LIST7, "negatives")

    expert_rows = build_expert()
    with (out_dir / "expert_answers.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["target_a", "target_b", "score", "explanation"])
        for pair, score, explanation in expert_rows:
            w.writerow([str(pair.a), str(pair.b), score, explanation])

    indicator_results = build_indicator()
    verify_synthesis(expert_rows, indicator_results)
    with (out_dir / "indicator_classes.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["target_a", "target_b", "interaction", "synergies", "trade_offs", "nonclassified"])
        for pair in sorted(indicator_results, key=lambda p: p.sort_key()):
            r = indicator_results[pair]
            w.writerow(
                [
                    str(pair.a), str(pair.b), r.interaction.value,
                    r.tally.synergy, r.tally.trade_off, r.tally.nonclassified,
                ]
            )

    sample = build_sample_timeseries()
    with (out_dir / "indicators_sample.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["indicator_code", "year", "value"])
        for code, year, value in sample:
            w.writerow([code, year, value])

    print(f"expert answers: {len(expert_rows)}")
    print(f"indicator classes: {len(indicator_results)}")
    print(f"sample observations: {len(sample)}")
    print(f"fixtures written to {out_dir}")


if __name__ == "__main__":
    write_fixtures(REPO / "fixtures")
