import pytest
from hypothesis import given, settings, strategies as st

from sdg_interactions import (
    Bucket,
    Edge,
    EdgeStyle,
    ExpertEvaluations,
    IndicatorEvaluations,
    InteractionClass,
    Method,
    TargetPair,
    graph_query,
    intra_goal_report,
    load_catalog,
    parse_target_id,
    style_edge,
    summary_stats,
    synthesize,
    verdicts,
)
from sdg_interactions.analytics import beauty_ranking, percentage, ugliness_ranking
from sdg_interactions.correlation import ClassTally, TargetMethodResult
from sdg_interactions.errors import UnknownGoal


def _pair(a, b):
    catalog = load_catalog()
    return TargetPair(parse_target_id(a, catalog), parse_target_id(b, catalog))


def _expert(scores, explanations=None):
    return ExpertEvaluations(scores=scores, explanations=explanations or {})


def _indicator(classes, loaded=True):
    results = {
        pair: TargetMethodResult(
            pair,
            cls,
            ClassTally(
                synergy=1 if cls is InteractionClass.SYNERGY else 0,
                trade_off=1 if cls is InteractionClass.TRADE_OFF else 0,
            ),
        )
        for pair, cls in classes.items()
    }
    return IndicatorEvaluations(results=results, loaded=loaded)


# -- styling ---------------------------------------------------------------


@pytest.mark.parametrize(
    "score,hue,shade",
    [(3, "blue", 3), (2, "blue", 2), (1, "blue", 1), (0, "black", None),
     (-1, "red", 1), (-2, "red", 2), (-3, "red", 3)],
)
def test_expert_edge_styles(score, hue, shade):
    edge = Edge(_pair("3.8", "6.5"), Method.EXPERT, score)
    assert style_edge(edge) == EdgeStyle(hue, shade)


def test_unevaluated_edge_is_gray():
    assert style_edge(Edge(_pair("3.8", "6.5"), Method.EXPERT, None)) == EdgeStyle("gray")
    assert style_edge(Edge(_pair("3.8", "6.5"), Method.INDICATOR, None)) == EdgeStyle("gray")


@pytest.mark.parametrize(
    "cls,hue",
    [
        (InteractionClass.SYNERGY, "blue"),
        (InteractionClass.TRADE_OFF, "red"),
        (InteractionClass.NONCLASSIFIED, "black"),
    ],
)
def test_indicator_edges_have_flat_hues(cls, hue):
    edge = Edge(_pair("3.8", "6.5"), Method.INDICATOR, cls)
    assert style_edge(edge) == EdgeStyle(hue, None)


def test_shade_monotone_in_magnitude():
    pair = _pair("1.1", "2.1")
    shades = {
        s: style_edge(Edge(pair, Method.EXPERT, s)).shade or 0 for s in range(-3, 4)
    }
    for s1 in range(-3, 4):
        for s2 in range(-3, 4):
            if abs(s1) < abs(s2):
                assert shades[s1] < shades[s2]


def test_expert_score_out_of_range_rejected():
    with pytest.raises(ValueError):
        style_edge(Edge(_pair("1.1", "2.1"), Method.EXPERT, 4))


# -- graph query -------------------------------------------------------------


def test_graph_query_bipartite_count(catalog):
    nodes, edges = graph_query(catalog, _expert({}), 1, 2)
    k1 = len(catalog.goal_targets(1))
    k2 = len(catalog.goal_targets(2))
    assert len(nodes) == k1 + k2
    assert len(edges) == k1 * k2
    assert all(style.hue == "gray" for _, style in edges)


def test_graph_query_intra_goal_count(catalog):
    k3 = len(catalog.goal_targets(3))
    nodes, edges = graph_query(catalog, _expert({}), 3, 3)
    assert len(nodes) == k3
    assert len(edges) == k3 * (k3 - 1) // 2 == 78


def test_graph_query_symmetric(catalog):
    evals = _expert({_pair("3.8", "6.5"): 2})
    a = graph_query(catalog, evals, 3, 6)
    b = graph_query(catalog, evals, 6, 3)
    assert a == b
    styled = {str(e.pair): s for e, s in a[1]}
    assert styled["3.8-6.5"] == EdgeStyle("blue", 2)


def test_graph_query_unknown_goal(catalog):
    with pytest.raises(UnknownGoal):
        graph_query(catalog, _expert({}), 3, 18)


def test_indicator_graph_all_evaluated_once_loaded(catalog):
    evals = _indicator({_pair("3.1", "3.2"): InteractionClass.SYNERGY})
    _, edges = graph_query(catalog, evals, 3, 3)
    hues = {str(e.pair): s.hue for e, s in edges}
    assert hues["3.1-3.2"] == "blue"
    assert all(h in ("blue", "black") for h in hues.values())
    # unloaded store: everything gray
    _, edges = graph_query(catalog, _indicator({}, loaded=False), 3, 3)
    assert all(s.hue == "gray" for _, s in edges)


# -- reports -----------------------------------------------------------------


def test_intra_goal_report_small(catalog):
    evals = _expert(
        {
            _pair("3.1", "3.2"): 2,
            _pair("3.1", "3.3"): -1,
            _pair("3.2", "3.3"): 0,
            _pair("3.1", "6.2"): 3,  # inter-goal, must not appear
        }
    )
    report = intra_goal_report(catalog, evals)
    assert report[3]["positive"] == [_pair("3.1", "3.2")]
    assert report[3]["negative"] == [_pair("3.1", "3.3")]
    assert all(not split["negative"] and not split["positive"]
               for g, split in report.items() if g != 3)


def test_verdict_counts_and_buckets(catalog):
    evals = _expert(
        {
            _pair("3.1", "3.2"): -2,
            _pair("3.1", "6.2"): 1,
            _pair("3.2", "6.2"): 0,
        }
    )
    by_target = {str(v.target): v for v in verdicts(catalog, evals)}
    assert by_target["3.1"].bucket is Bucket.UGLY
    assert by_target["3.1"].negatives == 1 and by_target["3.1"].positives == 1
    assert by_target["3.2"].bucket is Bucket.UGLY
    assert by_target["6.2"].bucket is Bucket.BEAUTIFUL
    assert by_target["6.2"].positives == 1 and by_target["6.2"].zeros == 1
    assert by_target["1.1"].bucket is Bucket.UNEVALUATED


def test_verdict_partition(catalog, expert_fixture):
    verdict_list = verdicts(catalog, expert_fixture)
    assert len(verdict_list) == 169
    buckets = {b: sum(1 for v in verdict_list if v.bucket is b) for b in Bucket}
    assert sum(buckets.values()) == 169


def test_degree_sum_equals_twice_edges(catalog, expert_fixture):
    verdict_list = verdicts(catalog, expert_fixture)
    negative_edges = sum(1 for s in expert_fixture.scores.values() if s < 0)
    positive_edges = sum(1 for s in expert_fixture.scores.values() if s > 0)
    zero_edges = sum(1 for s in expert_fixture.scores.values() if s == 0)
    assert sum(v.negatives for v in verdict_list) == 2 * negative_edges
    assert sum(v.positives for v in verdict_list) == 2 * positive_edges
    assert sum(v.zeros for v in verdict_list) == 2 * zero_edges
    for v in verdict_list:
        incident = v.negatives + v.positives + v.zeros
        assert (incident == 0) == (v.bucket is Bucket.UNEVALUATED)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_verdict_partition_random_stores(data):
    catalog = load_catalog()
    ids = catalog.target_ids()
    n = data.draw(st.integers(min_value=0, max_value=40))
    scores = {}
    for _ in range(n):
        i = data.draw(st.integers(0, len(ids) - 2))
        j = data.draw(st.integers(i + 1, len(ids) - 1))
        scores[TargetPair(ids[i], ids[j])] = data.draw(st.integers(-3, 3))
    verdict_list = verdicts(catalog, ExpertEvaluations(scores=scores))
    buckets = {b: sum(1 for v in verdict_list if v.bucket is b) for b in Bucket}
    assert sum(buckets.values()) == 169
    for v in verdict_list:
        if v.bucket is Bucket.UGLY:
            assert v.negatives >= 1
        elif v.bucket is Bucket.BEAUTIFUL:
            assert v.negatives == 0 and v.positives + v.zeros >= 1
        else:
            assert v.negatives == v.positives == v.zeros == 0


# -- stats -------------------------------------------------------------------


def test_percentage_rounds_half_up():
    assert percentage(2, 1600) == 0.13  # 0.125 rounds up, not to even
    assert percentage(1, 8) == 12.5
    assert percentage(0, 0) == 0.0
    assert percentage(1, 3) == 33.33


def test_summary_stats_empty(catalog):
    stats = summary_stats(catalog, _expert({}))
    assert stats["evaluated"] == 0
    assert stats["negative_pct"] == 0.0 and stats["positive_pct"] == 0.0
    istats = summary_stats(catalog, _indicator({}, loaded=False))
    assert istats["evaluated"] == 0 and istats["synergy_pct"] == 0.0


def test_summary_stats_expert_fixture(catalog, expert_fixture):
    stats = summary_stats(catalog, expert_fixture)
    assert stats["total_pairs"] == 14196
    assert stats["evaluated"] == 1256 and stats["evaluated_pct"] == 8.85
    assert stats["negative"] == 36 and stats["negative_pct"] == 2.87
    assert stats["positive"] == 981 and stats["positive_pct"] == 78.11
    assert stats["zero"] == 239 and stats["zero_pct"] == 19.03


def test_summary_stats_indicator_fixture(catalog, indicator_fixture):
    stats = summary_stats(catalog, indicator_fixture)
    assert stats["synergy"] == 292 and stats["synergy_pct"] == 2.06
    assert stats["trade_off"] == 236 and stats["trade_off_pct"] == 1.66
    assert stats["nonclassified"] == 14196 - 528


# -- rankings and synthesis ----------------------------------------------------


def test_rankings(catalog, expert_fixture):
    verdict_list = verdicts(catalog, expert_fixture)
    ugliest = ugliness_ranking(verdict_list)
    assert str(ugliest[0].target) == "13.1" and ugliest[0].negatives == 4
    prettiest = beauty_ranking(verdict_list)
    assert str(prettiest[0].target) == "7.1" and prettiest[0].positives == 65
    assert {str(v.target) for v in prettiest[1:3]} == {"1.3", "5.5"}
    assert all(v.positives == 31 for v in prettiest[1:3])


def test_synthesis_on_fixtures(catalog, expert_fixture, indicator_fixture):
    report = synthesize(catalog, expert_fixture, indicator_fixture)
    assert set(report.negative_common_goals) == {3, 10}
    assert [str(t) for t in report.negative_focus_targets] == ["3.1", "3.6", "3.7"]
    assert [str(t) for t in report.negative_common_ugly] == ["3.6", "3.7", "8.2"]
    assert [str(t) for t in report.positive_common_beautiful] == ["8.5", "17.5"]
    pairs = {str(p) for p in report.positive_common_pairs}
    assert pairs == {"1.1-1.2", "3.1-3.7", "3.2-3.7", "4.2-4.B", "6.2-6.6", "8.1-8.5", "9.4-9.5"}


def test_synthesis_is_intersection(catalog, expert_fixture, indicator_fixture):
    # brute-force recomputation of each side
    report = synthesize(catalog, expert_fixture, indicator_fixture)
    expert_report = intra_goal_report(catalog, expert_fixture)
    indicator_report = intra_goal_report(catalog, indicator_fixture)
    expert_pos = {p for split in expert_report.values() for p in split["positive"]}
    indicator_pos = {p for split in indicator_report.values() for p in split["positive"]}
    assert set(report.positive_common_pairs) <= expert_pos
    assert set(report.positive_common_pairs) <= indicator_pos
    expert_neg_targets = {
        t for split in expert_report.values() for p in split["negative"] for t in (p.a, p.b)
    }
    indicator_neg_targets = {
        t for split in indicator_report.values() for p in split["negative"] for t in (p.a, p.b)
    }
    assert set(report.negative_focus_targets) == expert_neg_targets & indicator_neg_targets


def test_synthesis_empty_inputs(catalog):
    report = synthesize(catalog, _expert({}), _indicator({}, loaded=False))
    assert report.negative_common_goals == ()
    assert report.positive_common_pairs == ()
    assert report.positive_prioritized_targets == ()


def test_prioritization_filter_drops_problematic_pairs(catalog, expert_fixture, indicator_fixture):
    report = synthesize(catalog, expert_fixture, indicator_fixture)
    prioritized = [str(t) for t in report.positive_prioritized_targets]
    assert prioritized == ["1.1", "1.2", "4.2", "4.B", "6.2", "6.6", "8.1", "8.5", "9.4", "9.5"]
    assert "3.1" not in prioritized and "3.2" not in prioritized and "3.7" not in prioritized
    excluded = {(str(p.a), str(p.b)) for p, _ in report.positive_excluded_pairs}
    assert excluded == {("3.1", "3.7"), ("3.2", "3.7")}
