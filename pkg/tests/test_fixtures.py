"""The shipped evaluation fixtures must agree, row by row, with the
published per-goal lists and per-target counts they were derived from."""

import csv

from sdg_interactions import InteractionClass, TargetPair, parse_target_id


def _read_pairs(path, catalog):
    with open(path, newline="") as fh:
        return {
            TargetPair(
                parse_target_id(r["target_a"], catalog), parse_target_id(r["target_b"], catalog)
            )
            for r in csv.DictReader(fh)
        }


def _read_counts(path, catalog):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    column = [c for c in rows[0] if c != "target"][0]
    return {parse_target_id(r["target"], catalog): int(r[column]) for r in rows}


def test_expert_fixture_matches_lists(catalog, fixtures_dir, expert_fixture):
    scores = expert_fixture.scores
    assert len(scores) == 1256

    negatives = {p for p, s in scores.items() if s < 0}
    positives = {p for p, s in scores.items() if s > 0}
    zeros = {p for p, s in scores.items() if s == 0}
    assert (len(negatives), len(positives), len(zeros)) == (36, 981, 239)

    list1 = _read_pairs(fixtures_dir / "appendix" / "list1_expert_negative_intra.csv", catalog)
    assert len(list1) == 12
    assert {p for p in negatives if p.intra_goal} == list1

    list2 = _read_pairs(fixtures_dir / "appendix" / "list2_expert_positive_intra.csv", catalog)
    assert len(list2) == 315
    assert {p for p in positives if p.intra_goal} == list2

    # per-target negative counts: the multi-negative list is exact and
    # exhaustive; every other ugly target has exactly one negative
    list3 = _read_counts(fixtures_dir / "appendix" / "list3_expert_multi_negative.csv", catalog)
    assert len(list3) == 15
    degree = {}
    for p in negatives:
        degree[p.a] = degree.get(p.a, 0) + 1
        degree[p.b] = degree.get(p.b, 0) + 1
    assert {t: d for t, d in degree.items() if d >= 2} == list3
    assert sum(1 for d in degree.values() if d == 1) == 36

    # per-target positive counts for listed beautiful targets are exact
    list4 = _read_counts(fixtures_dir / "appendix" / "list4_expert_multi_positive.csv", catalog)
    assert len(list4) == 109
    pos_degree = {}
    for p in positives:
        pos_degree[p.a] = pos_degree.get(p.a, 0) + 1
        pos_degree[p.b] = pos_degree.get(p.b, 0) + 1
    for target, count in list4.items():
        assert pos_degree[target] == count, (str(target), pos_degree.get(target), count)
        assert target not in degree  # beautiful targets carry no negatives

    # every negative answer carries an explanation
    for pair in negatives:
        assert expert_fixture.explanations.get(pair, "").strip()


def test_indicator_fixture_matches_lists(catalog, fixtures_dir, indicator_fixture):
    results = indicator_fixture.results
    assert len(results) == 528
    synergies = {p for p, r in results.items() if r.interaction is InteractionClass.SYNERGY}
    trades = {p for p, r in results.items() if r.interaction is InteractionClass.TRADE_OFF}
    assert len(synergies) == 292 and len(trades) == 236

    list5 = _read_pairs(fixtures_dir / "appendix" / "list5_indicator_tradeoff_intra.csv", catalog)
    assert len(list5) == 23
    assert {p for p in trades if p.intra_goal} == list5

    list6 = _read_pairs(fixtures_dir / "appendix" / "list6_indicator_synergy_intra.csv", catalog)
    assert len(list6) == 21
    assert {p for p in synergies if p.intra_goal} == list6

    list7 = _read_counts(fixtures_dir / "appendix" / "list7_indicator_ugly.csv", catalog)
    assert len(list7) == 59
    degree = {}
    for p in trades:
        degree[p.a] = degree.get(p.a, 0) + 1
        degree[p.b] = degree.get(p.b, 0) + 1
    assert degree == list7

    # tallies are minimal and consistent with the class
    for r in results.values():
        assert r.tally.total == 1
        assert r.interaction is r.tally.plurality()


def test_fixture_pair_sets_are_disjoint(expert_fixture, indicator_fixture):
    # within each method a pair carries exactly one verdict
    assert len(expert_fixture.scores) == 1256
    assert len(indicator_fixture.results) == 528


def test_sample_timeseries_vs_oracle(catalog, fixtures_dir):
    """The synthetic time-series fixture must classify exactly one pair as
    a synergy, confirmed by the brute-force oracle on every cross pair."""
    from collections import defaultdict

    from _oracles import oracle_spearman
    from sdg_interactions import load_indicator_file, run_indicator_method

    series, report = load_indicator_file(fixtures_dir / "indicators_sample.csv", catalog)
    assert report.skipped_total == 0
    assert len(series) == 4
    by_target = defaultdict(list)
    for s in series:
        by_target[str(s.id.target)].append(s)
    assert set(by_target) == {"3.1", "3.2"}
    for sa in by_target["3.1"]:
        for sb in by_target["3.2"]:
            rho = oracle_spearman(list(sa.values), list(sb.values))
            assert abs(rho - 1.0) < 1e-12

    results = run_indicator_method(series, catalog)
    pair = TargetPair(parse_target_id("3.1", catalog), parse_target_id("3.2", catalog))
    assert results[pair].interaction is InteractionClass.SYNERGY
    classified = [p for p, r in results.items() if r.interaction is not InteractionClass.NONCLASSIFIED]
    assert classified == [pair]
