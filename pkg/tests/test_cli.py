import json

import pytest

from sdg_interactions.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_synthetic_pipeline(tmp_path, fixtures_dir, capsys):
    out = tmp_path / "out"
    code, stdout, _ = run(
        ["analyze", "--indicators", str(fixtures_dir / "indicators_sample.csv"),
         "--out", str(out)],
        capsys,
    )
    assert code == 0
    classified = (out / "classified_pairs.csv").read_text().splitlines()
    assert classified[0] == "target_a,target_b,interaction,synergies,trade_offs,nonclassified"
    assert classified[1:] == ["3.1,3.2,synergy,4,0,0"]
    report = json.loads((out / "load_report.json").read_text())
    assert report["accepted"] == 68 and report["skipped_total"] == 0
    stats = json.loads((out / "indicator_stats.json").read_text())
    assert stats["synergy"] == 1
    assert stats["nonclassified"] == 14195


def test_analyze_is_deterministic(tmp_path, fixtures_dir, capsys):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        code, _, _ = run(
            ["analyze", "--indicators", str(fixtures_dir / "indicators_sample.csv"),
             "--out", str(out)],
            capsys,
        )
        assert code == 0
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]


def test_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(
        ["analyze", "--indicators", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "o")],
        capsys,
    )
    assert code == 2
    assert "nope.csv" in err


def test_bad_fixture_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("target_a,target_b,score,explanation\n3.1,3.2,-2,\n")
    code, _, err = run(
        ["stats", "--method", "expert", "--expert", str(bad)],
        capsys,
    )
    assert code == 1
    assert "explanation" in err


def test_synthesize_fixtures(tmp_path, fixtures_dir, capsys):
    out = tmp_path / "synthesis.json"
    code, _, _ = run(
        [
            "synthesize",
            "--expert", str(fixtures_dir / "expert_answers.csv"),
            "--indicators", str(fixtures_dir / "indicator_classes.csv"),
            "--out", str(out),
        ],
        capsys,
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["negative"]["common_ugly_targets"] == ["3.6", "3.7", "8.2"]
    assert doc["negative"]["focus_targets"] == ["3.1", "3.6", "3.7"]
    assert doc["positive"]["common_beautiful_targets"] == ["8.5", "17.5"]


def test_synthesize_flag_order_irrelevant(tmp_path, fixtures_dir, capsys):
    args_a = [
        "synthesize",
        "--expert", str(fixtures_dir / "expert_answers.csv"),
        "--indicators", str(fixtures_dir / "indicator_classes.csv"),
        "--out", str(tmp_path / "a.json"),
    ]
    args_b = [
        "synthesize",
        "--indicators", str(fixtures_dir / "indicator_classes.csv"),
        "--expert", str(fixtures_dir / "expert_answers.csv"),
        "--out", str(tmp_path / "b.json"),
    ]
    assert run(args_a, capsys)[0] == 0
    assert run(args_b, capsys)[0] == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_synthesize_empty_fixture(tmp_path, fixtures_dir, capsys):
    empty = tmp_path / "empty.csv"
    empty.write_text("target_a,target_b,score,explanation\n")
    out = tmp_path / "synthesis.json"
    code, _, _ = run(
        [
            "synthesize",
            "--expert", str(empty),
            "--indicators", str(fixtures_dir / "indicator_classes.csv"),
            "--out", str(out),
        ],
        capsys,
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["positive"]["common_pairs"] == []
    assert doc["negative"]["targets"] == []


def test_export_graph(tmp_path, fixtures_dir, capsys):
    out = tmp_path / "graph.json"
    code, _, _ = run(
        [
            "export-graph", "--method", "expert", "--a", "3", "--b", "6",
            "--expert", str(fixtures_dir / "expert_answers.csv"),
            "--out", str(out),
        ],
        capsys,
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["edges"]) == 13 * 8
    hues = {e["hue"] for e in doc["edges"]}
    assert "gray" in hues  # inter-goal 3x6 pairs are mostly unevaluated in the fixture


def test_stats_stdout_and_text_format(fixtures_dir, capsys):
    code, out, _ = run(
        ["stats", "--method", "expert", "--expert", str(fixtures_dir / "expert_answers.csv")],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["evaluated"] == 1256
    code, out, _ = run(
        ["stats", "--method", "expert", "--format", "text",
         "--expert", str(fixtures_dir / "expert_answers.csv")],
        capsys,
    )
    assert code == 0
    assert "evaluated: 1256" in out


def test_import_into_store(tmp_path, fixtures_dir, capsys):
    store_path = tmp_path / "store.sqlite"
    code, out, _ = run(
        [
            "import", "--store", str(store_path),
            "--expert", str(fixtures_dir / "expert_answers.csv"),
            "--indicators", str(fixtures_dir / "indicator_classes.csv"),
        ],
        capsys,
    )
    assert code == 0
    assert "imported 1256 expert answers" in out
    assert "imported 528 indicator pair results" in out

    code, out, _ = run(
        ["stats", "--method", "expert", "--store", str(store_path)], capsys
    )
    assert code == 0
    assert json.loads(out)["evaluated"] == 1256


def test_import_requires_something(tmp_path, capsys):
    code, _, err = run(["import", "--store", str(tmp_path / "s.sqlite")], capsys)
    assert code == 1
    assert "nothing to import" in err
