"""Reading and writing expert-answer tables.

Format: CSV with header ``target_a,target_b,score,explanation``; scores
are integers in [-3, 3] and negative scores must carry a non-empty
explanation (same rule the survey enforces). One row per pair.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .analytics import ExpertEvaluations
from .catalog import Catalog, TargetPair, load_catalog, parse_target_id
from .errors import FixtureFormatError

EXPERT_COLUMNS = ["target_a", "target_b", "score", "explanation"]


def read_expert_csv(fh, catalog: Catalog | None = None, source="<file>") -> ExpertEvaluations:
    cat = catalog or load_catalog()
    reader = csv.DictReader(fh)
    if reader.fieldnames is None or [c.strip() for c in reader.fieldnames] != EXPERT_COLUMNS:
        raise FixtureFormatError(
            f"{source}: expected header {','.join(EXPERT_COLUMNS)}, got {reader.fieldnames}"
        )
    scores: dict[TargetPair, int] = {}
    explanations: dict[TargetPair, str] = {}
    for row in reader:
        lineno = reader.line_num
        try:
            pair = TargetPair(
                parse_target_id(row["target_a"], cat), parse_target_id(row["target_b"], cat)
            )
            score = int(row["score"])
        except Exception as exc:
            raise FixtureFormatError(f"{source}:{lineno}: {exc}") from exc
        if not -3 <= score <= 3:
            raise FixtureFormatError(f"{source}:{lineno}: score {score} outside [-3, 3]")
        explanation = (row["explanation"] or "").strip()
        if score < 0 and not explanation:
            raise FixtureFormatError(
                f"{source}:{lineno}: negative score for {pair} without explanation"
            )
        if pair in scores:
            raise FixtureFormatError(f"{source}:{lineno}: duplicate pair {pair}")
        scores[pair] = score
        if explanation:
            explanations[pair] = explanation
    return ExpertEvaluations(scores=scores, explanations=explanations)


def load_expert_file(path, catalog: Catalog | None = None) -> ExpertEvaluations:
    p = Path(path)
    with p.open("r", encoding="utf-8", newline="") as fh:
        return read_expert_csv(fh, catalog, source=str(p))


def write_expert_csv(evals: ExpertEvaluations, fh) -> int:
    writer = csv.writer(fh)
    writer.writerow(EXPERT_COLUMNS)
    count = 0
    for pair in sorted(evals.scores, key=lambda p: p.sort_key()):
        writer.writerow(
            [str(pair.a), str(pair.b), evals.scores[pair], evals.explanations.get(pair, "")]
        )
        count += 1
    return count
