"""Rank-correlation scoring of target pairs from indicator data.

An indicator pair is scored by the Spearman rank correlation of its
pairwise-complete sample: average (fractional) ranks for ties, then the
Pearson coefficient of the ranked vectors. The d-squared shortcut is not
used because it is invalid under ties.

Coefficients classify as synergy at rho >= 0.6, trade-off at
rho <= -0.6, and nonclassified otherwise; undefined coefficients
(insufficient overlap, constant vectors, no data) are nonclassified.
A target pair aggregates its indicator-pair classes by strict plurality,
with any tie for first place falling back to nonclassified. Nonclassified
indicator pairs count in the tally.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import kernels
from .catalog import Catalog, TargetPair, load_catalog, parse_target_id
from .errors import FixtureFormatError
from .indicators import AlignedPairSample, IndicatorSeries, indicator_to_target

SYNERGY_THRESHOLD = 0.6
TRADE_OFF_THRESHOLD = -0.6
DEFAULT_MIN_OVERLAP = 5


class InteractionClass(enum.Enum):
    SYNERGY = "synergy"
    TRADE_OFF = "trade_off"
    NONCLASSIFIED = "nonclassified"

    def __str__(self) -> str:
        return self.value


def spearman_rho(sample: AlignedPairSample, min_overlap: int = DEFAULT_MIN_OVERLAP):
    """Tie-aware Spearman rho of an aligned sample, or None when undefined.

    Undefined means: fewer common years than ``min_overlap``, or either
    vector constant. Defined values lie in [-1, 1].
    """
    if len(sample) < max(min_overlap, 2):
        return None
    rho = float(kernels.spearman(sample.x, sample.y))
    if math.isnan(rho):
        return None
    if abs(rho) > 1.0 + 1e-12:
        raise AssertionError(f"rho out of range: {rho}")
    return max(-1.0, min(1.0, rho))


def classify(rho) -> InteractionClass:
    """Threshold classification; None (undefined) is nonclassified."""
    if rho is None:
        return InteractionClass.NONCLASSIFIED
    if rho <= TRADE_OFF_THRESHOLD:
        return InteractionClass.TRADE_OFF
    if rho >= SYNERGY_THRESHOLD:
        return InteractionClass.SYNERGY
    return InteractionClass.NONCLASSIFIED


@dataclass(frozen=True)
class ClassTally:
    """Counts of indicator-pair classes behind one target pair."""

    synergy: int = 0
    trade_off: int = 0
    nonclassified: int = 0

    @property
    def total(self) -> int:
        return self.synergy + self.trade_off + self.nonclassified

    def plurality(self) -> InteractionClass:
        best = max(self.synergy, self.trade_off, self.nonclassified)
        if best == 0:
            return InteractionClass.NONCLASSIFIED
        leaders = [
            cls
            for cls, count in (
                (InteractionClass.SYNERGY, self.synergy),
                (InteractionClass.TRADE_OFF, self.trade_off),
                (InteractionClass.NONCLASSIFIED, self.nonclassified),
            )
            if count == best
        ]
        if len(leaders) > 1:
            return InteractionClass.NONCLASSIFIED
        return leaders[0]


@dataclass(frozen=True)
class TargetMethodResult:
    """Indicator-method verdict for one target pair."""

    pair: TargetPair
    interaction: InteractionClass
    tally: ClassTally = field(default_factory=ClassTally)

    def __post_init__(self):
        if self.tally.total > 0 and self.interaction != self.tally.plurality():
            raise ValueError(
                f"class {self.interaction} inconsistent with tally {self.tally} for {self.pair}"
            )


def aggregate_to_target(pair: TargetPair, indicator_classes) -> TargetMethodResult:
    """Fold indicator-pair classes into the pair's verdict by plurality."""
    tally = ClassTally(
        synergy=sum(1 for c in indicator_classes if c is InteractionClass.SYNERGY),
        trade_off=sum(1 for c in indicator_classes if c is InteractionClass.TRADE_OFF),
        nonclassified=sum(1 for c in indicator_classes if c is InteractionClass.NONCLASSIFIED),
    )
    return TargetMethodResult(pair=pair, interaction=tally.plurality(), tally=tally)


def run_indicator_method(
    series: list[IndicatorSeries],
    catalog: Catalog | None = None,
    min_overlap: int = DEFAULT_MIN_OVERLAP,
) -> dict[TargetPair, TargetMethodResult]:
    """Score every catalog target pair from the given indicator series.

    Pairs without any indicator data come back nonclassified with an empty
    tally, so the result always covers all 14196 pairs. Deterministic for
    a fixed input: series are processed in id order.
    """
    cat = catalog or load_catalog()
    by_target: dict = {}
    for s in sorted(series, key=lambda s: str(s.id)):
        by_target.setdefault(indicator_to_target(s.id), []).append(s)

    results: dict[TargetPair, TargetMethodResult] = {}
    targets = sorted(by_target)
    for i, ta in enumerate(targets):
        for tb in targets[i + 1 :]:
            pair = TargetPair(ta, tb)
            classes = []
            for sa in by_target[ta]:
                for sb in by_target[tb]:
                    rho = kernels.spearman_aligned(
                        sa.years, sa.values, sb.years, sb.values, min_overlap
                    )
                    classes.append(classify(None if math.isnan(rho) else rho))
            results[pair] = aggregate_to_target(pair, classes)

    for ta in cat.target_ids():
        for tb in cat.target_ids():
            if ta < tb:
                pair = TargetPair(ta, tb)
                if pair not in results:
                    results[pair] = TargetMethodResult(pair, InteractionClass.NONCLASSIFIED)
    return results


RESULT_COLUMNS = ["target_a", "target_b", "interaction", "synergies", "trade_offs", "nonclassified"]


def write_results_csv(results: dict[TargetPair, TargetMethodResult], fh, include_empty=False):
    """Export classified pairs as the structured table consumed downstream.

    By default only pairs with a non-empty tally or a classified verdict
    are written; absent pairs read back as nonclassified.
    """
    writer = csv.writer(fh)
    writer.writerow(RESULT_COLUMNS)
    count = 0
    for pair in sorted(results, key=lambda p: p.sort_key()):
        r = results[pair]
        if not include_empty and r.tally.total == 0 and r.interaction is InteractionClass.NONCLASSIFIED:
            continue
        writer.writerow(
            [
                str(pair.a),
                str(pair.b),
                r.interaction.value,
                r.tally.synergy,
                r.tally.trade_off,
                r.tally.nonclassified,
            ]
        )
        count += 1
    return count


def read_results_csv(fh, catalog: Catalog | None = None, source="<file>"):
    """Parse a results table back into pair verdicts; strict on format."""
    cat = catalog or load_catalog()
    reader = csv.DictReader(fh)
    if reader.fieldnames is None or [c.strip() for c in reader.fieldnames] != RESULT_COLUMNS:
        raise FixtureFormatError(
            f"{source}: expected header {','.join(RESULT_COLUMNS)}, got {reader.fieldnames}"
        )
    results: dict[TargetPair, TargetMethodResult] = {}
    for row in reader:
        lineno = reader.line_num
        try:
            pair = TargetPair(
                parse_target_id(row["target_a"], cat), parse_target_id(row["target_b"], cat)
            )
            interaction = InteractionClass(row["interaction"])
            tally = ClassTally(
                synergy=int(row["synergies"]),
                trade_off=int(row["trade_offs"]),
                nonclassified=int(row["nonclassified"]),
            )
            if min(tally.synergy, tally.trade_off, tally.nonclassified) < 0:
                raise ValueError("negative tally")
            result = TargetMethodResult(pair, interaction, tally)
        except Exception as exc:
            raise FixtureFormatError(f"{source}:{lineno}: {exc}", detail={"row": lineno}) from exc
        if pair in results:
            raise FixtureFormatError(f"{source}:{lineno}: duplicate pair {pair}")
        results[pair] = result
    return results


def load_results_file(path, catalog: Catalog | None = None):
    p = Path(path)
    with p.open("r", encoding="utf-8", newline="") as fh:
        return read_results_csv(fh, catalog, source=str(p))
