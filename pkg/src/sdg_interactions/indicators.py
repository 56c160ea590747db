"""Indicator time-series ingestion.

Input is delimited text with a header row and columns
``indicator_code, year, value`` (the tabular layout of the UNSD bulk
export). Empty values and the markers ``NA`` / ``...`` are treated as
missing, never as zero; malformed rows are skipped and counted in the
load report instead of aborting the load. Duplicate (indicator, year)
observations and indicator codes whose target prefix is not in the
catalog are hard errors.

Observations are restricted to the 1990..2018 window; rows outside it
are counted as malformed. Alignment of two series is pairwise-complete:
exactly the years present in both, ascending.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .catalog import Catalog, TargetId, load_catalog
from .errors import DuplicateObservation, FileUnreadable, MalformedId, UnknownTargetPrefix

YEAR_MIN = 1990
YEAR_MAX = 2018

MISSING_MARKERS = {"", "na", "n/a", "...", ".."}

_INDICATOR_RE = re.compile(r"^(\d{1,2})\.(\d{1,2}|[A-Za-z])\.(\d{1,2}|[A-Za-z])$")


@dataclass(frozen=True)
class IndicatorId:
    """Indicator code such as ``3.1.1``: a target prefix plus an ordinal."""

    target: TargetId
    ordinal: str

    def __str__(self) -> str:
        return f"{self.target}.{self.ordinal}"


def parse_indicator_id(text: str, catalog: Catalog | None = None) -> IndicatorId:
    m = _INDICATOR_RE.match(text.strip())
    if not m:
        raise MalformedId(f"bad indicator id {text!r}")
    tid = TargetId(int(m.group(1)), m.group(2))
    cat = catalog or load_catalog()
    if tid not in cat:
        raise UnknownTargetPrefix(f"indicator {text!r} has no catalog target {tid}")
    return IndicatorId(tid, m.group(3).upper())


def indicator_to_target(ind: IndicatorId) -> TargetId:
    """The target an indicator reports on (its id minus the ordinal)."""
    return ind.target


@dataclass
class IndicatorSeries:
    """Yearly observations for one indicator; immutable once loaded."""

    id: IndicatorId
    observations: dict[int, float]
    _years: np.ndarray = field(default=None, repr=False)
    _values: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        years = sorted(self.observations)
        for y in years:
            if not YEAR_MIN <= y <= YEAR_MAX:
                raise ValueError(f"year {y} outside {YEAR_MIN}..{YEAR_MAX}")
            if not np.isfinite(self.observations[y]):
                raise ValueError(f"non-finite value for {self.id} in {y}")
        self._years = np.array(years, dtype=np.int64)
        self._values = np.array([self.observations[y] for y in years], dtype=np.float64)

    @property
    def years(self) -> np.ndarray:
        return self._years

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return len(self.observations)


@dataclass(frozen=True)
class AlignedPairSample:
    """Pairwise-complete sample: values of both series on their common years."""

    x: np.ndarray
    y: np.ndarray
    years: np.ndarray

    def __post_init__(self):
        if not (len(self.x) == len(self.y) == len(self.years)):
            raise ValueError("aligned sample length mismatch")

    def __len__(self) -> int:
        return len(self.years)


def align(a: IndicatorSeries, b: IndicatorSeries) -> AlignedPairSample:
    """Intersect the two series on years; an empty sample is valid."""
    common, ia, ib = np.intersect1d(a.years, b.years, assume_unique=True, return_indices=True)
    return AlignedPairSample(x=a.values[ia], y=b.values[ib], years=common)


@dataclass
class LoadReport:
    """Counts of accepted and skipped rows, by skip reason."""

    rows_total: int = 0
    accepted: int = 0
    skipped: dict[str, int] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    def skip(self, reason: str, message: str | None = None):
        self.skipped[reason] = self.skipped.get(reason, 0) + 1
        if message:
            self.messages.append(message)

    @property
    def skipped_total(self) -> int:
        return sum(self.skipped.values())

    def to_dict(self) -> dict:
        return {
            "rows_total": self.rows_total,
            "accepted": self.accepted,
            "skipped": dict(sorted(self.skipped.items())),
            "skipped_total": self.skipped_total,
        }

    def to_text(self) -> str:
        lines = [
            f"rows: {self.rows_total}",
            f"accepted: {self.accepted}",
            f"skipped: {self.skipped_total}",
        ]
        for reason, count in sorted(self.skipped.items()):
            lines.append(f"  {reason}: {count}")
        return "\n".join(lines)


def _parse_value(raw: str) -> float | None:
    text = raw.strip()
    if text.lower() in MISSING_MARKERS:
        return None
    return float(text)


def load_indicator_rows(rows, catalog: Catalog | None = None, source: str = "<rows>"):
    """Build series from an iterable of (indicator_code, year, value) text rows."""
    cat = catalog or load_catalog()
    report = LoadReport()
    parsed_ids: dict[str, IndicatorId] = {}
    series_obs: dict[str, dict[int, float]] = {}
    for lineno, row in rows:
        report.rows_total += 1
        code_raw = (row.get("indicator_code") or "").strip()
        year_raw = (row.get("year") or "").strip()
        value_raw = row.get("value")
        if value_raw is None or not code_raw or not year_raw:
            report.skip("incomplete_row", f"{source}:{lineno}: incomplete row")
            continue
        if code_raw not in parsed_ids:
            try:
                parsed_ids[code_raw] = parse_indicator_id(code_raw, cat)
            except MalformedId:
                report.skip("bad_indicator_id", f"{source}:{lineno}: bad indicator id {code_raw!r}")
                continue
            except UnknownTargetPrefix:
                raise UnknownTargetPrefix(
                    f"{source}:{lineno}: indicator {code_raw!r} has no catalog target",
                    detail={"row": lineno},
                )
        try:
            year = int(year_raw)
        except ValueError:
            report.skip("bad_year", f"{source}:{lineno}: bad year {year_raw!r}")
            continue
        if not YEAR_MIN <= year <= YEAR_MAX:
            report.skip("bad_year", f"{source}:{lineno}: year {year} outside range")
            continue
        try:
            value = _parse_value(value_raw)
        except ValueError:
            report.skip("non_numeric_value", f"{source}:{lineno}: non-numeric {value_raw!r}")
            continue
        if value is None:
            report.skip("missing_value")
            continue
        if not np.isfinite(value):
            report.skip("non_numeric_value", f"{source}:{lineno}: non-finite {value_raw!r}")
            continue
        obs = series_obs.setdefault(code_raw, {})
        if year in obs:
            raise DuplicateObservation(
                f"{source}:{lineno}: duplicate observation for {code_raw} in {year}",
                detail={"row": lineno, "indicator": code_raw, "year": year},
            )
        obs[year] = value
        report.accepted += 1

    series = [
        IndicatorSeries(parsed_ids[code], obs)
        for code, obs in sorted(series_obs.items())
    ]
    return series, report


def load_indicator_file(path, catalog: Catalog | None = None):
    """Load one CSV file; returns (series list, load report)."""
    p = Path(path)
    try:
        fh = p.open("r", encoding="utf-8", newline="")
    except OSError as exc:
        raise FileUnreadable(f"cannot read {p}: {exc}") from exc
    with fh:
        reader = csv.DictReader(fh)
        rows = ((reader.line_num, row) for row in reader)
        return load_indicator_rows(rows, catalog, source=str(p))
