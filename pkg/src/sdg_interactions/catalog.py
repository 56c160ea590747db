"""Canonical model of the 17 goals and 169 targets.

Targets are identified as ``<goal>.<suffix>`` where the suffix is either
numeric (``3.9``, ``8.10``) or a single letter (``4.B``). Ordering is
total: by goal, then numeric suffixes ascending, then letter suffixes
ascending; every numeric suffix sorts before every letter suffix within
a goal, so ``3.9 < 3.10 < 3.A``.

The bundled catalog file (``data/sdg_targets.csv``) is the single source
of truth for goal names, official colors and target descriptions. It is
loaded once and shared; all structures here are immutable after load.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from functools import total_ordering
from importlib import resources
from typing import Iterable

from .errors import MalformedId, UnknownGoal, UnknownTarget

GOAL_COUNT = 17
TARGET_COUNT = 169

_ID_RE = re.compile(r"^(\d{1,2})\.(\d{1,2}|[A-Za-z])$")


@total_ordering
@dataclass(frozen=True)
class TargetId:
    """A target identifier such as ``4.B`` or ``8.10``."""

    goal: int
    suffix: str

    def __post_init__(self):
        object.__setattr__(self, "suffix", self.suffix.upper())

    @property
    def is_letter(self) -> bool:
        return self.suffix.isalpha()

    def sort_key(self):
        if self.is_letter:
            return (self.goal, 1, 0, self.suffix)
        return (self.goal, 0, int(self.suffix), "")

    def __lt__(self, other: "TargetId") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.goal}.{self.suffix}"


@dataclass(frozen=True)
class TargetPair:
    """Unordered pair of distinct targets, stored with ``a < b``."""

    a: TargetId
    b: TargetId

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"pair endpoints must differ: {self.a}")
        if self.b < self.a:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @property
    def intra_goal(self) -> bool:
        return self.a.goal == self.b.goal

    def other(self, t: TargetId) -> TargetId:
        if t == self.a:
            return self.b
        if t == self.b:
            return self.a
        raise ValueError(f"{t} is not an endpoint of {self}")

    def sort_key(self):
        return (self.a.sort_key(), self.b.sort_key())

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


@dataclass(frozen=True)
class Goal:
    number: int
    name: str
    color: str


@dataclass(frozen=True)
class Target:
    id: TargetId
    description: str


@dataclass(frozen=True)
class Catalog:
    """Immutable registry of goals and targets; safe for concurrent reads."""

    goals: tuple[Goal, ...]
    targets: tuple[Target, ...]
    _by_id: dict[TargetId, Target] = field(repr=False, default_factory=dict)
    _by_goal: dict[int, tuple[TargetId, ...]] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if len(self.goals) != GOAL_COUNT:
            raise ValueError(f"expected {GOAL_COUNT} goals, got {len(self.goals)}")
        if len(self.targets) != TARGET_COUNT:
            raise ValueError(f"expected {TARGET_COUNT} targets, got {len(self.targets)}")
        goal_numbers = {g.number for g in self.goals}
        by_id = {}
        by_goal: dict[int, list[TargetId]] = {}
        for t in self.targets:
            if t.id.goal not in goal_numbers:
                raise ValueError(f"target {t.id} references unknown goal")
            if not t.description:
                raise ValueError(f"target {t.id} has an empty description")
            if t.id in by_id:
                raise ValueError(f"duplicate target {t.id}")
            by_id[t.id] = t
            by_goal.setdefault(t.id.goal, []).append(t.id)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(
            self, "_by_goal", {g: tuple(sorted(ids)) for g, ids in by_goal.items()}
        )

    def goal(self, number: int) -> Goal:
        for g in self.goals:
            if g.number == number:
                return g
        raise UnknownGoal(f"no goal {number}")

    def target(self, tid: TargetId) -> Target:
        try:
            return self._by_id[tid]
        except KeyError:
            raise UnknownTarget(f"{tid} is not a catalog target") from None

    def __contains__(self, tid: TargetId) -> bool:
        return tid in self._by_id

    def target_ids(self) -> tuple[TargetId, ...]:
        return tuple(t.id for t in self.targets)

    def goal_targets(self, goal: int) -> tuple[TargetId, ...]:
        if goal not in self._by_goal:
            raise UnknownGoal(f"no goal {goal}")
        return self._by_goal[goal]


def parse_goal_id(value) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise MalformedId(f"goal id must be an integer, got {value!r}") from None
    if not 1 <= number <= GOAL_COUNT:
        raise UnknownGoal(f"goal {number} outside 1..{GOAL_COUNT}")
    return number


def parse_target_id(text: str, catalog: "Catalog | None" = None) -> TargetId:
    """Parse ``"4.B"``-style text into a catalog-validated TargetId.

    Letter suffixes are case-insensitive on input and stored uppercase.
    Raises MalformedId for bad grammar and UnknownTarget for well-formed
    ids that are not in the catalog (for example goal 18).
    """
    if not isinstance(text, str):
        raise MalformedId(f"target id must be a string, got {type(text).__name__}")
    m = _ID_RE.match(text.strip())
    if not m:
        raise MalformedId(f"bad target id {text!r}")
    tid = TargetId(int(m.group(1)), m.group(2))
    cat = catalog or load_catalog()
    if tid not in cat:
        raise UnknownTarget(f"{tid} is not a catalog target")
    return tid


def compare_targets(x: TargetId, y: TargetId) -> int:
    """Total order over targets; returns -1, 0 or 1."""
    kx, ky = x.sort_key(), y.sort_key()
    return -1 if kx < ky else (1 if kx > ky else 0)


def all_pairs(catalog: Catalog) -> set[TargetPair]:
    """Every unordered pair of distinct targets: n(n-1)/2 pairs."""
    ids = catalog.target_ids()
    return {TargetPair(ids[i], ids[j]) for i in range(len(ids)) for j in range(i + 1, len(ids))}


def intra_goal_pairs(catalog: Catalog, goal: int) -> set[TargetPair]:
    """All pairs whose endpoints both belong to ``goal``."""
    ids = catalog.goal_targets(goal)
    return {TargetPair(ids[i], ids[j]) for i in range(len(ids)) for j in range(i + 1, len(ids))}


def pairs_between(catalog: Catalog, goal_a: int, goal_b: int) -> set[TargetPair]:
    """Pairs with one endpoint in each goal (intra-goal pairs when equal)."""
    if goal_a == goal_b:
        return intra_goal_pairs(catalog, goal_a)
    return {
        TargetPair(x, y)
        for x in catalog.goal_targets(goal_a)
        for y in catalog.goal_targets(goal_b)
    }


def _read_rows(lines: Iterable[str]):
    reader = csv.DictReader(line for line in lines if not line.startswith("#"))
    yield from reader


_catalog_cache: Catalog | None = None


def load_catalog() -> Catalog:
    """Load the bundled catalog (cached; the result is immutable)."""
    global _catalog_cache
    if _catalog_cache is None:
        text = (
            resources.files("sdg_interactions")
            .joinpath("data/sdg_targets.csv")
            .read_text(encoding="utf-8")
        )
        _catalog_cache = parse_catalog(text.splitlines())
    return _catalog_cache


def parse_catalog(lines: Iterable[str]) -> Catalog:
    goals: dict[int, Goal] = {}
    targets: list[Target] = []
    for row in _read_rows(lines):
        m = _ID_RE.match(row["target_id"])
        if not m:
            raise MalformedId(f"bad target id in catalog: {row['target_id']!r}")
        tid = TargetId(int(m.group(1)), m.group(2))
        goal = goals.get(tid.goal)
        if goal is None:
            goals[tid.goal] = Goal(tid.goal, row["goal_name"], row["goal_color"])
        elif goal.name != row["goal_name"] or goal.color != row["goal_color"]:
            raise ValueError(f"inconsistent goal metadata for goal {tid.goal}")
        targets.append(Target(tid, row["description"]))
    return Catalog(
        goals=tuple(goals[n] for n in sorted(goals)),
        targets=tuple(sorted(targets, key=lambda t: t.id.sort_key())),
    )
