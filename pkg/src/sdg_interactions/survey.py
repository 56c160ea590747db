"""Expert-evaluation survey workflow.

Lifecycle: a respondent signs up (pending, curator notified), a curator
approves them, they pick at least ``goal_min`` goals matching their
expertise, and the system hands them batches of target pairs drawn only
from pairs whose endpoints both lie in their selected goals and that no
respondent holds yet. A pair is bound to its respondent for good.

Scores use the 7-point scale (-3 cancelling .. +3 indivisible). Negative
scores require an explanation. Answers can be skipped, revisited and
edited freely until the respondent finalizes; finalization requires every
assignment answered and is irreversible, at which point the scores become
visible to the analytics queries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .analytics import EXPERT_SCORE_MAX, EXPERT_SCORE_MIN
from .catalog import TargetPair, parse_goal_id
from .errors import (
    AlreadyAnswered,
    AlreadyFinalized,
    ConfigInvalid,
    ExplanationRequired,
    MissingField,
    NoGoalsSelected,
    NotAuthorized,
    NotPending,
    NotYourAssignment,
    ScoreOutOfRange,
    SelectionLocked,
    TooFewGoals,
    UnansweredRemaining,
    UnknownCurator,
    UnknownUser,
)
from .store import Store, UserRecord

DEFAULT_BATCH_SIZE = 20
DEFAULT_GOAL_MIN = 2

EDUCATION_LEVELS = {"bachelor", "master", "phd"}
EXPERIENCE_BRACKETS = {"5-10", ">10"}

_REQUIRED_PROFILE_FIELDS = (
    "name",
    "email",
    "password",
    "primary_affiliation",
    "education",
    "experience",
    "curator",
)


class AssignmentState(Enum):
    UNANSWERED = "unanswered"
    SKIPPED = "skipped"
    ANSWERED = "answered"
    FINALIZED = "finalized"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Assignment:
    pair: TargetPair
    respondent_id: int
    state: AssignmentState
    score: int | None = None
    explanation: str = ""

    def to_dict(self) -> dict:
        return {
            "a": str(self.pair.a),
            "b": str(self.pair.b),
            "state": self.state.value,
            "score": self.score,
            "explanation": self.explanation,
        }


@dataclass(frozen=True)
class BatchResult:
    assignments: list[Assignment]
    exhausted: bool


class SurveyEngine:
    """All survey mutations, transactional against one store."""

    def __init__(self, store: Store, batch_size=DEFAULT_BATCH_SIZE, goal_min=DEFAULT_GOAL_MIN,
                 rng_seed=None):
        self.store = store
        self.catalog = store.catalog
        self.batch_size = batch_size
        self.goal_min = goal_min
        self._rng = random.Random(rng_seed)

    # -- accounts -----------------------------------------------------

    def register(self, profile: dict) -> UserRecord:
        """Create a pending respondent and notify the inviting curator."""
        missing = [f for f in _REQUIRED_PROFILE_FIELDS if not str(profile.get(f) or "").strip()]
        if missing:
            raise MissingField(f"missing profile fields: {', '.join(missing)}",
                               detail={"fields": missing})
        if profile["education"] not in EDUCATION_LEVELS:
            raise MissingField(f"education must be one of {sorted(EDUCATION_LEVELS)}")
        if profile["experience"] not in EXPERIENCE_BRACKETS:
            raise MissingField(f"experience must be one of {sorted(EXPERIENCE_BRACKETS)}")
        with self.store.transaction(write=True) as conn:
            curator = self._find_curator(conn, profile["curator"])
            user = self.store.create_user(
                conn,
                name=profile["name"],
                email=profile["email"],
                password=profile["password"],
                primary_affiliation=profile["primary_affiliation"],
                secondary_affiliation=profile.get("secondary_affiliation", ""),
                education=profile["education"],
                experience=profile["experience"],
                acknowledge=bool(profile.get("acknowledge", False)),
                curator_id=curator.id,
                status="pending",
            )
            self.store.queue_notification(
                conn,
                curator.id,
                "pending_approval",
                {"user_id": user.id, "name": user.name, "email": user.email},
            )
        return user

    def _find_curator(self, conn, ref) -> UserRecord:
        admins = self.store.admins(conn)
        for admin in admins:
            if ref == admin.id or str(ref) == str(admin.id):
                return admin
            if isinstance(ref, str) and ref.strip().lower() in (
                admin.name.lower(), admin.email.lower(),
            ):
                return admin
        raise UnknownCurator(f"no curator matching {ref!r}")

    def approve(self, curator: UserRecord, respondent_id: int) -> UserRecord:
        if not curator.is_admin:
            raise NotAuthorized("only curators can approve accounts")
        with self.store.transaction(write=True) as conn:
            user = self.store.get_user(conn, respondent_id)
            if user is None:
                raise UnknownUser(f"no user {respondent_id}")
            if user.status != "pending":
                raise NotPending(f"user {respondent_id} is {user.status}")
            self.store.set_status(conn, respondent_id, "approved")
            return self.store.get_user(conn, respondent_id)

    # -- goal selection -------------------------------------------------

    def select_goals(self, respondent: UserRecord, goals) -> list[int]:
        if respondent.status != "approved":
            raise NotAuthorized("account is pending approval")
        parsed = sorted({parse_goal_id(g) for g in goals})
        if len(parsed) < self.goal_min:
            raise TooFewGoals(
                f"select at least {self.goal_min} goals", detail={"minimum": self.goal_min}
            )
        with self.store.transaction(write=True) as conn:
            _, locked = self.store.goals_for(conn, respondent.id)
            if locked:
                raise SelectionLocked("goal selection is locked once a batch exists")
            self.store.replace_goals(conn, respondent.id, parsed)
        return parsed

    def goals_of(self, respondent: UserRecord):
        with self.store.transaction() as conn:
            return self.store.goals_for(conn, respondent.id)

    # -- batches --------------------------------------------------------

    def generate_batch(self, respondent: UserRecord, size=None, seed=None) -> BatchResult:
        """Draw up to ``size`` unassigned pairs within the selected goals.

        Sampling is uniform and seedable; the draw and the inserts happen
        in one write transaction, so concurrent batches can never share a
        pair. When the pool runs short the batch is smaller and flagged.
        """
        if respondent.status != "approved":
            raise NotAuthorized("account is pending approval")
        size = self.batch_size if size is None else int(size)
        if size <= 0:
            raise ConfigInvalid(f"batch size must be positive, got {size}")
        rng = self._rng if seed is None else random.Random(seed)
        with self.store.transaction(write=True) as conn:
            goals, _ = self.store.goals_for(conn, respondent.id)
            if not goals:
                raise NoGoalsSelected("select goals before requesting a batch")
            eligible = []
            goal_targets = [self.catalog.goal_targets(g) for g in goals]
            all_selected = sorted(
                (t for ids in goal_targets for t in ids), key=lambda t: t.sort_key()
            )
            for i in range(len(all_selected)):
                for j in range(i + 1, len(all_selected)):
                    eligible.append(TargetPair(all_selected[i], all_selected[j]))
            taken = self.store.assigned_pairs(conn)
            pool = [p for p in eligible if f"{p.a}|{p.b}" not in taken]
            pool.sort(key=lambda p: p.sort_key())
            drawn = sorted(rng.sample(pool, min(size, len(pool))), key=lambda p: p.sort_key())
            for pair in drawn:
                self.store.insert_assignment(conn, pair, respondent.id)
            self.store.lock_goals(conn, respondent.id)
            assignments = [
                Assignment(pair, respondent.id, AssignmentState.UNANSWERED) for pair in drawn
            ]
        return BatchResult(assignments=assignments, exhausted=len(drawn) < size)

    def assignments(self, respondent: UserRecord) -> list[Assignment]:
        with self.store.transaction() as conn:
            rows = self.store.assignments_for(conn, respondent.id)
            return [self._assignment_from_row(r) for r in rows]

    def _assignment_from_row(self, row) -> Assignment:
        return Assignment(
            pair=self.store._pair(row["pair_a"], row["pair_b"]),
            respondent_id=row["user_id"],
            state=AssignmentState(row["state"]),
            score=row["score"],
            explanation=row["explanation"],
        )

    # -- scoring --------------------------------------------------------

    def submit_score(self, respondent: UserRecord, pair: TargetPair, score,
                     explanation="") -> Assignment:
        if not isinstance(score, int) or isinstance(score, bool):
            raise ScoreOutOfRange(f"score must be an integer, got {score!r}")
        if not EXPERT_SCORE_MIN <= score <= EXPERT_SCORE_MAX:
            raise ScoreOutOfRange(
                f"score {score} outside [{EXPERT_SCORE_MIN}, {EXPERT_SCORE_MAX}]"
            )
        explanation = (explanation or "").strip()
        if score < 0 and not explanation:
            raise ExplanationRequired("negative evaluations require an explanation")
        with self.store.transaction(write=True) as conn:
            row = self._owned_row(conn, respondent, pair)
            if row["state"] == "finalized":
                raise AlreadyFinalized(f"{pair} is finalized and immutable")
            self.store.update_assignment(conn, row["id"], "answered", score, explanation)
            return Assignment(pair, respondent.id, AssignmentState.ANSWERED, score, explanation)

    def skip(self, respondent: UserRecord, pair: TargetPair) -> Assignment:
        with self.store.transaction(write=True) as conn:
            row = self._owned_row(conn, respondent, pair)
            if row["state"] == "finalized":
                raise AlreadyFinalized(f"{pair} is finalized and immutable")
            if row["state"] == "answered":
                raise AlreadyAnswered(f"{pair} already has an answer; edit it instead")
            self.store.update_assignment(conn, row["id"], "skipped", None, "")
            return Assignment(pair, respondent.id, AssignmentState.SKIPPED)

    def finalize(self, respondent: UserRecord) -> int:
        """Make every answered assignment immutable; all-or-nothing."""
        with self.store.transaction(write=True) as conn:
            rows = self.store.assignments_for(conn, respondent.id)
            blocking = [
                f"{r['pair_a']}-{r['pair_b']}"
                for r in rows
                if r["state"] in ("unanswered", "skipped")
            ]
            if blocking:
                raise UnansweredRemaining(
                    f"{len(blocking)} assignments still need an answer",
                    detail={"pairs": blocking},
                )
            count = 0
            for r in rows:
                if r["state"] == "answered":
                    self.store.update_assignment(
                        conn, r["id"], "finalized", r["score"], r["explanation"]
                    )
                    count += 1
        return count

    def _owned_row(self, conn, respondent: UserRecord, pair: TargetPair):
        row = self.store.assignment_row(conn, pair)
        if row is None or row["user_id"] != respondent.id:
            raise NotYourAssignment(f"{pair} is not assigned to you")
        return row

    def progress(self, respondent: UserRecord) -> dict:
        counts = {state.value: 0 for state in AssignmentState}
        for a in self.assignments(respondent):
            counts[a.state.value] += 1
        return {
            "total": sum(counts.values()),
            "answered": counts["answered"] + counts["finalized"],
            "states": counts,
        }
