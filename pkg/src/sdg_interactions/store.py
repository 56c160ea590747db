"""Embedded transactional store behind a narrow repository interface.

Four models back the system: users (profile, credentials, role, status),
sdg targets (the catalog reference data), user-to-goal selections, and
survey answers (assignment state, score, explanation). Indicator-method
results, sessions and queued notifications live in side tables.

SQLite gives the transactional semantics: file-backed stores open one
connection per transaction (safe under multi-threaded service use, with
WAL and a busy timeout), writes run under ``BEGIN IMMEDIATE`` so batch
generation is atomic with respect to the global assignment pool. A
``:memory:`` store reuses a single lock-guarded connection for tests.
"""

from __future__ import annotations

import hashlib
import json
import secrets
import sqlite3
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

from .analytics import ExpertEvaluations, IndicatorEvaluations
from .catalog import Catalog, TargetPair, load_catalog, parse_target_id
from .correlation import ClassTally, InteractionClass, TargetMethodResult
from .errors import (
    DuplicateEmail,
    ExplanationRequired,
    FormatError,
    ScoreOutOfRange,
    StoreUnavailable,
)

_SCHEMA = """
CREATE TABLE IF NOT EXISTS users (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL,
    email TEXT NOT NULL UNIQUE,
    password_hash TEXT NOT NULL,
    salt TEXT NOT NULL,
    primary_affiliation TEXT NOT NULL DEFAULT '',
    secondary_affiliation TEXT NOT NULL DEFAULT '',
    education TEXT NOT NULL DEFAULT '',
    experience TEXT NOT NULL DEFAULT '',
    acknowledge INTEGER NOT NULL DEFAULT 0,
    curator_id INTEGER REFERENCES users(id),
    is_admin INTEGER NOT NULL DEFAULT 0,
    status TEXT NOT NULL CHECK (status IN ('pending', 'approved')),
    created_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS sdg_targets (
    target_id TEXT PRIMARY KEY,
    goal INTEGER NOT NULL,
    goal_name TEXT NOT NULL,
    goal_color TEXT NOT NULL,
    description TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS user_goals (
    user_id INTEGER NOT NULL REFERENCES users(id),
    goal INTEGER NOT NULL,
    locked INTEGER NOT NULL DEFAULT 0,
    PRIMARY KEY (user_id, goal)
);
CREATE TABLE IF NOT EXISTS survey_answers (
    id INTEGER PRIMARY KEY,
    pair_a TEXT NOT NULL,
    pair_b TEXT NOT NULL,
    user_id INTEGER NOT NULL REFERENCES users(id),
    state TEXT NOT NULL CHECK (state IN ('unanswered', 'skipped', 'answered', 'finalized')),
    score INTEGER,
    explanation TEXT NOT NULL DEFAULT '',
    created_at TEXT NOT NULL,
    updated_at TEXT NOT NULL,
    UNIQUE (pair_a, pair_b)
);
CREATE INDEX IF NOT EXISTS idx_answers_user ON survey_answers(user_id);
CREATE TABLE IF NOT EXISTS indicator_results (
    pair_a TEXT NOT NULL,
    pair_b TEXT NOT NULL,
    interaction TEXT NOT NULL,
    synergies INTEGER NOT NULL DEFAULT 0,
    trade_offs INTEGER NOT NULL DEFAULT 0,
    nonclassified INTEGER NOT NULL DEFAULT 0,
    PRIMARY KEY (pair_a, pair_b)
);
CREATE TABLE IF NOT EXISTS sessions (
    token TEXT PRIMARY KEY,
    user_id INTEGER NOT NULL REFERENCES users(id),
    expires_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS notifications (
    id INTEGER PRIMARY KEY,
    curator_id INTEGER NOT NULL REFERENCES users(id),
    kind TEXT NOT NULL,
    payload TEXT NOT NULL,
    created_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS meta (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
"""


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def hash_password(password: str, salt: str) -> str:
    digest = hashlib.pbkdf2_hmac("sha256", password.encode(), bytes.fromhex(salt), 60_000)
    return digest.hex()


@dataclass(frozen=True)
class UserRecord:
    id: int
    name: str
    email: str
    primary_affiliation: str
    secondary_affiliation: str
    education: str
    experience: str
    acknowledge: bool
    curator_id: int | None
    is_admin: bool
    status: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "email": self.email,
            "primary_affiliation": self.primary_affiliation,
            "secondary_affiliation": self.secondary_affiliation,
            "education": self.education,
            "experience": self.experience,
            "acknowledge": self.acknowledge,
            "is_admin": self.is_admin,
            "status": self.status,
        }


def _user_from_row(row) -> UserRecord:
    return UserRecord(
        id=row["id"],
        name=row["name"],
        email=row["email"],
        primary_affiliation=row["primary_affiliation"],
        secondary_affiliation=row["secondary_affiliation"],
        education=row["education"],
        experience=row["experience"],
        acknowledge=bool(row["acknowledge"]),
        curator_id=row["curator_id"],
        is_admin=bool(row["is_admin"]),
        status=row["status"],
    )


class Store:
    """Repository over SQLite; all mutations go through transactions."""

    def __init__(self, path=":memory:", catalog: Catalog | None = None):
        self.path = str(path)
        self.catalog = catalog or load_catalog()
        self._memory = self.path == ":memory:"
        self._lock = threading.RLock()
        self._conn = None
        try:
            if self._memory:
                self._conn = self._open()
                self._conn.executescript(_SCHEMA)
            else:
                conn = self._open()
                try:
                    conn.executescript(_SCHEMA)
                finally:
                    conn.close()
            with self.transaction(write=True) as conn:
                self._seed_targets(conn)
        except sqlite3.Error as exc:
            raise StoreUnavailable(f"cannot initialize store at {self.path}: {exc}") from exc

    def _open(self):
        # check_same_thread off: in-memory stores share one lock-guarded
        # connection; file stores never share a connection between threads.
        conn = sqlite3.connect(
            self.path, timeout=30.0, isolation_level=None, check_same_thread=False
        )
        conn.row_factory = sqlite3.Row
        conn.execute("PRAGMA foreign_keys = ON")
        if not self._memory:
            conn.execute("PRAGMA journal_mode = WAL")
            conn.execute("PRAGMA busy_timeout = 30000")
        return conn

    @contextmanager
    def transaction(self, write=False):
        if self._memory:
            with self._lock:
                yield from self._run_txn(self._conn, write)
        else:
            conn = self._open()
            try:
                yield from self._run_txn(conn, write)
            finally:
                conn.close()

    @staticmethod
    def _run_txn(conn, write):
        conn.execute("BEGIN IMMEDIATE" if write else "BEGIN DEFERRED")
        try:
            yield conn
        except BaseException:
            conn.rollback()
            raise
        conn.commit()

    def _seed_targets(self, conn):
        count = conn.execute("SELECT COUNT(*) FROM sdg_targets").fetchone()[0]
        if count:
            return
        for target in self.catalog.targets:
            goal = self.catalog.goal(target.id.goal)
            conn.execute(
                "INSERT INTO sdg_targets (target_id, goal, goal_name, goal_color, description)"
                " VALUES (?, ?, ?, ?, ?)",
                (str(target.id), target.id.goal, goal.name, goal.color, target.description),
            )

    # -- users ---------------------------------------------------------

    def create_user(
        self,
        conn,
        *,
        name,
        email,
        password,
        primary_affiliation="",
        secondary_affiliation="",
        education="",
        experience="",
        acknowledge=False,
        curator_id=None,
        is_admin=False,
        status="pending",
    ) -> UserRecord:
        salt = secrets.token_hex(16)
        try:
            cur = conn.execute(
                "INSERT INTO users (name, email, password_hash, salt, primary_affiliation,"
                " secondary_affiliation, education, experience, acknowledge, curator_id,"
                " is_admin, status, created_at)"
                " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    name,
                    email,
                    hash_password(password, salt),
                    salt,
                    primary_affiliation,
                    secondary_affiliation,
                    education,
                    experience,
                    int(acknowledge),
                    curator_id,
                    int(is_admin),
                    status,
                    _now(),
                ),
            )
        except sqlite3.IntegrityError as exc:
            raise DuplicateEmail(f"email {email!r} already registered") from exc
        return self.get_user(conn, cur.lastrowid)

    def get_user(self, conn, user_id) -> UserRecord | None:
        row = conn.execute("SELECT * FROM users WHERE id = ?", (user_id,)).fetchone()
        return _user_from_row(row) if row else None

    def get_user_by_email(self, conn, email) -> UserRecord | None:
        row = conn.execute("SELECT * FROM users WHERE email = ?", (email,)).fetchone()
        return _user_from_row(row) if row else None

    def check_password(self, conn, email, password) -> UserRecord | None:
        row = conn.execute("SELECT * FROM users WHERE email = ?", (email,)).fetchone()
        if row is None:
            return None
        if hash_password(password, row["salt"]) != row["password_hash"]:
            return None
        return _user_from_row(row)

    def set_status(self, conn, user_id, status):
        conn.execute("UPDATE users SET status = ? WHERE id = ?", (status, user_id))

    def admins(self, conn) -> list[UserRecord]:
        rows = conn.execute("SELECT * FROM users WHERE is_admin = 1 ORDER BY id").fetchall()
        return [_user_from_row(r) for r in rows]

    def pending_users(self, conn) -> list[UserRecord]:
        rows = conn.execute(
            "SELECT * FROM users WHERE status = 'pending' ORDER BY id"
        ).fetchall()
        return [_user_from_row(r) for r in rows]

    # -- sessions ------------------------------------------------------

    def create_session(self, conn, user_id, ttl_hours=24) -> str:
        token = secrets.token_hex(24)
        expires = datetime.now(timezone.utc) + timedelta(hours=ttl_hours)
        conn.execute(
            "INSERT INTO sessions (token, user_id, expires_at) VALUES (?, ?, ?)",
            (token, user_id, expires.isoformat(timespec="seconds")),
        )
        return token

    def resolve_session(self, conn, token) -> UserRecord | None:
        row = conn.execute("SELECT * FROM sessions WHERE token = ?", (token,)).fetchone()
        if row is None:
            return None
        if datetime.fromisoformat(row["expires_at"]) < datetime.now(timezone.utc):
            return None
        return self.get_user(conn, row["user_id"])

    # -- goal selection ------------------------------------------------

    def goals_for(self, conn, user_id):
        rows = conn.execute(
            "SELECT goal, locked FROM user_goals WHERE user_id = ? ORDER BY goal", (user_id,)
        ).fetchall()
        return [r["goal"] for r in rows], any(r["locked"] for r in rows)

    def replace_goals(self, conn, user_id, goals):
        conn.execute("DELETE FROM user_goals WHERE user_id = ?", (user_id,))
        for goal in sorted(goals):
            conn.execute(
                "INSERT INTO user_goals (user_id, goal, locked) VALUES (?, ?, 0)",
                (user_id, goal),
            )

    def lock_goals(self, conn, user_id):
        conn.execute("UPDATE user_goals SET locked = 1 WHERE user_id = ?", (user_id,))

    # -- survey answers ------------------------------------------------

    def assigned_pairs(self, conn) -> set[str]:
        rows = conn.execute("SELECT pair_a, pair_b FROM survey_answers").fetchall()
        return {f"{r['pair_a']}|{r['pair_b']}" for r in rows}

    def insert_assignment(self, conn, pair: TargetPair, user_id, state="unanswered",
                          score=None, explanation=""):
        now = _now()
        conn.execute(
            "INSERT INTO survey_answers (pair_a, pair_b, user_id, state, score,"
            " explanation, created_at, updated_at) VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
            (str(pair.a), str(pair.b), user_id, state, score, explanation, now, now),
        )

    def assignment_row(self, conn, pair: TargetPair):
        return conn.execute(
            "SELECT * FROM survey_answers WHERE pair_a = ? AND pair_b = ?",
            (str(pair.a), str(pair.b)),
        ).fetchone()

    def assignments_for(self, conn, user_id):
        return conn.execute(
            "SELECT * FROM survey_answers WHERE user_id = ? ORDER BY id", (user_id,)
        ).fetchall()

    def update_assignment(self, conn, row_id, state, score, explanation):
        conn.execute(
            "UPDATE survey_answers SET state = ?, score = ?, explanation = ?, updated_at = ?"
            " WHERE id = ?",
            (state, score, explanation, _now(), row_id),
        )

    # -- notifications -------------------------------------------------

    def queue_notification(self, conn, curator_id, kind, payload: dict):
        conn.execute(
            "INSERT INTO notifications (curator_id, kind, payload, created_at)"
            " VALUES (?, ?, ?, ?)",
            (curator_id, kind, json.dumps(payload, sort_keys=True), _now()),
        )

    def notifications_for(self, conn, curator_id):
        rows = conn.execute(
            "SELECT * FROM notifications WHERE curator_id = ? ORDER BY id", (curator_id,)
        ).fetchall()
        return [
            {
                "id": r["id"],
                "kind": r["kind"],
                "payload": json.loads(r["payload"]),
                "created_at": r["created_at"],
            }
            for r in rows
        ]

    # -- snapshots for analytics ----------------------------------------

    def expert_snapshot(self) -> ExpertEvaluations:
        """Finalized answers only; in-flight answers are invisible."""
        with self.transaction() as conn:
            rows = conn.execute(
                "SELECT pair_a, pair_b, score, explanation FROM survey_answers"
                " WHERE state = 'finalized'"
            ).fetchall()
        scores = {}
        explanations = {}
        for r in rows:
            pair = self._pair(r["pair_a"], r["pair_b"])
            scores[pair] = r["score"]
            if r["explanation"]:
                explanations[pair] = r["explanation"]
        return ExpertEvaluations(scores=scores, explanations=explanations)

    def indicator_snapshot(self) -> IndicatorEvaluations:
        with self.transaction() as conn:
            loaded = conn.execute(
                "SELECT value FROM meta WHERE key = 'indicator_version'"
            ).fetchone()
            rows = conn.execute(
                "SELECT pair_a, pair_b, interaction, synergies, trade_offs, nonclassified"
                " FROM indicator_results"
            ).fetchall()
        results = {}
        for r in rows:
            pair = self._pair(r["pair_a"], r["pair_b"])
            results[pair] = TargetMethodResult(
                pair,
                InteractionClass(r["interaction"]),
                ClassTally(r["synergies"], r["trade_offs"], r["nonclassified"]),
            )
        return IndicatorEvaluations(results=results, loaded=loaded is not None)

    def _pair(self, a: str, b: str) -> TargetPair:
        return TargetPair(
            parse_target_id(a, self.catalog), parse_target_id(b, self.catalog)
        )

    # -- bulk loads ------------------------------------------------------

    def replace_indicator_results(self, results: dict[TargetPair, TargetMethodResult]) -> int:
        """Atomically replace the indicator-method store; returns rows kept.

        Pairs that are nonclassified with an empty tally are implicit and
        not stored.
        """
        with self.transaction(write=True) as conn:
            conn.execute("DELETE FROM indicator_results")
            count = 0
            for pair in sorted(results, key=lambda p: p.sort_key()):
                r = results[pair]
                if r.tally.total == 0 and r.interaction is InteractionClass.NONCLASSIFIED:
                    continue
                conn.execute(
                    "INSERT INTO indicator_results (pair_a, pair_b, interaction, synergies,"
                    " trade_offs, nonclassified) VALUES (?, ?, ?, ?, ?, ?)",
                    (
                        str(pair.a),
                        str(pair.b),
                        r.interaction.value,
                        r.tally.synergy,
                        r.tally.trade_off,
                        r.tally.nonclassified,
                    ),
                )
                count += 1
            digest = hashlib.sha256(
                json.dumps(
                    sorted(
                        (str(p.a), str(p.b), results[p].interaction.value) for p in results
                    )
                ).encode()
            ).hexdigest()[:16]
            conn.execute(
                "INSERT INTO meta (key, value) VALUES ('indicator_version', ?)"
                " ON CONFLICT(key) DO UPDATE SET value = excluded.value",
                (digest,),
            )
        return count

    def indicator_version(self) -> str | None:
        with self.transaction() as conn:
            row = conn.execute(
                "SELECT value FROM meta WHERE key = 'indicator_version'"
            ).fetchone()
        return row["value"] if row else None

    def import_expert_answers(self, rows, owner_email="expert-fixture@system") -> int:
        """Load externally gathered finalized answers (fixture data).

        ``rows`` yields (pair, score, explanation). All-or-nothing; the
        answers are held by a synthetic approved user so the assignment
        pool treats the pairs as taken.
        """
        with self.transaction(write=True) as conn:
            owner = self.get_user_by_email(conn, owner_email)
            if owner is None:
                owner = self.create_user(
                    conn,
                    name="Expert fixture",
                    email=owner_email,
                    password=secrets.token_hex(8),
                    status="approved",
                )
            count = 0
            for pair, score, explanation in rows:
                if not isinstance(score, int) or not -3 <= score <= 3:
                    raise ScoreOutOfRange(f"score {score!r} for {pair} outside [-3, 3]")
                if score < 0 and not (explanation or "").strip():
                    raise ExplanationRequired(f"negative score for {pair} needs an explanation")
                if self.assignment_row(conn, pair) is not None:
                    raise FormatError(f"pair {pair} already present in the answer store")
                self.insert_assignment(
                    conn, pair, owner.id, state="finalized", score=score,
                    explanation=explanation or "",
                )
                count += 1
        return count
