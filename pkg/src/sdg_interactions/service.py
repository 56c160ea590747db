"""HTTP API over the survey engine, analytics and the store.

Graph and results endpoints are public (no account needed to view the
study's progress); everything that mutates state needs a session token,
and curator endpoints additionally need the administrator role. Errors
come back as problem-detail documents ``{"code", "message", "detail"}``.

Results documents are built by :mod:`sdg_interactions.reports` and
serialized with its canonical ``to_json``, so a GET here is byte-equal
to the CLI export for the same store.
"""

from __future__ import annotations

import io
import os
from pathlib import Path

from fastapi import Depends, FastAPI, Header, Request, Response
from fastapi.responses import JSONResponse

from . import reports
from .analytics import SCALE_LABELS, Method
from .catalog import TargetPair, load_catalog, parse_target_id
from .config import AppConfig
from .correlation import read_results_csv, run_indicator_method
from .errors import (
    AlreadyAnswered,
    AlreadyFinalized,
    DuplicateEmail,
    ExplanationRequired,
    FixtureFormatError,
    FormatError,
    InvalidCredentials,
    MalformedId,
    MissingField,
    NoGoalsSelected,
    NotAuthorized,
    NotPending,
    NotYourAssignment,
    ScoreOutOfRange,
    SdgError,
    SelectionLocked,
    TooFewGoals,
    UnansweredRemaining,
    UnknownCurator,
    UnknownGoal,
    UnknownTarget,
    UnknownTargetPrefix,
    UnknownUser,
)
from .indicators import load_indicator_rows
from .store import Store
from .survey import SurveyEngine

_STATUS_BY_ERROR = {
    MalformedId: 400,
    FormatError: 400,
    FixtureFormatError: 400,
    InvalidCredentials: 401,
    NotAuthorized: 403,
    UnknownUser: 404,
    UnknownTarget: 404,
    UnknownGoal: 404,
    UnknownTargetPrefix: 400,
    UnknownCurator: 422,
    MissingField: 422,
    TooFewGoals: 422,
    ScoreOutOfRange: 422,
    ExplanationRequired: 422,
    UnansweredRemaining: 409,
    SelectionLocked: 409,
    NotPending: 409,
    AlreadyAnswered: 409,
    AlreadyFinalized: 409,
    NotYourAssignment: 403,
    NoGoalsSelected: 409,
    DuplicateEmail: 409,
}


def _status_for(exc: SdgError) -> int:
    for cls, status in _STATUS_BY_ERROR.items():
        if isinstance(exc, cls):
            return status
    return 400


def _json_doc(doc) -> Response:
    return Response(content=reports.to_json(doc), media_type="application/json")


def create_app(config: AppConfig | None = None, store: Store | None = None) -> FastAPI:
    config = config or AppConfig.from_env()
    catalog = load_catalog()
    store = store or Store(config.store_path, catalog)
    engine = SurveyEngine(
        store,
        batch_size=config.batch_size,
        goal_min=config.goal_min,
        rng_seed=config.rng_seed,
    )

    if config.admin_email and config.admin_password:
        with store.transaction(write=True) as conn:
            if store.get_user_by_email(conn, config.admin_email) is None:
                store.create_user(
                    conn,
                    name=config.admin_name,
                    email=config.admin_email,
                    password=config.admin_password,
                    is_admin=True,
                    status="approved",
                )

    app = FastAPI(title="SDG target interactions", docs_url=None, redoc_url=None)
    app.state.store = store
    app.state.engine = engine
    app.state.config = config

    @app.exception_handler(SdgError)
    async def _domain_error(request: Request, exc: SdgError):
        return JSONResponse(
            status_code=_status_for(exc),
            content={"code": exc.code, "message": exc.message, "detail": exc.detail},
        )

    def current_user(authorization: str = Header(default="")):
        token = authorization.removeprefix("Bearer ").strip()
        if not token:
            raise InvalidCredentials("missing bearer token")
        with store.transaction() as conn:
            user = store.resolve_session(conn, token)
        if user is None:
            raise InvalidCredentials("invalid or expired session")
        return user

    def current_admin(user=Depends(current_user)):
        if not user.is_admin:
            raise NotAuthorized("administrator role required")
        return user

    def _evaluations(method: str):
        try:
            parsed = Method(method)
        except ValueError:
            raise MalformedId(f"method must be 'expert' or 'indicator', got {method!r}") from None
        if parsed is Method.EXPERT:
            return store.expert_snapshot()
        return store.indicator_snapshot()

    def _pair_from(payload: dict) -> TargetPair:
        if "pair" in payload and isinstance(payload["pair"], str):
            a, _, b = payload["pair"].partition("-")
        else:
            a, b = payload.get("a", ""), payload.get("b", "")
        try:
            return TargetPair(parse_target_id(a, catalog), parse_target_id(b, catalog))
        except ValueError as exc:
            raise MalformedId(str(exc)) from exc

    # -- public ---------------------------------------------------------

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/config")
    def public_config():
        return {
            "goal_min": config.goal_min,
            "batch_size": config.batch_size,
            "scale_labels": {str(k): v for k, v in sorted(SCALE_LABELS.items())},
        }

    @app.get("/api/catalog")
    def catalog_doc():
        return {
            "goals": [
                {"number": g.number, "name": g.name, "color": g.color} for g in catalog.goals
            ],
            "targets": [
                {
                    "id": str(t.id),
                    "goal": t.id.goal,
                    "description": t.description,
                }
                for t in catalog.targets
            ],
        }

    @app.get("/api/graph")
    def graph(method: str, a: int, b: int):
        return _json_doc(reports.graph_document(catalog, _evaluations(method), a, b))

    @app.get("/api/stats")
    def stats(method: str):
        return _json_doc(reports.stats_document(catalog, _evaluations(method)))

    @app.get("/api/results/positive")
    def results_positive(method: str):
        return _json_doc(reports.pairs_document(catalog, _evaluations(method), "positive"))

    @app.get("/api/results/negative")
    def results_negative(method: str):
        return _json_doc(reports.pairs_document(catalog, _evaluations(method), "negative"))

    @app.get("/api/results/intra-goal")
    def results_intra_goal(method: str):
        return _json_doc(reports.intra_goal_document(catalog, _evaluations(method)))

    @app.get("/api/results/targets")
    def results_targets(method: str = "expert"):
        return _json_doc(reports.verdicts_document(catalog, _evaluations(method)))

    @app.get("/api/results/synthesis")
    def results_synthesis():
        from .analytics import synthesize

        report = synthesize(catalog, store.expert_snapshot(), store.indicator_snapshot())
        return _json_doc(reports.synthesis_document(report))

    # -- accounts ---------------------------------------------------------

    @app.post("/api/signup", status_code=201)
    async def signup(request: Request):
        payload = await request.json()
        user = engine.register(payload)
        return {"user": user.to_dict()}

    @app.post("/api/login")
    async def login(request: Request):
        payload = await request.json()
        with store.transaction(write=True) as conn:
            user = store.check_password(
                conn, payload.get("email", ""), payload.get("password", "")
            )
            if user is None:
                raise InvalidCredentials("bad email or password")
            if user.status != "approved" and not user.is_admin:
                raise NotAuthorized("account is pending approval")
            token = store.create_session(conn, user.id, config.session_ttl_hours)
        return {"token": token, "user": user.to_dict()}

    @app.get("/api/users/pending")
    def users_pending(admin=Depends(current_admin)):
        with store.transaction() as conn:
            return {"users": [u.to_dict() for u in store.pending_users(conn)]}

    @app.post("/api/users/{user_id}/approve")
    def approve_user(user_id: int, admin=Depends(current_admin)):
        return {"user": engine.approve(admin, user_id).to_dict()}

    @app.get("/api/notifications")
    def notifications(admin=Depends(current_admin)):
        with store.transaction() as conn:
            return {"notifications": store.notifications_for(conn, admin.id)}

    # -- survey -----------------------------------------------------------

    @app.post("/api/goals/select")
    async def select_goals(request: Request, user=Depends(current_user)):
        payload = await request.json()
        goals = engine.select_goals(user, payload.get("goals", []))
        return {"goals": goals}

    @app.post("/api/batch")
    async def batch(request: Request, user=Depends(current_user)):
        try:
            payload = await request.json()
        except Exception:
            payload = {}
        size = payload.get("size")
        result = engine.generate_batch(user, size=size)
        return {
            "assignments": [a.to_dict() for a in result.assignments],
            "exhausted": result.exhausted,
        }

    @app.get("/api/assignments")
    def assignments(user=Depends(current_user)):
        return {
            "assignments": [a.to_dict() for a in engine.assignments(user)],
            "progress": engine.progress(user),
        }

    @app.post("/api/answers")
    async def answer(request: Request, user=Depends(current_user)):
        payload = await request.json()
        score = payload.get("score")
        if not isinstance(score, int) or isinstance(score, bool):
            raise ScoreOutOfRange(f"score must be an integer, got {score!r}")
        assignment = engine.submit_score(
            user, _pair_from(payload), score, payload.get("explanation", "")
        )
        return {"assignment": assignment.to_dict()}

    @app.post("/api/answers/skip")
    async def skip(request: Request, user=Depends(current_user)):
        payload = await request.json()
        assignment = engine.skip(user, _pair_from(payload))
        return {"assignment": assignment.to_dict()}

    @app.post("/api/answers/finalize")
    def finalize(user=Depends(current_user)):
        return {"finalized": engine.finalize(user)}

    # -- indicator import --------------------------------------------------

    @app.post("/api/import/indicator")
    async def import_indicator(request: Request, admin=Depends(current_admin)):
        body = (await request.body()).decode("utf-8", errors="replace")
        count = import_indicator_text(store, body)
        return {"loaded": count, "version": store.indicator_version()}

    # Optional same-origin hosting of the built web client.
    static_dir = os.environ.get("STATIC_DIR", "").strip()
    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def import_indicator_text(store: Store, text: str) -> int:
    """Load indicator results from CSV text: either the classified-pairs
    export or a raw indicator time-series file (the pipeline then runs).
    Atomic: the previous results survive any parse error."""
    import csv as _csv

    header = text.splitlines()[0].strip() if text.strip() else ""
    columns = [c.strip() for c in header.split(",")]
    if columns[:3] == ["target_a", "target_b", "interaction"]:
        results = read_results_csv(io.StringIO(text), store.catalog, source="<upload>")
    elif columns[:3] == ["indicator_code", "year", "value"]:
        reader = _csv.DictReader(io.StringIO(text))
        series, _report = load_indicator_rows(
            ((reader.line_num, row) for row in reader), store.catalog, source="<upload>"
        )
        results = run_indicator_method(series, store.catalog)
    else:
        raise FormatError(
            "unrecognized upload: expected a classified-pairs table or an indicator CSV",
            detail={"header": header},
        )
    return store.replace_indicator_results(results)


def main(argv=None):
    """Run the API with uvicorn; flags mirror the environment config."""
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="sdgi-serve", description=main.__doc__)
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--store", default=None, help="sqlite path (default in-memory)")
    args = parser.parse_args(argv)
    config = AppConfig.from_env()
    if args.port is not None:
        config.port = args.port
    if args.store is not None:
        config.store_path = args.store
    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)


if __name__ == "__main__":
    main()
