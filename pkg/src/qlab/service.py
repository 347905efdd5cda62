"""Session-oriented HTTP API driving the engine and oracle.

Each session is an append-only mutation path over a base quiver; undo pops
the path.  Requests touching the same session are serialized by a
per-session lock; the engine itself is pure, so distinct sessions run
fully concurrently.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .gvectors import g_dagger_cluster, walk
from .laurent import poly_text
from .oracle import PrincipalOracle
from .quiver import (
    MalformedQuiver,
    SkewMatrix,
    UnknownVertex,
    quiver_from_obj,
    quiver_to_obj,
)
from .verify import check_sign_coherent, check_unimodular

SESSION_FORMAT = "qlab-session-v1"
DEFAULT_ORACLE_MAX_N = 6


class CreateSessionRequest(BaseModel):
    quiver: dict


class MutateRequest(BaseModel):
    vertex: str


@dataclass
class Session:
    session_id: str
    base: SkewMatrix
    path: list[str] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    oracle: PrincipalOracle | None = None

    def get_oracle(self) -> PrincipalOracle:
        if self.oracle is None:
            self.oracle = PrincipalOracle(self.base)
        return self.oracle


def session_state(session: Session) -> dict:
    node = walk(session.base, session.path)
    cluster = g_dagger_cluster(session.base, session.path)
    sign = check_sign_coherent(cluster.vectors.values())
    uni = check_unimodular(cluster)
    return {
        "session_id": session.session_id,
        "quiver": quiver_to_obj(node.b_at_node),
        "b": node.b_at_node.rows(),
        "path": list(session.path),
        "g_cluster": {l: list(cluster.vectors[l]) for l in session.base.vertices},
        "sign_coherent": {"ok": sign.ok, "witness": sign.witness_obj()},
        "det": uni.det,
    }


def create_app(
    oracle_max_n: int | None = None,
    snapshot_dir: str | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    if oracle_max_n is None:
        oracle_max_n = int(os.environ.get("QLAB_ORACLE_MAX_N", str(DEFAULT_ORACLE_MAX_N)))
    app = FastAPI(title="qlab", version="0.1.0")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()
    snapshots = Path(snapshot_dir) if snapshot_dir else None

    def save_snapshot(session: Session) -> None:
        if snapshots is None:
            return
        snapshots.mkdir(parents=True, exist_ok=True)
        payload = {
            "format": SESSION_FORMAT,
            "session_id": session.session_id,
            "quiver": quiver_to_obj(session.base),
            "path": list(session.path),
        }
        (snapshots / f"{session.session_id}.json").write_text(
            json.dumps(payload, separators=(",", ":"))
        )

    def load_snapshots() -> None:
        if snapshots is None or not snapshots.is_dir():
            return
        for file in sorted(snapshots.glob("*.json")):
            try:
                payload = json.loads(file.read_text())
                if payload.get("format") != SESSION_FORMAT:
                    continue
                base = quiver_from_obj(payload["quiver"])
                session = Session(payload["session_id"], base, list(payload["path"]))
                walk(base, session.path)  # validates the stored path
                sessions[session.session_id] = session
            except (MalformedQuiver, UnknownVertex, KeyError, json.JSONDecodeError):
                continue

    load_snapshots()

    def get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return session

    @app.get("/api/health")
    def health():
        return {"status": "ok", "sessions": len(sessions)}

    @app.post("/api/session")
    def create_session(request: CreateSessionRequest):
        try:
            base = quiver_from_obj(request.quiver)
        except (MalformedQuiver, UnknownVertex) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        session = Session(uuid.uuid4().hex[:12], base)
        with registry_lock:
            sessions[session.session_id] = session
        save_snapshot(session)
        return {"session_id": session.session_id}

    @app.get("/api/session/{session_id}")
    def get_state(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return session_state(session)

    @app.post("/api/session/{session_id}/mutate")
    def mutate_session(session_id: str, request: MutateRequest):
        session = get_session(session_id)
        with session.lock:
            if request.vertex not in session.base.vertices:
                raise HTTPException(
                    status_code=400, detail=f"unknown vertex label {request.vertex!r}"
                )
            session.path.append(request.vertex)
            save_snapshot(session)
            return session_state(session)

    @app.post("/api/session/{session_id}/undo")
    def undo_session(session_id: str):
        session = get_session(session_id)
        with session.lock:
            if session.path:
                session.path.pop()
                save_snapshot(session)
            return session_state(session)

    @app.get("/api/session/{session_id}/oracle")
    def oracle_slot(session_id: str, l: str):
        session = get_session(session_id)
        with session.lock:
            n = len(session.base.vertices)
            if n > oracle_max_n:
                raise HTTPException(
                    status_code=422,
                    detail=f"oracle limited to {oracle_max_n} vertices, quiver has {n}",
                )
            if l not in session.base.vertices:
                raise HTTPException(status_code=400, detail=f"unknown vertex label {l!r}")
            oracle = session.get_oracle()
            variable = oracle.cluster_variable(tuple(session.path), l)
            g = oracle.g_vector(tuple(session.path), l)
            return {
                "slot": l,
                "variable": poly_text(variable),
                "terms": len(variable.terms),
                "g": list(g),
            }

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
