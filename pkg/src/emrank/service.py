"""HTTP API over one knowledge base file.

Read endpoints serve the KB, its graph and the criterion registry;
/api/rank and /api/diff are stateless transforms of the request body plus
the KB snapshot taken at request start. Mutations (adding a technique,
updating its values) are serialized by a lock and persisted through the
atomic whole-file rewrite of the KB store.

Errors are JSON bodies {code, message, path} with 400 for malformed
bodies, 404 for unknown ids, 409 for duplicates and 422 for semantic
violations.
"""

from __future__ import annotations

import json
import os
import threading

from fastapi import FastAPI, Request, Response
from fastapi.responses import PlainTextResponse

from .errors import DataError, UsageError, WorkbenchError
from .jsonutil import canonical_bytes
from .kb import (
    KnowledgeBase,
    TechniqueInstance,
    add_instance,
    export_graph,
    kb_to_json,
    load_kb,
    save_kb,
    update_instance_values,
)
from .resources import bundled_scenario_payload
from .scenarios import (
    diff_rankings,
    diff_to_json,
    report_from_json,
    report_to_json,
    run_scenario,
    scenario_from_json,
)


def _status_for(exc: WorkbenchError) -> int:
    if exc.code in ("SYNTAX_ERROR", "BAD_DOCUMENT", "BAD_BODY"):
        return 400
    if exc.code == "UNKNOWN_ID":
        return 404
    if exc.code == "DUPLICATE_ID":
        return 409
    return 422


def _error_response(exc: WorkbenchError) -> Response:
    body = {"code": exc.code, "message": exc.message, "path": exc.path}
    return Response(
        content=canonical_bytes(body),
        status_code=_status_for(exc),
        media_type="application/json",
    )


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=canonical_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


async def _read_body(request: Request):
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise DataError(f"request body is not valid JSON: {exc.msg}", code="BAD_BODY") from exc


def create_app(kb_path: str | os.PathLike) -> FastAPI:
    app = FastAPI(title="emrank", docs_url=None, redoc_url=None)
    app.state.kb = load_kb(kb_path)
    app.state.kb_path = os.fspath(kb_path)
    app.state.write_lock = threading.Lock()

    def snapshot() -> KnowledgeBase:
        return app.state.kb

    def commit(kb: KnowledgeBase) -> None:
        save_kb(kb, app.state.kb_path)
        app.state.kb = kb

    @app.exception_handler(WorkbenchError)
    async def workbench_error_handler(_request, exc: WorkbenchError):
        return _error_response(exc)

    @app.get("/healthz")
    async def healthz():
        return PlainTextResponse("ok")

    @app.get("/api/kb")
    async def get_kb():
        return _json_response(kb_to_json(snapshot()))

    @app.get("/api/kb/graph")
    async def get_graph():
        return _json_response(export_graph(snapshot()))

    @app.get("/api/criteria")
    async def get_criteria():
        kb = snapshot()
        families = [
            {"criteria": [c.id for c in kb.criteria if c.family == family], "id": family}
            for family in kb.families()
        ]
        criteria = [
            {"family": c.family, "id": c.id, "label": c.label, "scale": c.scale_id}
            for c in kb.criteria
        ]
        return _json_response({"criteria": criteria, "families": families})

    @app.post("/api/kb/instances")
    async def post_instance(request: Request):
        payload = await _read_body(request)
        if not isinstance(payload, dict) or not isinstance(payload.get("id"), str):
            raise DataError("body must be an object with a string 'id'", code="BAD_BODY")
        values = payload.get("values") or {}
        if not isinstance(values, dict) or any(not isinstance(v, str) for v in values.values()):
            raise DataError("'values' must map criterion ids to labels", code="BAD_BODY")
        inst = TechniqueInstance(
            id=payload["id"],
            label=payload.get("label") or payload["id"],
            values=dict(values),
        )
        with app.state.write_lock:
            commit(add_instance(snapshot(), inst))
        return _json_response(
            {"id": inst.id, "label": inst.label, "values": {k: inst.values[k] for k in sorted(inst.values)}},
            status_code=201,
        )

    @app.put("/api/kb/instances/{instance_id}/values")
    async def put_values(instance_id: str, request: Request):
        payload = await _read_body(request)
        if not isinstance(payload, dict) or any(
            not isinstance(k, str) or not isinstance(v, str) for k, v in payload.items()
        ):
            raise DataError("body must map criterion ids to labels", code="BAD_BODY")
        with app.state.write_lock:
            kb = update_instance_values(snapshot(), instance_id, payload)
            commit(kb)
        inst = kb.instance(instance_id)
        return _json_response(
            {"id": inst.id, "label": inst.label, "values": {k: inst.values[k] for k in sorted(inst.values)}}
        )

    @app.post("/api/rank")
    async def post_rank(request: Request):
        payload = await _read_body(request)
        scenario = scenario_from_json(payload, snapshot())
        return _json_response(report_to_json(run_scenario(scenario)))

    @app.post("/api/diff")
    async def post_diff(request: Request):
        payload = await _read_body(request)
        if not isinstance(payload, dict) or "before" not in payload or "after" not in payload:
            raise DataError("body must be an object with 'before' and 'after'", code="BAD_BODY")
        kb = snapshot()
        before = _resolve_report(payload["before"], kb, "before")
        after = _resolve_report(payload["after"], kb, "after")
        return _json_response(diff_to_json(diff_rankings(before, after)))

    return app


def _resolve_report(value, kb: KnowledgeBase, context: str):
    """A diff operand is a bundled scenario name, a scenario object, or a
    full report object (recognized by its 'flows' key)."""
    if isinstance(value, str):
        payload = bundled_scenario_payload(value)
        if payload is None:
            raise DataError(f"unknown scenario {value!r}", code="UNKNOWN_ID", path=context)
        return run_scenario(scenario_from_json(payload, kb, context=context))
    if isinstance(value, dict):
        if "flows" in value:
            return report_from_json(value, context=context)
        return run_scenario(scenario_from_json(value, kb, context=context))
    raise DataError(f"{context}: expected a report, a scenario, or a scenario name", code="BAD_BODY")
