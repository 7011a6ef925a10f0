"""HTTP API for distances, recognition and template CRUD.

Endpoints:
    POST /api/distance   {f, g, n?, mode?}        -> DissimilarityReport
    POST /api/recognize  {gesture, n?, mode?}     -> RecognitionResult
    GET  /api/templates                           -> {templates: [...]}
    PUT  /api/templates/{id}   {label, points}    -> stored template
    DELETE /api/templates/{id}                    -> 204

Every non-2xx response body is one error object {code, message, detail}.
The store is persisted to STORE_PATH after each mutation; a static
directory (the sketchpad build) can be mounted at /.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .errors import (EmptyStore, MalformedGesture, ShapeError, ZeroDelta)
from .ftl import ftl, wftl
from .jsonio import gesture_from_obj, gesture_to_obj, points_from_obj
from .recognizer import (DEFAULT_RESAMPLE_N, Template, TemplateStore,
                         recognize, resample_uniform, store_load, store_save)


def _error(status: int, code: str, message: str, detail=None) -> JSONResponse:
    body = {"code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)


def _gesture_error(exc: ShapeError) -> JSONResponse:
    detail = None
    if isinstance(exc, (ZeroDelta, MalformedGesture)) and exc.index is not None:
        detail = {"point_index": exc.index}
    return _error(400, "invalid_gesture", str(exc), detail)


async def _read_body(request: Request) -> tuple[dict | None, JSONResponse | None]:
    try:
        body = await request.json()
    except Exception:
        return None, _error(400, "invalid_body", "request body is not JSON")
    if not isinstance(body, dict):
        return None, _error(400, "invalid_body", "body must be an object")
    return body, None


def _parse_common(body: dict) -> tuple[int, str, JSONResponse | None]:
    n = body.get("n", DEFAULT_RESAMPLE_N)
    mode = body.get("mode", "uniform")
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        return 0, "", _error(422, "invalid_n",
                             f"'n' must be an integer >= 2, got {n!r}")
    if mode not in ("uniform", "weighted"):
        return 0, "", _error(400, "invalid_body",
                             f"'mode' must be uniform or weighted, got {mode!r}")
    return n, mode, None


def create_app(store_path: str | Path, static_dir: str | Path | None = None,
               cors_origins: tuple[str, ...] = ("*",)) -> FastAPI:
    app = FastAPI(title="ftlshape", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=list(cors_origins),
                       allow_methods=["*"], allow_headers=["*"])

    store_path = Path(store_path)
    store = store_load(store_path) if store_path.exists() else TemplateStore()
    app.state.store = store
    app.state.store_path = store_path

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc):
        return _error(400, "invalid_body", "request body does not parse")

    @app.exception_handler(ShapeError)
    async def on_shape_error(request: Request, exc: ShapeError):
        return _gesture_error(exc)

    @app.post("/api/distance")
    async def distance(request: Request):
        body, err = await _read_body(request)
        if err is not None:
            return err
        n, mode, err = _parse_common(body)
        if err is not None:
            return err
        try:
            f, _, _ = gesture_from_obj(body.get("f"))
            g, _, _ = gesture_from_obj(body.get("g"))
            f = resample_uniform(f, n)
            g = resample_uniform(g, n)
            report = ftl(f, g) if mode == "uniform" else wftl(f, g)
        except ShapeError as exc:
            return _gesture_error(exc)
        return report.to_json()

    @app.post("/api/recognize")
    async def recognize_endpoint(request: Request):
        body, err = await _read_body(request)
        if err is not None:
            return err
        n, mode, err = _parse_common(body)
        if err is not None:
            return err
        try:
            gesture, _, _ = gesture_from_obj(body.get("gesture"))
            result = recognize(gesture, app.state.store, n=n, mode=mode)
        except EmptyStore as exc:
            return _error(409, "empty_store", str(exc))
        except ShapeError as exc:
            return _gesture_error(exc)
        return result.to_json()

    @app.get("/api/templates")
    async def list_templates():
        return {"templates": [gesture_to_obj(t.gesture, t.id, t.label)
                              for t in app.state.store.all()]}

    @app.put("/api/templates/{template_id}")
    async def put_template(template_id: str, request: Request):
        body, err = await _read_body(request)
        if err is not None:
            return err
        label = body.get("label")
        if not isinstance(label, str) or not label:
            return _error(400, "invalid_body", "'label' must be a nonempty string")
        try:
            gesture = points_from_obj(body.get("points"))
        except ShapeError as exc:
            return _gesture_error(exc)
        app.state.store.put(Template(template_id, label, gesture))
        store_save(app.state.store, app.state.store_path)
        return gesture_to_obj(gesture, template_id, label)

    @app.delete("/api/templates/{template_id}")
    async def delete_template(template_id: str):
        if not app.state.store.remove(template_id):
            return _error(404, "unknown_template",
                          f"no template with id {template_id!r}")
        store_save(app.state.store, app.state.store_path)
        return Response(status_code=204)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="static")

    return app
