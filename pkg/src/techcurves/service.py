"""Stateless HTTP JSON API for scenario evaluation.

Run with `uvicorn techcurves.service:app`. Every request is evaluated
from scratch against the bundled (or on-disk) scenarios plus the caller's
overrides; nothing is stored server-side, so identical requests always
return identical bodies.
"""

from __future__ import annotations

import copy
import os

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from pathlib import Path
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .errors import ParseError, ScenarioError, ValidationError
from .scenario import (
    DEFAULTS,
    SECTION_NAMES,
    Scenario,
    _merge,
    _validate,
    bundled_scenarios,
    run_full_projection,
)

CORS_ORIGINS_ENV = "TECHCURVES_CORS_ORIGINS"
FRONTEND_DIR_ENV = "TECHCURVES_FRONTEND_DIR"

app = FastAPI(title="techcurves", version=__version__)

app.add_middleware(
    CORSMiddleware,
    allow_origins=os.environ.get(CORS_ORIGINS_ENV, "*").split(","),
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


class ProjectRequest(BaseModel):
    base: str = "base-2030"
    overrides: Dict[str, Any] = {}
    sections: Optional[List[str]] = None


def _deep_update(target: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            _deep_update(target[key], value)
        else:
            target[key] = value
    return target


def _load_base_config(name: str) -> Dict[str, Any]:
    paths = bundled_scenarios()
    if name not in paths:
        raise HTTPException(status_code=404, detail=f"unknown base scenario {name!r}")
    return tomllib.loads(paths[name].read_text())


@app.get("/api/health")
def health() -> Dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.get("/api/scenarios")
def scenarios() -> List[Dict[str, str]]:
    out = []
    for name, path in bundled_scenarios().items():
        raw = tomllib.loads(path.read_text())
        out.append({"name": name, "description": raw.get("description", "")})
    return out


@app.post("/api/project")
def project(request: ProjectRequest) -> JSONResponse:
    raw = _load_base_config(request.base)
    _deep_update(raw, copy.deepcopy(request.overrides))
    try:
        config = _merge(DEFAULTS, raw, "")
        _validate(config)
    except ValidationError as exc:
        raise HTTPException(
            status_code=422,
            detail=[{"field": exc.field, "message": str(exc)}],
        ) from exc
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc

    scenario = Scenario(name=config["name"], base_year=config["base_year"], config=config)
    if request.sections is not None:
        unknown = [s for s in request.sections if s not in SECTION_NAMES]
        if unknown:
            raise HTTPException(
                status_code=422,
                detail=[{"field": "sections", "message": f"unknown section(s) {unknown}"}],
            )
    try:
        results = run_full_projection(scenario, request.sections)
    except ScenarioError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return JSONResponse(content=results)


def _mount_frontend() -> None:
    """Serve the dashboard's static build when one is available."""
    candidates = []
    env_dir = os.environ.get(FRONTEND_DIR_ENV)
    if env_dir:
        candidates.append(Path(env_dir))
    candidates.append(Path(__file__).resolve().parents[2] / "frontend" / "dist")
    for candidate in candidates:
        if candidate.is_dir():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=candidate, html=True), name="frontend")
            return


_mount_frontend()
