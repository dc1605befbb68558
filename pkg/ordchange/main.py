"""FastAPI service exposing detection, profiles, simulation and Delta grids"""
import logging

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .asymptotics import DELTA_SCHEMA, default_theta_grid, delta_grid, delta_max
from .bench import get_benchmark_plan, list_benchmark_plans
from .config import DEFAULT_THREADS
from .detection import DetectionConfig, build_statistic, check_series_length, detect_series
from .errors import ConfigError, InvalidInputError
from .models import DeltaRequest, DetectRequest, ProfileRequest, SimulateRequest
from .processes import simulate
from .services import PROFILE_SCHEMA

logger = logging.getLogger(__name__)

app = FastAPI(
    title="ordchange API",
    description="Change-point detection with the conditional entropy of ordinal patterns",
    version=__version__,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost:3000", "http://localhost:3001"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _unprocessable(exc: Exception) -> HTTPException:
    logger.debug("Rejected request: %s", exc)
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/")
def root():
    """Root endpoint"""
    return {
        "message": "ordchange API",
        "version": __version__,
        "status": "running",
    }


@app.get("/health")
def health_check():
    """Health check endpoint"""
    return {"status": "healthy"}


@app.get("/plans")
def get_plans():
    """Built-in benchmark plans"""
    return {"plans": list_benchmark_plans()}


@app.get("/plans/{name}")
def get_plan(name: str):
    """One built-in benchmark plan"""
    plan = get_benchmark_plan(name)
    if plan is None:
        raise HTTPException(status_code=404, detail=f"Unknown benchmark plan: {name}")
    return plan.to_dict()


@app.post("/detect")
def detect(request: DetectRequest):
    """Change-points of a series"""
    try:
        config = DetectionConfig(
            order=request.order,
            alpha=request.alpha,
            master_seed=request.seed,
            threads=DEFAULT_THREADS,
            statistic=request.statistic,
            delta=request.delta,
        )
        report = detect_series(np.asarray(request.values, dtype=float), config, multi=request.multi)
    except (ConfigError, InvalidInputError) as e:
        raise _unprocessable(e)
    return report.to_dict()


@app.post("/profile")
def profile(request: ProfileRequest):
    """Full statistic profile"""
    try:
        check_series_length(request.values, DetectionConfig(order=request.order))
        statistic = build_statistic(request.stat, request.values, request.order, request.delta)
        first, last = statistic.domain()
        result = statistic.profile(first, last, 0)
    except (ConfigError, InvalidInputError) as e:
        raise _unprocessable(e)
    return {"schema": PROFILE_SCHEMA, **result.to_dict(include_values=True)}


@app.post("/simulate")
def simulate_series(request: SimulateRequest):
    """One realization of a process spec"""
    try:
        series = simulate(request.spec.to_spec(), request.seed, burn_in=request.burn_in)
    except ConfigError as e:
        raise _unprocessable(e)
    return series.to_dict()


@app.post("/delta")
def delta(request: DeltaRequest):
    """Asymptotic Delta over a theta grid"""
    p_seed, q_seed = np.random.SeedSequence(request.seed).spawn(2)
    thetas = default_theta_grid() if request.thetas is None else request.thetas
    try:
        p = request.p.resolve(request.order, p_seed)
        q = request.q.resolve(request.order, q_seed)
        values = delta_grid(p, q, request.gamma, thetas)
        peak = delta_max(p, q, request.gamma)
    except (ConfigError, InvalidInputError) as e:
        raise _unprocessable(e)
    return {
        "schema": DELTA_SCHEMA,
        "order": request.order,
        "gamma": request.gamma,
        "seed": request.seed,
        "theta": [float(t) for t in thetas],
        "delta": values.tolist(),
        "delta_max": peak,
    }
