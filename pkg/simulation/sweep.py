"""
Monte-Carlo sweep orchestration.

Each axis point draws `trials` independent user realizations, runs every
requested method on each, and aggregates sum-rate and Jain index. Trials
run sequentially or on a process pool driven by asyncio.
"""

import asyncio
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.channel.params import ScenarioConfig
from src.channel.scenario import sample_scenario
from src.rates.constants import PhyConstants
from src.solvers import Method, SolverOptions, build_instance, solve, solve_with_fairness
from src.utils.config import AppConfig
from src.utils.logger import get_logger

from .metrics import jain_index, mean_and_stderr
from .seeds import trial_seed


logger = get_logger("sweep")

AXES = ("fov", "users", "blockage", "radius")
METHOD_NAMES = tuple(m.value for m in Method)


class SweepConfig(BaseModel):
    """One sweep request."""

    axis: Literal["fov", "users", "blockage", "radius"] = "fov"
    values: list[float] = Field(default_factory=lambda: [50.0])
    trials: int = Field(default=1000, ge=1)
    methods: list[str] = Field(default_factory=lambda: ["co-noma", "noma", "baseline2"])
    rng_seed: int = Field(default=0, ge=0, lt=2**64)
    output: str = "results/sweep"
    shadowing: bool = True
    workers: int = Field(default=1, ge=1)
    fairness: bool = True
    extra_fovs: list[float] = Field(default_factory=list)

    @field_validator("values")
    @classmethod
    def values_sorted(cls, v: list[float]) -> list[float]:
        if not v:
            raise ValueError("at least one axis value is required")
        if any(b < a for a, b in zip(v, v[1:])):
            raise ValueError("axis values must be sorted ascending")
        return v

    @field_validator("methods")
    @classmethod
    def methods_known(cls, v: list[str]) -> list[str]:
        unknown = [m for m in v if m not in METHOD_NAMES]
        if unknown:
            raise ValueError(f"unknown methods: {unknown}")
        return v

    @model_validator(mode="after")
    def values_in_range(self) -> "SweepConfig":
        for value in self.values:
            if self.axis == "users" and (value < 1 or value != int(value)):
                raise ValueError("user counts must be positive integers")
            if self.axis == "blockage" and not 0 <= value <= 1:
                raise ValueError("blockage rates must lie in [0, 1]")
            if self.axis == "fov" and not 0 < value <= 90:
                raise ValueError("FoV values must lie in (0, 90]")
            if self.axis == "radius" and value <= 0:
                raise ValueError("cell radii must be positive")
        if self.extra_fovs and self.axis != "radius":
            raise ValueError("extra_fovs applies to radius sweeps only")
        return self


class PointResult(BaseModel):
    """Aggregated metrics of one (axis value, method)."""

    axis_value: float
    method: str
    mean_sum_rate: float
    mean_jain: float
    stderr_sum_rate: float
    stderr_jain: float
    trials: int


class SweepResult(BaseModel):
    """All points of a sweep plus provenance."""

    axis: str
    rng_seed: int
    config: dict[str, Any]
    base: dict[str, Any]
    points: list[PointResult] = Field(default_factory=list)
    notices: list[str] = Field(default_factory=list)


@dataclass(frozen=True)
class TrialTask:
    """Everything a worker needs to run one trial."""

    axis_index: int
    trial_index: int
    seed: int
    scenario: ScenarioConfig
    phy: PhyConstants
    options: SolverOptions
    methods: tuple[str, ...]
    fairness: bool


@dataclass(frozen=True)
class TrialOutcome:
    axis_index: int
    trial_index: int
    sum_rates: dict[str, float]
    jains: dict[str, float]


def run_trial(task: TrialTask) -> TrialOutcome:
    """Sample one realization and run every method on it."""
    scenario, channels = sample_scenario(task.scenario, task.seed)
    instance = build_instance(channels, task.phy, scenario.rf)
    sum_rates, jains = {}, {}
    for method in task.methods:
        if task.fairness:
            report, _ = solve_with_fairness(method, instance, task.options)
        else:
            report = solve(method, instance, options=task.options)
        sum_rates[method] = report.sum_rate
        jains[method] = jain_index(report.user_rates(instance))
    return TrialOutcome(task.axis_index, task.trial_index, sum_rates, jains)


def scenario_for(base: ScenarioConfig, axis: str, value: float, shadowing: bool) -> ScenarioConfig:
    """Base scenario with one axis parameter replaced."""
    vlc, rf = base.vlc, replace(base.rf, shadowing=shadowing)
    cell_radius, num_users, blockage = base.cell_radius, base.num_users, base.blockage_rate
    if axis == "fov":
        vlc = replace(vlc, fov_semiangle=value)
    elif axis == "users":
        num_users = int(value)
    elif axis == "blockage":
        blockage = value
    elif axis == "radius":
        cell_radius = value
    return ScenarioConfig(
        vlc=vlc, rf=rf, cell_radius=cell_radius, num_users=num_users, blockage_rate=blockage
    )


class SweepSimulation:
    """Monte-Carlo sweep with optional process-pool execution."""

    def __init__(self, config: SweepConfig, app_config: Optional[AppConfig] = None):
        self.config = config
        self.app_config = app_config or AppConfig()
        self.activity_log: list[dict] = []
        self.notices: list[str] = []
        self.trials_run = 0
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None

    def log(self, event_type: str, message: str, **kwargs) -> None:
        """Log activity."""
        entry = {"event": event_type, "message": message, **kwargs}
        self.activity_log.append(entry)
        logger.debug(event_type, message, **kwargs)

    def _variants(self) -> list[tuple[Optional[float], str]]:
        """(FoV override, label suffix) pairs; one plain variant unless extra FoVs are set."""
        variants: list[tuple[Optional[float], str]] = [(None, "")]
        for fov in self.config.extra_fovs:
            variants.append((fov, f"@fov={fov:g}"))
        return variants

    def _methods_for(self, scenario: ScenarioConfig, value: float) -> tuple[str, ...]:
        methods = tuple(self.config.methods)
        pairs = (scenario.num_users + 1) // 2
        limit = self.app_config.solver.exhaustive_max_pairs
        if Method.EXHAUSTIVE.value in methods and pairs > limit:
            notice = (
                f"exhaustive excluded at {self.config.axis}={value:g}: "
                f"{pairs} pairs exceed the limit of {limit}"
            )
            self.notices.append(notice)
            logger.warning("EXHAUSTIVE_EXCLUDED", notice, pairs=pairs, limit=limit)
            methods = tuple(m for m in methods if m != Method.EXHAUSTIVE.value)
        return methods

    def _tasks(self) -> list[tuple[int, float, str, tuple[str, ...], list[TrialTask]]]:
        """One entry per (axis index, variant) with its trial tasks."""
        base = self.app_config.scenario
        points = []
        for axis_index, value in enumerate(self.config.values):
            for fov, suffix in self._variants():
                scenario = scenario_for(base, self.config.axis, value, self.config.shadowing)
                if fov is not None:
                    scenario = replace(scenario, vlc=replace(scenario.vlc, fov_semiangle=fov))
                methods = self._methods_for(scenario, value)
                tasks = [
                    TrialTask(
                        axis_index=axis_index,
                        trial_index=t,
                        seed=trial_seed(self.config.rng_seed, axis_index, t),
                        scenario=scenario,
                        phy=self.app_config.phy,
                        options=self.app_config.solver,
                        methods=methods,
                        fairness=self.config.fairness,
                    )
                    for t in range(self.config.trials)
                ]
                points.append((axis_index, value, suffix, methods, tasks))
        return points

    def _aggregate(self, value: float, suffix: str, methods, outcomes: list[TrialOutcome]) -> list[PointResult]:
        outcomes = sorted(outcomes, key=lambda o: o.trial_index)
        results = []
        for method in methods:
            mean_rate, se_rate = mean_and_stderr([o.sum_rates[method] for o in outcomes])
            mean_jain, se_jain = mean_and_stderr([o.jains[method] for o in outcomes])
            result = PointResult(
                axis_value=value,
                method=method + suffix,
                mean_sum_rate=mean_rate,
                mean_jain=mean_jain,
                stderr_sum_rate=se_rate,
                stderr_jain=se_jain,
                trials=len(outcomes),
            )
            logger.log_sweep_point(
                self.config.axis, value, result.method, mean_rate, mean_jain, len(outcomes)
            )
            results.append(result)
        return results

    def _result(self, points: list[PointResult]) -> SweepResult:
        return SweepResult(
            axis=self.config.axis,
            rng_seed=self.config.rng_seed,
            config=self.config.model_dump(),
            base=json.loads(
                json.dumps(
                    {
                        "scenario": asdict(self.app_config.scenario),
                        "phy": asdict(self.app_config.phy),
                        "solver": asdict(self.app_config.solver),
                    }
                )
            ),
            points=points,
            notices=list(self.notices),
        )

    def _start(self) -> None:
        self.start_time = time.perf_counter()
        self.notices = []
        self.log(
            "SWEEP_START",
            f"{self.config.axis} sweep over {len(self.config.values)} values, "
            f"{self.config.trials} trials each",
            workers=self.config.workers,
        )

    def _finish(self) -> None:
        self.end_time = time.perf_counter()
        duration_ms = (self.end_time - self.start_time) * 1000
        self.log("SWEEP_COMPLETED", f"Sweep finished in {duration_ms:.2f}ms", trials=self.trials_run)

    def run(self) -> SweepResult:
        """Run the sweep (sequential, or parallel when workers > 1)."""
        if self.config.workers > 1:
            return asyncio.run(self.run_async())

        self._start()
        points: list[PointResult] = []
        for axis_index, value, suffix, methods, tasks in self._tasks():
            outcomes = [run_trial(task) for task in tasks]
            self.trials_run += len(outcomes)
            points.extend(self._aggregate(value, suffix, methods, outcomes))
        self._finish()
        return self._result(points)

    async def run_async(self) -> SweepResult:
        """Run every trial on a process pool and aggregate in trial order."""
        self._start()
        loop = asyncio.get_running_loop()
        points: list[PointResult] = []
        with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
            for axis_index, value, suffix, methods, tasks in self._tasks():
                futures = [loop.run_in_executor(pool, run_trial, task) for task in tasks]
                outcomes = await asyncio.gather(*futures)
                self.trials_run += len(outcomes)
                self.log("POINT_COMPLETED", f"{self.config.axis}={value:g}{suffix} done")
                points.extend(self._aggregate(value, suffix, methods, list(outcomes)))
        self._finish()
        return self._result(points)

    def get_performance_stats(self) -> dict:
        """Get performance statistics."""
        if not self.start_time or not self.end_time:
            return {}
        duration_ms = (self.end_time - self.start_time) * 1000
        return {
            "total_duration_ms": round(duration_ms, 2),
            "total_trials": self.trials_run,
            "avg_trial_ms": round(duration_ms / max(self.trials_run, 1), 2),
            "parallel_mode": self.config.workers > 1,
        }


def run_sweep(config: SweepConfig, app_config: Optional[AppConfig] = None) -> SweepResult:
    """Run a sweep and return its aggregated result."""
    return SweepSimulation(config, app_config).run()
