"""Random scenario generation and JSON persistence.

Generation uses numpy's default PCG64 generator seeded explicitly, so the
same (arguments, seed) pair reproduces the same scenario on any platform.
Draw order is fixed: all sites first (capacity, egress bw, ingress bw,
energy price, egress price, ingress price), then all jobs (window pair,
data size, workload, home site).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .model import DataCenter, Job, Scenario

_MAX_REDRAWS = 100_000


class ScenarioFormatError(ValueError):
    """Raised for malformed scenario files."""


@dataclass(frozen=True)
class Dist:
    """A one-dimensional sampling spec: uniform(lo, hi) or normal(mean, std).

    Normal draws below `floor` are redrawn, keeping positive quantities
    positive.
    """

    kind: str  # "uniform" | "normal"
    p1: float
    p2: float
    floor: float | None = None

    def __post_init__(self):
        if self.kind == "uniform":
            if not self.p1 < self.p2:
                raise ValueError("uniform requires lo < hi")
            if self.floor is not None and self.floor >= self.p2:
                raise ValueError("uniform support empty after truncation")
        elif self.kind == "normal":
            if self.p2 <= 0:
                raise ValueError("normal requires stddev > 0")
            if self.floor is not None and self.floor <= 0:
                raise ValueError("truncation floor must be > 0")
        else:
            raise ValueError(f"unknown distribution kind: {self.kind}")

    def sample(self, rng: np.random.Generator) -> float:
        for _ in range(_MAX_REDRAWS):
            if self.kind == "uniform":
                v = rng.uniform(self.p1, self.p2)
            else:
                v = rng.normal(self.p1, self.p2)
            if self.floor is None or v >= self.floor:
                return float(v)
        raise ValueError("distribution truncation rejected too many draws")


def uniform(lo: float, hi: float) -> Dist:
    return Dist("uniform", lo, hi)


def normal(mean: float, std: float, floor: float = 0.1) -> Dist:
    return Dist("normal", mean, std, floor)


@dataclass(frozen=True)
class DistributionConfig:
    """Per-parameter distributions for sites and jobs."""

    site_capacity: Dist
    site_bw_out: Dist
    site_bw_in: Dist
    site_energy_price: Dist
    site_net_price_out: Dist
    site_net_price_in: Dist
    job_window: Dist       # drawn twice; min -> arrival, max -> deadline
    job_data_size: Dist
    job_workload: Dist

    @classmethod
    def default(cls) -> "DistributionConfig":
        return cls(
            site_capacity=uniform(1, 9),
            site_bw_out=uniform(1, 5),
            site_bw_in=uniform(1, 10),
            site_energy_price=normal(10, 3),
            site_net_price_out=normal(10, 3),
            site_net_price_in=normal(5, 3),
            job_window=uniform(1, 100),
            job_data_size=normal(10, 5),
            job_workload=normal(6, 5),
        )


def generate_scenario(num_sites: int, num_jobs: int,
                      config: DistributionConfig | None = None,
                      seed: int = 0) -> Scenario:
    """Draw a random scenario; identical (args, seed) gives identical output."""
    if num_sites < 1:
        raise ValueError("num_sites must be >= 1")
    if num_jobs < 0:
        raise ValueError("num_jobs must be >= 0")
    cfg = config if config is not None else DistributionConfig.default()
    rng = np.random.default_rng(seed)

    sites = []
    for i in range(num_sites):
        sites.append(DataCenter(
            id=i,
            compute_capacity=cfg.site_capacity.sample(rng),
            bw_out=cfg.site_bw_out.sample(rng),
            bw_in=cfg.site_bw_in.sample(rng),
            energy_price=cfg.site_energy_price.sample(rng),
            net_price_out=cfg.site_net_price_out.sample(rng),
            net_price_in=cfg.site_net_price_in.sample(rng),
        ))

    jobs = []
    for j in range(num_jobs):
        while True:
            t1 = cfg.job_window.sample(rng)
            t2 = cfg.job_window.sample(rng)
            if t1 != t2:
                break
        jobs.append(Job(
            id=j,
            arrival=min(t1, t2),
            deadline=max(t1, t2),
            workload=cfg.job_workload.sample(rng),
            data_size=cfg.job_data_size.sample(rng),
            home_site=int(rng.integers(0, num_sites)),
        ))
    return Scenario(sites=tuple(sites), jobs=tuple(jobs), seed=seed)


_SITE_KEYS = ("id", "C", "B_in", "B_out", "P", "Q_in", "Q_out")
_JOB_KEYS = ("id", "a", "b", "l", "d", "home")


def scenario_to_dict(s: Scenario) -> dict:
    return {
        "sites": [
            {"id": dc.id, "C": dc.compute_capacity, "B_in": dc.bw_in,
             "B_out": dc.bw_out, "P": dc.energy_price,
             "Q_in": dc.net_price_in, "Q_out": dc.net_price_out}
            for dc in s.sites
        ],
        "jobs": [
            {"id": j.id, "a": j.arrival, "b": j.deadline, "l": j.workload,
             "d": j.data_size, "home": j.home_site}
            for j in s.jobs
        ],
        "seed": s.seed,
    }


def _check_keys(obj: dict, allowed, required, what: str) -> None:
    for k in required:
        if k not in obj:
            raise ScenarioFormatError(f"missing field: {k}" if what == "scenario"
                                      else f"missing field: {what}.{k}")
    for k in obj:
        if k not in allowed:
            raise ScenarioFormatError(f"unknown field: {what}.{k}"
                                      if what != "scenario"
                                      else f"unknown field: {k}")


def scenario_from_dict(data: dict) -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioFormatError("scenario file must hold a JSON object")
    _check_keys(data, ("sites", "jobs", "seed"), ("sites", "jobs"), "scenario")
    sites = []
    for raw in data["sites"]:
        _check_keys(raw, _SITE_KEYS, _SITE_KEYS, "site")
        try:
            sites.append(DataCenter(
                id=int(raw["id"]), compute_capacity=float(raw["C"]),
                bw_in=float(raw["B_in"]), bw_out=float(raw["B_out"]),
                energy_price=float(raw["P"]), net_price_in=float(raw["Q_in"]),
                net_price_out=float(raw["Q_out"])))
        except (TypeError, ValueError) as exc:
            raise ScenarioFormatError(f"invalid site entry: {exc}") from exc
    jobs = []
    for raw in data["jobs"]:
        _check_keys(raw, _JOB_KEYS, _JOB_KEYS, "job")
        try:
            jobs.append(Job(
                id=int(raw["id"]), arrival=float(raw["a"]),
                deadline=float(raw["b"]), workload=float(raw["l"]),
                data_size=float(raw["d"]), home_site=int(raw["home"])))
        except (TypeError, ValueError) as exc:
            raise ScenarioFormatError(f"invalid job entry: {exc}") from exc
    seed = data.get("seed")
    try:
        return Scenario(sites=tuple(sites), jobs=tuple(jobs),
                        seed=None if seed is None else int(seed))
    except ValueError as exc:
        raise ScenarioFormatError(str(exc)) from exc


def save_scenario(s: Scenario, path) -> None:
    with open(path, "w") as fh:
        json.dump(scenario_to_dict(s), fh, indent=1)
        fh.write("\n")


def load_scenario(path) -> Scenario:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScenarioFormatError(f"not valid JSON: {exc}") from exc
    return scenario_from_dict(data)
