"""Brute-force assignment oracle for small instances.

Enumerates every job-to-site assignment and keeps the cheapest feasible one.
Feasibility follows the subset form: for every site and every non-empty
subset of its jobs, minimum computation time plus minimum transfer time
must fit inside the subset's arrival-to-deadline span.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .model import TOL, Job, Scenario, job_cost, transfer_time

MAX_JOBS = 8
MAX_SITES = 4


class OracleSizeError(ValueError):
    """Instance exceeds the exponential-enumeration limits."""


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    best_cost: float | None
    best_assignment: tuple[int, ...] | None  # job id -> site id


def site_load_feasible(jobs: list[Job], scenario: Scenario,
                       site_id: int) -> bool:
    """Check every non-empty subset of `jobs` placed at one site."""
    site = scenario.site(site_id)
    n = len(jobs)
    times = [
        j.workload / site.compute_capacity
        + transfer_time(j, scenario.site(j.home_site), site)
        for j in jobs
    ]
    for mask in range(1, 1 << n):
        total = 0.0
        earliest = float("inf")
        latest = float("-inf")
        for k in range(n):
            if mask >> k & 1:
                total += times[k]
                earliest = min(earliest, jobs[k].arrival)
                latest = max(latest, jobs[k].deadline)
        if total > latest - earliest + TOL:
            return False
    return True


def brute_force_oracle(scenario: Scenario) -> OracleResult:
    n, m = len(scenario.jobs), len(scenario.sites)
    if n > MAX_JOBS or m > MAX_SITES:
        raise OracleSizeError(
            f"instance {n} jobs x {m} sites exceeds {MAX_JOBS} x {MAX_SITES}")
    best_cost = None
    best_assignment = None
    for assignment in product(range(m), repeat=n):
        by_site: dict[int, list[Job]] = {}
        for job, sid in zip(scenario.jobs, assignment):
            by_site.setdefault(sid, []).append(job)
        if not all(site_load_feasible(jobs, scenario, sid)
                   for sid, jobs in by_site.items()):
            continue
        cost = 0.0
        for job, sid in zip(scenario.jobs, assignment):
            e, net = job_cost(job, scenario.site(sid),
                              scenario.site(job.home_site),
                              is_remote=sid != job.home_site)
            cost += e + net
        if best_cost is None or cost < best_cost - TOL:
            best_cost = cost
            best_assignment = assignment
    if best_cost is None and n > 0:
        return OracleResult(feasible=False, best_cost=None,
                            best_assignment=None)
    if n == 0:
        return OracleResult(feasible=True, best_cost=0.0, best_assignment=())
    return OracleResult(feasible=True, best_cost=best_cost,
                        best_assignment=best_assignment)
