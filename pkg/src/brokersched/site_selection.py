"""Per-job candidate screening and target-site choice.

A remote site qualifies only if a single-job transfer plus computation fits
the job's window and the total cost at that site is strictly below the cost
of staying home. Screening is per job and ignores congestion; it is a
necessary, not sufficient, admission condition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import TOL, Assignment, Job, Scenario, comp_time, job_cost, transfer_time

MIN_COST = "min_cost"
RANDOM_CANDIDATE = "random_candidate"


@dataclass(frozen=True)
class CandidateSet:
    job_id: int
    candidates: tuple[int, ...]
    chosen: int


def candidate_sites(job: Job, scenario: Scenario) -> list[int]:
    """Sites (other than home) passing both the time and cost screens."""
    home = scenario.site(job.home_site)
    local_energy, _ = job_cost(job, home, home, is_remote=False)
    window = job.deadline - job.arrival
    out = []
    for site in scenario.sites:
        if site.id == job.home_site:
            continue
        t = comp_time([job.workload], site) + transfer_time(job, home, site)
        if t > window + TOL:
            continue
        energy, network = job_cost(job, site, home, is_remote=True)
        if energy + network < local_energy - TOL:
            out.append(site.id)
    return out


def select_site(job: Job, candidates: list[int], scenario: Scenario,
                policy: str = RANDOM_CANDIDATE,
                rng: np.random.Generator | None = None) -> Assignment:
    """Pick the target site under the given policy.

    min_cost takes the cheapest candidate (ties: lowest site id);
    random_candidate draws uniformly from the candidate set. An empty
    candidate set keeps the job at its home site.
    """
    if not candidates:
        return Assignment(job_id=job.id, target_site=job.home_site,
                          is_remote=False)
    home = scenario.site(job.home_site)
    if policy == MIN_COST:
        best = min(candidates,
                   key=lambda sid: (sum(job_cost(job, scenario.site(sid),
                                                 home, True)), sid))
        return Assignment(job_id=job.id, target_site=best, is_remote=True)
    if policy == RANDOM_CANDIDATE:
        if rng is None:
            rng = np.random.default_rng(0)
        pick = candidates[int(rng.integers(0, len(candidates)))]
        return Assignment(job_id=job.id, target_site=pick, is_remote=True)
    raise ValueError(f"unknown policy: {policy}")


def assign_jobs(scenario: Scenario, policy: str = RANDOM_CANDIDATE,
                seed: int = 0) -> list[Assignment]:
    """Screen and place every job, in job-id order, with one seeded RNG."""
    rng = np.random.default_rng(seed)
    out = []
    for job in scenario.jobs:
        cands = candidate_sites(job, scenario)
        out.append(select_site(job, cands, scenario, policy, rng))
    return out
