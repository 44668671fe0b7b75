"""Per-site computation scheduling.

The proposed path mirrors time about the latest deadline T at the site:
deadlines become release times and a preemptive shortest-remaining-time
pass minimizes average completion on the mirrored axis, which pushes every
forward start as late as possible. The baseline path is plain
non-preemptive FCFS with an earliest-deadline tie rule.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .model import TOL, DataCenter, Interval, Job

_INF = float("inf")


@dataclass(frozen=True)
class ReversedJob:
    job_id: int
    rev_arrival: float
    rev_deadline: float
    proc: float


@dataclass
class CompSchedule:
    """Forward-time result of one site's computation pass."""

    horizon_end: float
    segments: dict[int, list[Interval]] = field(default_factory=dict)
    start_times: dict[int, float] = field(default_factory=dict)
    rejected: list[int] = field(default_factory=list)


def reverse_transform(jobs_at_site: list[Job], site: DataCenter) -> list[ReversedJob]:
    """Mirror each job about T = max deadline at the site."""
    if not jobs_at_site:
        return []
    horizon = max(j.deadline for j in jobs_at_site)
    return [
        ReversedJob(job_id=j.id,
                    rev_arrival=horizon - j.deadline,
                    rev_deadline=horizon - j.arrival,
                    proc=j.workload / site.compute_capacity)
        for j in jobs_at_site
    ]


def _srpt_pass(rev_jobs: list[ReversedJob]):
    """Preemptive SRPT on one unit-rate machine over the reversed axis.

    Returns (completions, segments) in reversed time. Preemption happens
    only at arrivals/completions, so segment counts stay finite. Ties on
    remaining time break toward the lower job id.
    """
    completions: dict[int, float] = {}
    segments: dict[int, list[tuple[float, float]]] = {rj.job_id: [] for rj in rev_jobs}
    pending = sorted(rev_jobs, key=lambda rj: (rj.rev_arrival, rj.job_id))
    idx = 0
    ready: list[tuple[float, int]] = []  # (remaining, job_id)
    remaining = {rj.job_id: rj.proc for rj in rev_jobs}
    now = 0.0
    n = len(pending)
    while idx < n or ready:
        if not ready:
            now = max(now, pending[idx].rev_arrival)
        while idx < n and pending[idx].rev_arrival <= now + TOL:
            rj = pending[idx]
            heapq.heappush(ready, (remaining[rj.job_id], rj.job_id))
            idx += 1
        rem, jid = heapq.heappop(ready)
        next_arrival = pending[idx].rev_arrival if idx < n else _INF
        run = min(rem, next_arrival - now)
        segs = segments[jid]
        if segs and abs(segs[-1][1] - now) <= TOL:
            segs[-1] = (segs[-1][0], now + run)
        else:
            segs.append((now, now + run))
        now += run
        if run >= rem - TOL:
            completions[jid] = now
        else:
            heapq.heappush(ready, (rem - run, jid))
    return completions, segments


def _edf_pass(rev_jobs: list[ReversedJob], eff_deadline: dict[int, float]):
    """Preemptive EDF on the reversed axis, priority by effective deadline.

    Feasibility-optimal on one machine with release times, so it certifies
    whether the current job set can meet its deadlines at all.
    """
    completions: dict[int, float] = {}
    segments: dict[int, list[tuple[float, float]]] = {rj.job_id: [] for rj in rev_jobs}
    pending = sorted(rev_jobs, key=lambda rj: (rj.rev_arrival, rj.job_id))
    idx = 0
    ready: list[tuple[float, int]] = []  # (effective deadline, job_id)
    remaining = {rj.job_id: rj.proc for rj in rev_jobs}
    now = 0.0
    n = len(pending)
    while idx < n or ready:
        if not ready:
            now = max(now, pending[idx].rev_arrival)
        while idx < n and pending[idx].rev_arrival <= now + TOL:
            rj = pending[idx]
            heapq.heappush(ready, (eff_deadline[rj.job_id], rj.job_id))
            idx += 1
        dl, jid = heapq.heappop(ready)
        next_arrival = pending[idx].rev_arrival if idx < n else _INF
        run = min(remaining[jid], next_arrival - now)
        segs = segments[jid]
        if segs and abs(segs[-1][1] - now) <= TOL:
            segs[-1] = (segs[-1][0], now + run)
        else:
            segs.append((now, now + run))
        now += run
        remaining[jid] -= run
        if remaining[jid] <= TOL:
            completions[jid] = now
        else:
            heapq.heappush(ready, (dl, jid))
    return completions, segments


def _worst_violator(active, completions, eff_deadline):
    """Job id with the largest deadline violation (ties: lowest id), or None."""
    worst_id, worst_violation = None, 0.0
    for rj in active:
        violation = completions[rj.job_id] - eff_deadline[rj.job_id]
        if violation <= TOL:
            continue
        if (worst_id is None or violation > worst_violation + TOL
                or (abs(violation - worst_violation) <= TOL
                    and rj.job_id < worst_id)):
            worst_id, worst_violation = rj.job_id, violation
    return worst_id


def _total_violation(active, completions, eff_deadline) -> float:
    return sum(max(0.0, completions[rj.job_id] - eff_deadline[rj.job_id])
               for rj in active)


def _pick_rejection(active, eff_deadline):
    """Choose the job whose removal best restores EDF feasibility.

    Tries every single removal; prefers one that leaves the rest feasible,
    then the one minimizing the residual violation, then the lowest id.
    """
    best = None
    for victim in active:
        rest = [rj for rj in active if rj.job_id != victim.job_id]
        if not rest:
            return victim.job_id
        completions, _ = _edf_pass(rest, eff_deadline)
        residual = _total_violation(rest, completions, eff_deadline)
        key = (residual > TOL, residual, victim.job_id)
        if best is None or key < best[0]:
            best = (key, victim.job_id)
    return best[1]


def srtf_schedule(rev_jobs: list[ReversedJob], horizon_end: float,
                  min_lead: dict[int, float] | None = None) -> CompSchedule:
    """Schedule the reversed instance, rejecting jobs that cannot fit.

    A reversed completion past the reversed deadline means the forward start
    would precede the job's arrival. Remote jobs additionally need room for
    their minimal transfer (`min_lead`), tightening the reversed deadline by
    that amount. SRPT is kept whenever it is deadline-clean; when it is not,
    a preemptive EDF pass decides whether the set is feasible at all, and
    only an EDF-infeasible set loses its worst violator before retrying.
    """
    lead = min_lead or {}
    schedule = CompSchedule(horizon_end=horizon_end)
    eff_deadline = {rj.job_id: rj.rev_deadline - lead.get(rj.job_id, 0.0)
                    for rj in rev_jobs}
    active = list(rev_jobs)
    while active:
        completions, rev_segs = _srpt_pass(active)
        if _worst_violator(active, completions, eff_deadline) is not None:
            completions, rev_segs = _edf_pass(active, eff_deadline)
            if _worst_violator(active, completions, eff_deadline) is not None:
                victim = _pick_rejection(active, eff_deadline)
                schedule.rejected.append(victim)
                active = [rj for rj in active if rj.job_id != victim]
                continue
        for rj in active:
            fwd = sorted(
                Interval(horizon_end - e, horizon_end - s)
                for s, e in rev_segs[rj.job_id])
            schedule.segments[rj.job_id] = fwd
            schedule.start_times[rj.job_id] = horizon_end - completions[rj.job_id]
        break
    schedule.rejected.sort()
    return schedule


def latest_start_times(sched: CompSchedule) -> dict[int, float]:
    """Forward start per admitted job; the transfer-phase deadlines."""
    return dict(sched.start_times)


def fcfs_edf_schedule(jobs_at_site: list[Job], site: DataCenter) -> CompSchedule:
    """Baseline: non-preemptive FCFS, earliest deadline first on arrival ties.

    A job that would finish past its deadline is rejected and its slot
    released for the jobs behind it.
    """
    horizon_end = max((j.deadline for j in jobs_at_site), default=0.0)
    schedule = CompSchedule(horizon_end=horizon_end)
    order = sorted(jobs_at_site, key=lambda j: (j.arrival, j.deadline, j.id))
    machine_free = 0.0
    for job in order:
        start = max(job.arrival, machine_free)
        finish = start + job.workload / site.compute_capacity
        if finish > job.deadline + TOL:
            schedule.rejected.append(job.id)
            continue
        schedule.segments[job.id] = [Interval(start, finish)]
        schedule.start_times[job.id] = start
        machine_free = finish
    schedule.rejected.sort()
    return schedule
