"""End-to-end pipeline, baseline runner, metrics, and the experiment driver.

A job is admitted only if it survives every stage: site selection never
rejects (it only places), the computation pass can reject for lack of a
feasible window, and the transfer pass can reject by pruning or by a
packing conflict. Costs accrue for admitted jobs only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from . import comp_scheduler, site_selection, transfer_scheduler
from .model import (REASON_CONFLICT, REASON_NO_WINDOW, REASON_PRUNED,
                    Assignment, Interval, JobOutcome, Scenario,
                    ScheduleResult, total_cost, transfer_time)
from .workload import DistributionConfig, generate_scenario

BASELINE = "baseline"

CSV_HEADER = ("seed,policy,admitted,total,admission_rate,energy_cost,"
              "network_cost,total_cost,norm_admission,norm_cost,wall_time_s")


@dataclass
class RunMetrics:
    admitted: int
    total: int
    admission_rate: float
    energy_cost: float
    network_cost: float
    total_cost: float
    rejections: dict[str, int] = field(default_factory=dict)
    wall_time_s: float = 0.0


@dataclass
class ComparisonRow:
    seed: int
    policy: str
    proposed: RunMetrics
    baseline: RunMetrics

    @property
    def norm_admission(self) -> float:
        return _safe_ratio(self.proposed.admission_rate,
                           self.baseline.admission_rate)

    @property
    def norm_cost(self) -> float:
        return _safe_ratio(self.proposed.total_cost, self.baseline.total_cost)


@dataclass
class ComparisonReport:
    rows: list[ComparisonRow]

    @property
    def mean_norm_admission(self) -> float:
        return sum(r.norm_admission for r in self.rows) / len(self.rows)

    @property
    def mean_norm_cost(self) -> float:
        return sum(r.norm_cost for r in self.rows) / len(self.rows)


def _safe_ratio(num: float, den: float) -> float:
    if den == 0.0:
        return 1.0 if num == 0.0 else float("inf")
    return num / den


def _metrics(result: ScheduleResult, wall_time: float) -> RunMetrics:
    total = len(result.outcomes)
    admitted = sum(1 for o in result.outcomes if o.admitted)
    rejections: dict[str, int] = {}
    for o in result.outcomes:
        if not o.admitted:
            rejections[o.reason] = rejections.get(o.reason, 0) + 1
    return RunMetrics(
        admitted=admitted, total=total,
        admission_rate=admitted / total if total else 1.0,
        energy_cost=result.cost.total_energy,
        network_cost=result.cost.total_network,
        total_cost=result.cost.total,
        rejections=rejections, wall_time_s=wall_time)


def _schedule_pass(scenario: Scenario, assignments: list[Assignment],
                   excluded: set[int], prune_metric: str):
    """One assign-fixed scheduling pass; returns per-job outcome drafts."""
    target = {a.job_id: a.target_site for a in assignments}
    by_site: dict[int, list] = {s.id: [] for s in scenario.sites}
    for job in scenario.jobs:
        if job.id not in excluded:
            by_site[target[job.id]].append(job)

    rejected: dict[int, str] = {}
    segments: dict[int, list[Interval]] = {}
    starts: dict[int, float] = {}
    for site in scenario.sites:
        jobs_here = by_site[site.id]
        if not jobs_here:
            continue
        leads = {
            j.id: transfer_time(j, scenario.site(j.home_site), site)
            for j in jobs_here if j.home_site != site.id
        }
        rev = comp_scheduler.reverse_transform(jobs_here, site)
        horizon = max(j.deadline for j in jobs_here)
        sched = comp_scheduler.srtf_schedule(rev, horizon, leads)
        for jid in sched.rejected:
            rejected[jid] = REASON_NO_WINDOW
        segments.update(sched.segments)
        starts.update(sched.start_times)

    remote_jobs = [j for j in scenario.jobs
                   if j.id not in excluded and j.id not in rejected
                   and target[j.id] != j.home_site]
    flows = transfer_scheduler.normalize_flows(
        remote_jobs, scenario, target, starts)
    horizon_start = min((min(0.0, j.arrival) for j in scenario.jobs),
                        default=0.0)
    horizon_end = max((j.deadline for j in scenario.jobs), default=0.0)
    ports = transfer_scheduler.PortTimelines(
        len(scenario.sites), Interval(horizon_start, horizon_end))
    kept, pruned = transfer_scheduler.prune(flows, ports, prune_metric)
    scheduled, conflicts = transfer_scheduler.mcf_edf(kept, ports)
    for jid in pruned:
        rejected[jid] = REASON_PRUNED
    for jid in conflicts:
        rejected[jid] = REASON_CONFLICT
    return rejected, segments, scheduled


def run_pipeline(scenario: Scenario,
                 policy: str = site_selection.RANDOM_CANDIDATE,
                 seed: int = 0, recompute: bool = False,
                 prune_metric: str = transfer_scheduler.PRUNE_NORMALIZED
                 ) -> tuple[ScheduleResult, RunMetrics]:
    """Assign, schedule both phases, and account costs for one scenario."""
    t0 = time.perf_counter()
    assignments = site_selection.assign_jobs(scenario, policy, seed)
    rejected, segments, transfers = _schedule_pass(
        scenario, assignments, set(), prune_metric)
    if recompute and rejected:
        second = _schedule_pass(scenario, assignments, set(rejected),
                                prune_metric)
        extra, segments, transfers = second
        rejected = {**rejected, **extra}

    outcomes = []
    for job in scenario.jobs:
        a = assignments[job.id]
        if job.id in rejected:
            outcomes.append(JobOutcome(job.id, False, rejected[job.id], a,
                                       None, []))
        else:
            outcomes.append(JobOutcome(job.id, True, None, a,
                                       transfers.get(job.id),
                                       segments.get(job.id, [])))
    cost = total_cost(outcomes, scenario)
    result = ScheduleResult(outcomes=outcomes, cost=cost)
    return result, _metrics(result, time.perf_counter() - t0)


def run_baseline(scenario: Scenario) -> tuple[ScheduleResult, RunMetrics]:
    """Home-site assignment with non-preemptive FCFS+EDF, no transfers."""
    t0 = time.perf_counter()
    by_site: dict[int, list] = {s.id: [] for s in scenario.sites}
    for job in scenario.jobs:
        by_site[job.home_site].append(job)
    outcomes_by_id: dict[int, JobOutcome] = {}
    for site in scenario.sites:
        sched = comp_scheduler.fcfs_edf_schedule(by_site[site.id], site)
        for job in by_site[site.id]:
            a = Assignment(job.id, site.id, is_remote=False)
            if job.id in sched.segments:
                outcomes_by_id[job.id] = JobOutcome(
                    job.id, True, None, a, None, sched.segments[job.id])
            else:
                outcomes_by_id[job.id] = JobOutcome(
                    job.id, False, REASON_NO_WINDOW, a, None, [])
    outcomes = [outcomes_by_id[j.id] for j in scenario.jobs]
    cost = total_cost(outcomes, scenario)
    result = ScheduleResult(outcomes=outcomes, cost=cost)
    return result, _metrics(result, time.perf_counter() - t0)


def comparison_row(scenario: Scenario, policy: str, seed: int,
                   **options) -> ComparisonRow:
    _, proposed = run_pipeline(scenario, policy=policy, seed=seed, **options)
    _, base = run_baseline(scenario)
    return ComparisonRow(seed=seed, policy=policy, proposed=proposed,
                         baseline=base)


def run_experiment(num_sites: int, num_jobs: int, seeds: list[int],
                   policy: str = site_selection.RANDOM_CANDIDATE,
                   config: DistributionConfig | None = None,
                   **options) -> ComparisonReport:
    """Generate one scenario per seed and compare pipeline vs baseline."""
    rows = []
    for seed in seeds:
        scenario = generate_scenario(num_sites, num_jobs, config, seed)
        rows.append(comparison_row(scenario, policy, seed, **options))
    return ComparisonReport(rows=rows)


def _fmt(v: float) -> str:
    return repr(float(v))


def csv_row(seed, policy: str, metrics: RunMetrics, norm_admission: float,
            norm_cost: float) -> str:
    fields = [str(seed), policy, str(metrics.admitted), str(metrics.total),
              _fmt(metrics.admission_rate), _fmt(metrics.energy_cost),
              _fmt(metrics.network_cost), _fmt(metrics.total_cost),
              _fmt(norm_admission), _fmt(norm_cost),
              _fmt(metrics.wall_time_s)]
    return ",".join(fields)


def report_to_csv(report: ComparisonReport) -> str:
    """Per-seed rows plus a mean row, under the fixed harness header."""
    lines = [CSV_HEADER]
    for r in report.rows:
        lines.append(csv_row(r.seed, r.policy, r.proposed,
                             r.norm_admission, r.norm_cost))
    n = len(report.rows)
    if n:
        mean = RunMetrics(
            admitted=sum(r.proposed.admitted for r in report.rows) // n,
            total=report.rows[0].proposed.total,
            admission_rate=sum(r.proposed.admission_rate
                               for r in report.rows) / n,
            energy_cost=sum(r.proposed.energy_cost for r in report.rows) / n,
            network_cost=sum(r.proposed.network_cost for r in report.rows) / n,
            total_cost=sum(r.proposed.total_cost for r in report.rows) / n,
            wall_time_s=sum(r.proposed.wall_time_s for r in report.rows) / n)
        lines.append(csv_row("mean", report.rows[0].policy, mean,
                             report.mean_norm_admission,
                             report.mean_norm_cost))
    return "\n".join(lines) + "\n"


def write_csv(text: str, path) -> None:
    Path(path).write_text(text)
