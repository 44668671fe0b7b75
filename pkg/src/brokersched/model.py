"""Domain types, interval bookkeeping, and the per-job cost/time primitives.

All times and costs are real-valued; comparisons use the absolute tolerance
``TOL``. Ties between jobs resolve by lowest job id, between sites by lowest
site id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

TOL = 1e-9

REASON_NO_WINDOW = "no-feasible-window"
REASON_PRUNED = "pruned-transfer"
REASON_CONFLICT = "transfer-conflict"


@dataclass(frozen=True)
class DataCenter:
    """One site: compute capacity, port bandwidths, and unit prices."""

    id: int
    compute_capacity: float  # workload-units per time-unit
    bw_in: float             # data-units per time-unit, ingress
    bw_out: float            # data-units per time-unit, egress
    energy_price: float      # cost per workload-unit
    net_price_in: float      # cost per data-unit received
    net_price_out: float     # cost per data-unit sent

    def __post_init__(self):
        if self.compute_capacity <= 0:
            raise ValueError(f"site {self.id}: compute_capacity must be > 0")
        if self.bw_in <= 0 or self.bw_out <= 0:
            raise ValueError(f"site {self.id}: bandwidths must be > 0")
        if min(self.energy_price, self.net_price_in, self.net_price_out) < 0:
            raise ValueError(f"site {self.id}: prices must be >= 0")


@dataclass(frozen=True)
class Job:
    """One batch job: arrival/deadline window, workload, input data, home site."""

    id: int
    arrival: float
    deadline: float
    workload: float
    data_size: float
    home_site: int

    def __post_init__(self):
        if not self.arrival < self.deadline:
            raise ValueError(f"job {self.id}: arrival must precede deadline")
        if self.workload <= 0:
            raise ValueError(f"job {self.id}: workload must be > 0")
        if self.data_size < 0:
            raise ValueError(f"job {self.id}: data_size must be >= 0")


@dataclass(frozen=True)
class Scenario:
    sites: tuple[DataCenter, ...]
    jobs: tuple[Job, ...]
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(self.sites))
        object.__setattr__(self, "jobs", tuple(self.jobs))
        if [s.id for s in self.sites] != list(range(len(self.sites))):
            raise ValueError("site ids must be dense, unique, 0-based")
        if [j.id for j in self.jobs] != list(range(len(self.jobs))):
            raise ValueError("job ids must be dense, unique, 0-based")
        for j in self.jobs:
            if not 0 <= j.home_site < len(self.sites):
                raise ValueError(f"job {j.id}: home_site {j.home_site} out of range")

    def site(self, site_id: int) -> DataCenter:
        return self.sites[site_id]


@dataclass(frozen=True, order=True)
class Interval:
    start: float
    end: float

    def __post_init__(self):
        if self.end < self.start - TOL:
            raise ValueError(f"interval end {self.end} precedes start {self.start}")

    @property
    def length(self) -> float:
        return max(0.0, self.end - self.start)

    def overlap(self, other: "Interval") -> float:
        return max(0.0, min(self.end, other.end) - max(self.start, other.start))

    def contains(self, other: "Interval", tol: float = TOL) -> bool:
        return other.start >= self.start - tol and other.end <= self.end + tol


class SiteTimeline:
    """Busy/free bookkeeping for one resource (machine or network port).

    Busy intervals are kept sorted, pairwise disjoint, and inside the horizon.
    """

    def __init__(self, horizon: Interval):
        self.horizon = horizon
        self.busy: list[Interval] = []

    def add_busy(self, iv: Interval) -> None:
        if iv.length <= TOL:
            return
        if not self.horizon.contains(iv):
            raise ValueError(f"busy interval {iv} outside horizon {self.horizon}")
        lo, hi = 0, len(self.busy)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.busy[mid].start < iv.start:
                lo = mid + 1
            else:
                hi = mid
        for nb in self.busy[max(0, lo - 1):lo + 1]:
            if nb.overlap(iv) > TOL:
                raise ValueError(f"busy interval {iv} overlaps existing {nb}")
        self.busy.insert(lo, iv)

    def busy_overlap(self, iv: Interval) -> float:
        return sum(b.overlap(iv) for b in self.busy)

    def free_time(self, iv: Interval) -> float:
        return max(0.0, iv.length - self.busy_overlap(iv))

    def free_gaps(self, window: Interval) -> list[Interval]:
        """Maximal free sub-intervals of `window`."""
        gaps = []
        cursor = window.start
        for b in self.busy:
            if b.end <= cursor + TOL:
                continue
            if b.start >= window.end - TOL:
                break
            if b.start > cursor + TOL:
                gaps.append(Interval(cursor, min(b.start, window.end)))
            cursor = max(cursor, b.end)
        if cursor < window.end - TOL:
            gaps.append(Interval(cursor, window.end))
        return gaps


def earliest_free_span(timelines: list[SiteTimeline], length: float,
                       window: Interval) -> Interval | None:
    """Earliest span of `length` inside `window` that is free on every timeline.

    Returns None when no such span ends by `window.end` (with tolerance).
    """
    if length <= TOL:
        return Interval(window.start, window.start)
    busy = sorted((b for tl in timelines for b in tl.busy
                   if b.overlap(window) > TOL),
                  key=lambda b: b.start)
    cursor = window.start
    for b in busy:
        if b.start - cursor >= length - TOL:
            break
        cursor = max(cursor, b.end)
    if cursor + length <= window.end + TOL:
        return Interval(cursor, cursor + length)
    return None


@dataclass(frozen=True)
class Assignment:
    job_id: int
    target_site: int
    is_remote: bool


@dataclass(frozen=True)
class SiteCost:
    site_id: int
    energy: float
    network: float


@dataclass(frozen=True)
class CostReport:
    per_site: tuple[SiteCost, ...]

    @property
    def total_energy(self) -> float:
        return sum(c.energy for c in self.per_site)

    @property
    def total_network(self) -> float:
        return sum(c.network for c in self.per_site)

    @property
    def total(self) -> float:
        return self.total_energy + self.total_network


@dataclass
class JobOutcome:
    """Admission verdict plus the booked schedule for one job."""

    job_id: int
    admitted: bool
    reason: str | None
    assignment: Assignment
    transfer: Interval | None
    compute_segments: list[Interval]


@dataclass
class ScheduleResult:
    outcomes: list[JobOutcome]
    cost: CostReport

    def admitted_ids(self) -> list[int]:
        return [o.job_id for o in self.outcomes if o.admitted]

    def to_json(self) -> str:
        """Canonical serialization; byte-stable for identical inputs."""
        payload = {
            "outcomes": [
                {
                    "job_id": o.job_id,
                    "admitted": o.admitted,
                    "reason": o.reason,
                    "target_site": o.assignment.target_site,
                    "is_remote": o.assignment.is_remote,
                    "transfer": ([o.transfer.start, o.transfer.end]
                                 if o.transfer is not None else None),
                    "compute_segments": [[s.start, s.end]
                                         for s in o.compute_segments],
                }
                for o in self.outcomes
            ],
            "cost": {
                "per_site": [[c.site_id, c.energy, c.network]
                             for c in self.cost.per_site],
                "total": self.cost.total,
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def job_cost(job: Job, target: DataCenter, home: DataCenter,
             is_remote: bool) -> tuple[float, float]:
    """(energy, network) cost of running `job` at `target`.

    Network cost charges the home egress and target ingress prices on the
    job's data volume, and only when the job runs away from its data.
    """
    energy = target.energy_price * job.workload
    network = 0.0
    if is_remote:
        network = job.data_size * (home.net_price_out + target.net_price_in)
    return energy, network


def comp_time(workloads, site: DataCenter) -> float:
    """Minimum total computation time of the given workloads at `site`."""
    return sum(workloads) / site.compute_capacity


def transfer_time(job: Job, home: DataCenter, target: DataCenter) -> float:
    """Minimum communication time to move the job's data home -> target."""
    if target.id == home.id:
        return 0.0
    return job.data_size / min(home.bw_out, target.bw_in)


def total_cost(outcomes: list[JobOutcome], scenario: Scenario) -> CostReport:
    """Aggregate admitted-job costs per target site. Rejected jobs cost nothing."""
    energy = {s.id: 0.0 for s in scenario.sites}
    network = {s.id: 0.0 for s in scenario.sites}
    for o in outcomes:
        if not o.admitted:
            continue
        job = scenario.jobs[o.job_id]
        target = scenario.site(o.assignment.target_site)
        home = scenario.site(job.home_site)
        e, n = job_cost(job, target, home, o.assignment.is_remote)
        energy[target.id] += e
        network[target.id] += n
    per_site = tuple(SiteCost(s.id, energy[s.id], network[s.id])
                     for s in scenario.sites)
    return CostReport(per_site=per_site)
