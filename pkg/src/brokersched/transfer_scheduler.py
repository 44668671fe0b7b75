"""Cross-site transfer scheduling on the non-blocking switch abstraction.

Every site contributes two unit-capacity resources after flow-size
normalization: its egress port and its ingress port. A flow occupies its
source egress and destination ingress over the same span. Admission control
prunes flows until no port interval is oversubscribed; the scheduler then
repeatedly packs the most contended interval's flows in deadline order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (TOL, Interval, Job, Scenario, SiteTimeline,
                    earliest_free_span)

EGRESS = 0
INGRESS = 1

PortKey = tuple[int, int]  # (site id, direction)

PRUNE_NORMALIZED = "normalized"
PRUNE_RAW = "raw"

_INF = float("inf")


@dataclass(frozen=True)
class Flow:
    job_id: int
    src: int
    dst: int
    raw_size: float
    norm_size: float
    window: Interval  # [job arrival, computation start]

    @property
    def release(self) -> float:
        return self.window.start

    @property
    def deadline(self) -> float:
        return self.window.end


class PortTimelines:
    """One free/busy timeline per (site, direction)."""

    def __init__(self, num_sites: int, horizon: Interval):
        self.horizon = horizon
        self._tl: dict[PortKey, SiteTimeline] = {
            (sid, d): SiteTimeline(horizon)
            for sid in range(num_sites) for d in (EGRESS, INGRESS)
        }

    def timeline(self, port: PortKey) -> SiteTimeline:
        return self._tl[port]

    def ports(self) -> list[PortKey]:
        return sorted(self._tl)

    def occupy(self, flow: Flow, span: Interval) -> None:
        self._tl[(flow.src, EGRESS)].add_busy(span)
        self._tl[(flow.dst, INGRESS)].add_busy(span)


@dataclass(frozen=True)
class CriticalInterval:
    port: PortKey
    interval: Interval
    intensity: float
    flow_set: tuple[Flow, ...]


def normalize_flows(remote_jobs: list[Job], scenario: Scenario,
                    targets: dict[int, int],
                    dtrans_deadlines: dict[int, float]) -> list[Flow]:
    """One flow per remote job, sized by its bottleneck port rate.

    `targets` maps job id to its assigned site; `dtrans_deadlines` carries
    the latest computation start from the computation pass.
    """
    flows = []
    for job in remote_jobs:
        dst = targets[job.id]
        src = job.home_site
        if dst == src:
            continue
        rate = min(scenario.site(src).bw_out, scenario.site(dst).bw_in)
        flows.append(Flow(
            job_id=job.id, src=src, dst=dst, raw_size=job.data_size,
            norm_size=job.data_size / rate,
            window=Interval(job.arrival, dtrans_deadlines[job.id])))
    return flows


def flows_at_port(flows: list[Flow], port: PortKey) -> list[Flow]:
    sid, direction = port
    if direction == EGRESS:
        return [f for f in flows if f.src == sid]
    return [f for f in flows if f.dst == sid]


def intensity(port: PortKey, interval: Interval, flows: list[Flow],
              ports: PortTimelines) -> float:
    """Enclosed normalized demand over free port time in the interval."""
    enclosed = [f for f in flows_at_port(flows, port)
                if interval.contains(f.window)]
    demand = sum(f.norm_size for f in enclosed)
    if demand <= TOL:
        return 0.0
    free = ports.timeline(port).free_time(interval)
    if free <= TOL:
        return _INF
    return demand / free


def most_critical_interval(flows: list[Flow],
                           ports: PortTimelines) -> CriticalInterval:
    """Scan event-point intervals on every port for the intensity argmax.

    Interval starts range over flow releases at the port, ends over flow
    deadlines. Ties resolve by earlier start, lower site id, egress before
    ingress, then earlier end; intervals actually enclosing flows win over
    vacuous ones of equal intensity.
    """
    if not flows:
        raise ValueError("no flows to scan")
    candidates = []
    for port in ports.ports():
        here = flows_at_port(flows, port)
        if not here:
            continue
        starts = sorted({f.release for f in here})
        ends = sorted({f.deadline for f in here})
        for s in starts:
            for e in ends:
                if e <= s + TOL:
                    continue
                iv = Interval(s, e)
                enclosed = tuple(sorted(
                    (f for f in here if iv.contains(f.window)),
                    key=lambda f: f.job_id))
                demand = sum(f.norm_size for f in enclosed)
                free = ports.timeline(port).free_time(iv)
                if demand <= TOL:
                    inten = 0.0
                elif free <= TOL:
                    inten = _INF
                else:
                    inten = demand / free
                candidates.append(CriticalInterval(port, iv, inten, enclosed))
    if not candidates:
        raise ValueError("no candidate intervals")
    top = max(c.intensity for c in candidates)
    pool = [c for c in candidates
            if c.intensity >= top - TOL or c.intensity == top]
    nonempty = [c for c in pool if c.flow_set]
    pool = nonempty or pool
    return min(pool, key=lambda c: (c.interval.start, c.port[0], c.port[1],
                                    c.interval.end))


def _prune_ratio(flow: Flow, port: PortKey, ports: PortTimelines,
                 metric: str) -> float:
    size = flow.norm_size if metric == PRUNE_NORMALIZED else flow.raw_size
    free = ports.timeline(port).free_time(flow.window)
    if free <= TOL:
        return _INF
    return size / free


def prune(flows: list[Flow], ports: PortTimelines,
          metric: str = PRUNE_NORMALIZED) -> tuple[list[Flow], list[int]]:
    """Drop flows until the most critical interval is no longer oversubscribed.

    Each round removes, from the critical flow set, the flow contributing
    the most per unit of its own free window (ties: lowest job id).
    """
    if metric not in (PRUNE_NORMALIZED, PRUNE_RAW):
        raise ValueError(f"unknown prune metric: {metric}")
    kept = list(flows)
    rejected: list[int] = []
    while kept:
        mci = most_critical_interval(kept, ports)
        if mci.intensity <= 1.0 + TOL:
            break
        victim = max(mci.flow_set,
                     key=lambda f: (_prune_ratio(f, mci.port, ports, metric),
                                    -f.job_id))
        rejected.append(victim.job_id)
        kept = [f for f in kept if f.job_id != victim.job_id]
    return kept, sorted(rejected)


def mcf_edf(flows: list[Flow], ports: PortTimelines
            ) -> tuple[dict[int, Interval], list[int]]:
    """Most-critical-first packing with EDF inside each critical interval.

    Each flow is placed in the earliest span free on both endpoint ports at
    or after its release; a flow that cannot finish by its deadline is
    rejected. Both ports are marked busy over the chosen span.
    """
    scheduled: dict[int, Interval] = {}
    rejected: list[int] = []
    remaining = []
    for f in flows:
        if f.norm_size <= TOL:
            scheduled[f.job_id] = Interval(f.release, f.release)
        else:
            remaining.append(f)
    while remaining:
        mci = most_critical_interval(remaining, ports)
        batch = sorted(mci.flow_set, key=lambda f: (f.deadline, f.job_id))
        if not batch:
            batch = [min(remaining, key=lambda f: (f.deadline, f.job_id))]
        for flow in batch:
            tls = [ports.timeline((flow.src, EGRESS)),
                   ports.timeline((flow.dst, INGRESS))]
            start0 = max(mci.interval.start, flow.release)
            span = earliest_free_span(tls, flow.norm_size,
                                      Interval(start0, flow.deadline))
            if span is None:
                rejected.append(flow.job_id)
            else:
                ports.occupy(flow, span)
                scheduled[flow.job_id] = span
        done = {f.job_id for f in batch}
        remaining = [f for f in remaining if f.job_id not in done]
    return scheduled, sorted(rejected)


def verify_schedule(scheduled: dict[int, Interval],
                    flows: list[Flow]) -> list[str]:
    """Independent checks on a transfer schedule; empty list means ok."""
    by_id = {f.job_id: f for f in flows}
    violations = []
    per_port: dict[PortKey, list[tuple[Interval, int]]] = {}
    for jid, iv in sorted(scheduled.items()):
        flow = by_id.get(jid)
        if flow is None:
            violations.append(f"flow {jid}: scheduled but unknown")
            continue
        if abs(iv.length - flow.norm_size) > 1e-7:
            violations.append(
                f"flow {jid}: span length {iv.length} != size {flow.norm_size}")
        if not flow.window.contains(iv, tol=1e-7):
            violations.append(f"flow {jid}: span {iv} outside window {flow.window}")
        per_port.setdefault((flow.src, EGRESS), []).append((iv, jid))
        per_port.setdefault((flow.dst, INGRESS), []).append((iv, jid))
    for port, items in sorted(per_port.items()):
        items.sort(key=lambda t: (t[0].start, t[1]))
        for (iv1, j1), (iv2, j2) in zip(items, items[1:]):
            if iv1.overlap(iv2) > TOL:
                violations.append(
                    f"port {port}: flows {j1} and {j2} overlap")
    return violations
