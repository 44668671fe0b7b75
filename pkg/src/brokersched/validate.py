"""Independent end-to-end validation of a schedule result.

Re-derives every check from the scenario and the booked intervals alone;
nothing is trusted from the schedulers.
"""

from __future__ import annotations

from .model import Interval, Scenario, ScheduleResult, transfer_time

_TOL = 1e-6


def validate_result(scenario: Scenario, result: ScheduleResult) -> list[str]:
    """All violations found for admitted jobs; empty list means valid."""
    problems: list[str] = []
    machine: dict[int, list[tuple[Interval, int]]] = {}
    ports: dict[tuple[int, str], list[tuple[Interval, int]]] = {}

    for o in result.outcomes:
        job = scenario.jobs[o.job_id]
        if o.assignment.is_remote != (o.assignment.target_site != job.home_site):
            problems.append(f"job {o.job_id}: is_remote flag inconsistent")
        if not o.admitted:
            continue
        target = scenario.site(o.assignment.target_site)
        home = scenario.site(job.home_site)

        if not o.compute_segments:
            problems.append(f"job {o.job_id}: admitted without compute segments")
            continue
        segs = sorted(o.compute_segments, key=lambda s: s.start)
        for s1, s2 in zip(segs, segs[1:]):
            if s1.overlap(s2) > _TOL:
                problems.append(f"job {o.job_id}: compute segments overlap")
        if segs[0].start < job.arrival - _TOL:
            problems.append(f"job {o.job_id}: compute starts before arrival")
        if segs[-1].end > job.deadline + _TOL:
            problems.append(f"job {o.job_id}: compute ends after deadline")
        work = sum(s.length for s in segs) * target.compute_capacity
        if abs(work - job.workload) > _TOL * max(1.0, job.workload):
            problems.append(
                f"job {o.job_id}: scheduled work {work} != workload {job.workload}")
        machine.setdefault(target.id, []).extend((s, o.job_id) for s in segs)

        if o.assignment.is_remote:
            if o.transfer is None:
                problems.append(f"job {o.job_id}: remote without transfer")
                continue
            need = transfer_time(job, home, target)
            if abs(o.transfer.length - need) > _TOL:
                problems.append(
                    f"job {o.job_id}: transfer length {o.transfer.length} != {need}")
            if o.transfer.start < job.arrival - _TOL:
                problems.append(f"job {o.job_id}: transfer before arrival")
            if o.transfer.end > segs[0].start + _TOL:
                problems.append(f"job {o.job_id}: transfer ends after compute start")
            if o.transfer.length > _TOL:
                ports.setdefault((home.id, "egress"), []).append(
                    (o.transfer, o.job_id))
                ports.setdefault((target.id, "ingress"), []).append(
                    (o.transfer, o.job_id))
        elif o.transfer is not None and o.transfer.length > _TOL:
            problems.append(f"job {o.job_id}: local job with a transfer")

    for resource, items in [*sorted(machine.items()),
                            *sorted(ports.items())]:
        items.sort(key=lambda t: (t[0].start, t[1]))
        for (iv1, j1), (iv2, j2) in zip(items, items[1:]):
            if iv1.overlap(iv2) > _TOL:
                problems.append(
                    f"resource {resource}: jobs {j1} and {j2} overlap")
    return problems
