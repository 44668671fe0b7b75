"""Show the transfer phase on hand-built flows: intensity, the most
critical interval, pruning, and the final packing.

Three flows converge on the same ingress port. Together they overload it
(intensity 1.2), so pruning drops the flow with the worst size-to-window
ratio, after which critical-interval-first packing books the rest.
"""

from brokersched.model import Interval
from brokersched.transfer_scheduler import (Flow, INGRESS, PortTimelines,
                                            mcf_edf, most_critical_interval,
                                            prune, verify_schedule)

flows = [
    Flow(job_id=0, src=2, dst=1, raw_size=4, norm_size=4, window=Interval(0, 10)),
    Flow(job_id=1, src=3, dst=1, raw_size=5, norm_size=5, window=Interval(0, 10)),
    Flow(job_id=2, src=4, dst=1, raw_size=3, norm_size=3, window=Interval(0, 4)),
]
ports = PortTimelines(num_sites=5, horizon=Interval(0, 10))

mci = most_critical_interval(flows, ports)
direction = "ingress" if mci.port[1] == INGRESS else "egress"
print(f"most critical: site {mci.port[0]} {direction}, "
      f"interval [{mci.interval.start:g}, {mci.interval.end:g}], "
      f"intensity {mci.intensity:g}")

kept, pruned = prune(flows, ports)
print(f"pruned flows: {pruned} (tightest size/window ratio goes first)")
mci = most_critical_interval(kept, ports)
print(f"post-prune intensity: {mci.intensity:g} (must be <= 1)")

scheduled, conflicts = mcf_edf(kept, ports)
assert not conflicts
for jid in sorted(scheduled):
    span = scheduled[jid]
    print(f"flow {jid} transfers over [{span.start:g}, {span.end:g}]")

violations = verify_schedule(scheduled, kept)
print(f"independent check: {'clean' if not violations else violations}")
