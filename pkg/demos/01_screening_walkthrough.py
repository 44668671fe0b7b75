"""Walk through candidate screening and site selection on a tiny scenario.

Builds three sites by hand, then shows for one job which remote sites
survive the time screen and the cost screen, and where each policy would
place it.
"""

import numpy as np

from brokersched import DataCenter, Job, Scenario, comp_time, job_cost, transfer_time
from brokersched.site_selection import MIN_COST, candidate_sites, select_site

sites = (
    # home site: expensive energy, decent egress
    DataCenter(id=0, compute_capacity=2, bw_in=5, bw_out=5,
               energy_price=20, net_price_in=1, net_price_out=0.5),
    # cheap and fast, good ingress: should survive both screens
    DataCenter(id=1, compute_capacity=3, bw_in=10, bw_out=5,
               energy_price=5, net_price_in=0.5, net_price_out=1),
    # cheap but starved for bandwidth: fails the time screen
    DataCenter(id=2, compute_capacity=1, bw_in=2, bw_out=2,
               energy_price=5, net_price_in=0.5, net_price_out=1),
)
job = Job(id=0, arrival=0, deadline=10, workload=6, data_size=10, home_site=0)
scenario = Scenario(sites=sites, jobs=(job,), seed=None)

home = scenario.site(job.home_site)
local_cost = home.energy_price * job.workload
window = job.deadline - job.arrival
print(f"job 0: window {window:g}, workload {job.workload:g}, "
      f"data {job.data_size:g}, local cost {local_cost:g}")
print()

for site in sites[1:]:
    t_comp = comp_time([job.workload], site)
    t_xfer = transfer_time(job, home, site)
    energy, network = job_cost(job, site, home, is_remote=True)
    fits = t_comp + t_xfer <= window
    cheaper = energy + network < local_cost
    print(f"site {site.id}: comp {t_comp:.2f} + transfer {t_xfer:.2f} "
          f"= {t_comp + t_xfer:.2f} "
          f"({'fits' if fits else 'misses'} the window), "
          f"cost {energy + network:g} "
          f"({'beats' if cheaper else 'loses to'} local {local_cost:g})")

cands = candidate_sites(job, scenario)
print(f"\ncandidate set: {cands}")

rng = np.random.default_rng(0)
chosen = select_site(job, cands, scenario, MIN_COST, rng)
print(f"min-cost policy places job 0 at site {chosen.target_site} "
      f"(remote={chosen.is_remote})")
