from brokersched.model import DataCenter, Job, Scenario


def make_site(id=0, C=1.0, B_in=10.0, B_out=10.0, P=0.0, Q_in=0.0, Q_out=0.0):
    return DataCenter(id=id, compute_capacity=C, bw_in=B_in, bw_out=B_out,
                      energy_price=P, net_price_in=Q_in, net_price_out=Q_out)


def make_job(id=0, a=0.0, b=10.0, l=1.0, d=0.0, home=0):
    return Job(id=id, arrival=a, deadline=b, workload=l, data_size=d,
               home_site=home)


def make_scenario(sites, jobs, seed=None):
    return Scenario(sites=tuple(sites), jobs=tuple(jobs), seed=seed)
