import numpy as np
import pytest
from scipy import stats

from brokersched.model import comp_time, job_cost, transfer_time
from brokersched.site_selection import (MIN_COST, RANDOM_CANDIDATE,
                                        assign_jobs, candidate_sites,
                                        select_site)
from brokersched.workload import generate_scenario
from conftest import make_job, make_scenario, make_site


@pytest.fixture
def screening_scenario():
    # home is expensive (P=20); site 1 is a clean win; site 2 is too slow
    sites = [
        make_site(0, C=3, B_in=10, B_out=5, P=20, Q_in=0, Q_out=0.5),
        make_site(1, C=3, B_in=10, B_out=5, P=5, Q_in=0.5, Q_out=0.5),
        make_site(2, C=1, B_in=2, B_out=5, P=5, Q_in=0.5, Q_out=0.5),
    ]
    job = make_job(0, a=0, b=10, l=6, d=10, home=0)
    return make_scenario(sites, [job])


class TestCandidateSites:
    def test_fast_cheap_site_included(self, screening_scenario):
        s = screening_scenario
        assert 1 in candidate_sites(s.jobs[0], s)

    def test_slow_site_excluded_on_time(self, screening_scenario):
        s = screening_scenario
        # 6/1 + 10/min(5,2) = 11 > 10
        assert 2 not in candidate_sites(s.jobs[0], s)

    def test_cheapest_home_gives_empty_set(self):
        sites = [make_site(0, P=1, Q_out=1), make_site(1, P=5, Q_in=1)]
        job = make_job(0, a=0, b=100, l=6, d=10, home=0)
        assert candidate_sites(job, make_scenario(sites, [job])) == []

    def test_every_candidate_passes_both_screens(self):
        for seed in range(10):
            s = generate_scenario(8, 40, seed=seed)
            for job in s.jobs:
                home = s.site(job.home_site)
                local = home.energy_price * job.workload
                for sid in candidate_sites(job, s):
                    site = s.site(sid)
                    t = (comp_time([job.workload], site)
                         + transfer_time(job, home, site))
                    assert t <= job.deadline - job.arrival + 1e-9
                    e, n = job_cost(job, site, home, True)
                    assert e + n < local


class TestSelectSite:
    def test_min_cost_takes_argmin(self):
        sites = [
            make_site(0, P=20, Q_out=0.5),
            make_site(1, P=5, Q_in=0.5),   # cost 30 + 10 = 40
            make_site(2, P=7, Q_in=1.0),   # cost 42 + 15 = 57
        ]
        job = make_job(0, a=0, b=100, l=6, d=10, home=0)
        s = make_scenario(sites, [job])
        a = select_site(job, [1, 2], s, MIN_COST)
        assert a.target_site == 1 and a.is_remote

    def test_min_cost_tie_prefers_lower_site_id(self):
        sites = [make_site(0, P=20, Q_out=0.5),
                 make_site(1, P=5, Q_in=0.5), make_site(2, P=5, Q_in=0.5)]
        job = make_job(0, a=0, b=100, l=6, d=10, home=0)
        s = make_scenario(sites, [job])
        assert select_site(job, [1, 2], s, MIN_COST).target_site == 1

    def test_empty_candidates_default_home(self):
        sites = [make_site(0), make_site(1)]
        job = make_job(0, home=0, l=1)
        s = make_scenario(sites, [job])
        a = select_site(job, [], s, MIN_COST)
        assert a.target_site == 0 and not a.is_remote

    def test_random_candidate_is_seeded_and_uniform(self):
        sites = [make_site(i) for i in range(5)]
        job = make_job(0, home=0, l=1)
        s = make_scenario(sites, [job])
        first = select_site(job, [2, 4], s, RANDOM_CANDIDATE,
                            np.random.default_rng(7)).target_site
        again = select_site(job, [2, 4], s, RANDOM_CANDIDATE,
                            np.random.default_rng(7)).target_site
        assert first == again
        rng = np.random.default_rng(0)
        picks = [select_site(job, [2, 4], s, RANDOM_CANDIDATE, rng).target_site
                 for _ in range(10_000)]
        counts = [picks.count(2), picks.count(4)]
        assert stats.chisquare(counts).pvalue > 0.05

    def test_unknown_policy_rejected(self):
        sites = [make_site(0), make_site(1)]
        job = make_job(0, home=0, l=1)
        s = make_scenario(sites, [job])
        with pytest.raises(ValueError):
            select_site(job, [1], s, "bogus")


class TestAssignJobs:
    def test_remote_assignments_beat_local_cost(self):
        for seed in range(10):
            s = generate_scenario(10, 50, seed=seed)
            for a in assign_jobs(s, RANDOM_CANDIDATE, seed):
                job = s.jobs[a.job_id]
                assert a.is_remote == (a.target_site != job.home_site)
                if a.is_remote:
                    home = s.site(job.home_site)
                    e, n = job_cost(job, s.site(a.target_site), home, True)
                    assert e + n < home.energy_price * job.workload
