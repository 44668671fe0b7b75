"""Deadline-aware job assignment and two-phase scheduling across
geo-distributed data centers."""

from .model import (Assignment, CostReport, DataCenter, Interval, Job,
                    JobOutcome, Scenario, ScheduleResult, SiteCost,
                    SiteTimeline, comp_time, job_cost, total_cost,
                    transfer_time)
from .oracle import OracleResult, OracleSizeError, brute_force_oracle
from .pipeline import (ComparisonReport, RunMetrics, run_baseline,
                       run_experiment, run_pipeline)
from .site_selection import candidate_sites, select_site
from .validate import validate_result
from .workload import (DistributionConfig, ScenarioFormatError,
                       generate_scenario, load_scenario, save_scenario)

__all__ = [
    "Assignment", "ComparisonReport", "CostReport", "DataCenter",
    "DistributionConfig", "Interval", "Job", "JobOutcome", "OracleResult",
    "OracleSizeError", "RunMetrics", "Scenario", "ScenarioFormatError",
    "ScheduleResult", "SiteCost", "SiteTimeline", "brute_force_oracle",
    "candidate_sites", "comp_time", "generate_scenario", "job_cost",
    "load_scenario", "run_baseline", "run_experiment", "run_pipeline",
    "save_scenario", "select_site", "total_cost", "transfer_time",
    "validate_result",
]
