"""Run the full pipeline against the stay-home baseline over five seeds
and print the comparison CSV.

This reproduces, at desk scale, the headline comparison: admission rate
up, total cost roughly flat, both normalized by the baseline.
"""

from brokersched import run_experiment
from brokersched.pipeline import report_to_csv

report = run_experiment(num_sites=10, num_jobs=100, seeds=[0, 1, 2, 3, 4])

print(report_to_csv(report))
print(f"mean normalized admission rate: {report.mean_norm_admission:.4f}")
print(f"mean normalized total cost:     {report.mean_norm_cost:.4f}")
