"""
A small seeded verification campaign
====================================

The same sweep the ``hspec verify`` command runs, driven from Python.
Instances are generated from string seeds, so reruns are identical.
"""

# %%
from hspec.campaign import CampaignConfig, iter_instances, run_campaign, summarize

cfg = CampaignConfig(mode="random", n_values=(5, 6), k_values=(3, 4), count=10, seed=7, with_mu=False)
print(next(iter_instances(cfg)))

# %%
rows = run_campaign(cfg)
summary = summarize(rows)
print(summary["instances"], "instances")
for family, counts in summary["per_family"].items():
    print(f"  {family:12s} {counts}")
print("failed:", summary["failed"])

# %%
# The tightest certified slack per bound family.
print(summary["min_slack"])
