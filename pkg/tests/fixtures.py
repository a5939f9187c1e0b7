"""Shared synthetic dataset builders for the test suite."""

import numpy as np


def write_eight_arm_fixture(path, all_na_group=False):
    """Synthetic multi-arm dataset shaped like a dose-finding trial."""
    rng = np.random.default_rng(2718)
    started = {"placebo": 94, "d1.25": 96, "d2.5": 92, "d5": 100,
               "d7.5": 97, "d10": 98, "d15": 125, "d20": 119}
    missing = {"placebo": 4, "d1.25": 6, "d2.5": 5, "d5": 11,
               "d7.5": 8, "d10": 9, "d15": 11, "d20": 7}
    effect = {"placebo": 0.0, "d1.25": 0.0, "d2.5": -0.05, "d5": -0.1,
              "d7.5": -0.2, "d10": -0.25, "d15": -0.35, "d20": -0.5}
    rows = ["group,value"]
    for group, n in started.items():
        values = rng.normal(effect[group], 0.6, size=n - missing[group])
        if all_na_group and group == "d5":
            rows.extend(f"{group},NA" for _ in range(n))
            continue
        rows.extend(f"{group},{v:.6f}" for v in values)
        rows.extend(f"{group},NA" for _ in range(missing[group]))
    path.write_text("\n".join(rows) + "\n")
