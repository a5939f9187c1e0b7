"""Type I error under informative missingness, by simulation.

Null data on both sides, but only positive values can go missing. Mean and
donor imputation quietly shift the comparison and blow past the nominal
level; dropping the missing values does too; the robust test does not.

Writes a long-format CSV next to this script and prints a summary. Bump
TRIALS for smoother curves.
"""

from pathlib import Path

from rankguard import MissingnessSpec, ScenarioSpec, sweep, write_results_csv

TRIALS = 500
S_VALUES = (0.0, 0.10, 0.20, 0.30)

base = ScenarioSpec(
    dist_x="normal(0,1)",
    dist_y="normal(0,1)",
    n=100,
    m=100,
    missingness=(MissingnessSpec("mnar_positive", 0.0),),
    methods=("proposed", "ignore", "mean_impute", "hot_deck", "oracle"),
    alpha=0.05,
    trials=TRIALS,
    seed=7,
)

results = sweep(base, s_values=S_VALUES)
out = Path(__file__).with_name("type1_informative_missingness.csv")
write_results_csv(results, str(out))
print(f"wrote {out.name}\n")

methods = base.methods
print(f"{'s':>5}  " + "  ".join(f"{m:>12}" for m in methods))
for result in results:
    s = result.spec.missingness[0].s
    rates = [result.outcomes[m].rate for m in methods]
    print(f"{s:5.0%}  " + "  ".join(f"{r:12.3f}" for r in rates))
print(f"\nnominal level 0.05, {TRIALS} trials per cell; imputation rows inflate")
print("with s while the robust test stays at or below the level.")
