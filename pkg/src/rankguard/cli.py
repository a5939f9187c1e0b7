"""Command-line interface.

Subcommands: ``test`` (one robust comparison), ``feasibility`` (missing-data
screen), ``power`` (MCAR theory), ``simulate`` (Monte-Carlo sweeps to CSV),
``analyze`` (grouped CSV pipeline with familywise correction).

Exit codes: 0 the command ran; 2 malformed input; 3 degenerate data. The
environment variable RANKGUARD_SEED supplies the simulation seed when the
--seed flag is absent.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import Any, Sequence

from .distributions import make_distribution
from .exceptions import DegenerateDataError, DomainError
from .multiplicity import holm_adjust
from .power import PowerInputs, asymptotic_class, mcar_power, pair_probs
from .ranks import Sample, Support
from .robust import feasibility, robust_test_distinct, robust_test_general
from .simulate import MissingnessSpec, ScenarioSpec, sweep, write_results_csv
from .wmw import Alternative

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_DEGENERATE = 3


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _parse_values(text: str, field: str) -> list[float]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            value = float(token)
        except ValueError:
            raise DomainError(f"{field}: cannot parse value {token!r}")
        if math.isnan(value) or math.isinf(value):
            raise DomainError(f"{field}: non-finite value {token!r}")
        out.append(value)
    if not out:
        raise DomainError(f"{field}: no values given")
    return out


def _read_value_file(path: str, field: str) -> list[float]:
    try:
        with open(path) as handle:
            text = ",".join(line.strip() for line in handle if line.strip())
    except OSError as exc:
        raise DomainError(f"{field}: cannot read {path}: {exc}")
    return _parse_values(text, field)


def _parse_support(text: str) -> Support | None:
    if text.strip().lower() == "none":
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError("support: expected 'lo,hi' (either side may be empty) or 'none'")
    lower = float(parts[0]) if parts[0].strip() else None
    upper = float(parts[1]) if parts[1].strip() else None
    return Support(lower=lower, upper=upper)


def _emit(payload: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        flat = {k: v for k, v in payload.items() if not isinstance(v, (dict, list))}
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(flat.keys())
        writer.writerow(flat.values())


def _has_ties(x_obs: Sequence[float], y_obs: Sequence[float]) -> bool:
    pooled = list(x_obs) + list(y_obs)
    return len(set(pooled)) != len(pooled)


def _cmd_test(args: argparse.Namespace) -> int:
    if args.x is not None:
        x_values = _parse_values(args.x, "--x")
    elif args.x_file is not None:
        x_values = _read_value_file(args.x_file, "--x-file")
    else:
        raise DomainError("--x or --x-file is required")
    if args.y is not None:
        y_values = _parse_values(args.y, "--y")
    elif args.y_file is not None:
        y_values = _read_value_file(args.y_file, "--y-file")
    else:
        raise DomainError("--y or --y-file is required")
    n_total = args.n_total if args.n_total is not None else len(x_values)
    m_total = args.m_total if args.m_total is not None else len(y_values)
    if n_total < len(x_values):
        raise DomainError("--n-total is smaller than the number of observed x values")
    if m_total < len(y_values):
        raise DomainError("--m-total is smaller than the number of observed y values")
    x = Sample(tuple(x_values), n_total - len(x_values))
    y = Sample(tuple(y_values), m_total - len(y_values))
    support = _parse_support(args.support) if args.support is not None else None
    alternative = Alternative.parse(args.alternative)

    use_general = {"on": True, "off": False}.get(
        args.ties, support is not None or _has_ties(x_values, y_values)
    )
    if use_general:
        report = robust_test_general(x, y, support or Support(), args.alpha, alternative)
    else:
        report = robust_test_distinct(x, y, args.alpha, alternative)
    payload = report.to_dict()
    payload["feasibility"] = feasibility(
        n_total, m_total, x.n_observed, y.n_observed, args.alpha
    ).to_dict()
    payload["feasible"] = payload["feasibility"]["feasible"]
    _emit(payload, args.format)
    return EXIT_OK


def _cmd_feasibility(args: argparse.Namespace) -> int:
    report = feasibility(args.n, args.m, args.n_obs, args.m_obs, args.alpha)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def _cmd_power(args: argparse.Namespace) -> int:
    dist_x = make_distribution(args.dist_x)
    dist_y = make_distribution(args.dist_y)
    pair = pair_probs(dist_x, dist_y)
    payload: dict[str, Any] = {
        "dist_x": dist_x.spec,
        "dist_y": dist_y.spec,
        "p1": pair.p1,
        "p2": pair.p2,
        "p3": pair.p3,
    }
    if args.limit:
        lam = 1.0 - args.s
        payload["lambda_x"] = payload["lambda_y"] = lam
        payload["classification"] = asymptotic_class(lam, lam, pair.p1).value
    else:
        inputs = PowerInputs(
            n=args.n,
            m=args.m,
            n_obs_x=args.n * (1.0 - args.s),
            n_obs_y=args.m * (1.0 - args.s),
            alpha=args.alpha,
            pair=pair,
        )
        payload.update(
            {"n": args.n, "m": args.m, "s": args.s, "alpha": args.alpha,
             "power": mcar_power(inputs)}
        )
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _parse_scenario_file(path: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    try:
        with open(path) as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise DomainError(f"scenario line {lineno}: expected 'key = value'")
                key, value = line.split("=", 1)
                entries[key.strip().lower()] = value.strip()
    except OSError as exc:
        raise DomainError(f"cannot read scenario file {path}: {exc}")
    return entries


def _scenario_from_entries(
    entries: dict[str, str], seed: int
) -> tuple[ScenarioSpec, list[float], list[tuple[int, int]]]:
    known = {
        "dist_x", "dist_y", "n", "m", "s", "mechanism", "mechanism_x", "mechanism_y",
        "methods", "alpha", "trials", "seed", "alternative", "support",
    }
    for key in entries:
        if key not in known:
            raise DomainError(f"unknown scenario key {key!r}; valid keys: {', '.join(sorted(known))}")
    for required in ("dist_x", "dist_y", "n", "methods"):
        if required not in entries:
            raise DomainError(f"scenario is missing required key {required!r}")

    n_list = [int(tok) for tok in entries["n"].split(",")]
    m_list = [int(tok) for tok in entries["m"].split(",")] if "m" in entries else list(n_list)
    if len(m_list) != len(n_list):
        raise DomainError("n and m lists must have the same length")
    sizes = list(zip(n_list, m_list))

    s_list = [float(tok) for tok in entries.get("s", "0").split(",")]

    if "mechanism_x" in entries or "mechanism_y" in entries:
        missingness = (
            MissingnessSpec(entries.get("mechanism_x", "none"), s_list[0], "x_only"),
            MissingnessSpec(entries.get("mechanism_y", "none"), s_list[0], "y_only"),
        )
    else:
        missingness = (MissingnessSpec(entries.get("mechanism", "none"), s_list[0], "both"),)

    support = None  # absent key: derive from the distributions
    if "support" in entries:
        parsed = _parse_support(entries["support"])
        # an explicit "none" forces the unbounded domain
        support = (None, None) if parsed is None else (parsed.lower, parsed.upper)

    spec = ScenarioSpec(
        dist_x=entries["dist_x"],
        dist_y=entries["dist_y"],
        n=sizes[0][0],
        m=sizes[0][1],
        missingness=missingness,
        methods=tuple(tok.strip() for tok in entries["methods"].split(",") if tok.strip()),
        alpha=float(entries.get("alpha", "0.05")),
        trials=int(entries.get("trials", "1000")),
        seed=seed,
        alternative=entries.get("alternative", "two_sided"),
        support=support,
    )
    return spec, s_list, sizes


def _cmd_simulate(args: argparse.Namespace) -> int:
    entries = _parse_scenario_file(args.scenario)
    if args.seed is not None:
        seed = args.seed
    elif os.environ.get("RANKGUARD_SEED"):
        seed = int(os.environ["RANKGUARD_SEED"])
    elif "seed" in entries:
        seed = int(entries["seed"])
    else:
        seed = 0
    spec, s_list, sizes = _scenario_from_entries(entries, seed)
    results = sweep(spec, s_values=s_list, sizes=sizes, workers=args.workers)
    write_results_csv(results, args.out)
    rows = sum(len(r.spec.methods) for r in results)
    print(f"wrote {rows} rows to {args.out}")
    return EXIT_OK


def _read_grouped_csv(path: str) -> dict[str, Sample]:
    groups: dict[str, list[float]] = {}
    missing: dict[str, int] = {}
    try:
        with open(path, newline="") as handle:
            reader = csv.DictReader(handle)
            if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["group", "value"]:
                raise DomainError("--data: expected CSV header 'group,value'")
            for lineno, row in enumerate(reader, 2):
                group = (row["group"] or "").strip()
                if not group:
                    raise DomainError(f"--data line {lineno}: empty group label")
                token = (row["value"] or "").strip()
                groups.setdefault(group, [])
                missing.setdefault(group, 0)
                if token == "" or token.upper() == "NA":
                    missing[group] += 1
                else:
                    try:
                        groups[group].append(float(token))
                    except ValueError:
                        raise DomainError(f"--data line {lineno}: bad value {token!r}")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}")
    samples: dict[str, Sample] = {}
    for group in groups:
        if not groups[group]:
            raise DegenerateDataError(f"group {group!r} has no observed values (all missing)")
        samples[group] = Sample(tuple(groups[group]), missing[group])
    return samples


def _cmd_analyze(args: argparse.Namespace) -> int:
    samples = _read_grouped_csv(args.data)
    if args.control not in samples:
        raise DomainError(
            f"--control: group {args.control!r} not present; groups: {', '.join(sorted(samples))}"
        )
    if len(samples) < 2:
        raise DomainError("--data must contain at least two groups")
    alternative = Alternative.parse(args.alternative)
    support = _parse_support(args.support) if args.support is not None else None
    control = samples[args.control]

    comparisons = []
    for group in samples:
        if group == args.control:
            continue
        treated = samples[group]
        use_general = {"on": True, "off": False}.get(
            args.ties, support is not None or _has_ties(control.observed, treated.observed)
        )
        if use_general:
            report = robust_test_general(
                control, treated, support or Support(), args.alpha, alternative
            )
        else:
            report = robust_test_distinct(control, treated, args.alpha, alternative)
        entry = {"group": group, **report.to_dict()}
        entry["feasible"] = feasibility(
            control.total, treated.total, control.n_observed, treated.n_observed, args.alpha
        ).feasible
        comparisons.append(entry)

    comparisons.sort(key=lambda e: e["group"])
    payload: dict[str, Any] = {
        "control": args.control,
        "alpha": args.alpha,
        "alternative": alternative.value,
        "comparisons": comparisons,
    }
    if args.holm:
        adjusted = holm_adjust([entry["p_max"] for entry in comparisons])
        for entry, adj in zip(comparisons, adjusted):
            entry["p_max_holm"] = adj
            entry["significant_holm"] = adj < args.alpha
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankguard",
        description="Two-sample rank testing that stays valid under arbitrary missing data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="robust two-sample test on one dataset")
    p_test.add_argument("--x", help="comma-separated observed values for sample x")
    p_test.add_argument("--y", help="comma-separated observed values for sample y")
    p_test.add_argument("--x-file", help="file with one x value per line")
    p_test.add_argument("--y-file", help="file with one y value per line")
    p_test.add_argument("--n-total", type=int, help="total size of sample x incl. missing")
    p_test.add_argument("--m-total", type=int, help="total size of sample y incl. missing")
    p_test.add_argument("--support", help="'lo,hi' ('lo,' or ',hi' for one side) or 'none'")
    p_test.add_argument("--alpha", type=float, default=0.05)
    p_test.add_argument("--alternative", default="two-sided",
                        choices=["two-sided", "greater", "less"])
    p_test.add_argument("--ties", default="auto", choices=["auto", "on", "off"])
    p_test.add_argument("--format", default="json", choices=["json", "csv"])
    p_test.set_defaults(func=_cmd_test)

    p_feas = sub.add_parser("feasibility", help="can this much missing data ever be significant?")
    p_feas.add_argument("--n", type=int, required=True)
    p_feas.add_argument("--m", type=int, required=True)
    p_feas.add_argument("--n-obs", type=int, required=True)
    p_feas.add_argument("--m-obs", type=int, required=True)
    p_feas.add_argument("--alpha", type=float, default=0.05)
    p_feas.set_defaults(func=_cmd_feasibility)

    p_power = sub.add_parser("power", help="theoretical power under MCAR")
    p_power.add_argument("--dist-x", required=True, help="e.g. normal(0,1)")
    p_power.add_argument("--dist-y", required=True, help="e.g. normal(1,1)")
    p_power.add_argument("--n", type=int, default=100)
    p_power.add_argument("--m", type=int, default=100)
    p_power.add_argument("--s", type=float, default=0.0, help="missing fraction per sample")
    p_power.add_argument("--alpha", type=float, default=0.05)
    p_power.add_argument("--limit", action="store_true",
                         help="report the large-sample 0/1 classification instead")
    p_power.set_defaults(func=_cmd_power)

    p_sim = sub.add_parser("simulate", help="Monte-Carlo sweep to CSV")
    p_sim.add_argument("--scenario", required=True, help="key = value scenario file")
    p_sim.add_argument("--seed", type=int, default=None,
                       help="simulation seed (default: RANKGUARD_SEED or file or 0)")
    p_sim.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p_sim.add_argument("--out", required=True, help="output CSV path")
    p_sim.set_defaults(func=_cmd_simulate)

    p_an = sub.add_parser("analyze", help="group-vs-control analysis of a CSV dataset")
    p_an.add_argument("--data", required=True, help="CSV with header group,value; NA = missing")
    p_an.add_argument("--control", required=True, help="label of the control group")
    p_an.add_argument("--alternative", default="two-sided",
                      choices=["two-sided", "greater", "less"])
    p_an.add_argument("--alpha", type=float, default=0.05)
    p_an.add_argument("--holm", action="store_true", help="familywise Holm correction")
    p_an.add_argument("--ties", default="auto", choices=["auto", "on", "off"])
    p_an.add_argument("--support", help="'lo,hi' ('lo,' or ',hi' for one side) or 'none'")
    p_an.set_defaults(func=_cmd_analyze)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateDataError as exc:
        _error(str(exc))
        return EXIT_DEGENERATE
    except (DomainError, ValueError, ArithmeticError) as exc:
        _error(str(exc))
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
