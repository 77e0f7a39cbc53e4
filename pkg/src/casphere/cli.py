"""Command-line front end: single points, parameter sweeps, metal-limit
and planar-reflection tables, with CSV/JSON output and a point cache.

Exit codes: 0 success, 1 usage or domain error, 2 some points
unconverged (output still written).
"""

import argparse
import concurrent.futures
import hashlib
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__, dispersion, thermal
from .dispersion import (ConstantIndex, Drude, IdealMetal, MetalOption, Plasma,
                         effective_conductivity, matsubara_omega,
                         r2_perpendicular, reduced_temperature)
from .thermal import Config, SummationPolicy

SWEEP_COLUMNS = ("t", "d_over_a", "model", "beta_F", "beta_F_t", "beta_F_m0",
                 "Y", "terms_used", "converged")


def _fmt(value) -> str:
    """Shortest round-trip formatting; booleans as true/false."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "nan"
    if isinstance(value, float):
        return repr(float(value))  # plain float repr also for numpy scalars
    return str(value)


# ---------------------------------------------------------------------------
# configuration file + flags

def _read_config_file(path):
    """Flat key = value text file; '#' starts a comment."""
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, val = line.split("=", 1)
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def _add_common(parser):
    parser.add_argument("--config", help="flat key=value config file; flags override")
    parser.add_argument("--model", choices=["constant", "plasma", "drude", "ideal-metal"],
                        default=None)
    parser.add_argument("--n", type=float, default=None, help="constant refractive index")
    parser.add_argument("--omega-p", type=float, default=None, help="plasma frequency (s^-1)")
    parser.add_argument("--gamma-relax", type=float, default=None,
                        help="Drude relaxation frequency (s^-1)")
    parser.add_argument("--option", choices=["A", "B"], default=None,
                        help="ideal-metal static TE treatment")
    parser.add_argument("--a", type=float, default=None, help="inner radius (m), for SI models")
    parser.add_argument("--T", type=float, default=None, help="temperature (K)")
    parser.add_argument("--t", type=str, default=None,
                        help="reduced temperature 2 pi a/beta (comma list in sweeps)")
    parser.add_argument("--d-over-a", type=str, default=None,
                        help="relative width (or comma list where a sweep accepts one)")
    parser.add_argument("--a-over-b", type=float, default=None, help="radius ratio alpha")
    parser.add_argument("--rel-tol", type=float, default=None)
    parser.add_argument("--l-cap", type=int, default=None)
    parser.add_argument("--m-cap", type=int, default=None)
    parser.add_argument("--crossover-x", type=float, default=None)
    parser.add_argument("--crossover-l", type=int, default=None)
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.add_argument("--cache-dir", default=None,
                        help="point cache directory (or CASIMIR_CACHE_DIR)")
    parser.add_argument("--format", choices=["csv", "json"], default=None)
    parser.add_argument("--out", default=None, help="output path (default stdout)")


def _merge_config(args):
    """Apply config-file values under explicit flags."""
    if args.config:
        file_vals = _read_config_file(args.config)
        for key, val in file_vals.items():
            if getattr(args, key, None) is None and hasattr(args, key):
                action_type = _ARG_TYPES.get(key, str)
                setattr(args, key, action_type(val))
    return args


_ARG_TYPES = {
    "n": float, "omega_p": float, "gamma_relax": float, "a": float, "T": float,
    "t": str, "a_over_b": float, "rel_tol": float, "l_cap": int, "m_cap": int,
    "crossover_x": float, "crossover_l": int, "jobs": int, "d_over_a": str,
    "model": str, "option": str, "format": str, "out": str, "cache_dir": str,
}


class UsageError(ValueError):
    pass


def _build_model(args):
    model = args.model or "constant"
    if model == "constant":
        if args.n is None:
            raise UsageError("--n is required for the constant-index model")
        return ConstantIndex(n=args.n)
    if model == "ideal-metal":
        return IdealMetal(option=MetalOption(args.option or "B"))
    if args.omega_p is None:
        raise UsageError(f"--omega-p is required for the {model} model")
    a = args.a if args.a is not None else 1.0
    if model == "plasma":
        return Plasma.from_si(args.omega_p, a)
    if args.gamma_relax is None:
        raise UsageError("--gamma-relax is required for the drude model")
    return Drude.from_si(args.omega_p, args.gamma_relax, a)


def _build_policy(args):
    kwargs = {}
    if args.rel_tol is not None:
        kwargs["rel_tol"] = args.rel_tol
    if args.l_cap is not None:
        kwargs["l_cap"] = args.l_cap
    if args.m_cap is not None:
        kwargs["m_cap"] = args.m_cap
    if args.crossover_x is not None:
        kwargs["crossover_x"] = args.crossover_x
    if args.crossover_l is not None:
        kwargs["crossover_l"] = args.crossover_l
    return SummationPolicy(**kwargs)


def _alpha_from(args):
    if args.a_over_b is not None:
        return args.a_over_b
    if args.d_over_a is not None:
        return 1.0 / (1.0 + float(args.d_over_a))
    raise UsageError("give --d-over-a or --a-over-b")


def _reduced_t(args):
    if args.t is not None:
        return float(args.t)
    if args.T is not None and args.a is not None:
        return reduced_temperature(args.T, args.a)
    raise UsageError("give --t, or --T together with --a")


# ---------------------------------------------------------------------------
# cache

def _cache_dir(args):
    return args.cache_dir or os.environ.get("CASIMIR_CACHE_DIR")


def cache_key(record_kind, params, policy):
    """Canonical hash over (operation, parameters, policy, code version)."""
    payload = {
        "kind": record_kind,
        "params": params,
        "policy": {
            "rel_tol": policy.rel_tol, "l_cap": policy.l_cap, "m_cap": policy.m_cap,
            "crossover_x": policy.crossover_x, "crossover_l": policy.crossover_l,
            "summation_scheme": policy.summation_scheme,
            "debye_k_max": policy.debye_k_max,
        },
        "version": __version__,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_load(directory, key):
    if not directory:
        return None
    path = os.path.join(directory, key + ".json")
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError):
        print(f"warning: corrupt cache entry {path}; recomputing", file=sys.stderr)
        return None


def cache_store(directory, key, record):
    if not directory:
        return
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, key + ".json")
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(record, fh, sort_keys=True)
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# point evaluation shared by point + sweeps

def _model_params(model):
    if isinstance(model, ConstantIndex):
        return {"model": "constant", "n": model.n}
    if isinstance(model, IdealMetal):
        return {"model": "ideal-metal", "option": model.option.value}
    if isinstance(model, Plasma):
        return {"model": "plasma", "x_p": model.x_p, "omega_p": model.omega_p}
    return {"model": "drude", "x_p": model.x_p, "g_a": model.g_a,
            "omega_p": model.omega_p, "gamma_relax": model.gamma_relax}


def evaluate_point(alpha, t, model, policy, jobs=1, cache_directory=None):
    """One free-energy evaluation as a JSON-ready record, cached by its
    canonical (config, policy, version) key."""
    params = {"alpha": alpha, "t": t, **_model_params(model)}
    key = cache_key("free_energy", params, policy)
    hit = cache_load(cache_directory, key)
    if hit is not None:
        hit["cache"] = "hit"
        return hit
    start = time.perf_counter()
    res = thermal.free_energy(Config(alpha=alpha, t=t, model=model), policy, jobs)
    record = {
        "kind": "free_energy",
        "params": params,
        "version": __version__,
        "beta_F": res.beta_F,
        "beta_F_tm": res.beta_F_tm,
        "beta_F_te": res.beta_F_te,
        "beta_F_m0": res.beta_F_m0,
        "beta_F_t": res.beta_F * t,
        "Y": res.beta_F_m0 / res.beta_F if res.beta_F != 0.0 else None,
        "terms_used": res.terms_used,
        "converged": res.converged,
        "max_l_reached": res.max_l_reached,
        "max_m_reached": res.max_m_reached,
        "wall_time_s": time.perf_counter() - start,
        "cache": "miss",
    }
    cache_store(cache_directory, key, record)
    return record


def _sweep_row(record, model):
    t = record["params"]["t"]
    alpha = record["params"]["alpha"]
    return {
        "t": t,
        "d_over_a": 1.0 / alpha - 1.0,
        "model": model.describe(),
        "beta_F": record["beta_F"],
        "beta_F_t": record["beta_F_t"],
        "beta_F_m0": record["beta_F_m0"],
        "Y": record["Y"],
        "terms_used": record["terms_used"],
        "converged": record["converged"],
    }


def _write_csv(out, header_meta, columns, rows):
    lines = []
    for key, val in header_meta.items():
        lines.append(f"# {key}: {val}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in columns))
    text = "\n".join(lines) + "\n"
    _emit(out, text)


def _emit(out, text):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _policy_meta(policy):
    return (f"rel_tol={policy.rel_tol} l_cap={policy.l_cap} m_cap={policy.m_cap} "
            f"crossover_x={policy.crossover_x} crossover_l={policy.crossover_l} "
            f"debye_k_max={policy.debye_k_max}")


def _points_list(raw, lo_flag, hi_flag, npts_flag, args):
    """Explicit comma list, or a log-spaced range."""
    if raw is not None and "," in str(raw):
        pts = [float(v) for v in str(raw).split(",") if v.strip()]
    elif raw is not None and getattr(args, npts_flag) is None:
        pts = [float(raw)]
    else:
        lo = getattr(args, lo_flag)
        hi = getattr(args, hi_flag)
        npts = getattr(args, npts_flag)
        if lo is None or hi is None or npts is None:
            raise UsageError("give an explicit comma list or a full log range")
        pts = list(np.logspace(math.log10(lo), math.log10(hi), npts))
    if not pts or any(p <= 0 for p in pts) or sorted(pts) != pts:
        raise UsageError("sweep points must be positive and strictly increasing")
    return pts


def _sweep_task(task):
    alpha, t, model, policy, cache_directory = task
    return evaluate_point(alpha, t, model, policy, jobs=1,
                          cache_directory=cache_directory)


def _run_sweep(tasks, model, policy, args, extra_meta=None):
    """Evaluate sweep tasks (worker pool over points), write CSV/JSON."""
    jobs = args.jobs or 1
    cdir = _cache_dir(args)
    work = [(alpha, t, model, policy, cdir) for (alpha, t) in tasks]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_sweep_task, work))
    else:
        records = [_sweep_task(w) for w in work]
    rows = [_sweep_row(r, model) for r in records]
    meta = {
        "tool": f"casphere {__version__}",
        "model": model.describe(),
        "policy": _policy_meta(policy),
        "point_wall_times_s": "[" + ", ".join(f"{r['wall_time_s']:.3f}" if "wall_time_s" in r else "cached"
                                              for r in records) + "]",
    }
    if extra_meta:
        meta.update(extra_meta)
    if (args.format or "csv") == "json":
        _emit(args.out, json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n")
    else:
        _write_csv(args.out, meta, SWEEP_COLUMNS, rows)
    return 0 if all(r["converged"] for r in rows) else 2


# ---------------------------------------------------------------------------
# subcommands

def cmd_point(args):
    policy = _build_policy(args)
    model = _build_model(args)
    cdir = _cache_dir(args)
    report = args.report

    if report == "conductivity":
        if not isinstance(model, Drude):
            raise UsageError("--report conductivity requires the drude model")
        T = args.T or 300.0
        w1 = matsubara_omega(T, 1)
        record = {
            "kind": "conductivity",
            "params": {**_model_params(model), "T": T},
            "version": __version__,
            "omega_1": w1,
            "sigma_0": effective_conductivity(model, 0.0),
            "sigma_1": effective_conductivity(model, w1),
            "n2_prefactor_0": model.omega_p ** 2 / model.gamma_relax,
            "n2_prefactor_1": model.omega_p ** 2 / (w1 + model.gamma_relax),
        }
        _emit(args.out, json.dumps(record, indent=2) + "\n")
        return 0

    alpha = _alpha_from(args)
    if args.m0_only:
        cfg = Config(alpha=alpha, t=float(args.t) if args.t is not None else 1.0,
                     model=model)
        value = thermal.free_energy_m0(cfg, policy)
        record = {
            "kind": "free_energy_m0",
            "params": {"alpha": alpha, **_model_params(model)},
            "version": __version__,
            "beta_F_m0": value,
        }
        _emit(args.out, json.dumps(record, indent=2) + "\n")
        return 0

    t = _reduced_t(args)
    if report == "zero-t":
        value = thermal.free_energy_zero_temperature(alpha, model, policy)
        record = {
            "kind": "zero_temperature",
            "params": {"alpha": alpha, **_model_params(model)},
            "version": __version__,
            "beta_F_t_limit": value,
        }
        _emit(args.out, json.dumps(record, indent=2) + "\n")
        return 0
    if report == "internal-energy":
        cfg = Config(alpha=alpha, t=t, model=model)
        res = thermal.internal_energy(cfg, policy, args.jobs or 1)
        record = {
            "kind": "internal_energy",
            "params": {"alpha": alpha, "t": t, **_model_params(model)},
            "version": __version__,
            "a_E": res.a_E,
            "step_agreement": res.step_agreement,
            "converged": res.converged,
        }
        _emit(args.out, json.dumps(record, indent=2) + "\n")
        return 0 if res.converged else 2

    record = evaluate_point(alpha, t, model, policy, jobs=args.jobs or 1,
                            cache_directory=cdir)
    _emit(args.out, json.dumps(record, indent=2) + "\n")
    return 0 if record["converged"] else 2


def cmd_sweep_width(args):
    policy = _build_policy(args)
    model = _build_model(args)
    t = _reduced_t(args)
    widths = _points_list(args.d_over_a, "d_over_a_min", "d_over_a_max", "points", args)
    tasks = [(1.0 / (1.0 + d), t) for d in widths]
    return _run_sweep(tasks, model, policy, args, {"axis": "width", "t": t})


def cmd_sweep_temperature(args):
    policy = _build_policy(args)
    model = _build_model(args)
    if args.d_over_a is None:
        raise UsageError("give --d-over-a")
    d = float(args.d_over_a)
    ts = _points_list(args.t, "t_min", "t_max", "points", args)
    tasks = [(1.0 / (1.0 + d), t) for t in ts]
    return _run_sweep(tasks, model, policy, args,
                      {"axis": "temperature", "d_over_a": d})


def cmd_y_ratio(args):
    # a temperature sweep; the Y column is the payload
    if args.model not in (None, "constant"):
        raise UsageError("the Y ratio is defined for the constant-index model")
    args.model = "constant"
    return cmd_sweep_temperature(args)


def cmd_metal_limit(args):
    policy = _build_policy(args)
    t = _reduced_t(args)
    if args.a_over_b is not None:
        alphas = [args.a_over_b]
    elif args.d_over_a is not None:
        alphas = [1.0 / (1.0 + float(v)) for v in str(args.d_over_a).split(",")]
    else:
        raise UsageError("give --a-over-b or --d-over-a")
    rows = []
    ok = True
    for alpha in alphas:
        cfg = Config(alpha=alpha, t=t, model=IdealMetal(option=MetalOption.A))
        ra = thermal.free_energy_ideal_metal(cfg, policy, MetalOption.A, args.jobs or 1)
        rb = thermal.free_energy_ideal_metal(cfg, policy, MetalOption.B, args.jobs or 1)
        m0_conv = thermal.free_energy_m0(cfg, policy)
        ok = ok and ra.converged and rb.converged
        rows.append({
            "a_over_b": alpha, "t": t,
            "beta_F_A": ra.beta_F, "beta_F_B": rb.beta_F,
            "difference": ra.beta_F - rb.beta_F,
            "m0_conventional": m0_conv,
            "terms_A": ra.terms_used, "terms_B": rb.terms_used,
            "converged": ra.converged and rb.converged,
        })
    meta = {"tool": f"casphere {__version__}", "policy": _policy_meta(policy)}
    cols = ("a_over_b", "t", "beta_F_A", "beta_F_B", "difference",
            "m0_conventional", "terms_A", "terms_B", "converged")
    if (args.format or "csv") == "json":
        _emit(args.out, json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n")
    else:
        _write_csv(args.out, meta, cols, rows)
    return 0 if ok else 2


def cmd_planar_r2(args):
    if args.omega_p is None or args.gamma_relax is None:
        raise UsageError("give --omega-p and --gamma-relax (s^-1)")
    drude = Drude.from_si(args.omega_p, args.gamma_relax, args.a or 1.0)
    plasma = Plasma.from_si(args.omega_p, args.a or 1.0)
    k_perps = [float(v) for v in (args.k_perp or "1e6,3e6").split(",")]
    ratios = [float(v) for v in
              np.logspace(math.log10(args.ratio_min), math.log10(args.ratio_max),
                          args.points or 7)]
    rows = []
    for k in k_perps:
        slope_limit = args.omega_p ** 2 / (4.0 * k * k * dispersion.C_LIGHT ** 2)
        for r in ratios:
            w = r * args.gamma_relax
            r2d = r2_perpendicular(drude, w, k)
            r2p = r2_perpendicular(plasma, w, k)
            rows.append({
                "k_perp": k, "omega_hat": w, "omega_over_gamma": r,
                "r2_drude": r2d, "r2_plasma": r2p,
                "abs_r2_drude_over_ratio": abs(r2d) / r,
                "limit_slope": slope_limit,
            })
    meta = {"tool": f"casphere {__version__}",
            "omega_p": args.omega_p, "gamma_relax": args.gamma_relax}
    cols = ("k_perp", "omega_hat", "omega_over_gamma", "r2_drude", "r2_plasma",
            "abs_r2_drude_over_ratio", "limit_slope")
    if (args.format or "csv") == "json":
        _emit(args.out, json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n")
    else:
        _write_csv(args.out, meta, cols, rows)
    return 0


def cmd_zero_t(args):
    policy = _build_policy(args)
    model = _build_model(args)
    if args.d_over_a is None:
        raise UsageError("give --d-over-a (value or comma list)")
    widths = [float(v) for v in str(args.d_over_a).split(",")]
    rows = []
    for d in widths:
        value = thermal.free_energy_zero_temperature(1.0 / (1.0 + d), model, policy)
        rows.append({"d_over_a": d, "model": model.describe(),
                     "beta_F_t_limit": value, "converged": True})
    meta = {"tool": f"casphere {__version__}", "policy": _policy_meta(policy)}
    cols = ("d_over_a", "model", "beta_F_t_limit", "converged")
    if (args.format or "csv") == "json":
        _emit(args.out, json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n")
    else:
        _write_csv(args.out, meta, cols, rows)
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="casphere",
        description="Casimir mutual free energy of concentric spherical dielectrics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate a single configuration")
    _add_common(p)
    p.add_argument("--m0-only", action="store_true", help="static term only")
    p.add_argument("--report", choices=["free-energy", "conductivity",
                                        "internal-energy", "zero-t"],
                   default="free-energy")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep-width", help="sweep the relative gap width")
    _add_common(p)
    p.add_argument("--d-over-a-min", type=float)
    p.add_argument("--d-over-a-max", type=float)
    p.add_argument("--points", type=int)
    p.set_defaults(func=cmd_sweep_width)

    p = sub.add_parser("sweep-temperature", help="sweep the reduced temperature")
    _add_common(p)
    p.add_argument("--t-min", type=float)
    p.add_argument("--t-max", type=float)
    p.add_argument("--points", type=int)
    p.set_defaults(func=cmd_sweep_temperature)

    p = sub.add_parser("y-ratio", help="static-term weight versus temperature")
    _add_common(p)
    p.add_argument("--t-min", type=float)
    p.add_argument("--t-max", type=float)
    p.add_argument("--points", type=int)
    p.set_defaults(func=cmd_y_ratio)

    p = sub.add_parser("metal-limit", help="ideal-metal option A/B comparison")
    _add_common(p)
    p.set_defaults(func=cmd_metal_limit)

    p = sub.add_parser("planar-r2", help="planar reflection diagnostic table")
    _add_common(p)
    p.add_argument("--k-perp", type=str, help="comma list of k_perp (m^-1)")
    p.add_argument("--ratio-min", type=float, default=1e-6,
                   help="smallest omega/gamma")
    p.add_argument("--ratio-max", type=float, default=1e-3)
    p.add_argument("--points", type=int, default=7)
    p.set_defaults(func=cmd_planar_r2)

    p = sub.add_parser("zero-t", help="zero-temperature limit of beta F t")
    _add_common(p)
    p.set_defaults(func=cmd_zero_t)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        return args.func(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
