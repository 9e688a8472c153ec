"""Command-line frontend: ``aomoto-bgg <group> <command> [flags]``.

Exit status is 0 when every check passes, 1 on a verification failure and
2 on a usage error.  Reports go to stdout as JSON (default) or as a stable
plain-text table.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import arrangement as arrm
from . import orlik_solomon as osm
from . import sl2
from . import strata
from .exact import betti, format_scalar

COMMANDS = {
    "arr": ("flats", "dense", "resonant"),
    "os": ("dims", "skew", "aomoto"),
    "sl2": ("bgg", "cg", "homology"),
    "strata": ("total", "betti"),
    "verify": ("iso", "flag", "dims", "cond-a", "generic", "all"),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    group: str
    command: str
    m: tuple[int, ...]
    k: int
    z: tuple[Fraction, ...] | None
    kappas: tuple[Fraction, ...]
    kappa_pinned: bool
    seed: int
    fmt: str
    cache_dir: Path | None
    jobs: int
    p: int | None
    weight: int | None
    grid: tuple[int, int, int] | None
    zero_weights: bool

    @property
    def kappa(self) -> Fraction:
        return self.kappas[0]

    @property
    def spec(self) -> arrm.DiscriminantalSpec:
        return arrm.DiscriminantalSpec(k=self.k, m=self.m, z=self.z, kappa=self.kappa)


def _int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None
    if not out:
        raise UsageError(f"{flag}: empty list")
    return out


def _fraction(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag}: expected a rational like 3/7, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aomoto-bgg", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("group", choices=sorted(COMMANDS))
    ap.add_argument("command")
    ap.add_argument("--m", help="weights m_1,...,m_n (positive integers)")
    ap.add_argument("--k", type=int, help="number of variables t_1..t_k")
    ap.add_argument("--z", help="marked points z_1,...,z_n as rationals (default 1..n)")
    ap.add_argument("--kappa", help="pin kappa to a rational p/q (default: sampled from --seed)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    ap.add_argument("--cache-dir", type=Path)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--p", type=int, help="sl2 cg: highest weight |m| - 2p")
    ap.add_argument("--weight", type=int, help="sl2 bgg: weight lambda (default |m| - 2k)")
    ap.add_argument("--grid", help="verify all: N,K,M runs every n<=N, k<=K, entries<=M")
    ap.add_argument("--zero-weights", action="store_true", help="verify cond-a: negative control")
    return ap


def parse_config(argv) -> RunConfig:
    ap = build_parser()
    a = ap.parse_args(argv)
    if a.command not in COMMANDS[a.group]:
        raise UsageError(f"{a.group}: unknown command {a.command!r}, choose from {', '.join(COMMANDS[a.group])}")
    grid = None
    if a.grid:
        grid = _int_list(a.grid, "--grid")
        if len(grid) != 3 or min(grid) < 1:
            raise UsageError("--grid: expected three positive integers N,K,M")
        if a.group != "verify" or a.command != "all":
            raise UsageError("--grid: only valid with 'verify all'")
    m = _int_list(a.m, "--m") if a.m else ()
    if any(x < 1 for x in m):
        raise UsageError("--m: entries must be positive")
    needs_m = not (grid or (a.group == "verify" and a.command == "cond-a"))
    if needs_m and not m:
        raise UsageError("--m: required")
    needs_k = needs_m and not (a.group == "sl2" and a.command in ("cg", "bgg"))
    if a.k is None and needs_k:
        raise UsageError("--k: required")
    if a.k is not None and a.k < 1:
        raise UsageError("--k: must be at least 1")
    z = None
    if a.z:
        z = tuple(_fraction(x, "--z") for x in a.z.split(","))
        if len(z) != len(m):
            raise UsageError("--z: needs one point per entry of --m")
        if len(set(z)) != len(z):
            raise UsageError("--z: points must be distinct")
    if a.kappa:
        kap = _fraction(a.kappa, "--kappa")
        if kap == 0:
            raise UsageError("--kappa: must be nonzero")
        kappas = (kap,)
    else:
        kappas = tuple(strata.sample_kappas(a.seed, 3))
    if a.jobs < 1:
        raise UsageError("--jobs: must be at least 1")
    if a.group == "sl2" and a.command == "cg" and a.p is None:
        raise UsageError("--p: required for 'sl2 cg'")
    return RunConfig(
        a.group, a.command, m, a.k or 0, z, kappas, bool(a.kappa), a.seed, a.fmt,
        a.cache_dir, a.jobs, a.p, a.weight, grid, a.zero_weights,
    )


# --- cache -------------------------------------------------------------------


def _cache_key(cfg: RunConfig, what: str, k=None, m=None) -> str:
    key = {
        "what": what,
        "m": list(m if m is not None else cfg.m),
        "k": k if k is not None else cfg.k,
        "z": [format_scalar(x) for x in cfg.z] if cfg.z else None,
        "kappa": [format_scalar(x) for x in cfg.kappas],
        "zero_weights": cfg.zero_weights,
        "version": __version__,
    }
    return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()[:24]


def cached(cfg: RunConfig, what: str, compute, **kw):
    """Serve ``compute()`` from the cache directory when possible."""
    if cfg.cache_dir is None:
        return compute()
    path = cfg.cache_dir / f"{what.replace(' ', '-')}-{_cache_key(cfg, what, **kw)}.json"
    if path.exists():
        try:
            return json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            pass  # advisory: recompute
    out = json.loads(json.dumps(compute(), sort_keys=True))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, sort_keys=True))
    return out


# --- commands ----------------------------------------------------------------


def _flat_json(arr, f) -> dict:
    return {
        "hyperplanes": sorted(f.hyperplane_indices),
        "equations": [str(arr.hyperplanes[i]) for i in sorted(f.hyperplane_indices)],
        "codim": f.codim,
        "weight": format_scalar(arrm.edge_weight(arr, f)),
    }


def run_arr(cfg: RunConfig) -> dict:
    arr = arrm.discriminantal(cfg.spec)
    pick = {"flats": arrm.flats, "dense": arrm.dense_edges, "resonant": arrm.resonant_dense_edges}[cfg.command]
    edges = [_flat_json(arr, f) for f in pick(arr)]
    out = {"m": list(cfg.m), "k": cfg.k, "count": len(edges), "edges": edges}
    if cfg.command == "resonant":
        got = {frozenset(e["hyperplanes"]) for e in edges}
        out["matches_prediction"] = got == arrm.predicted_resonant_edges(cfg.spec)
        out["passed"] = out["matches_prediction"]
    return out


def run_os(cfg: RunConfig) -> dict:
    os = osm.discriminantal_os(cfg.spec)
    out = {"m": list(cfg.m), "k": cfg.k, "kappa": format_scalar(cfg.kappa)}
    if cfg.command == "dims":
        out["dims"] = list(os.dims())
        out["moebius"] = list(arrm.moebius_poincare(os.arrangement))
        dims = list(out["dims"])
        while dims and dims[-1] == 0:
            dims.pop()
        out["passed"] = dims == out["moebius"]
    elif cfg.command == "skew":
        action = osm._action(os.arrangement)
        out["skew_dims"] = [osm.skew_subspace(os, action, p).cols for p in range(os.top_degree + 1)]
        report = osm.omega_J_basis_check(cfg.spec)
        out["omega_basis"] = report
        out["passed"] = bool(report.get("passed"))
    else:
        out["betti"] = betti(osm.aomoto(os)).as_dict()
    return out


def run_sl2(cfg: RunConfig) -> dict:
    m = cfg.m
    if cfg.command == "cg":
        return {"m": list(m), "p": cfg.p, "highest_weight": sum(m) - 2 * cfg.p,
                "multiplicity": sl2.clebsch_gordan_mult(m, cfg.p)}
    if cfg.command == "bgg":
        lam = cfg.weight if cfg.weight is not None else sum(m) - 2 * cfg.k
        cx = sl2.bgg_tensor_complex(m, lam)
        b = betti(cx).betti
        return {
            "m": list(m), "weight": lam, "dims": list(cx.dims), "betti": list(b),
            "expected_h0": sl2.weight_multiplicity(m, lam),
            "passed": b[0] == sl2.weight_multiplicity(m, lam) and not any(b[1:]),
        }
    h1, h0 = sl2.lie_homology_dims(m, cfg.k)
    return {"m": list(m), "k": cfg.k, "H1": h1, "H0": h0, "skew_betti": sl2.expected_skew_betti(m, cfg.k)}


def run_strata(cfg: RunConfig) -> dict:
    def total():
        return strata.total_complex(cfg.m, cfg.k).to_json()

    data = cached(cfg, "total", total)
    if cfg.command == "total":
        return data
    from .exact import CochainComplex

    cx = CochainComplex.from_json(data)
    return {"m": list(cfg.m), "k": cfg.k, "dims": list(cx.dims), "betti": betti(cx).as_dict()}


def _verify_one(args) -> dict:
    m, k, kappas, seed = args
    return strata.verify_all(m, k, kappas=kappas, seed=seed)


def grid_instances(n_max: int, k_max: int, m_max: int):
    for n in range(1, n_max + 1):
        for m in itertools.product(range(1, m_max + 1), repeat=n):
            for k in range(1, k_max + 1):
                yield m, k


def run_verify(cfg: RunConfig) -> dict:
    c = cfg.command
    if c == "iso":
        return cached(cfg, "iso", lambda: strata.verify_iso(cfg.m, cfg.k))
    if c == "flag":
        return cached(cfg, "flag", lambda: strata.verify_flag_kernel(cfg.m, cfg.k))
    if c == "dims":
        return cached(cfg, "dims", lambda: strata.verify_dims(cfg.m, cfg.k))
    if c == "cond-a":
        mjs = cfg.m or (1, 2, 3)
        if len(cfg.kappas) < 3:
            raise UsageError("--kappa: condition A needs three kappa samples, drop --kappa")
        reps = [strata.condition_a_check(mj, cfg.kappas, cfg.zero_weights) for mj in mjs]
        return {"reports": reps, "passed": all(r["passed"] for r in reps)}
    if c == "generic":
        if len(cfg.kappas) < 3:
            raise UsageError("--kappa: genericity needs three kappa samples, drop --kappa")
        return cached(cfg, "generic", lambda: strata.genericity_scan(cfg.m, cfg.k, kappas=cfg.kappas))
    # all
    if len(cfg.kappas) < 3:
        raise UsageError("--kappa: 'verify all' samples three kappa values, drop --kappa")
    if cfg.grid is None:
        return cached(cfg, "all", lambda: strata.verify_all(cfg.m, cfg.k, kappas=cfg.kappas))
    todo = [(m, k, cfg.kappas, cfg.seed) for m, k in grid_instances(*cfg.grid)]

    def one(args):
        return cached(cfg, "all", lambda: _verify_one(args), k=args[1], m=args[0])

    if cfg.jobs > 1 and cfg.cache_dir is None:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            reports = list(ex.map(_verify_one, todo))
    else:
        reports = [one(a) for a in todo]
    return {
        "grid": list(cfg.grid),
        "instances": len(reports),
        "failures": [{"m": r["m"], "k": r["k"]} for r in reports if not r["passed"]],
        "reports": reports,
        "passed": all(r["passed"] for r in reports),
    }


RUNNERS = {"arr": run_arr, "os": run_os, "sl2": run_sl2, "strata": run_strata, "verify": run_verify}


# --- output ------------------------------------------------------------------


def _table_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for key in sorted(obj, key=str):
            yield from _table_lines(obj[key], f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _table_lines(x, f"{prefix}[{i}]")
    else:
        yield f"{prefix:<40} {json.dumps(obj, sort_keys=True)}"


def render(report: dict, fmt: str) -> str:
    if fmt == "table":
        return "\n".join(_table_lines(report))
    return json.dumps(report, sort_keys=True, indent=2)


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        report = RUNNERS[cfg.group](cfg)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except SystemExit as err:  # argparse
        return 0 if err.code in (0, None) else 2
    except strata.SignLedgerError as err:
        print(json.dumps({"passed": False, "failure": str(err)}, indent=2))
        return 1
    except ValueError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    print(render(report, cfg.fmt))
    return 0 if report.get("passed", True) else 1


if __name__ == "__main__":
    sys.exit(main())
