"""Command-line entry point: ``growth <subcommand> ...``.

Exit statuses: 0 success (including all-pass property runs), 1 any failed
bound check, 2 domain error, 3 resource-guard refusal.  Reports go to
stdout, diagnostics to stderr.  Integers that can outgrow 53-bit floats
are serialized as decimal strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .arith import growth_series_rank1
from .chevalley import ORACLE_FAMILIES, brute_force_order, order_zpk
from .commgraph import (RationalCyclic, RationalLattice, enumerate_ball,
                        run_metric_checks)
from .errors import DomainError, ResourceLimitError
from .parahoric import (check_cocharacter_bound, count_admissible_cocharacters,
                        maximal_lattice_bound, per_prime_bound)
from .root_systems import root_system

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation: subcommand, its parameters, output format,
    and the seed used by sampled property runs (fixed default 0)."""

    subcommand: str
    parameters: dict = field(default_factory=dict)
    output: str = "text"
    seed: int = 0


def thread_cap() -> int | None:
    """Optional worker cap from GROWTH_THREADS.

    The enumeration kernels run single-threaded, which satisfies any cap
    of at least one; the variable is still validated so misconfiguration
    fails loudly instead of silently.
    """
    raw = os.environ.get("GROWTH_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"GROWTH_THREADS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError(f"GROWTH_THREADS must be >= 1, got {cap}")
    return cap


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(obj):
    _emit(json.dumps(obj, indent=2))


def _run_rank1(cfg: RunConfig) -> int:
    n = int(cfg.parameters["n"])
    series = growth_series_rank1(n)
    if cfg.output == "json":
        _emit_json({"n": n, "c": list(series.c), "C": list(series.C)})
    elif cfg.output == "csv":
        rows = [f"{k},{ck},{Ck}" for k, (ck, Ck) in enumerate(zip(series.c, series.C), 1)]
        _emit("k,c_k,C_k\n" + "\n".join(rows))
    else:
        width = len(str(series.C[-1]))
        _emit("\n".join(f"{k:>6} {ck:>{width}} {Ck:>{width}}"
                        for k, (ck, Ck) in enumerate(zip(series.c, series.C), 1)))
    return EXIT_OK


def _run_ball(cfg: RunConfig) -> int:
    family = cfg.parameters["family"]
    dim = int(cfg.parameters["dim"])
    n = int(cfg.parameters["n"])
    if family == "cyclic":
        if dim != 1:
            raise DomainError("cyclic subgroups live in dimension 1")
        ball = enumerate_ball(RationalCyclic(1, 1), n)
        descriptors = [{"a": s.a, "b": s.b} for s in ball]
        lines = [f"{s.a}/{s.b}" for s in ball]
    else:
        ball = enumerate_ball(RationalLattice.standard(dim), n)
        descriptors = [{"denom": s.denom, "hnf": [list(r) for r in s.basis]} for s in ball]
        lines = [str(s) for s in ball]
    if cfg.output == "json":
        _emit_json(descriptors)
    else:
        _emit("\n".join(lines))
    return EXIT_OK


def _run_rootsys(cfg: RunConfig) -> int:
    rs = root_system(cfg.parameters["type"])
    payload = {
        "label": rs.label,
        "rank": rs.rank,
        "N": rs.num_positive_roots,
        "d": rs.dimension,
        "degrees": list(rs.degrees),
        "positive_roots": [list(r) for r in rs.positive_roots],
    }
    if cfg.output == "json":
        _emit_json(payload)
    else:
        _emit("\n".join(f"{key}: {value}" for key, value in payload.items()))
    return EXIT_OK


def _run_order(cfg: RunConfig) -> int:
    rs = root_system(cfg.parameters["type"])
    p = int(cfg.parameters["p"])
    k = int(cfg.parameters["k"])
    value = order_zpk(rs, p, k)
    payload = {"label": rs.label, "p": p, "k": k, "order": str(value)}
    status = EXIT_OK
    if cfg.parameters.get("brute_force"):
        family = ORACLE_FAMILIES.get(rs.label)
        if family is None:
            raise DomainError(f"no matrix oracle for type {rs.label}; "
                              f"supported: {sorted(ORACLE_FAMILIES)}")
        brute = brute_force_order(family, p ** k)
        payload["brute_force"] = str(brute)
        if brute != value:
            status = EXIT_FAILED_CHECK
            print(f"mismatch: formula {value} != enumeration {brute}", file=sys.stderr)
    if cfg.output == "json":
        _emit_json(payload)
    elif cfg.parameters.get("brute_force"):
        _emit(f"{value} (enumeration: {payload['brute_force']})")
    else:
        _emit(str(value))
    return status


def _run_parahoric(cfg: RunConfig) -> int:
    rs = root_system(cfg.parameters["type"])
    k = int(cfg.parameters["k"])
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    count = count_admissible_cocharacters(rs, k + 1)
    paper_bound = (2 * k + 3) ** rs.dimension
    payload = {
        "exact": None if count.exact is None else str(count.exact),
        "box_bound": str(count.box_bound),
        "paper_bound": str(paper_bound),
        "per_prime": None,
        "m_bound": None,
    }
    status = EXIT_OK
    if count.exact is not None and not check_cocharacter_bound(rs, k).holds:
        status = EXIT_FAILED_CHECK
    p = cfg.parameters.get("p")
    if p is not None:
        report = per_prime_bound(rs, int(p), k)
        payload["per_prime"] = str(report.lhs)
        if not report.holds:
            status = EXIT_FAILED_CHECK
    m = cfg.parameters.get("m")
    if m is not None:
        payload["m_bound"] = str(maximal_lattice_bound(rs, int(m)))
    if cfg.output == "json":
        _emit_json(payload)
    else:
        _emit("\n".join(f"{key}: {value}" for key, value in payload.items()
                        if value is not None))
    return status


def _run_check(cfg: RunConfig) -> int:
    samples = int(cfg.parameters["samples"])
    reports = run_metric_checks(samples=samples, seed=cfg.seed)
    _emit("\n".join(str(r) for r in reports))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED_CHECK


_HANDLERS = {
    "rank1": _run_rank1,
    "ball": _run_ball,
    "rootsys": _run_rootsys,
    "order": _run_order,
    "parahoric": _run_parahoric,
    "check": _run_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="growth",
        description="Commensurability growth invariants: exact series, "
                    "subgroup metrics, Chevalley group orders, counting bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    rank1 = sub.add_parser("rank1", help="exact growth series c_k, C_k")
    rank1.add_argument("--n", type=int, required=True)
    fmt = rank1.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")

    ball = sub.add_parser("ball", help="enumerate a commensurability ball")
    ball.add_argument("--family", choices=("cyclic", "lattice"), required=True)
    ball.add_argument("--dim", type=int, default=1)
    ball.add_argument("--n", type=int, required=True)
    ball.add_argument("--json", action="store_true")

    rootsys = sub.add_parser("rootsys", help="root system data for a type label")
    rootsys.add_argument("--type", required=True)
    rootsys.add_argument("--json", action="store_true")

    order = sub.add_parser("order", help="group order over Z/p^k")
    order.add_argument("--type", required=True)
    order.add_argument("--p", type=int, required=True)
    order.add_argument("--k", type=int, default=1)
    order.add_argument("--brute-force", action="store_true")
    order.add_argument("--json", action="store_true")

    para = sub.add_parser("parahoric", help="cocharacter counts and lattice bounds")
    para.add_argument("--type", required=True)
    para.add_argument("--k", type=int, required=True)
    para.add_argument("--p", type=int)
    para.add_argument("--m", type=int)
    para.add_argument("--json", action="store_true")

    check = sub.add_parser("check", help="seeded property suites")
    checks = check.add_subparsers(dest="suite", required=True)
    metric = checks.add_parser("metric", help="metric axioms, geodesics, chains")
    metric.add_argument("--samples", type=int, default=100)
    metric.add_argument("--seed", type=int, default=0)

    return parser


def _to_config(args: argparse.Namespace) -> RunConfig:
    params = {k: v for k, v in vars(args).items()
              if k not in ("subcommand", "csv", "json", "suite", "seed") and v is not None}
    output = "json" if getattr(args, "json", False) else \
             "csv" if getattr(args, "csv", False) else "text"
    return RunConfig(subcommand=args.subcommand, parameters=params,
                     output=output, seed=getattr(args, "seed", 0))


def run(config: RunConfig) -> int:
    """Dispatch one parsed invocation; see the module docstring for the
    exit-status contract."""
    try:
        thread_cap()
        return _HANDLERS[config.subcommand](config)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(_to_config(args))


if __name__ == "__main__":
    sys.exit(main())
