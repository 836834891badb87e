"""Command-line front end.

One binary, subcommand style; JSON lines are the machine format, CSV for
tabulations.  Identical invocation and seed produce byte-identical primary
output regardless of worker count (counts merge associatively and every
listing is canonically sorted before printing).

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import census, checks, constructions
from .cache import cache_lookup, cache_store, default_cache_dir
from .graph import (
    Graph,
    complete,
    cycle,
    from_text,
    matching,
    path,
    prism,
    to_text,
)
from .group import AbelianGroup, f_group, f_max_group, mu
from .linkgraph import link_family, link_pair_even, link_single_even
from .mis import mis_result


@dataclass
class Config:
    max_n: int = 64
    enum_cap: int = 1_000_000
    workers: int = 1
    cache_dir: Path = None  # type: ignore[assignment]
    seed: int = 0
    output: str = "json"
    use_cache: bool = True

    def __post_init__(self) -> None:
        if self.cache_dir is None:
            self.cache_dir = default_cache_dir()
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.max_n > 64:
            raise ValueError("max_n tops out at 64")


_GLOBAL_DEFAULTS = {
    "workers": 1,
    "seed": 0,
    "cache_dir": None,
    "no_cache": False,
    "output": "json",
}


def _global_options() -> argparse.ArgumentParser:
    # accepted both before and after the subcommand; SUPPRESS keeps a
    # subcommand's unset flags from clobbering ones given up front
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    g.add_argument("--cache-dir", type=Path, default=argparse.SUPPRESS)
    g.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS)
    g.add_argument(
        "--output", choices=("json", "csv", "table"), default=argparse.SUPPRESS
    )
    return g


def _parser() -> argparse.ArgumentParser:
    common = _global_options()
    top = argparse.ArgumentParser(
        prog="sumfree",
        description="exact sum-free set enumeration, link graphs, and MIS counts",
        parents=[common],
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="f(n) and f_max(n)", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="sweep all 2^n subsets")

    p = sub.add_parser("mis", help="count maximal independent sets", parents=[common])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", type=Path, help="graph text file")
    src.add_argument("--family", help="path:N, cycle:N, matching:K, complete:N, prism")
    p.add_argument("--enumerate", action="store_true", dest="list_sets")

    p = sub.add_parser("link", help="emit a link graph in text format", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--s", help="comma-separated extra linked elements")
    p.add_argument("--even", type=int)
    p.add_argument("--even2", type=int)

    p = sub.add_parser("construct", help="lower-bound families", parents=[common])
    p.add_argument(
        "--family",
        required=True,
        choices=("ce-odd", "interval", "z2k", "zn-prism", "index3", "exponent7"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--group", dest="group_desc")

    p = sub.add_parser("group", help="abelian group computations", parents=[common])
    p.add_argument("--desc", required=True, help='group descriptor, e.g. "Z4xZ2xZ2"')
    p.add_argument("--op", required=True, choices=("mu", "f", "fmax"))

    p = sub.add_parser("verify", help="run the named checks", parents=[common])
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--check", choices=sorted(checks.ALL_CHECKS))
    which.add_argument("--all", action="store_true")

    p = sub.add_parser("constants", help="even-link sums by residue class", parents=[common])
    p.add_argument("--dprime", action="store_true", required=True)
    p.add_argument("--n-max", type=int, default=28)

    p = sub.add_parser("sumset-census", help="sets with small sumset", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--delta", type=float, default=1 / 9)
    return top


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _family_graph(spec: str) -> Graph:
    name, _, arg = spec.partition(":")
    builders = {"path": path, "cycle": cycle, "matching": matching, "complete": complete}
    if name == "prism":
        return prism()
    if name in builders:
        return builders[name](int(arg))
    raise ValueError(f"unknown graph family {spec!r}")


def _cmd_enumerate(cfg: Config, args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= cfg.max_n:
        print(f"n must lie in [1, {cfg.max_n}]", file=sys.stderr)
        return 2
    method = "oracle" if args.oracle else "branch"
    params = {"n": n, "method": method}
    payload = (
        cache_lookup(cfg.cache_dir, "enumerate", params) if cfg.use_cache else None
    )
    if payload is None:
        started = time.perf_counter()
        if args.oracle:
            f = census.f_oracle(n)
            fmax = census.f_max_oracle(n)
        else:
            f = census.f_branch(n, workers=cfg.workers)
            fmax = census.f_max_branch(n, workers=cfg.workers)
        elapsed = (time.perf_counter() - started) * 1000.0
        payload = {"ground": str(n), "f": f, "f_max": fmax, "method": method,
                   "elapsed_ms": round(elapsed, 1)}
        if cfg.use_cache:
            cache_store(cfg.cache_dir, "enumerate", params, payload)
    record = census.EnumRecord(**payload)
    if cfg.output == "csv":
        _emit(census.EnumRecord.CSV_HEADER)
        _emit(record.csv_row())
    elif cfg.output == "table":
        _emit(f"n={n}  f={record.f}  f_max={record.f_max}  [{record.method}]")
    else:
        _emit(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_mis(cfg: Config, args: argparse.Namespace) -> int:
    if args.graph:
        g = from_text(Path(args.graph).read_text())
    else:
        g = _family_graph(args.family)
    result = mis_result(g, want_sets=args.list_sets, cap=cfg.enum_cap)
    out = {"vertices": g.num_vertices, "count": str(result.count)}
    if result.sets is not None:
        out["sets"] = [list(s) for s in result.sets]
    _emit(json.dumps(out, sort_keys=True))
    return 0


def _cmd_link(cfg: Config, args: argparse.Namespace) -> int:
    if args.even is not None:
        if args.even2 is not None:
            g = link_pair_even(args.n, args.even, args.even2)
        else:
            g = link_single_even(args.n, args.even)
    elif args.m is not None:
        s = [int(v) for v in args.s.split(",")] if args.s else []
        g = link_family(args.n, args.m, s)
    else:
        print("link needs --m or --even", file=sys.stderr)
        return 2
    sys.stdout.write(to_text(g))
    return 0


def _cmd_construct(cfg: Config, args: argparse.Namespace) -> int:
    fam = args.family
    if fam in ("ce-odd", "interval", "zn-prism") and args.n is None:
        print(f"{fam} needs --n", file=sys.stderr)
        return 2
    if fam == "ce-odd":
        family = constructions.ce_odd_family(args.n)
    elif fam == "interval":
        family = constructions.interval_family(args.n)
    elif fam == "z2k":
        if args.k is None:
            print("z2k needs --k", file=sys.stderr)
            return 2
        family = constructions.z2k_family(args.k)
    elif fam == "zn-prism":
        census_ = constructions.zn_prism_census(args.n)
        _emit(json.dumps({
            "n": census_.n,
            "window": census_.window_size,
            "prism_components": census_.prism_components,
            "other_components": census_.other_components,
            "mis": str(census_.mis),
        }, sort_keys=True))
        return 0
    else:
        if not args.group_desc:
            print(f"{fam} needs --group", file=sys.stderr)
            return 2
        grp = AbelianGroup.parse(args.group_desc)
        if fam == "index3":
            family = constructions.index3_family(grp)
        else:
            family = constructions.exponent7_family(grp)
    problems = constructions.verify_family(family)
    if problems:
        for pr in problems:
            print(pr, file=sys.stderr)
        return 1
    for member in family.members:
        if hasattr(member, "mask"):
            _emit(json.dumps(list(member.members)))
        else:
            _emit(json.dumps([list(g) for g in member.sorted_members()]))
    return 0


def _cmd_group(cfg: Config, args: argparse.Namespace) -> int:
    grp = AbelianGroup.parse(args.desc)
    if args.op == "mu":
        value = mu(grp)
    elif args.op == "f":
        value = f_group(grp)
    else:
        value = f_max_group(grp)
    _emit(json.dumps({"group": grp.describe(), "op": args.op, "value": value},
                     sort_keys=True))
    return 0


def _cmd_verify(cfg: Config, args: argparse.Namespace) -> int:
    if args.all:
        names = list(checks.ALL_CHECKS)
        if cfg.workers > 1:
            # checks are independent jobs; reports aggregate in registry
            # order so worker count never changes the output
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                reports = list(pool.map(checks.run_check, names, [cfg.seed] * len(names)))
        else:
            reports = checks.run_all(seed=cfg.seed)
    else:
        reports = [checks.run_check(args.check, seed=cfg.seed)]
    ok = True
    for r in reports:
        ok &= r.passed
        if cfg.output == "table":
            status = "PASS" if r.passed else "FAIL"
            _emit(
                f"{r.name:<26} {status}  instances={r.instances_checked}"
                f"  elapsed={r.elapsed_ms:.0f}ms"
            )
            for f in r.failures:
                _emit(f"    failure: {f}")
            for note in r.notes:
                _emit(f"    note: {note}")
        else:
            _emit(json.dumps({
                "name": r.name,
                "passed": r.passed,
                "instances_checked": r.instances_checked,
                "failures": list(r.failures),
                "notes": list(r.notes),
                "elapsed_ms": round(r.elapsed_ms, 1),
            }, sort_keys=True))
    return 0 if ok else 1


def _cmd_constants(cfg: Config, args: argparse.Namespace) -> int:
    params = {"n_max": args.n_max}
    payload = (
        cache_lookup(cfg.cache_dir, "constants", params) if cfg.use_cache else None
    )
    if payload is None:
        rows = []
        for n in range(4, args.n_max + 1):
            sums = census.dprime_sum(n)
            rows.append({
                "n": n,
                "residue_mod_4": n % 4,
                "total": str(sums.total),
                "restricted": str(sums.restricted),
                "geometric_closed_form": str(sums.geometric_closed_form),
                "ratio": round(sums.ratio(), 6),
            })
        payload = rows
        if cfg.use_cache:
            cache_store(cfg.cache_dir, "constants", params, payload)
    if cfg.output == "csv":
        _emit("n,residue_mod_4,total,restricted,geometric_closed_form,ratio")
        for row in payload:
            _emit(
                f"{row['n']},{row['residue_mod_4']},{row['total']},"
                f"{row['restricted']},{row['geometric_closed_form']},{row['ratio']}"
            )
    else:
        for row in payload:
            _emit(json.dumps(row, sort_keys=True))
    return 0


def _cmd_sumset_census(cfg: Config, args: argparse.Namespace) -> int:
    result = census.small_sumset_count(args.d, args.s, args.r, delta=args.delta)
    _emit(json.dumps({
        "d": result.d,
        "s": result.s,
        "r": str(result.r),
        "count": str(result.count),
        "bound": result.bound,
        "delta": result.delta,
    }, sort_keys=True))
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "mis": _cmd_mis,
    "link": _cmd_link,
    "construct": _cmd_construct,
    "group": _cmd_group,
    "verify": _cmd_verify,
    "constants": _cmd_constants,
    "sumset-census": _cmd_sumset_census,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, default in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, default)
    cfg = Config(
        workers=args.workers,
        cache_dir=args.cache_dir,
        seed=args.seed,
        output=args.output,
        use_cache=not args.no_cache,
    )
    try:
        return _COMMANDS[args.command](cfg, args)
    except (ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
