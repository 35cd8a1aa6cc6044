"""Command-line front end: gen, analyze, select, sweep, simulate.

Exit codes: 0 success, 1 usage error, 2 data error (missing or
malformed input file), 3 budget refusal (exhaustive search too large).
All output is deterministic for a fixed seed: repeated invocations are
byte-identical.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bounds as bounds_mod
from . import generators as gen_mod
from . import strategies as strat_mod
from . import sync as sync_mod
from .graphs import EdgeListError, Graph, format_edge_list, ground, parse_edge_list
from .spectra import lambda1

__all__ = ["main", "sweep_rows", "SWEEP_COLUMNS"]


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage errors to 1
        raise UsageError(f"{self.prog}: {message}")


def _read_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    try:
        return parse_edge_list(text)
    except EdgeListError as exc:
        raise DataError(f"{path}: {exc}") from None


def _parse_pins(args, g: Graph) -> tuple[int, ...]:
    if (args.pins is None) == (args.pins_file is None):
        raise UsageError("exactly one of --pins / --pins-file is required")
    if args.pins is not None:
        try:
            ids = [int(tok) for tok in args.pins.split(",") if tok.strip() != ""]
        except ValueError:
            raise UsageError(f"--pins must be comma-separated integers, got {args.pins!r}") from None
    else:
        try:
            with open(args.pins_file, "r", encoding="utf-8") as fh:
                toks = [t for line in fh for t in line.split("#", 1)[0].split()]
        except OSError as exc:
            raise DataError(f"cannot read {args.pins_file}: {exc}") from None
        try:
            ids = [int(t) for t in toks]
        except ValueError:
            raise DataError(f"{args.pins_file}: pin ids must be integers") from None
    try:
        from .graphs import pin_set

        return pin_set(g, ids)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    fam = args.family
    try:
        if fam == "star":
            g = gen_mod.gen_star(args.n)
        elif fam == "double_star":
            g = gen_mod.gen_double_star(args.k)
        elif fam == "complete":
            g = gen_mod.gen_complete(args.n)
        elif fam == "path":
            g = gen_mod.gen_path(args.n)
        elif fam == "ba":
            g = gen_mod.gen_ba(args.n, args.m0, args.m, args.seed)
        elif fam == "nw":
            g = gen_mod.gen_nw(args.n, args.lattice_k, args.p, args.seed)
        elif fam == "erdos_renyi":
            g = gen_mod.gen_erdos_renyi(args.n, args.p, args.seed)
        else:  # pragma: no cover - argparse choices guard this
            raise UsageError(f"unknown family {fam!r}")
    except (ValueError, TypeError) as exc:
        raise UsageError(f"gen {fam}: {exc}") from None
    _write_out(format_edge_list(g), args.out)
    return 0


_FLAG_NAMES = {"lattice_k": "--K"}


def _require(args, names: list[str], fam: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            flag = _FLAG_NAMES.get(name, f"--{name.replace('_', '-')}")
            raise UsageError(f"gen {fam}: {flag} is required")


# -- analyze -----------------------------------------------------------------

def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    pins = _parse_pins(args, g)
    report = bounds_mod.bound_report(g, pins, alpha_over_c=args.alpha_over_c)
    sys.stdout.write(report.to_json() + "\n")
    return 0


# -- select ------------------------------------------------------------------

def cmd_select(args) -> int:
    g = _read_graph(args.graph)
    strat = args.strategy
    try:
        if strat == "degree_mix":
            if args.q is None:
                raise UsageError("select degree_mix: --q is required")
            cfg = strat_mod.StrategyConfig(l=_need_l(args), q=args.q, seed=args.seed, runs=args.runs)
            res = strat_mod.select_degree_mix(g, cfg)
        elif strat == "betweenness":
            res = strat_mod.select_betweenness(g, _need_l(args))
        elif strat == "greedy":
            res = strat_mod.greedy_max_lambda1(g, _need_l(args))
        elif strat == "brute_force":
            res = strat_mod.brute_force_max_lambda1(g, _need_l(args), budget=args.budget)
        elif strat == "dominating":
            res = strat_mod.dominating_partition(g, seed=args.seed)
        else:  # pragma: no cover
            raise UsageError(f"unknown strategy {strat!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(res.to_json() + "\n")
    return 0


def _need_l(args) -> int:
    if args.l is None:
        raise UsageError(f"select {args.strategy}: --l is required")
    return args.l


# -- sweep -------------------------------------------------------------------

SWEEP_COLUMNS = [
    "l",
    "q",
    "lambda1_mean",
    "lambda1_std",
    "upper_spectrum",
    "upper_kmin",
    "upper_avg_boundary",
    "lower_min_boundary",
]


def _pin_bound_values(g: Graph, pins) -> tuple[float, float, float]:
    lo, avg = bounds_mod.boundary_bounds(g, pins)
    return bounds_mod.upper_by_min_degree(g, pins), avg, lo


def sweep_rows(
    g: Graph,
    strategy: str,
    ls: list[int],
    qs: list[float] | None,
    runs: int,
    seed: int,
    with_brute: bool = False,
    budget: int = strat_mod.BRUTE_FORCE_BUDGET,
) -> list[dict]:
    """One dict per (l, q) cell; bound columns are averaged over the same
    tie-breaking runs as lambda1_mean, so every row keeps
    lower_min_boundary <= lambda1_mean <= each upper column."""
    rows: list[dict] = []
    q_list: list[float | None] = list(qs) if strategy == "degree_mix" else [None]
    if strategy == "degree_mix" and not q_list:
        raise UsageError("sweep degree_mix: --q is required")
    for l in ls:
        upper_spec = bounds_mod.upper_by_spectrum(g, l)
        brute_val: float | None = None
        if with_brute:
            brute_val = strat_mod.brute_force_max_lambda1(g, l, budget=budget).lambda1
        for q in q_list:
            if strategy == "degree_mix":
                lams, kmins, avgs, los = [], [], [], []
                for r in range(runs):
                    pins = strat_mod.degree_mix_pins(g, l, q, seed, r)
                    lams.append(lambda1(ground(g, pins).matrix))
                    kmin_r, avg_r, lo_r = _pin_bound_values(g, pins)
                    kmins.append(kmin_r)
                    avgs.append(avg_r)
                    los.append(lo_r)
                lam_mean = float(np.mean(lams))
                lam_std = float(np.std(lams))
                kmin, avg, lo = float(np.mean(kmins)), float(np.mean(avgs)), float(np.mean(los))
            elif strategy == "betweenness":
                res = strat_mod.select_betweenness(g, l)
                lam_mean, lam_std = res.lambda1, 0.0
                kmin, avg, lo = _pin_bound_values(g, res.pin_set)
            elif strategy == "greedy":
                res = strat_mod.greedy_max_lambda1(g, l)
                lam_mean, lam_std = res.lambda1, 0.0
                kmin, avg, lo = _pin_bound_values(g, res.pin_set)
            elif strategy == "brute_force":
                res = strat_mod.brute_force_max_lambda1(g, l, budget=budget)
                lam_mean, lam_std = res.lambda1, 0.0
                kmin, avg, lo = _pin_bound_values(g, res.pin_set)
            else:
                raise UsageError(f"unknown sweep strategy {strategy!r}")
            row = {
                "l": l,
                "q": q,
                "lambda1_mean": lam_mean,
                "lambda1_std": lam_std,
                "upper_spectrum": upper_spec,
                "upper_kmin": kmin,
                "upper_avg_boundary": avg,
                "lower_min_boundary": lo,
            }
            if with_brute:
                row["lambda1_brute"] = brute_val
            rows.append(row)
    return rows


def format_sweep_csv(rows: list[dict], with_brute: bool) -> str:
    cols = SWEEP_COLUMNS + (["lambda1_brute"] if with_brute else [])
    lines = [",".join(cols)]
    for row in rows:
        vals = []
        for col in cols:
            v = row[col]
            if v is None:
                vals.append("")
            elif col == "l":
                vals.append(str(v))
            else:
                vals.append(f"{v:.10g}")
        lines.append(",".join(vals))
    return "\n".join(lines) + "\n"


def _parse_l_range(spec: str) -> list[int]:
    parts = spec.split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"--l-range must be A:B[:STEP] or a single integer, got {spec!r}") from None
    if len(nums) == 1:
        return nums
    if len(nums) == 2:
        a, b = nums
        step = 1
    elif len(nums) == 3:
        a, b, step = nums
    else:
        raise UsageError(f"--l-range must be A:B[:STEP], got {spec!r}")
    if step < 1 or b < a:
        raise UsageError(f"--l-range needs A <= B and STEP >= 1, got {spec!r}")
    return list(range(a, b + 1, step))


def cmd_sweep(args) -> int:
    g = _read_graph(args.graph)
    ls = _parse_l_range(args.l_range)
    qs = None
    if args.q is not None:
        try:
            qs = [float(t) for t in args.q.split(",") if t.strip() != ""]
        except ValueError:
            raise UsageError(f"--q must be comma-separated floats, got {args.q!r}") from None
    try:
        rows = sweep_rows(
            g,
            args.strategy,
            ls,
            qs,
            runs=args.runs,
            seed=args.seed,
            with_brute=args.with_brute_force,
            budget=args.budget,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_out(format_sweep_csv(rows, args.with_brute_force), args.out)
    return 0


# -- simulate ----------------------------------------------------------------

def cmd_simulate(args) -> int:
    g = _read_graph(args.graph)
    pins = _parse_pins(args, g)
    if args.dynamics == "linear_unstable":
        dyn = sync_mod.linear_unstable(args.a)
    elif args.dynamics == "chua":
        dyn = sync_mod.chua()
    else:  # pragma: no cover
        raise UsageError(f"unknown dynamics {args.dynamics!r}")
    try:
        cfg = sync_mod.SimConfig(
            controller=args.controller,
            c=args.c,
            h=args.h,
            d=args.d,
            dt=args.dt,
            t_end=args.t_end,
            seed=args.seed,
            record_every=args.record_every,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = sync_mod.simulate(g, pins, dyn, cfg)
    if args.out_csv is not None:
        with open(args.out_csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(res.to_csv())
    sys.stdout.write(res.summary_json() + "\n")
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pinopt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph and print its edge list")
    p_gen.add_argument("--family", required=True,
                       choices=["star", "double_star", "complete", "path", "ba", "nw", "erdos_renyi"])
    p_gen.add_argument("--n", type=int, default=None, help="node count")
    p_gen.add_argument("--k", type=int, default=None, help="leaves per hub (double_star)")
    p_gen.add_argument("--m0", type=int, default=None, help="seed clique size (ba)")
    p_gen.add_argument("--m", type=int, default=None, help="attachments per new node (ba)")
    p_gen.add_argument("--K", dest="lattice_k", type=int, default=None, help="lattice degree (nw)")
    p_gen.add_argument("--p", type=float, default=None, help="edge/shortcut probability")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None, help="output file (default stdout)")
    p_gen.set_defaults(func=_gen_entry)

    p_an = sub.add_parser("analyze", help="bounds and lambda1 for one pin set")
    p_an.add_argument("graph")
    p_an.add_argument("--pins", default=None, help="comma-separated node ids")
    p_an.add_argument("--pins-file", default=None, help="file of whitespace-separated node ids")
    p_an.add_argument("--alpha-over-c", type=float, default=None)
    p_an.set_defaults(func=cmd_analyze)

    p_sel = sub.add_parser("select", help="pick a pin set with one strategy")
    p_sel.add_argument("graph")
    p_sel.add_argument("--strategy", required=True,
                       choices=["degree_mix", "betweenness", "greedy", "brute_force", "dominating"])
    p_sel.add_argument("--l", type=int, default=None)
    p_sel.add_argument("--q", type=float, default=None)
    p_sel.add_argument("--runs", type=int, default=1)
    p_sel.add_argument("--seed", type=int, default=0)
    p_sel.add_argument("--budget", type=int, default=strat_mod.BRUTE_FORCE_BUDGET)
    p_sel.set_defaults(func=cmd_select)

    p_sw = sub.add_parser("sweep", help="lambda1 and bounds across l (and q)")
    p_sw.add_argument("graph")
    p_sw.add_argument("--strategy", required=True,
                      choices=["degree_mix", "betweenness", "greedy", "brute_force"])
    p_sw.add_argument("--l-range", required=True, help="A:B[:STEP] inclusive, or a single l")
    p_sw.add_argument("--q", default=None, help="comma-separated q values (degree_mix)")
    p_sw.add_argument("--runs", type=int, default=1)
    p_sw.add_argument("--seed", type=int, default=0)
    p_sw.add_argument("--with-brute-force", action="store_true",
                      help="append an exact-max column (budget applies)")
    p_sw.add_argument("--budget", type=int, default=strat_mod.BRUTE_FORCE_BUDGET)
    p_sw.add_argument("--out", default=None, help="output file (default stdout)")
    p_sw.set_defaults(func=cmd_sweep)

    p_sim = sub.add_parser("simulate", help="integrate the pinned network")
    p_sim.add_argument("graph")
    p_sim.add_argument("--pins", default=None)
    p_sim.add_argument("--pins-file", default=None)
    p_sim.add_argument("--dynamics", required=True, choices=["linear_unstable", "chua"])
    p_sim.add_argument("--a", type=float, default=1.0, help="growth rate (linear_unstable)")
    p_sim.add_argument("--controller", required=True, choices=["adaptive", "linear"])
    p_sim.add_argument("--c", type=float, required=True, help="coupling strength")
    p_sim.add_argument("--h", type=float, default=1.0, help="adaptation rate")
    p_sim.add_argument("--d", type=float, default=0.0, help="constant gain (linear controller)")
    p_sim.add_argument("--dt", type=float, default=1e-3)
    p_sim.add_argument("--T", dest="t_end", type=float, default=50.0)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--record-every", type=int, default=10)
    p_sim.add_argument("--out-csv", default=None, help="write the error/gain time series here")
    p_sim.set_defaults(func=cmd_simulate)

    return parser


_GEN_REQUIRED = {
    "star": ["n"],
    "double_star": ["k"],
    "complete": ["n"],
    "path": ["n"],
    "ba": ["n", "m0", "m"],
    "nw": ["n", "lattice_k", "p"],
    "erdos_renyi": ["n", "p"],
}


def _gen_entry(args) -> int:
    _require(args, _GEN_REQUIRED[args.family], args.family)
    return cmd_gen(args)


def main(argv: list[str] | None = None) -> int:
    try:
        code = 0
        parser = build_parser()
        args = parser.parse_args(argv)
        code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    except strat_mod.BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 3
    return code


if __name__ == "__main__":
    sys.exit(main())
