"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import census, grid, models, operad, verify
from .errors import BudgetExceeded, ParseError
from .perm import (
    compose,
    decompose,
    is_separable,
    is_simple,
    parse_perm,
    to_grid,
    tree_str,
)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    steps: int = 0
    elapsed: float = 0.0
    checks: list = field(default_factory=list)
    exit_code: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# grid


def cmd_grid(args) -> RunReport:
    report = RunReport(command=f"grid {args.grid_cmd}")
    if args.grid_cmd == "run":
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.file}: {exc.strerror}") from exc
        config = grid.parse_grid(text)
        steps = grid.closure_steps(config)
        final = steps[-1]
        render = grid.to_svg if args.render == "svg" else grid.format_grid
        if args.trace:
            _emit("\n".join(render(s) for s in steps))
        else:
            _emit(render(final))
        perc = final == grid.GridConfig.full(config.rows, config.cols)
        _emit(f"percolating={_bool(perc)}")
        report.inputs = {"file": args.file, "rows": config.rows, "cols": config.cols, "red": len(config)}
        report.outputs = {"percolating": perc, "final_red": len(final)}
        report.steps = len(steps) - 1
    elif args.grid_cmd == "minimal-count":
        sizes = (args.n, census.morris_bound(args.n)) if args.all_sizes else None
        res = census.minimal_census(args.n, sizes=sizes, max_n=args.max_n, workers=args.workers)
        if args.all_sizes:
            for size, count in sorted(res.by_size.items()):
                _emit(f"{size} {count}")
        _emit(str(res.total))
        report.inputs = {"n": args.n, "sizes": list(res.sizes)}
        report.outputs = {"total": res.total, "by_size": {str(k): v for k, v in res.by_size.items()}}
        report.steps = res.examined
    else:
        name = args.name
        if name == "A":
            config = grid.family_A(args.m)
        elif name == "E":
            config = to_grid(models.family_E(args.m))
        else:
            config = to_grid(models.family_E_prime(args.m))
        _emit(grid.format_grid(config))
        report.inputs = {"family": name, "m": args.m}
        report.outputs = {"rows": config.rows, "cols": config.cols, "red": sorted(config.red)}
    return report


# ---------------------------------------------------------------------------
# perm


def cmd_perm(args) -> RunReport:
    report = RunReport(command=f"perm {args.perm_cmd}")
    sigma = parse_perm(args.sigma)
    report.inputs = {"sigma": str(sigma)}
    cmd = args.perm_cmd
    if cmd == "compose":
        tau = parse_perm(args.tau)
        value = str(compose(sigma, args.i, tau))
        report.inputs.update(i=args.i, tau=str(tau))
    elif cmd == "separable":
        value = _bool(is_separable(sigma))
    elif cmd == "simple":
        value = _bool(is_simple(sigma))
    elif cmd == "percolates":
        value = _bool(grid.is_percolating(to_grid(sigma)))
    elif cmd == "decompose":
        value = tree_str(decompose(sigma))
    elif cmd == "chord":
        value = str(models.to_chord(sigma))
    elif cmd == "core":
        value = str(operad.core_arity(sigma))
    else:  # network
        net = models.sp_from_tree(models.perm_to_tree(sigma))
        edges = models.sp_realize(net)
        value = models.sp_to_dot(edges) if args.dot else str(net) + "\n" + models.sp_to_text(edges)
    _emit(value)
    report.outputs = {"value": value.rstrip("\n")}
    return report


# ---------------------------------------------------------------------------
# operad


def cmd_operad(args) -> RunReport:
    report = RunReport(command=f"operad {args.operad_cmd}")
    cmd = args.operad_cmd
    if cmd == "generators":
        gens = sorted(operad.generators(args.n, method=args.method))
        _emit(str(len(gens)))
        if args.list:
            for p in gens:
                _emit(str(p))
        report.inputs = {"n": args.n, "method": args.method}
        report.outputs = {"count": len(gens)}
        if args.list:
            report.outputs["elements"] = [str(p) for p in gens]
    elif cmd == "filtration":
        rep = operad.filtration_counts(args.m, args.max_arity)
        if args.format == "csv":
            _emit("m,arity,count")
            for m, k, c in rep.rows():
                _emit(f"{m},{k},{c}")
        else:
            _emit(",".join(str(c) for c in rep.as_list()))
        report.inputs = {"m": args.m, "max_arity": args.max_arity}
        report.outputs = {"counts": {str(k): c for k, c in rep.counts.items()}}
    else:
        values = operad.simple_counts_series(args.max)
        _emit(",".join(map(str, values)))
        report.inputs = {"max": args.max}
        report.outputs = {"counts": values}
    return report


# ---------------------------------------------------------------------------
# seq


def _seq_schroeder(k: int):
    return 1, [models.count_bicolored_trees(n) for n in range(1, k + 1)]


def _seq_minimal(k: int):
    if k > census.DEFAULT_MAX_N:
        raise BudgetExceeded(f"census beyond n={census.DEFAULT_MAX_N} is not supported")
    return 1, [census.minimal_census(n).total for n in range(1, k + 1)]


def _seq_generators(k: int):
    return 2, operad.generator_counts(k)


def _seq_simple(k: int):
    return 1, operad.simple_counts_series(k)


SEQUENCES = {
    "schroeder": _seq_schroeder,
    "minimal-percolating": _seq_minimal,
    "generators": _seq_generators,
    "simple": _seq_simple,
}


def cmd_seq(args) -> RunReport:
    offset, values = SEQUENCES[args.name](args.max)
    _emit(" ".join(map(str, values)))
    if args.bfile:
        with open(args.bfile, "w") as fh:
            for n, v in enumerate(values, offset):
                fh.write(f"{n} {v}\n")
    return RunReport(
        command=f"seq {args.name}",
        inputs={"max": args.max, "bfile": args.bfile},
        outputs={"offset": offset, "values": values},
    )


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> RunReport:
    results = verify.run_checks(args.level)
    _emit(verify.format_table(results))
    ok = all(r.passed for r in results)
    _emit(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return RunReport(
        command="verify",
        inputs={"level": args.level},
        outputs={"passed": ok},
        checks=[r.as_dict() for r in results],
        exit_code=EXIT_OK if ok else EXIT_VERIFY,
    )


# ---------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bootperm",
        description="Bootstrap percolation on grids and the operad of permutations.",
    )
    parser.add_argument("--report", metavar="PATH", help="write a JSON run report to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    # grid
    p_grid = sub.add_parser("grid", help="percolation runs, censuses and families")
    gsub = p_grid.add_subparsers(dest="grid_cmd", required=True)
    p = gsub.add_parser("run", help="percolate a grid text file")
    p.add_argument("file", help="grid text file ('rows cols' header, then '#'/'.' rows)")
    p.add_argument("--trace", action="store_true", help="print every intermediate step")
    p.add_argument("--render", choices=("ascii", "svg"), default="ascii", help="output format")
    p = gsub.add_parser("minimal-count", help="count minimal percolating sets of the n x n grid")
    p.add_argument("--n", type=_positive, required=True, help="grid side")
    p.add_argument("--all-sizes", action="store_true", help="count every size up to the Morris bound")
    p.add_argument("--max-n", type=_positive, default=census.DEFAULT_MAX_N, help="refuse larger n")
    p.add_argument("--workers", type=_positive, default=1, help="worker processes")
    p = gsub.add_parser("family", help="print a named configuration family")
    p.add_argument("name", choices=("A", "E", "Eprime"))
    p.add_argument("--m", type=_positive, required=True, help="family index")
    p_grid.set_defaults(func=cmd_grid)

    # perm
    p_perm = sub.add_parser("perm", help="queries on a single permutation")
    psub = p_perm.add_subparsers(dest="perm_cmd", required=True)
    p = psub.add_parser("compose", help="partial composition a o_i b")
    p.add_argument("sigma", help="outer permutation")
    p.add_argument("i", type=_positive, help="insertion position")
    p.add_argument("tau", help="inner permutation")
    for name, text in (
        ("separable", "is the permutation separable"),
        ("simple", "is the permutation simple"),
        ("percolates", "does its permutation matrix percolate"),
        ("decompose", "substitution decomposition tree"),
        ("chord", "cyclic chord-diagram sequence"),
        ("core", "smallest filtration level containing it"),
    ):
        p = psub.add_parser(name, help=text)
        p.add_argument("sigma", help="permutation, e.g. 2413 or 10,1,2")
    p = psub.add_parser("network", help="series-parallel network of a separable permutation")
    p.add_argument("sigma", help="separable permutation")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p_perm.set_defaults(func=cmd_perm)

    # operad
    p_op = sub.add_parser("operad", help="filtration and generator enumeration")
    osub = p_op.add_subparsers(dest="operad_cmd", required=True)
    p = osub.add_parser("generators", help="generators of arity n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--list", action="store_true", help="print the elements too")
    p.add_argument("--method", choices=("fast", "bruteforce"), default="fast")
    p = osub.add_parser("filtration", help="sizes of P_m(k) for k = 2..max-arity")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--max-arity", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p = osub.add_parser("simple-counts", help="simple permutation counts by series inversion")
    p.add_argument("--max", type=_positive, required=True)
    p_op.set_defaults(func=cmd_operad)

    # seq
    p_seq = sub.add_parser("seq", help="print an integer sequence, optionally as a b-file")
    p_seq.add_argument("name", choices=sorted(SEQUENCES))
    p_seq.add_argument("--max", type=_positive, required=True, help="largest index")
    p_seq.add_argument("--bfile", metavar="PATH", help="also write 'n a(n)' lines to PATH")
    p_seq.set_defaults(func=cmd_seq)

    # verify
    p_ver = sub.add_parser("verify", help="run the acceptance checks")
    p_ver.add_argument("--level", choices=verify.LEVELS, default="quick")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except BudgetExceeded as exc:
        print(f"bootperm: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, IndexError) as exc:
        print(f"bootperm: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report.elapsed = round(time.perf_counter() - start, 3)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json() + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
