"""Command-line front end.  One verb per library operation.

Exit codes: 0 all checks passed or were reported inapplicable; 1 a verified
mathematical violation was found (the offending family is dumped in .uc
form); 2 usage or I/O error.  Reports go to stdout (JSON by default),
certificates and CSV dumps to --out when given.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report
from .analytic import (
    HALF_INV_PHI,
    PHI,
    PSI,
    certify_lower_bound,
    corollary_grid_check,
    grid_margins,
    minimize_diagonal,
)
from .entropy import (
    DEFAULT_PAIR_CAP,
    chain_rule_check,
    check_lower_bound,
    check_theorem,
    check_upper_bound,
    shannon_entropy,
    union_distribution,
)
from .generators import (
    DEFAULT_SHARDS,
    RANDOM_KINDS,
    ExampleSpec,
    enumerate_union_closed,
    example_stats,
    random_families,
)
from .rng import derive_seed
from .setfamily import (
    SetFamily,
    UCFormatError,
    CapExceededError,
    closure_fraction,
    closure_fraction_unordered,
    element_frequencies,
    format_family,
    load_family,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _add_common(p: argparse.ArgumentParser, tol_default: float = 1e-9) -> None:
    p.add_argument("--format", choices=("json", "human", "csv"), default="json")
    p.add_argument("--tol", type=float, default=tol_default)
    p.add_argument("--threads", type=int, default=1,
                   help="cap on worker parallelism; results never depend on it")
    p.add_argument("--out", default=None, help="write the report to this path")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ucc",
        description="Checks for union-closed set systems and the entropy bound behind them.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="closure fraction, frequencies, theorem report")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("entropy", help="union entropy, chain rule, both bounds")
    p.add_argument("file")
    p.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP)
    _add_common(p)

    p = sub.add_parser("analytic", help="scalar landscape checks and certification")
    asub = p.add_subparsers(dest="action", required=True)

    q = asub.add_parser("minimize", help="locate the diagonal ratio minimum")
    q.add_argument("--grid", type=int, default=4096)
    _add_common(q, tol_default=1e-12)

    q = asub.add_parser("grid", help="sweep the product-form margin on a grid")
    q.add_argument("--grid", type=int, default=1001)
    _add_common(q, tol_default=1e-12)

    q = asub.add_parser("certify", help="branch-and-bound lower bound for f")
    q.add_argument("--theta", type=float, default=0.809016)
    q.add_argument("--eta", type=float, default=1e-4)
    q.add_argument("--depth", type=int, default=60)
    q.add_argument("--budget", type=int, default=10_000_000)
    q.add_argument("--strip-points", type=int, default=10_000)
    _add_common(q)

    p = sub.add_parser("example", help="slice example statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--shards", type=int, default=DEFAULT_SHARDS)
    _add_common(p)

    p = sub.add_parser("enumerate", help="exhaustive union-closed families, n <= 4")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exclude-empty", action="store_true",
                   help="skip families containing the empty set as a member")
    _add_common(p)

    p = sub.add_parser("fuzz", help="random families through the theorem checker")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, default=8)
    p.add_argument("--kind", choices=RANDOM_KINDS + ("all",), default="all")
    p.add_argument("--rho", type=float, default=0.25)
    p.add_argument("--entropy-checks", action="store_true",
                   help="also run chain-rule and both entropy bounds per family")
    _add_common(p)
    return ap


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_family(family: SetFamily) -> None:
    sys.stderr.write("violating family in .uc format:\n")
    sys.stderr.write(format_family(family))


def _theorem_section(family: SetFamily, tol: float):
    """Theorem report fields for any family size; size < 2 is inapplicable."""
    if family.size >= 2:
        rep = check_theorem(family, tol=tol)
        return rep, report.theorem_obj(rep), rep.delta, rep.psi_minus_delta
    return None, report.inapplicable_theorem_obj("family size < 2"), 0.0, PSI


def _cmd_check(args) -> int:
    family = load_family(args.file)
    if family.size == 0:
        sys.stderr.write("ucc: empty family; nothing to check\n")
        return EXIT_USAGE
    profile = element_frequencies(family)
    cf = closure_fraction(family)
    eps = 1 - cf
    rep, theorem, delta, bound = _theorem_section(family, args.tol)
    obj = report.family_check_obj(family, profile, eps, eps == 0, theorem,
                                  delta, bound)
    obj["closure_fraction_unordered"] = report.frac_obj(
        closure_fraction_unordered(family))
    _emit(report.render(obj, args.format), args.out)
    if rep is not None and rep.applicable and not rep.satisfied:
        _dump_family(family)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_entropy(args) -> int:
    family = load_family(args.file)
    if family.size == 0:
        sys.stderr.write("ucc: empty family; nothing to check\n")
        return EXIT_USAGE
    profile = element_frequencies(family)
    cf = closure_fraction(family)
    eps = 1 - cf
    rep, theorem, delta, bound = _theorem_section(family, args.tol)
    base = report.family_check_obj(family, profile, eps, eps == 0, theorem,
                                   delta, bound)
    dist = union_distribution(family, cap=args.pair_cap)
    lower = check_lower_bound(family, cap=args.pair_cap, tol=args.tol)
    upper = check_upper_bound(family, cap=args.pair_cap, tol=args.tol)
    chain = chain_rule_check(family, cap=args.pair_cap, tol=args.tol)
    obj = report.entropy_report_obj(base, shannon_entropy(dist), lower, upper, chain)
    _emit(report.render(obj, args.format), args.out)
    bad_bound = any(r.applicable and not r.satisfied for r in (lower, upper, chain))
    if bad_bound or (rep is not None and rep.applicable and not rep.satisfied):
        _dump_family(family)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_minimize(args) -> int:
    dm = minimize_diagonal(grid_points=args.grid, refine_tol=args.tol)
    obj = report.minimize_obj(dm)
    obj["deviation_from_phi"] = abs(dm.x_star - PHI)
    obj["value_minus_min"] = dm.value - (PHI + 1.0)
    _emit(report.render(obj, args.format), args.out)
    # a located value strictly below the claimed minimum would refute it
    if dm.value < PHI + 1.0 - 1e-9:
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_grid(args) -> int:
    gc = corollary_grid_check(grid_points=args.grid)
    obj = report.grid_check_obj(gc)
    obj["phi"] = PHI
    if args.format == "csv" or (args.out and args.out.endswith(".csv")):
        import io

        buf = io.StringIO()
        report.write_grid_csv(buf, *grid_margins(args.grid))
        _emit(buf.getvalue(), args.out)
    else:
        _emit(report.render(obj, args.format), args.out)
    if gc.min_margin < -args.tol:
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_certify(args) -> int:
    cert = certify_lower_bound(
        theta=args.theta, eta=args.eta, max_depth=args.depth,
        box_budget=args.budget, strip_points=args.strip_points)
    _emit(report.render(report.certificate_obj(cert), args.format), args.out)
    if cert.violation_boxes and args.theta < HALF_INV_PHI:
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_example(args) -> int:
    spec = ExampleSpec(n=args.n, k=args.k, m=args.m)
    stats = example_stats(spec, samples=args.samples, seed=args.seed,
                          shards=args.shards)
    _emit(report.render(report.example_stats_obj(stats), args.format), args.out)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    count = 0
    checked = 0
    skipped_small = 0
    min_max_freq: Fraction | None = None
    worst: SetFamily | None = None
    satisfied = True
    for fam in enumerate_union_closed(args.n, include_empty_set=not args.exclude_empty):
        count += 1
        if fam.size < 2:
            skipped_small += 1
            continue
        rep = check_theorem(fam, tol=args.tol)
        checked += 1
        if min_max_freq is None or rep.max_freq < min_max_freq:
            min_max_freq = rep.max_freq
        if rep.applicable and not rep.satisfied:
            satisfied = False
            worst = fam
            break
    obj = {
        "n": args.n,
        "families": count,
        "theorem_checked": checked,
        "skipped_small": skipped_small,
        "min_max_freq": report.frac_obj(min_max_freq) if min_max_freq is not None else None,
        "all_satisfied": satisfied,
        "psi": PSI,
    }
    _emit(report.render(obj, args.format), args.out)
    if not satisfied and worst is not None:
        _dump_family(worst)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    kinds = RANDOM_KINDS if args.kind == "all" else (args.kind,)
    per = args.count // len(kinds)
    remainder = args.count - per * (len(kinds) - 1)
    checked = 0
    skipped_small = 0
    skipped_cap = 0
    applicable = 0
    max_eps = 0.0
    violation: SetFamily | None = None
    for pos, kind in enumerate(kinds):
        want = remainder if pos == len(kinds) - 1 else per
        if want <= 0:
            continue
        stream = random_families(args.n, args.size, want,
                                 derive_seed(args.seed, pos), kind, rho=args.rho)
        for fam in stream:
            if fam.size < 2:
                skipped_small += 1
                continue
            rep = check_theorem(fam, tol=args.tol)
            checked += 1
            if rep.applicable:
                applicable += 1
            max_eps = max(max_eps, float(rep.epsilon))
            if rep.applicable and not rep.satisfied:
                violation = fam
                break
            if args.entropy_checks:
                if fam.size > DEFAULT_PAIR_CAP:
                    skipped_cap += 1
                    continue
                for brep in (check_lower_bound(fam, tol=args.tol),
                             check_upper_bound(fam, tol=args.tol),
                             chain_rule_check(fam, tol=args.tol)):
                    if brep.applicable and not brep.satisfied:
                        violation = fam
                        break
        if violation is not None:
            break
    obj = {
        "n": args.n,
        "count": args.count,
        "kinds": list(kinds),
        "size": args.size,
        "seed": args.seed,
        "rho": args.rho,
        "theorem_checked": checked,
        "theorem_applicable": applicable,
        "skipped_small": skipped_small,
        "skipped_pair_cap": skipped_cap,
        "max_epsilon_seen": max_eps,
        "violation_found": violation is not None,
    }
    _emit(report.render(obj, args.format), args.out)
    if violation is not None:
        _dump_family(violation)
        return EXIT_VIOLATION
    return EXIT_OK


_DISPATCH = {
    "check": _cmd_check,
    "entropy": _cmd_entropy,
    "example": _cmd_example,
    "enumerate": _cmd_enumerate,
    "fuzz": _cmd_fuzz,
}


def run_cli(argv: list[str]) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        if args.command == "analytic":
            handler = {"minimize": _cmd_minimize, "grid": _cmd_grid,
                       "certify": _cmd_certify}[args.action]
        else:
            handler = _DISPATCH[args.command]
        return handler(args)
    except (UCFormatError, CapExceededError, ValueError, OSError) as exc:
        sys.stderr.write(f"ucc: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
