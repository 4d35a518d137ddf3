"""Command-line interface: counting, slicing, verification suites, benchmarks.

Exit codes: 0 success / agreement, 1 verification failure or method
disagreement, 2 invalid input or flags.  Reports are emitted as canonical
JSON (sorted keys, two-space indent) or plain text; series coefficients are
always decimal strings, since they outgrow 64-bit integers quickly.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from itertools import product as cartesian

from .fock import (
    FockState,
    apply_lowering,
    apply_raising,
    chain_matrix_element,
    commutation_check,
    commutation_lhs_truncated,
    commutation_tail_bound,
    transfer_partition_function,
)
from .partitions import (
    SliceSequence,
    contains,
    count_plane_partitions,
    diagonal_slices,
    enumerate_partitions,
    make_partition,
    make_plane_partition,
    plane_partitions_of,
    skew_ssyt_series,
    unslice,
    volume,
)
from .qseries import QSeries, finite_grid_product, macmahon_product

DEFAULT_BRUTEFORCE_CEILING = 14
ALL_METHODS = ("product", "transfer", "bruteforce")
COMMUTATION_POINTS = (
    (Fraction(1, 2), Fraction(1, 3)),
    (Fraction(2, 3), Fraction(1, 4)),
    (Fraction(-1, 2), Fraction(1, 3)),
)


def render_report(report: dict) -> str:
    """Canonical JSON: parsing and re-rendering is byte-identical."""
    return json.dumps(report, sort_keys=True, indent=2)


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for key in ("parameters", "results", "timings"):
        section = report.get(key, {})
        lines.append(f"{key}:")
        for name in sorted(section):
            lines.append(f"  {name}: {section[name]}")
    return "\n".join(lines)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(render_report(report))
    else:
        print(_render_text(report))


def _ms(seconds: float) -> float:
    return round(seconds * 1000.0, 3)


# ---------------------------------------------------------------------------
# count / bench

def _method_coefficients(method: str, terms: int, prune: str) -> list[int]:
    if method == "product":
        return list(macmahon_product(terms).coeffs)
    if method == "transfer":
        return list(transfer_partition_function(terms, prune=prune).coeffs)
    if method == "bruteforce":
        return [count_plane_partitions(n) for n in range(terms)]
    raise ValueError(f"unknown method {method!r}")


def _run_methods(terms: int, methods: list[str], prune: str) -> tuple[dict, dict, str]:
    coefficients: dict[str, list[str]] = {}
    timings: dict[str, float] = {}
    for method in methods:
        t0 = time.perf_counter()
        coeffs = _method_coefficients(method, terms, prune)
        timings[method] = _ms(time.perf_counter() - t0)
        coefficients[method] = [str(c) for c in coeffs]
    if len(methods) >= 2:
        first = coefficients[methods[0]]
        agreement = "pass" if all(coefficients[m] == first for m in methods) else "fail"
    else:
        agreement = "skipped"
    return coefficients, timings, agreement


def _cmd_count(args) -> int:
    if args.terms < 1:
        print("error: --terms must be >= 1", file=sys.stderr)
        return 2
    explicit = args.methods is not None
    if explicit:
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
        unknown = [m for m in methods if m not in ALL_METHODS]
        if unknown or not methods:
            print(f"error: unknown methods {unknown}", file=sys.stderr)
            return 2
        if "bruteforce" in methods and args.terms - 1 > args.bruteforce_ceiling:
            print(
                f"error: bruteforce refused above volume {args.bruteforce_ceiling} "
                f"(needs volumes up to {args.terms - 1}); raise --bruteforce-ceiling to override",
                file=sys.stderr,
            )
            return 2
    else:
        methods = ["product", "transfer"]
        if args.terms - 1 <= args.bruteforce_ceiling:
            methods.append("bruteforce")
    coefficients, timings, agreement = _run_methods(args.terms, methods, args.prune)
    report = {
        "command": "count",
        "parameters": {"terms": args.terms, "methods": methods, "prune": args.prune},
        "results": {"coefficients": coefficients, "agreement": agreement},
        "timings": timings,
    }
    _emit(report, args.format)
    return 1 if agreement == "fail" else 0


def _cmd_bench(args) -> int:
    if args.order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return 2
    methods = list(ALL_METHODS)
    verdicts = {m: "pass" for m in methods}
    run = []
    for m in methods:
        if m == "bruteforce" and args.order - 1 > args.bruteforce_ceiling:
            verdicts[m] = "skipped"
        else:
            run.append(m)
    coefficients, timings, agreement = _run_methods(args.order, run, args.prune)
    if agreement == "fail":
        for m in run:
            verdicts[m] = "fail"
    report = {
        "command": "bench",
        "parameters": {"order": args.order, "prune": args.prune},
        "results": {
            "coefficients": coefficients,
            "agreement": agreement,
            "verdicts": verdicts,
        },
        "timings": timings,
    }
    _emit(report, args.format)
    return 1 if agreement == "fail" else 0


# ---------------------------------------------------------------------------
# slice / unslice

def _read_plane_partition(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    stripped = text.strip()
    if stripped.startswith("["):
        rows = json.loads(stripped)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("JSON plane partition must be an array of arrays")
    else:
        rows = [[int(tok) for tok in line.split()] for line in stripped.splitlines() if line.strip()]
    return make_plane_partition(rows)


def _read_slices(path: str) -> SliceSequence:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    stripped = text.strip()
    if stripped.startswith("["):
        raw = json.loads(stripped)
        if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
            raise ValueError("JSON slice sequence must be an array of arrays")
        slices = [make_partition(r) for r in raw]
    else:
        slices = []
        for line in stripped.splitlines():
            line = line.strip()
            if not line:
                continue
            slices.append(() if line == "-" else make_partition(int(t) for t in line.split()))
    if not slices:
        slices = [()]
    return SliceSequence(tuple(slices))


def _cmd_slice(args) -> int:
    pi = _read_plane_partition(args.input)
    seq = diagonal_slices(pi)
    results = {
        "slices": [list(s) for s in seq.slices],
        "half_width": seq.half_width,
        "volume": volume(pi),
        "round_trip": "skipped",
    }
    code = 0
    if args.round_trip:
        ok = unslice(seq) == pi and seq.total_size() == volume(pi)
        results["round_trip"] = "pass" if ok else "fail"
        if not ok:
            code = 1
    report = {
        "command": "slice",
        "parameters": {"input": args.input, "round_trip": args.round_trip},
        "results": results,
        "timings": {},
    }
    _emit(report, args.format)
    return code


def _cmd_unslice(args) -> int:
    seq = _read_slices(args.input)
    pi = unslice(seq)
    results = {
        "matrix": [list(row) for row in pi],
        "volume": volume(pi),
        "round_trip": "skipped",
    }
    code = 0
    if args.round_trip:
        ok = diagonal_slices(pi).slices == seq.trimmed().slices
        results["round_trip"] = "pass" if ok else "fail"
        if not ok:
            code = 1
    report = {
        "command": "unslice",
        "parameters": {"input": args.input, "round_trip": args.round_trip},
        "results": results,
        "timings": {},
    }
    _emit(report, args.format)
    return code


# ---------------------------------------------------------------------------
# verify suites

def _suite_slicing(max_volume: int):
    checked = 0
    for n in range(max_volume + 1):
        for pi in plane_partitions_of(n):
            seq = diagonal_slices(pi)  # constructor enforces the interlacing invariant
            if seq.total_size() != n:
                return False, f"slice sizes of {pi} sum to {seq.total_size()}, volume is {n}", checked
            if unslice(seq) != pi:
                return False, f"unslice(slice({pi})) differs", checked
            checked += 1
    return True, None, checked


def _suite_commutation(max_size: int, truncation_size: int = 60):
    basis = enumerate_partitions(max_size)
    checked = 0
    for mu in basis:
        for mu1 in basis:
            for x, y in COMMUTATION_POINTS:
                report = commutation_check(mu, mu1, x, y)
                if not report.holds:
                    return False, f"law fails at mu={mu}, mu1={mu1}, x={x}, y={y}", checked
                partial = commutation_lhs_truncated(mu, mu1, x, y, truncation_size)
                bound = commutation_tail_bound(mu, mu1, x, y, truncation_size)
                if abs(report.lhs - partial) > bound:
                    return False, f"closed form off by more than the tail bound at mu={mu}, mu1={mu1}", checked
                checked += 1
    return True, None, checked


def _suite_product(order: int):
    z_transfer = transfer_partition_function(order)
    z_grid = finite_grid_product(order, order)
    z_product = macmahon_product(order)
    if not z_transfer == z_grid == z_product:
        return False, f"series disagree at order {order}", 3
    return True, None, 3


def _suite_schur(box: int, order: int = 32):
    shapes = [lam for lam in enumerate_partitions(box * box) if contains((box,) * box, lam)]
    weight_seqs = [()] + [
        seq for k in range(1, box + 1) for seq in cartesian(range(box + 1), repeat=k)
    ]
    checked = 0
    for lam in shapes:
        for mu in shapes:
            if not contains(lam, mu):
                continue
            for weights in weight_seqs:
                lhs = chain_matrix_element(lam, mu, weights, order)
                rhs = skew_ssyt_series(lam, mu, weights, order)
                if not lhs == rhs:
                    return False, f"mismatch at lam={lam}, mu={mu}, weights={weights}", checked
                checked += 1
    return True, None, checked


def _suite_adjoint(max_size: int):
    checked = 0
    for bound in range(max_size + 1):
        basis = enumerate_partitions(bound)
        order = bound + 1
        up = {}
        down = {}
        for mu in basis:
            state = FockState(order, {mu: QSeries.one(order)})
            up[mu] = set(apply_raising(state).terms) & set(basis)
            down[mu] = set(apply_lowering(state).terms)
        for mu in basis:
            for nu in basis:
                if (nu in up[mu]) != (mu in down[nu]):
                    return False, f"adjointness fails at mu={mu}, nu={nu}, bound={bound}", checked
                checked += 1
    return True, None, checked


def _cmd_verify(args) -> int:
    suites = {
        "slicing": lambda: _suite_slicing(args.max_size if args.max_size is not None else 8),
        "commutation": lambda: _suite_commutation(args.max_size if args.max_size is not None else 4),
        "product": lambda: _suite_product(args.order if args.order is not None else 15),
        "schur": lambda: _suite_schur(args.max_size if args.max_size is not None else 3),
        "adjoint": lambda: _suite_adjoint(args.max_size if args.max_size is not None else 6),
    }
    runner = suites[args.suite]
    t0 = time.perf_counter()
    ok, counterexample, checked = runner()
    elapsed = _ms(time.perf_counter() - t0)
    report = {
        "command": "verify",
        "parameters": {"suite": args.suite, "max_size": args.max_size, "order": args.order},
        "results": {
            "verdict": "pass" if ok else "fail",
            "checks": checked,
            "counterexample": counterexample,
        },
        "timings": {args.suite: elapsed},
    }
    _emit(report, args.format)
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planepartitions",
        description="Count plane partitions three ways and verify the operator identities behind the product formula.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    p_count = sub.add_parser("count", help="coefficients of the generating function")
    p_count.add_argument("--terms", type=int, required=True, help="number of coefficients (q^0 .. q^(terms-1))")
    p_count.add_argument("--methods", default=None, help="comma-separated subset of product,transfer,bruteforce")
    p_count.add_argument("--prune", choices=("plain", "sharp"), default="plain")
    p_count.add_argument("--bruteforce-ceiling", type=int, default=DEFAULT_BRUTEFORCE_CEILING)
    add_common(p_count)

    p_slice = sub.add_parser("slice", help="diagonal slices of a plane partition file")
    p_slice.add_argument("--input", required=True)
    p_slice.add_argument("--round-trip", action="store_true")
    add_common(p_slice)

    p_unslice = sub.add_parser("unslice", help="rebuild a plane partition from a slice file")
    p_unslice.add_argument("--input", required=True)
    p_unslice.add_argument("--round-trip", action="store_true")
    add_common(p_unslice)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=("slicing", "commutation", "product", "schur", "adjoint"), required=True)
    p_verify.add_argument("--max-size", type=int, default=None)
    p_verify.add_argument("--order", type=int, default=None)
    add_common(p_verify)

    p_bench = sub.add_parser("bench", help="time the three methods at one order")
    p_bench.add_argument("--order", type=int, required=True)
    p_bench.add_argument("--prune", choices=("plain", "sharp"), default="plain")
    p_bench.add_argument("--bruteforce-ceiling", type=int, default=DEFAULT_BRUTEFORCE_CEILING)
    add_common(p_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "slice": _cmd_slice,
        "unslice": _cmd_unslice,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
