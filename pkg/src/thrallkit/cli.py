"""Command-line frontend.

Every subcommand maps onto one library operation and emits JSON with a
stable key order (or aligned text with ``--format text``).  Exit codes:
0 success / check passed, 1 check failed, 2 malformed input or usage,
3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio
from .free_lie import is_lie_element, thrall_decompose
from .group_algebra import (
    ResourceLimitError,
    higher_lie_idempotent,
    intersection_projector,
)
from .invariants import path_invariants, sl_invariant_space
from .jsonio import FormatError, format_partition, parse_partition
from .rank_variety import (
    fls_check,
    hdet_pullback_check,
    is_rank_one,
    signature_rank_one_check,
)
from .shuffle_sig import is_group_like, log_signature, signature
from .symfun import thrall_coefficients, w_module_dim
from .tensors import is_symmetric
from .words import lie_dim, lyndon_words, num_standard, partitions, schur_dim, word_to_string

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit(payload, fmt: str, text_renderer=None) -> None:
    if fmt == "json" or text_renderer is None:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        text_renderer(payload)


def _load_json(path: str, what: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise FormatError(what, f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(what, f"invalid JSON in {path}: {exc}") from None


# ---------------------------------------------------------------------------
# subcommand implementations


def cmd_dims(args) -> int:
    d, k = args.d, args.k
    payload = {
        "d": d,
        "k": k,
        "lie_dims": {str(i): lie_dim(d, i) for i in range(1, k + 1)},
        "w_dims": {format_partition(lam): w_module_dim(lam, d) for lam in partitions(k)},
        "schur_dims": {format_partition(mu): schur_dim(mu, d) for mu in partitions(k)},
        "multiplicities": {
            format_partition(mu): num_standard(mu) for mu in partitions(k)
        },
    }

    def text(p):
        print(f"graded Lie dimensions for d={d}:")
        for i, v in p["lie_dims"].items():
            print(f"  degree {i}: {v}")
        print(f"graded module dimensions at k={k}:")
        for lam, v in p["w_dims"].items():
            print(f"  ({lam}): {v}")
        print("Schur dims / multiplicities:")
        for mu in p["schur_dims"]:
            print(f"  ({mu}): {p['schur_dims'][mu]} x {p['multiplicities'][mu]}")

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_lyndon(args) -> int:
    lengths = range(1, args.k + 1) if args.upto else [args.k]
    words = [word_to_string(w) for k in lengths for w in lyndon_words(args.d, k)]
    _emit({"d": args.d, "k": args.k, "words": words}, args.format,
          lambda p: print(" ".join(p["words"])))
    return EXIT_OK


def cmd_idempotent(args) -> int:
    lam = parse_partition(args.partition, "partition")
    if sum(lam) != args.k:
        raise FormatError("partition", f"{lam} is not a partition of k={args.k}")
    if args.intersect_mu:
        mu = parse_partition(args.intersect_mu, "intersect-mu")
        element = intersection_projector(lam, mu)
    else:
        element = higher_lie_idempotent(lam)
    payload = jsonio.group_element_to_json(element)

    def text(p):
        for term in p["terms"]:
            cyc = "".join("(" + "".join(map(str, c)) + ")" for c in term["cycles"]) or "id"
            print(f"  {term['coeff']:>8}  {cyc}")

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_thrall_coeffs(args) -> int:
    if args.partition:
        lam = parse_partition(args.partition, "partition")
        if sum(lam) != args.k:
            raise FormatError("partition", f"{lam} is not a partition of k={args.k}")
        lams = [lam]
    else:
        lams = list(partitions(args.k))
    table = {
        format_partition(lam): {
            format_partition(mu): a for mu, a in sorted(thrall_coefficients(lam).items(), reverse=True)
        }
        for lam in lams
    }

    def text(p):
        for lam, row in p.items():
            cells = ", ".join(f"({mu}): {a}" for mu, a in row.items())
            print(f"({lam}) -> {cells}")

    _emit(table, args.format, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    tensor = jsonio.tensor_from_json(_load_json(args.tensor, "tensor"), "tensor")
    components = thrall_decompose(tensor, method=args.method)
    payload = {
        format_partition(lam): jsonio.tensor_to_json(component)
        for lam, component in components.items()
    }
    _emit(payload, args.format)
    return EXIT_OK


def cmd_invariants(args) -> int:
    table = path_invariants(args.d, args.ell)
    payload = {
        format_partition(lam): [
            jsonio.functional_to_json(beta, grading=lam) for beta in basis
        ]
        for lam, basis in table.items()
    }

    def text(p):
        for lam, basis in p.items():
            if not basis:
                continue
            print(f"({lam}):")
            for b in basis:
                terms = " + ".join(f"{c}*T_{w}" for w, c in b["terms"].items())
                print(f"  {terms}")

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_ambient_invariants(args) -> int:
    basis = sl_invariant_space(args.d, args.k)
    payload = [jsonio.functional_to_json(beta) for beta in basis]
    _emit(payload, args.format)
    return EXIT_OK


def cmd_signature(args) -> int:
    path = jsonio.path_from_json(_load_json(args.path, "path"), "path")
    series = (
        log_signature(path, args.level) if args.log else signature(path, args.level)
    )
    _emit(jsonio.series_to_json(series), args.format)
    return EXIT_OK


def cmd_check(args) -> int:
    what = args.what
    if what == "group-like":
        series = jsonio.series_from_json(_load_json(args.input, "series"), "series")
        passed = is_group_like(series)
        payload = {"check": what, "passed": passed}
    elif what == "symmetric":
        tensor = jsonio.tensor_from_json(_load_json(args.input, "tensor"), "tensor")
        passed = is_symmetric(tensor)
        payload = {"check": what, "passed": passed}
    elif what == "rank1":
        tensor = jsonio.tensor_from_json(_load_json(args.input, "tensor"), "tensor")
        result = is_rank_one(tensor)
        passed = bool(result)
        payload = {"check": what, "passed": passed}
        if result.factors is not None:
            payload["witness"] = [
                [jsonio.format_fraction(x) for x in factor] for factor in result.factors
            ]
        report = signature_rank_one_check(tensor, assert_in_variety=False)
        payload["symmetric"] = report.symmetric
    elif what == "lie":
        tensor = jsonio.tensor_from_json(_load_json(args.input, "tensor"), "tensor")
        passed = is_lie_element(tensor)
        payload = {"check": what, "passed": passed}
    elif what == "fls":
        path = jsonio.path_from_json(_load_json(args.input, "path"), "path")
        report = fls_check(path, args.level)
        passed = report.is_segment
        payload = {"check": what, "passed": passed, **report.as_dict()}
    else:  # unreachable through argparse choices
        raise FormatError("check", f"unknown check {what!r}")
    _emit(payload, args.format)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_hdet_pullback(args) -> int:
    report = hdet_pullback_check(seed=args.seed, samples=args.samples)
    _emit(report.as_dict(), args.format)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_paper_suite(args) -> int:
    from .reference_suite import run_reference_checks

    results = run_reference_checks(threads=args.threads)
    payload = {
        "passed": all(r.passed for r in results),
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    }

    def text(p):
        width = max(len(c["name"]) for c in p["checks"])
        for c in p["checks"]:
            marker = "PASS" if c["passed"] else "FAIL"
            print(f"{c['name']:<{width}}  {marker}  {c['detail']}")
        print("overall:", "PASS" if p["passed"] else "FAIL")

    _emit(payload, args.format, text)
    return EXIT_OK if payload["passed"] else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thrallkit",
        description="Exact computations with signature tensors, graded "
        "decompositions, projectors, invariants and rank diagnostics.",
    )
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--threads", type=int, default=1, help="opt-in parallelism")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimension tables")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("lyndon", help="Lyndon words")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="all lengths 1..k")
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("idempotent", help="graded projector in the group algebra")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--intersect-mu", default=None)
    p.set_defaults(func=cmd_idempotent)

    p = sub.add_parser("thrall-coeffs", help="graded multiplicity tables")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition", default=None)
    p.set_defaults(func=cmd_thrall_coeffs)

    p = sub.add_parser("decompose", help="graded components of a tensor")
    p.add_argument("--tensor", required=True, help="tensor JSON file")
    p.add_argument("--method", choices=["auto", "idempotent", "solve"], default="auto")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("invariants", help="graded invariant functionals")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("invariant-space", help="ambient invariant functionals")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_ambient_invariants)

    p = sub.add_parser("signature", help="signature of a piecewise-linear path")
    p.add_argument("--path", required=True, help="path JSON file")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--log", action="store_true")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("check", help="boolean checks with exit code 0/1")
    p.add_argument("what", choices=["group-like", "symmetric", "rank1", "fls", "lie"])
    p.add_argument("--input", required=True)
    p.add_argument("--level", type=int, default=4)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hdet-pullback", help="sampled pullback factorization check")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_hdet_pullback)

    p = sub.add_parser("paper-suite", help="run all reference-value regressions")
    p.set_defaults(func=cmd_paper_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
