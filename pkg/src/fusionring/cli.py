"""Command-line frontend: fusion tables, certificates, search, selftest.

Exit codes are a stable contract: 0 success (or verified), 2 usage or parse
errors, 3 a verification or selftest failure, 4 internal errors.  All output
is byte-reproducible across runs: no timestamps, canonical orderings, and
sorted JSON keys throughout.
"""

from __future__ import annotations

import argparse
import os
import sys

from .cartan import AlgebraType, build_root_system
from .certify import known_generators, search_two_generators, verify_presentation
from .checks import run_selftest
from .fusion import cached_fusion_table, table_to_json_bytes
from .polyring import PolynomialParseError, parse_polynomial

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 3
EXIT_INTERNAL = 4

CACHE_ENV_VAR = "FUSIONRING_CACHE_DIR"

_ALGEBRA_ALIASES = {
    "a2": AlgebraType.A2,
    "b2": AlgebraType.C2,  # isomorphic label, accepted at the CLI layer only
    "c2": AlgebraType.C2,
    "g2": AlgebraType.G2,
}


class _UsageError(Exception):
    pass


def _resolve_algebra(name: str) -> AlgebraType:
    try:
        return _ALGEBRA_ALIASES[name.lower()]
    except KeyError:
        raise _UsageError(f"unknown algebra {name!r}; choose from a2, b2, c2, g2")


def _weight_label(w) -> str:
    return f"{w[0]}·ω1+{w[1]}·ω2"


def _render_table(table, fmt: str) -> bytes:
    if fmt == "json":
        return table_to_json_bytes(table)
    entries = table.entries()
    if fmt == "csv":
        lines = ["lambda_index,mu_index,nu_index,value"]
        lines.extend(f"{i},{j},{l},{v}" for i, j, l, v in entries)
        return ("\n".join(lines) + "\n").encode()
    # pretty: one line per (lambda, mu) pair with omega-labels, upper triangle
    alc = table.alc
    lines = [
        f"fusion table {table.alc.rs.algebra.value} level {alc.k} "
        f"(basis size {table.size})"
    ]
    for i in range(table.size):
        for j in range(i, table.size):
            row = table.rows.get((i, j), {})
            if row:
                rhs = " + ".join(
                    (f"{v}·[{_weight_label(alc.weights[l])}]" if v != 1 else f"[{_weight_label(alc.weights[l])}]")
                    for l, v in sorted(row.items())
                )
            else:
                rhs = "0"
            lines.append(
                f"[{_weight_label(alc.weights[i])}] * [{_weight_label(alc.weights[j])}] = {rhs}"
            )
    return ("\n".join(lines) + "\n").encode()


def _emit(data: bytes, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _cmd_table(args) -> int:
    algebra = _resolve_algebra(args.algebra)
    if args.level < 0:
        raise _UsageError("level must be nonnegative")
    table = cached_fusion_table(build_root_system(algebra), args.level, args.cache_dir)
    _emit(_render_table(table, args.format), args.out)
    return EXIT_OK


def _parse_generators(args, rs, k) -> list:
    if args.known:
        return known_generators(rs, k)
    texts: list[str] = []
    if args.gens:
        texts.extend(piece for piece in args.gens.split(";") if piece.strip())
    if args.gens_file:
        with open(args.gens_file, "r", encoding="utf-8") as fh:
            texts.extend(line for line in fh.read().splitlines() if line.strip())
    if not texts:
        raise _UsageError("provide --known, --gens, or --gens-file")
    return [parse_polynomial(t) for t in texts]


def _cmd_verify(args) -> int:
    algebra = _resolve_algebra(args.algebra)
    if args.level < 1:
        raise _UsageError("verification needs level >= 1")
    rs = build_root_system(algebra)
    try:
        gens = _parse_generators(args, rs, args.level)
    except PolynomialParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cert = verify_presentation(rs, args.level, gens, cache_dir=args.cache_dir)
    _emit(cert.to_json_bytes(), args.out)
    if cert.verified:
        print(f"verified: rank {cert.rank} = alcove size", file=sys.stderr)
        return EXIT_OK
    print(f"failed: {cert.failure_reason}", file=sys.stderr)
    return EXIT_VERIFICATION


def _cmd_search(args) -> int:
    if args.bound < 0:
        raise _UsageError("bound must be nonnegative")
    if args.level < 1:
        raise _UsageError("search needs level >= 1")
    rs = build_root_system(AlgebraType.G2)
    report = search_two_generators(rs, args.level, args.bound, cache_dir=args.cache_dir)
    _emit(report.to_json_bytes(), args.out)
    status = "found" if report.found_pair else "exhausted"
    print(
        f"search {status}: {report.candidate_count} candidate(s) examined",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_selftest(args) -> int:
    if args.max_level < 0:
        raise _UsageError("max-level must be nonnegative")
    results = run_selftest(args.max_level, cache_dir=args.cache_dir)
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description=(
            "Exact level-k fusion rings of the rank-2 simple Lie algebras: "
            "tables, ideal-presentation certificates, and a two-generator search."
        ),
    )
    parser.add_argument(
        "--cache-dir",
        default=os.environ.get(CACHE_ENV_VAR),
        help=f"fusion table cache directory (default: ${CACHE_ENV_VAR} if set)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit the structure-constant tensor")
    p_table.add_argument("--algebra", required=True, help="a2 | b2 | c2 | g2")
    p_table.add_argument("--level", type=int, required=True)
    p_table.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_table.add_argument("--out", help="write to file instead of stdout")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="certify a generating set of the fusion ideal")
    p_verify.add_argument("--algebra", required=True, help="a2 | b2 | c2 | g2")
    p_verify.add_argument("--level", type=int, required=True)
    p_verify.add_argument("--known", action="store_true", help="use the published generating set")
    p_verify.add_argument("--gens", help="semicolon-separated polynomials, e.g. 'X^2 - Y; X*Y - 1'")
    p_verify.add_argument("--gens-file", help="file with one polynomial per line")
    p_verify.add_argument("--out", help="write the certificate JSON to this path")
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="search for a two-element G2 generating set")
    p_search.add_argument("--level", type=int, required=True)
    p_search.add_argument("--bound", type=int, required=True, help="perturbation coefficient bound")
    p_search.add_argument("--out", help="write the report JSON to this path")
    p_search.set_defaults(func=_cmd_search)

    p_self = sub.add_parser("selftest", help="run the exhaustive property suite")
    p_self.add_argument("--max-level", type=int, required=True)
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolynomialParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
