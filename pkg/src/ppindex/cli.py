"""Command-line front end.

Exit codes: 0 success, 1 domain-level negative (infeasible triple, failed
precondition, failed round trip), 2 input error, 3 numeric-integrity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .core import DEFAULT_PROJ_TOL, DEFAULT_RANK_TOL, ToleranceConfig, rank, power
from .errors import InfeasibleError, InputError, NumericError, PreconditionError, ToleranceDiagnosticError
from .isometry import analyze, canonical_form, format_index, verify_block_form
from .matrixfile import read_matrix, to_document, write_matrix
from .synthesis import feasible, feasible_pairs, synthesize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _config(args) -> ToleranceConfig:
    return ToleranceConfig(rank_tol=args.rank_tol, proj_tol=args.proj_tol)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _err(msg) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_analyze(args) -> int:
    cfg = _config(args)
    A = read_matrix(args.path)
    try:
        report = analyze(A, cfg)
    except ToleranceDiagnosticError as exc:
        _err(str(exc))
        print(f"offending power: {exc.power}", file=sys.stderr)
        print(f"singular values: {exc.singular_values}", file=sys.stderr)
        for name, r in exc.residuals.items():
            print(f"residual {name}: {r:.3e}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.json:
        _emit_json(report.to_dict())
        return EXIT_OK
    print(f"p={format_index(report.p)} a={report.a}")
    for ell, (ok, r) in enumerate(zip(report.per_power, report.residuals), start=1):
        verdict = "partial isometry" if ok else "not a partial isometry"
        print(f"  A^{ell}: {verdict} (residual {r:.3e})")
    print(f"geometric multiplicity of 0: {report.geo0}")
    print(f"algebraic multiplicity of 0: {report.alg0}")
    print("kernel nullities: " + " ".join(str(v) for v in report.chain.nullities))
    return EXIT_OK


def cmd_synthesize(args) -> int:
    try:
        A, recipe = synthesize(args.j, args.k, args.n)
    except InfeasibleError as exc:
        if args.json:
            _emit_json({"feasible": False, "j": args.j, "k": args.k, "n": args.n, "explanation": str(exc)})
        else:
            print(str(exc))
        return EXIT_NEGATIVE
    if args.out:
        try:
            write_matrix(args.out, A)
        except OSError as exc:
            _err(f"cannot write {args.out}: {exc}")
            return EXIT_INPUT
    if args.json:
        doc = {"feasible": True, "recipe": recipe.to_dict()}
        if args.out:
            doc["out"] = str(args.out)
        else:
            doc["matrix"] = to_document(A)
        _emit_json(doc)
        return EXIT_OK
    print(f"case {recipe.case}")
    if args.out:
        print(f"wrote {args.out}")
    else:
        print(json.dumps(to_document(A)))
    return EXIT_OK


def cmd_feasible(args) -> int:
    if args.n < 1:
        _err(f"n must be >= 1, got {args.n}")
        return EXIT_INPUT
    rows = [(j, k, feasible(j, k, args.n).condition) for j, k in sorted(feasible_pairs(args.n))]
    if args.json:
        _emit_json({"n": args.n, "pairs": [{"j": j, "k": k, "condition": c} for j, k, c in rows]})
        return EXIT_OK
    print("j k condition")
    for j, k, c in rows:
        print(f"{j} {k} {c}")
    return EXIT_OK


def _round_trip(triple, cfg):
    n, j, k = triple
    A, recipe = synthesize(j, k, n)
    try:
        rep = analyze(A, cfg)
    except ToleranceDiagnosticError as exc:
        return {"n": n, "j": j, "k": k, "case": recipe.case, "ok": False, "error": str(exc)}
    ok = rep.p == j and rep.a == k
    return {"n": n, "j": j, "k": k, "case": recipe.case, "ok": ok, "p": format_index(rep.p), "a": rep.a}


def cmd_verify(args) -> int:
    if args.n_max < 1:
        _err(f"n_max must be >= 1, got {args.n_max}")
        return EXIT_INPUT
    cfg = _config(args)
    triples = [(n, j, k) for n in range(1, args.n_max + 1) for j, k in sorted(feasible_pairs(n))]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(lambda t: _round_trip(t, cfg), triples))
    else:
        results = [_round_trip(t, cfg) for t in triples]
    failed = [r for r in results if not r["ok"]]
    if args.json:
        _emit_json({"checked": len(results), "passed": len(results) - len(failed), "failed": failed})
    else:
        for r in failed:
            got = r.get("error") or f"p={r['p']} a={r['a']}"
            print(f"FAIL n={r['n']} j={r['j']} k={r['k']} ({r['case']}): {got}")
        print(f"checked {len(results)} triples: {len(results) - len(failed)} passed, {len(failed)} failed")
    return EXIT_OK if not failed else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    cfg = _config(args)
    A = read_matrix(args.path)
    try:
        form = canonical_form(A, args.j, cfg)
    except PreconditionError as exc:
        _err(str(exc))
        return EXIT_NEGATIVE
    except NumericError as exc:
        _err(str(exc))
        for name, r in exc.residuals.items():
            print(f"residual {name}: {r:.3e}", file=sys.stderr)
        return EXIT_NUMERIC
    check = verify_block_form(form, A, cfg)
    if not check:
        _err("block form failed verification: " + "; ".join(check.violations))
        return EXIT_NUMERIC

    blocks = {"Q": form.Q}
    for ell, blk in enumerate(form.superdiag_blocks, start=1):
        blocks[f"A{ell}"] = blk
    blocks["B"] = form.B
    blocks["C"] = form.C
    manifest = {
        "n": int(A.shape[0]),
        "j": form.j,
        "dims": list(form.dims),
        "m": form.m,
        "rank_Aj": rank(power(A, form.j), cfg),
        "residuals": check.residuals,
        "files": {},
    }
    if args.out:
        prefix = Path(args.out)
        try:
            for name, blk in blocks.items():
                if blk.size == 0:
                    # empty tail: nothing to store, dims already record it
                    continue
                target = prefix.with_name(f"{prefix.name}.{name}.json")
                write_matrix(target, blk)
                manifest["files"][name] = target.name
            prefix.with_name(f"{prefix.name}.manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
        except OSError as exc:
            _err(f"cannot write decomposition: {exc}")
            return EXIT_INPUT
    if args.json:
        _emit_json(manifest)
    else:
        print("dims: " + " ".join(str(d) for d in form.dims))
        for name, r in check.residuals.items():
            print(f"residual {name}: {r:.3e}")
        if args.out:
            print(f"wrote {len(manifest['files'])} blocks and manifest with prefix {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument(
        "--rank-tol",
        type=float,
        default=DEFAULT_RANK_TOL,
        help="relative singular value threshold for rank decisions (default: %(default)g)",
    )
    common.add_argument(
        "--proj-tol",
        type=float,
        default=DEFAULT_PROJ_TOL,
        help="max entrywise deviation for projection/isometry tests (default: %(default)g)",
    )

    parser = argparse.ArgumentParser(
        prog="ppindex", description="Power partial isometry index and ascent of finite matrices."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="compute p(A), a(A) for a matrix file")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synthesize", parents=[common], help="build a witness with p = j, a = k")
    p.add_argument("n", type=int)
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--out", help="write the witness to this matrix file")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("feasible", parents=[common], help="list feasible (p, a) pairs for size n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("verify", parents=[common], help="synthesize and re-analyze every feasible triple")
    p.add_argument("n_max", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker threads (default: %(default)s)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="unitary block form along the kernel chain")
    p.add_argument("path")
    p.add_argument("j", type=int)
    p.add_argument("--out", help="prefix for the block files and manifest")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _err(str(exc))
        return EXIT_INPUT
    except NumericError as exc:
        _err(str(exc))
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
