"""Command-line front door.

Matrix subcommands read the JSON wire format
{"field": "GF(p^k)[;modulus=...]", "rows": [[e, ...], ...]} and print results
as canonical JSON followed by an aligned plain-text grid.  Graph subcommands
also accept the GF(2) bicolored shorthand {"field": "GF(2)", "n": ...,
"blue": [...], "edges": [[i, j], ...]}.  Vertices and rows are 1-indexed in
all user-facing text.

Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import gf, linalg, paperbench, pressing
from .gf import Field
from .linalg import Mat


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_mat(path: str) -> Mat:
    return Mat.from_json(_load_json(path))


def _load_graph(path: str) -> pressing.Pseudograph:
    return pressing.Pseudograph.from_json(_load_json(path))


def _print_mat(A: Mat):
    print(json.dumps(A.to_json()))
    cells = [[repr(e) for e in row] for row in A.rows]
    if not cells:
        return
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells[0]))]
    for row in cells:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))


def _parse_order(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise pressing.PressingError(f"bad --order value {text!r}")


# -- subcommand handlers -----------------------------------------------------


def cmd_field_info(args):
    F = Field.parse(args.field)
    pos = sorted(gf.positives(F), key=lambda e: e.index)
    print(f"field: {F.literal()}")
    print(f"order: {F.q}")
    print(f"definite: {'yes' if gf.is_definite(F) else 'no'}")
    if len(pos) <= 100:
        print("positives: " + ",".join(repr(e) for e in pos))
    else:
        print(f"positives: {len(pos)} elements (not shown)")
    return 0


def cmd_positives(args):
    F = Field.parse(args.field)
    for e in sorted(gf.positives(F), key=lambda e: e.index):
        print(repr(e))
    return 0


def cmd_cholesky(args):
    _print_mat(linalg.cholesky_psd(_load_mat(args.file)) if args.relaxed
               else linalg.cholesky(_load_mat(args.file)))
    return 0


def cmd_ldu(args):
    L, D, U = linalg.ldu(_load_mat(args.file))
    for name, M in (("L", L), ("D", D), ("U", U)):
        print(f"{name}:")
        _print_mat(M)
    return 0


def cmd_pd_check(args):
    A = _load_mat(args.file)
    minors = linalg.leading_minors(A)
    for k, m in enumerate(minors, start=1):
        if not gf.is_positive(m):
            print(f"NOT positive definite (minor {k} = {m!r} not positive)")
            return 0
    print("positive definite")
    return 0


def cmd_minors(args):
    for k, m in enumerate(linalg.leading_minors(_load_mat(args.file)), start=1):
        print(f"minor {k}: {m!r}")
    return 0


def cmd_eigen(args):
    A = _load_mat(args.file)
    coeffs = linalg.char_poly(A)
    print("char_poly (ascending): " + ",".join(repr(c) for c in coeffs))
    eigs = linalg.eigenvalues_in_field(A)
    print("eigenvalues in field: " + (",".join(repr(e) for e in eigs) or "(none)"))
    return 0


def cmd_gram(args):
    A = _load_mat(args.file)
    print("gram matrix" if linalg.is_gram(A) else "not a gram matrix")
    return 0


def cmd_kron(args):
    _print_mat(linalg.kronecker(_load_mat(args.a), _load_mat(args.b)))
    return 0


def cmd_hadamard(args):
    _print_mat(linalg.hadamard(_load_mat(args.a), _load_mat(args.b)))
    return 0


def cmd_frobenius(args):
    print(repr(linalg.frobenius_inner(_load_mat(args.a), _load_mat(args.b))))
    return 0


def cmd_anti_inverse(args):
    _print_mat(linalg.anti_inverse(_load_mat(args.file)))
    return 0


def cmd_isotropic(args):
    v = linalg.isotropic_vector(_load_mat(args.file))
    print("none" if v is None else "(" + ",".join(repr(e) for e in v) + ")")
    return 0


def cmd_press(args):
    G = _load_graph(args.file)
    if args.search:
        order = pressing.find_order(G)
        print("none" if order is None else ",".join(map(str, order)))
        return 0
    if args.order is None:
        raise pressing.PressingError("press requires --order or --search")
    order = _parse_order(args.order)
    if args.instructions:
        sets = pressing.instructions_from_cholesky(G, order)
        for i, s in enumerate(sets, start=1):
            print(f"press {i}: {{{','.join(map(str, sorted(s)))}}}")
        return 0
    outcome = pressing.run_sequence(G, order)
    if outcome.status == "success":
        print("SUCCESS")
    else:
        where = f" at vertex {outcome.stuck_vertex}" if outcome.stuck_vertex else ""
        print(f"STUCK{where} after presses {outcome.steps_applied}")
    print(json.dumps(outcome.final.to_json()))
    return 0


def cmd_verify(args):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("FFPD_SEED", paperbench.DEFAULT_SEED))
    reports = paperbench.run_all(q_max=args.q_max, n_max=args.n_max, seed=seed)
    print(paperbench.report_text(reports))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(paperbench.report_json(reports, seed))
    return 0 if all(r.passed for r in reports) else 1


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    app = create_app(
        snapshot_dir=args.snapshot_dir, ttl=args.ttl, allow_origin=args.allow_origin
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffpd", description="Positive-definite matrices over finite fields."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="classify a field and list its positives")
    p.add_argument("field")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("positives", help="list the positive elements of a field")
    p.add_argument("field")
    p.set_defaults(func=cmd_positives)

    p = sub.add_parser("cholesky", help="Cholesky factor of a matrix file")
    p.add_argument("file")
    p.add_argument("--relaxed", action="store_true",
                   help="allow an all-zero trailing Schur complement")
    p.set_defaults(func=cmd_cholesky)

    for name, func in (
        ("ldu", cmd_ldu),
        ("pd-check", cmd_pd_check),
        ("minors", cmd_minors),
        ("eigen", cmd_eigen),
        ("gram", cmd_gram),
        ("anti-inverse", cmd_anti_inverse),
        ("isotropic", cmd_isotropic),
    ):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.set_defaults(func=func)

    for name, func in (
        ("kron", cmd_kron),
        ("hadamard", cmd_hadamard),
        ("frobenius", cmd_frobenius),
    ):
        p = sub.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=func)

    p = sub.add_parser("press", help="run, search or explain pressing sequences")
    p.add_argument("file")
    p.add_argument("--order", help="comma-separated 1-indexed vertices")
    p.add_argument("--search", action="store_true",
                   help="find the lexicographically first successful order")
    p.add_argument("--instructions", action="store_true",
                   help="print Cholesky press instructions for --order")
    p.set_defaults(func=cmd_press)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--q-max", type=int, default=paperbench.DEFAULT_Q_MAX)
    p.add_argument("--n-max", type=int, default=paperbench.DEFAULT_N_MAX)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", help="also write a machine-readable report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the pressing session HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--snapshot-dir", default=None)
    p.add_argument("--ttl", type=int, default=86400)
    p.add_argument("--allow-origin", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


DOMAIN_ERRORS = (
    gf.FieldError,
    linalg.LinalgError,
    pressing.PressingError,
    paperbench.LimitExceeded,
    OSError,
    json.JSONDecodeError,
    KeyError,
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
