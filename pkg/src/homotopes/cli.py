"""Command-line surface: verification suites, tables, eigenspace reports,
group checks and normal forms, with deterministic JSON/Markdown output.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
Reproducibility contract: seeding uses Python's documented Mersenne-Twister
``random.Random(seed)``; the same seed and configuration yield byte-identical
JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families, groups
from .families import (CONSTRUCTIONS, SIGNS, family, family_axiom_suite,
                       family_labels, instantiate, verify_table)
from .matrices import Matrix
from .normalforms import intertwiner_check, normal_form
from .scalars import Q


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sizes_for(kind: str, args) -> tuple:
    if kind == "pq":
        if args.p is None or args.q is None:
            raise ValueError("this label needs --p and --q")
        if args.p < 1 or args.q < 1:
            raise ValueError("sizes must be >= 1")
        sizes = (args.p, args.q)
    else:
        if args.n is None:
            raise ValueError("this label needs --n")
        if args.n < 1:
            raise ValueError("sizes must be >= 1")
        sizes = (args.n,)
    if max(sizes) > 4:
        print("warning: sizes above 4 get slow quickly", file=sys.stderr)
    return sizes


def cmd_axioms(args) -> int:
    desc = family(args.family)
    sizes = _sizes_for(desc.sizes, args)
    report = family_axiom_suite(args.family, sizes, args.samples, args.seed)
    _emit(_dump_json(report), args.out)
    return 0 if report["pass"] else 1


def cmd_table(args) -> int:
    if args.construction == "proj":
        if args.p is None or args.q is None:
            raise ValueError("proj needs --p and --q")
        sizes = (args.p, args.q)
    else:
        if args.n is None:
            raise ValueError(f"{args.construction} needs --n")
        sizes = (args.n,)
    c = instantiate(args.construction, sizes)
    artifact = verify_table(c, args.samples, args.seed)
    if args.format == "md":
        _emit(artifact.to_markdown(), args.out)
    else:
        _emit(_dump_json(artifact.to_json()), args.out)
    return 0 if artifact.verified else 1


def cmd_eigenspaces(args) -> int:
    if args.construction == "proj":
        if args.p is None or args.q is None:
            raise ValueError("proj needs --p and --q")
        sizes = (args.p, args.q)
    else:
        if args.n is None:
            raise ValueError(f"{args.construction} needs --n")
        sizes = (args.n,)
    c = instantiate(args.construction, sizes)
    model_failures = c.validate_models()
    report = {
        "construction": c.name,
        "sizes": list(sizes),
        "dims": [c.piece(s).dim for s in SIGNS],
        "pieces": [{"signs": list(s), "dim": c.piece(s).dim,
                    "model": c.models[s].name} for s in SIGNS],
        "direct_sum": c.decomposition.check_direct_sum(),
        "models_verified": not model_failures,
        "involutions": [c.tau.to_json(), c.tau_tilde.to_json()],
        "notes": c.notes,
    }
    if args.format == "md":
        lines = [f"# {c.name}{list(sizes)} joint eigenspaces", "",
                 "| signs | dim | model |", "|---|---|---|"]
        for p in report["pieces"]:
            lines.append(f"| {tuple(p['signs'])} | {p['dim']} | {p['model']} |")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump_json(report), args.out)
    return 0 if report["direct_sum"] and report["models_verified"] else 1


def cmd_group(args) -> int:
    n = args.n if args.n is not None else 2
    if args.check == "axioms":
        report = groups.group_axiom_suite(n, n, Q, args.samples, args.seed)
    elif args.check == "tangent":
        report = groups.tangent_suite(n, n, Q, args.samples, args.seed)
    elif args.check == "membership":
        report = groups.unitary_suite(n, Q, "id", args.samples, args.seed)
    else:
        raise ValueError(f"unknown group check {args.check!r}")
    _emit(_dump_json(report), args.out)
    return 0 if report["pass"] else 1


def cmd_normal_form(args) -> int:
    with open(args.input) as fh:
        a = Matrix.from_json(json.load(fh))
    nf = normal_form(a, args.kind)
    carrier = families.matrix_space(a.cols, a.rows, a.ring)
    intertwines = intertwiner_check(nf, carrier)
    report = nf.to_json()
    report["intertwines"] = intertwines
    _emit(_dump_json(report), args.out)
    return 0 if nf.verified and intertwines else 1


def cmd_list_families(args) -> int:
    entries = [family(label).to_json() for label in family_labels()]
    if args.format == "md":
        lines = ["| label | ring | sizes | space | pair |", "|---|---|---|---|---|"]
        for e in entries:
            lines.append(f"| {e['label']} | {e['ring']} | {e['sizes']} | {e['space']} | {e['pair']} |")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump_json({"families": entries, "constructions": list(CONSTRUCTIONS)}), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homotopes",
        description="Exact verification of homotope Lie algebras, triple systems and groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, samples_default):
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--samples", type=int, default=samples_default)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "md"), default="json")
        p.add_argument("--out")

    p = sub.add_parser("axioms", help="run the LTS axiom suite for a family label")
    p.add_argument("--family", required=True)
    common(p, 10)
    p.set_defaults(fn=cmd_axioms)

    p = sub.add_parser("table", help="verify and emit the 4x4 construction table")
    p.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    common(p, 5)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("eigenspaces", help="joint eigenspace dims and models")
    p.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    common(p, 0)
    p.set_defaults(fn=cmd_eigenspaces)

    p = sub.add_parser("group", help="group-law verification suites")
    p.add_argument("--check", choices=("axioms", "tangent", "membership"), default="axioms")
    common(p, 10)
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("normal-form", help="normal form of a parameter matrix")
    p.add_argument("--kind", choices=("rectangular", "symmetric", "skew", "hermitian"),
                   required=True)
    p.add_argument("--input", required=True, help="path to a matrix JSON file")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_normal_form)

    p = sub.add_parser("list-families", help="list the family catalog")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_list_families)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (KeyError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
