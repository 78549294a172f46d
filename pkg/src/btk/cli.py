"""Command-line front end.

Exit codes: 0 success, 1 negative result (not decomposable, not isomorphic),
2 unreadable or malformed input, 3 usage error, 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import axioms, config, enumeration, morphism, prodec, unigen
from .algebra import AlgebraFormatError, StructureTriple, algebra_to_doc, emit_catalog, parse_algebra, parse_catalog
from .stp import LogicalMatrix, kron, parse_delta, power_reducing, stp_chain, swap_matrix

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ helpers


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_algebra(path: str) -> StructureTriple:
    try:
        return parse_algebra(_read(path))
    except AlgebraFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_many(path: str) -> list[StructureTriple]:
    p = Path(path)
    try:
        if p.is_dir():
            return [parse_algebra(_read(str(f))) for f in sorted(p.glob("*.json"))]
        return parse_catalog(_read(path))
    except AlgebraFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(doc, pretty_text: str | None, args) -> None:
    if args.pretty and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(doc, ensure_ascii=False))


def _table(rows: Sequence[Sequence[object]]) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


# ----------------------------------------------------------------- commands


def cmd_check(args) -> int:
    a = _load_algebra(args.path)
    report = axioms.classify(a).as_dict()
    rows = [("property", "value")] + [(k, "-" if v is None else str(v).lower()) for k, v in report.items()]
    _emit(report, _table(rows), args)
    return EXIT_OK


_LATTICE_CLASSES = {"bounded-distributive": True, "bounded": False}


def cmd_enumerate(args) -> int:
    distributive = _LATTICE_CLASSES[args.lattice]
    try:
        lattices = enumeration.enumerate_lattices(args.k, distributive)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.lattice_id is not None:
        if not 1 <= args.lattice_id <= len(lattices):
            raise UsageError(f"--lattice-id must be in [1, {len(lattices)}]")
        lattices = [lattices[args.lattice_id - 1]]
    if args.complement is None:
        out = lattices
    else:
        try:
            cls = enumeration.normalize_class(args.complement)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out = [lat.with_comp(n) for lat in lattices for n in enumeration.iter_complements(lat, cls)]
    if args.out:
        Path(args.out).write_text(emit_catalog(out) + "\n", encoding="utf-8")
    if args.csv:
        Path(args.csv).write_text(enumeration.catalog_csv(out), encoding="utf-8")
    if args.pretty:
        print(f"{len(out)} algebras")
        for i, a in enumerate(out, start=1):
            print(f"  {i:>3}  {a}")
    else:
        print(len(out))
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = _load_algebra(args.a), _load_algebra(args.b)
    if a.k != b.k:
        raise UsageError(f"size mismatch: {a.k} vs {b.k}")
    found = morphism.find_isomorphisms(a, b, fix_bounds=not args.all_permutations)
    report = morphism.morphisms_report(found)
    text = "\n".join(f"{m['kind']}: {m['map']}" for m in report) or "no isomorphism"
    _emit({"morphisms": report}, text, args)
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    algebras = _load_many(args.path)
    try:
        classes = morphism.iso_classes(algebras, fix_bounds=not args.all_permutations)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    one_based = [[i + 1 for i in group] for group in classes]
    text = "\n".join("{" + ", ".join(f"#{i}" for i in g) + "}" for g in one_based)
    _emit({"count": len(one_based), "classes": one_based}, f"{len(one_based)} classes\n{text}", args)
    return EXIT_OK


def cmd_product(args) -> int:
    a, b = _load_algebra(args.a), _load_algebra(args.b)
    try:
        out = prodec.product(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = algebra_to_doc(out)
    if args.out:
        Path(args.out).write_text(json.dumps(doc) + "\n", encoding="utf-8")
    _emit(doc, str(out), args)
    return EXIT_OK


def _factor_sizes(k: int, args) -> list[tuple[int, int]]:
    if args.auto:
        return [(p, k // p) for p in range(2, k) if k % p == 0 and k // p >= 2]
    if args.p is None or args.q is None:
        raise UsageError("give --p and --q, or --auto")
    if args.p * args.q != k or args.p < 2 or args.q < 2:
        raise UsageError(f"--p {args.p} --q {args.q} does not factor k = {k}")
    return [(args.p, args.q)]


def cmd_decompose(args) -> int:
    a = _load_algebra(args.path)
    sizes = _factor_sizes(a.k, args)
    doc: dict = {"decomposable": False, "p": args.p, "q": args.q, "factors": []}
    for p, q in sizes:
        if args.up_to_iso:
            hit = None
            for t in morphism.bounds_fixing_permutations(a.k):
                factors = prodec.decompose(morphism.relabel(a, t), p, q)
                if factors is not None:
                    hit = (t, factors)
                    break
        else:
            factors = prodec.decompose(a, p, q)
            hit = None if factors is None else (None, factors)
        if hit is not None:
            t, (a1, a2) = hit
            doc = {"decomposable": True, "p": p, "q": q, "factors": [algebra_to_doc(a1), algebra_to_doc(a2)]}
            if t is not None:
                doc["relabeling"] = str(t)
            break
    if not doc["decomposable"]:
        if args.pretty:
            print("not decomposable")
        else:
            print(json.dumps(doc))
        print("not decomposable", file=sys.stderr)
        return EXIT_NEGATIVE
    text = f"decomposable as {doc['p']} x {doc['q']}"
    if "relabeling" in doc:
        text += f" after relabeling {doc['relabeling']}"
    text += "".join(f"\n  factor {i}: k={f['k']} {json.dumps(f['ops'])}" for i, f in enumerate(doc["factors"], 1))
    _emit(doc, text, args)
    return EXIT_OK


def _load_function(path: str) -> tuple[LogicalMatrix, int]:
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: malformed JSON: {exc.msg}") from None
    for field in ("k", "arity", "table"):
        if not isinstance(doc, dict) or field not in doc:
            raise InputError(f"{path}: missing field '{field}'")
    k, s, table = doc["k"], doc["arity"], doc["table"]
    if not (isinstance(k, int) and isinstance(s, int) and k >= 2 and s >= 1):
        raise InputError(f"{path}: 'k' must be >= 2 and 'arity' >= 1")
    if not isinstance(table, list) or len(table) != k ** s:
        raise InputError(f"{path}: 'table' must have k^arity = {k ** s} entries")
    try:
        return LogicalMatrix(k, tuple(table)), s
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: table: {exc}") from None


def cmd_synthesize(args) -> int:
    f, s = _load_function(args.path)
    expr = unigen.synthesize(f, s)
    if args.expand:
        expr = unigen.expand_words(expr)
    print(unigen.to_sexpr(expr))
    return EXIT_OK


def cmd_stp(args) -> int:
    try:
        if args.op in ("mul", "kron"):
            if len(args.operands) < 2:
                raise UsageError(f"{args.op} needs at least two matrices")
            mats = [parse_delta(t) for t in args.operands]
            if args.op == "mul":
                out = stp_chain(*mats)
            else:
                out = mats[0]
                for m in mats[1:]:
                    out = kron(out, m)
        else:
            nums = [int(t) for t in args.operands]
            if args.op == "swap":
                if len(nums) != 2:
                    raise UsageError("swap needs m and n")
                out = swap_matrix(*nums)
            else:
                if len(nums) != 1:
                    raise UsageError("pr needs k")
                out = power_reducing(nums[0])
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(out)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output instead of JSON")
    common.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS,
                        help="cross-check every matrix verdict against brute force")

    parser = _Parser(prog="btk", description="Boolean-type algebras via semi-tensor products.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="classify one algebra file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="catalog lattices or algebras")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lattice", choices=sorted(_LATTICE_CLASSES), default="bounded-distributive")
    p.add_argument("--complement", metavar="CLASS", help="free, dic, de-morgan, kleene, pseudo, stone, boolean")
    p.add_argument("--lattice-id", type=int, help="restrict to the n-th lattice (1-based)")
    p.add_argument("--out", help="write the catalog as a JSON array")
    p.add_argument("--csv", help="write per-algebra flags as CSV")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", parents=[common], help="isomorphisms between two algebras")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--all-permutations", action="store_true", help="do not require bounds to be fixed")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("classify", parents=[common], help="isomorphism classes of a catalog file or directory")
    p.add_argument("path")
    p.add_argument("--all-permutations", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("product", parents=[common], help="product of two algebras")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("decompose", parents=[common], help="split into two factors")
    p.add_argument("path")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--auto", action="store_true", help="try every divisor pair")
    p.add_argument("--up-to-iso", action="store_true", help="also try bounds-fixing relabelings")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("synthesize", parents=[common], help="term for a finite operation")
    p.add_argument("path", help='JSON {"k": .., "arity": .., "table": [..]}')
    p.add_argument("--expand", action="store_true", help="write unary maps as generator words")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("stp", parents=[common], help="matrix calculator on delta notation")
    p.add_argument("op", choices=("mul", "kron", "swap", "pr"))
    p.add_argument("operands", nargs="+")
    p.set_defaults(func=cmd_stp)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.pretty = getattr(args, "pretty", False)
    previous = config.oracle_enabled()
    if getattr(args, "oracle", False):
        config.set_oracle(True)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"btk: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UsageError as exc:
        print(f"btk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except config.OracleMismatch as exc:
        print(f"btk: internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        config.set_oracle(previous)


if __name__ == "__main__":
    sys.exit(main())
