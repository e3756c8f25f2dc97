"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import catalog_names, named_group
from .corpus import ORACLE_MAX, mn_matches_dixon, oracle_checks, run_corpus
from .errors import CayspecError, NTooLarge
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, enumerate_group, read_generator_file
from .partitions import mn_table
from .spectra import analyze, applicable_verdicts, report_dict

MN_MAX = 12


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_group(args) -> FiniteGroup:
    path = args.gens or (args.group if args.group and Path(args.group).is_file() else None)
    if path:
        gens = read_generator_file(path)
        return enumerate_group(gens, cap=args.max_order, label=Path(path).stem)
    if not args.group:
        raise CayspecError("give --group NAME or --gens PATH")
    G = named_group(args.group)
    if G.order > args.max_order:
        raise CayspecError(f"|{G.label}| = {G.order} exceeds --max-order {args.max_order}")
    return G


def _emit(doc: dict, path: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if path:
        Path(path).write_text(text + "\n")
    else:
        print(text)


def cmd_analyze(args) -> int:
    G = _load_group(args)
    a = analyze(G, args.prime)
    verdicts = applicable_verdicts(G, args.prime)
    doc = report_dict(a, {k: v.to_dict() for k, v in verdicts.items()})
    ok = all(v.passed for v in verdicts.values())
    if args.oracle:
        checks = oracle_checks(a)
        doc["verified"] = all(checks.values())
        doc["oracle"] = checks
        ok = ok and doc["verified"]
    rep = a.report
    print(f"{G.label} (order {G.order}), p = {args.prime}")
    print(f"  d_p = {a.profile.d_p}  c_p = {a.profile.c_p}  r_p = {a.profile.r_p}")
    print("  spectrum: " + ", ".join(f"{v}^{m}" for v, m in rep.eigs))
    print(f"  nullity = {rep.nullity}  energy = {rep.energy}  hyperenergetic = {rep.hyperenergetic}")
    print(f"  diameter per component = {rep.diameter}  blocks = {len(a.blocks)}")
    for name, v in verdicts.items():
        print(f"  {name}: {'pass' if v.passed else 'FAIL'}")
    if args.oracle:
        print(f"  oracle: {'pass' if doc['verified'] else 'FAIL'}")
    if args.json:
        _emit(doc, args.json)
    return 0 if ok else 2


def cmd_blocks(args) -> int:
    G = _load_group(args)
    a = analyze(G, args.prime)
    degrees = a.table.degrees
    doc = {
        "group": G.label,
        "prime": args.prime,
        "blocks": [list(b) for b in a.blocks.blocks],
        "degrees": [[degrees[r] for r in b] for b in a.blocks.blocks],
        "principal_block": a.blocks.principal_index,
    }
    print(f"{G.label}, p = {args.prime}: {len(a.blocks)} block(s)")
    for i, b in enumerate(a.blocks.blocks):
        mark = "  (principal)" if i == a.blocks.principal_index else ""
        print(f"  rows {list(b)} degrees {[degrees[r] for r in b]}{mark}")
    if args.json:
        _emit(doc, args.json)
    return 0


def cmd_mn_table(args) -> int:
    n = args.n
    if not 1 <= n <= MN_MAX:
        raise NTooLarge(f"n must be between 1 and {MN_MAX}")
    parts, values = mn_table(n)
    doc = {"n": n, "partitions": [list(p.parts) for p in parts], "values": values}
    _emit(doc, args.json)
    if n <= 6 and not mn_matches_dixon(n):
        print(f"MN table of S{n} disagrees with the computed character table", file=sys.stderr)
        return 2
    return 0


def cmd_corpus(args) -> int:
    rows = run_corpus(args.max_order, oracle_max=args.oracle_max, workers=args.workers)
    width = max([len(r.group) for r in rows] + [5])
    print(f"{'group':<{width}} {'|G|':>5} {'p':>3} {'energy':>7} {'nullity':>7}  result")
    for r in rows:
        prime = "-" if r.prime is None else str(r.prime)
        energy = "" if r.energy is None else str(r.energy)
        nullity = "" if r.nullity is None else str(r.nullity)
        status = "pass" if r.passed else "FAIL " + ",".join(k for k, v in r.checks.items() if not v)
        print(f"{r.group:<{width}} {r.order:>5} {prime:>3} {energy:>7} {nullity:>7}  {status}")
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows)} rows, {failed} failed")
    if args.json:
        doc = [
            {"group": r.group, "order": r.order, "prime": r.prime, "energy": r.energy,
             "nullity": r.nullity, "passed": r.passed, "checks": r.checks}
            for r in rows
        ]
        Path(args.json).write_text(json.dumps(doc, indent=2) + "\n")
    return 0 if failed == 0 else 2


def cmd_catalog(args) -> int:
    for name in catalog_names():
        print(f"{name:<8} {named_group(name).order}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cayspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group_args(p):
        p.add_argument("--group", help="catalog name such as S4, or a generator file")
        p.add_argument("--gens", help="file with one generator per line in cycle notation")
        p.add_argument("--prime", type=int, required=True)
        p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)
        p.add_argument("--json", help="write the JSON report here")

    p = sub.add_parser("analyze", help="spectrum, energy, nullity and theorem checks")
    group_args(p)
    p.add_argument("--oracle", action="store_true", help="cross-check against the adjacency matrix")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("blocks", help="p-block partition of the irreducible characters")
    group_args(p)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("corpus", help="verify every catalog group up to --max-order")
    p.add_argument("--max-order", type=int, default=60)
    p.add_argument("--oracle-max", type=int, default=ORACLE_MAX)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("mn-table", help="Murnaghan-Nakayama character table of S_n as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_mn_table)

    p = sub.add_parser("catalog", help="list catalog groups")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CayspecError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
