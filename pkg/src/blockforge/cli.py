"""Command line interface.

Exit codes: 0 when every requested verdict comes out as expected
(including failures the catalog marks as expected), 1 when any verdict
is unexpected, 2 for usage or parse errors.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from .arith import is_prime
from .blocks import block_data
from .chartab import character_table
from .errors import DomainError, GroupFileError
from .groupfile import parse_group_file
from .perms import format_perm
from .report import KINDS, build_report, collect_verdicts, to_json, to_text

VERIFY_KINDS = KINDS + ("all",)


class UsageError(Exception):
    pass


def resolve_group(spec):
    """A group argument is a catalog reference or a file path.

    Returns (group, display name, catalog entry or None).
    """
    if spec.startswith("catalog:"):
        ent = catalog.entry(spec[len("catalog:") :])
        return ent.load(), ent.name, ent
    try:
        ent = catalog.entry(spec)
    except DomainError:
        ent = None
    if ent is not None:
        return ent.load(), ent.name, ent
    path = Path(spec)
    if not path.exists():
        raise UsageError(
            f"unknown group {spec!r}: not a catalog name and not a file"
        )
    G = parse_group_file(path)
    return G, G.name, None


def _require_prime(value):
    if value is None:
        raise UsageError("this command needs a prime (-p)")
    if not is_prime(value):
        raise UsageError(f"{value} is not a prime")
    return value


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def run_table(args):
    G, name, _ = resolve_group(args.group)
    table = character_table(G)
    classes = table.classes
    if args.format == "json":
        payload = {
            "group": name,
            "order": G.order(),
            "exponent": table.exponent,
            "classes": [
                {
                    "index": c.index,
                    "size": c.size,
                    "element_order": c.element_order,
                    "representative": format_perm(c.representative),
                }
                for c in classes
            ],
            "irreducibles": [
                [str(v) for v in chi.values] for chi in table.irreducibles
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    headers = ["", *(str(c.index) for c in classes)]
    rows = [
        ["size", *(str(c.size) for c in classes)],
        ["order", *(str(c.element_order) for c in classes)],
        ["rep", *(format_perm(c.representative) for c in classes)],
    ]
    for i, chi in enumerate(table.irreducibles):
        rows.append([f"chi{i}", *(str(v) for v in chi.values)])
    widths = [
        max(len(r[col]) for r in [headers, *rows])
        for col in range(len(headers))
    ]
    lines = [f"group {name}  order {G.order()}  exponent {table.exponent}"]
    for row in [headers, *rows]:
        lines.append(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def run_blocks(args):
    G, name, _ = resolve_group(args.group)
    p = _require_prime(args.prime)
    bs = block_data(G, p)
    if args.format == "json":
        payload = {
            "group": name,
            "order": G.order(),
            "prime": p,
            "blocks": [
                {
                    "id": B.index,
                    "characters": list(B.char_indices),
                    "degrees": list(B.degrees()),
                    "defect": B.defect,
                    "dim": B.dim,
                    "heights": list(B.heights),
                    "defect_group_order": p**B.defect,
                }
                for B in bs.blocks
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [f"group {name}  order {G.order()}  prime {p}  blocks {len(bs.blocks)}"]
    for B in bs.blocks:
        degrees = ",".join(str(d) for d in B.degrees())
        chars = ",".join(str(i) for i in B.char_indices)
        lines.append(
            f"block {B.index}: defect {B.defect}  dim {B.dim}"
            f"  degrees [{degrees}]  characters [{chars}]"
            f"  defect group order {p**B.defect}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def run_catalog(args):
    lines = []
    for ent in catalog.entries():
        G = ent.load()
        primes = ",".join(str(p) for p in ent.primes)
        line = (
            f"{ent.name:10s} order {ent.order:4d}  degree {G.degree}"
            f"  primes {primes}"
        )
        tags = [
            f"{p}:{','.join(kinds)}"
            for p, kinds in sorted(ent.expected_fail.items())
        ]
        if tags:
            line += f"  expected-fail {' '.join(tags)}"
        lines.append(line)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _verify_jobs(args, kinds):
    """(group, name, prime, kinds, fixed, entry) tuples to verify."""
    jobs = []
    if args.group is not None:
        G, name, ent = resolve_group(args.group)
        p = _require_prime(args.prime)
        fixed = catalog.navarro_fixed(name, p) if ent else []
        jobs.append((G, name, p, kinds, fixed, ent))
        return jobs
    if args.prime is not None:
        raise UsageError("a prime filter needs an explicit group")
    for ent in catalog.entries():
        G = ent.load()
        for p in ent.primes:
            fixed = catalog.navarro_fixed(ent.name, p)
            jobs.append((G, ent.name, p, kinds, fixed, ent))
        if "navarro" in kinds:
            for p in catalog.navarro_extra_primes(ent.name):
                fixed = catalog.navarro_fixed(ent.name, p)
                jobs.append((G, ent.name, p, ("navarro",), fixed, ent))
    return jobs


def run_verify(args):
    kinds = KINDS if args.kind == "all" else (args.kind,)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("BLOCKFORGE_SEED", "0"))
    jobs = _verify_jobs(args, kinds)
    reports = []
    unexpected = []
    for G, name, p, job_kinds, fixed, ent in jobs:
        report = build_report(
            G,
            p,
            name=name,
            seed=seed,
            kinds=job_kinds,
            navarro_fixed=fixed,
            timings=args.timings,
        )
        reports.append(report)
        verdicts = collect_verdicts(report)
        expected_fail = ent.expected_failures(p) if ent else ()
        for kind in job_kinds:
            if kind not in verdicts:
                continue
            expected = "fail" if kind in expected_fail else "pass"
            if verdicts[kind] != expected:
                unexpected.append(
                    {
                        "group": name,
                        "prime": p,
                        "kind": kind,
                        "verdict": verdicts[kind],
                        "expected": expected,
                    }
                )
    if args.format == "json":
        payload = {"reports": reports, "unexpected": unexpected}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        chunks = [to_text(r) for r in reports]
        for u in unexpected:
            chunks.append(
                f"unexpected: {u['group']} p={u['prime']} {u['kind']}:"
                f" {u['verdict']} (expected {u['expected']})\n"
            )
        if unexpected:
            plural = "s" if len(unexpected) != 1 else ""
            chunks.append(
                f"overall: {len(unexpected)} unexpected verdict{plural}\n"
            )
        else:
            chunks.append("overall: all verdicts as expected\n")
        _emit("\n".join(chunks), args.out)
    return 1 if unexpected else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="blockforge",
        description="Exact block data and degree-divisibility checks"
        " for finite permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prime=True):
        p.add_argument(
            "--format", choices=("text", "json"), default="text"
        )
        p.add_argument("--out", help="write output to this file")
        if prime:
            p.add_argument("-p", "--prime", type=int)

    t = sub.add_parser("table", help="print the ordinary character table")
    t.add_argument("group")
    common(t, prime=False)
    t.set_defaults(func=run_table)

    b = sub.add_parser("blocks", help="print block data at a prime")
    b.add_argument("group")
    common(b)
    b.set_defaults(func=run_blocks)

    v = sub.add_parser("verify", help="run verifiers")
    v.add_argument("kind", choices=VERIFY_KINDS)
    v.add_argument("group", nargs="?")
    common(v)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--timings", action="store_true")
    v.set_defaults(func=run_verify)

    c = sub.add_parser("catalog", help="list bundled groups")
    c.add_argument("action", choices=("list",))
    common(c, prime=False)
    c.set_defaults(func=run_catalog)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GroupFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
