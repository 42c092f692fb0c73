"""Assembly of one verification report per group and prime, with JSON
and plain-text renderings that carry the same verdicts."""

import json
import time

from .correspond import (
    block_section,
    fong_block_instances,
    fong_reynolds_instances,
    glauberman_instances,
    navarro_instances,
    question35_instances,
    regular_covering_instances,
)
from .permgroup import is_p_solvable

KINDS = ("am", "dim", "glauberman", "navarro", "regular", "fong", "q35")


def build_report(
    G, p, name=None, seed=0, kinds=KINDS, navarro_fixed=(), timings=False
):
    """All requested verifier records for one group at one prime.

    Unrequested kinds come back as empty lists so the schema is stable.
    elapsed_ms stays null unless timings are requested, keeping repeat
    runs byte-identical.
    """
    start = time.monotonic()
    name = name if name is not None else (G.name or f"degree-{G.degree}")
    blocks = []
    if "am" in kinds or "dim" in kinds:
        blocks, _, _ = block_section(G, p)
    props = {
        "glauberman": (
            glauberman_instances(G, p, name) if "glauberman" in kinds else []
        ),
        "navarro": (
            navarro_instances(G, p, name, seed, navarro_fixed)
            if "navarro" in kinds
            else []
        ),
        "regular_covering": (
            regular_covering_instances(G, p, name)
            if "regular" in kinds
            else []
        ),
        "fong_block": (
            fong_block_instances(G, p, name) if "fong" in kinds else []
        ),
        "fong_reynolds": (
            fong_reynolds_instances(G, p, name) if "fong" in kinds else []
        ),
        "question35": (
            question35_instances(G, p, name) if "q35" in kinds else []
        ),
    }
    return {
        "group": name,
        "order": G.order(),
        "prime": p,
        "p_solvable": is_p_solvable(G, p),
        "blocks": blocks,
        "propositions": props,
        "seed": seed,
        "elapsed_ms": (
            int((time.monotonic() - start) * 1000) if timings else None
        ),
    }


def collect_verdicts(report):
    """Pass/fail per verifier kind, derived from the records.

    Hypothesis-not-met rows never fail a kind, and the exploratory
    question35 search never produces a verdict at all.
    """
    out = {}
    blocks = report["blocks"]
    if blocks:
        matched = all(
            "irr0_matching" in b and "ibr0_matching" in b for b in blocks
        )
        out["am"] = "pass" if matched else "fail"
        dims = all(
            b["dim_divides"] and b["dim_p_part_divides"] for b in blocks
        )
        out["dim"] = "pass" if dims else "fail"
    props = report["propositions"]
    groups = (
        ("glauberman", ("glauberman",)),
        ("navarro", ("navarro",)),
        ("regular", ("regular_covering",)),
        ("fong", ("fong_block", "fong_reynolds")),
    )
    for kind, keys in groups:
        records = [r for key in keys for r in props[key]]
        if records:
            failed = any(r["verdict"] == "fail" for r in records)
            out[kind] = "fail" if failed else "pass"
    return out


def to_json(report):
    return json.dumps(report, indent=2) + "\n"


def _degs(values):
    return "[" + ",".join(str(v) for v in values) + "]"


def _matching_line(label, rec, prefix):
    left = rec.get(f"{prefix}_left")
    right = rec.get(f"{prefix}_right")
    if left is None:
        reason = rec.get(f"{prefix}_unavailable", "unavailable")
        return f"  {label}: unavailable ({reason})"
    head = f"  {label}: {_degs(left)} -> {_degs(right)}"
    if f"{prefix}_matching" in rec:
        pairs = " ".join(f"{a}|{b}" for a, b in rec[f"{prefix}_matching"])
        return f"{head}  matched {pairs}"
    v = rec[f"{prefix}_violator"]
    return f"{head}  violator {v['side']} {_degs(v['degrees'])} ({v['reason']})"


def _block_lines(rec):
    yield (
        f"block {rec['id']}: degrees {_degs(rec['degrees'])}"
        f"  defect {rec['defect']}"
        f"  defect group order {rec['defect_group_order']}"
    )
    c = rec["correspondent"]
    yield (
        f"  correspondent: group order {c['group_order']}"
        f"  block {c['id']}  degrees {_degs(c['degrees'])}"
        f"  defect {c['defect']}"
    )
    yield _matching_line("height-zero ordinary", rec, "irr0")
    yield _matching_line("height-zero Brauer", rec, "ibr0")
    divides = "yes" if rec["dim_divides"] else "no"
    p_part = "yes" if rec["dim_p_part_divides"] else "no"
    yield (
        f"  dims {rec['dim_B']} vs {rec['dim_b']}"
        f"  divides {divides}  p-part divides {p_part}"
    )


def _glauberman_line(r):
    if not r["hypothesis_met"]:
        return f"  theta degree {r['theta_degree']}: hypothesis not met ({r['reason']})"
    parts = [
        f"  theta degree {r['theta_degree']}",
        f"ordinary {_degs(r['ordinary_left'])} -> {_degs(r['ordinary_right'])}",
    ]
    if "brauer_left" in r:
        parts.append(
            f"brauer {_degs(r['brauer_left'])} -> {_degs(r['brauer_right'])}"
        )
    return "  ".join(parts) + f": {r['verdict']}"


def _navarro_line(r):
    if r["kind"] == "sampled":
        return (
            f"  sampled {r['pairs_drawn']} pairs"
            f"  {r['pairs_hypothesis_met']} met"
            f"  {r['violations']} violations: {r['verdict']}"
        )
    return (
        f"  fixed |U|={r['subgroup_order']} |P|={r['p_subgroup_order']}"
        f"  indices {r['index_in_subgroup']} vs {r['index_in_group']}"
        f"  divides {'yes' if r['divides'] else 'no'}: {r['verdict']}"
    )


def _regular_line(r):
    n = "-" if r["n"] is None else r["n"]
    return (
        f"  N order {r['normal_order']} block {r['block']}"
        f"  covered {r['covered_blocks']}  n={n}: {r['verdict']}"
    )


def _fong_block_line(r):
    return (
        f"  theta degree {r['theta_degree']}"
        f"  over {r['characters_over']} characters: {r['verdict']}"
    )


def _fong_reynolds_line(r):
    return (
        f"  block {r['block']}  theta degree {r['theta_degree']}"
        f"  inertia index {r['inertia_index']}: {r['verdict']}"
    )


def _question35_line(r):
    if r["result"] == "skipped":
        return f"  skipped ({r['reason']})"
    if r["result"] == "found":
        return (
            f"  block {r['block']}: found"
            f" ({r['ordinary_matchings']} x {r['brauer_matchings']})"
        )
    detail = f" ({r['reason']})" if "reason" in r else ""
    return f"  block {r['block']}: {r['result']}{detail}"


def to_text(report):
    solvable = "yes" if report["p_solvable"] else "no"
    lines = [
        f"group {report['group']}  order {report['order']}"
        f"  prime {report['prime']}  p-solvable {solvable}"
        f"  seed {report['seed']}"
    ]
    if report["elapsed_ms"] is not None:
        lines.append(f"elapsed {report['elapsed_ms']} ms")
    for rec in report["blocks"]:
        lines.extend(_block_lines(rec))
    sections = (
        ("glauberman", "glauberman", _glauberman_line),
        ("navarro", "navarro", _navarro_line),
        ("regular_covering", "regular covering", _regular_line),
        ("fong_block", "fong block", _fong_block_line),
        ("fong_reynolds", "fong-reynolds", _fong_reynolds_line),
        ("question35", "question 3.5", _question35_line),
    )
    props = report["propositions"]
    for key, title, render in sections:
        if props[key]:
            lines.append(f"{title}:")
            lines.extend(render(r) for r in props[key])
    return "\n".join(lines) + "\n"
