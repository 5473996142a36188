"""Command-line front end.

Every computation in the library is exposed as a subcommand, with
markdown / TSV / JSON / DOT emitters and byte-level snapshot testing
against the golden data shipped in the package (overridable with the
ORBIQUINT_GOLDEN environment variable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import classify, covergraphs, parity, recillas, resolve
from .orbiscroll import coarse_singularities, frac, frac_str
from .resolve import DIAGRAM_ITEMS


def _golden_dir() -> Path:
    env = os.environ.get("ORBIQUINT_GOLDEN")
    if env:
        return Path(env)
    return Path(__file__).parent / "golden"


# ---------------------------------------------------------------------------
# Emitters


def _md_table(headers: list[str], rows: list[list[str]]) -> str:
    out = ["| " + " | ".join(headers) + " |",
           "| " + " | ".join("---" for _ in headers) + " |"]
    out.extend("| " + " | ".join(r) + " |" for r in rows)
    return "\n".join(out) + "\n"


def _tsv_table(headers: list[str], rows: list[list[str]]) -> str:
    return "\n".join("\t".join(r) for r in [headers] + rows) + "\n"


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# Golden artifact generators (all deterministic, byte-for-byte)


def gen_table1_tsv() -> str:
    headers = ["row", "type", "r", "v1", "v2", "m1", "m2", "g1", "g2",
               "disc1", "disc2"]
    rows = [
        [str(r.row), str(r.graph_type), str(r.r), frac_str(r.v1),
         frac_str(r.v2), frac_str(r.m1), frac_str(r.m2), str(r.g1),
         str(r.g2), "*" if r.disc1 else "-", "*" if r.disc2 else "-"]
        for r in classify.table1()
    ]
    return _tsv_table(headers, rows)


def _type7_rows_tsv(rows, genera_headers) -> str:
    headers = ["row", "C1", "C2", "p"] + genera_headers + ["divisor"]
    out = []
    for k, row in enumerate(rows, 1):
        out.append(
            [str(k), " or ".join(row.c1), row.c2,
             "-" if row.c2_p is None else str(row.c2_p)]
            + [str(g) for g in row.tail_genera]
            + [str(row.theorem_index)]
        )
    return _tsv_table(headers, out)


def gen_table2_tsv() -> str:
    return _type7_rows_tsv(classify.TABLE2_ROWS, ["g_tail1", "g_tail2"])


def gen_table3_tsv() -> str:
    return _type7_rows_tsv(classify.TABLE3_ROWS, ["g_tail"])


def _desc_dict(desc: classify.StableCurveDesc) -> dict:
    return {
        "vertices": [
            {
                "genus": v.genus,
                "tags": sorted(t.value for t in v.tags),
                "marks": sorted(m.value for m in v.marks),
            }
            for v in desc.vertices
        ],
        "edges": [list(e) for e in desc.edges],
    }


def gen_theorem_json() -> str:
    records = [
        {
            "index": rec.theorem_index,
            "stable_curve": _desc_dict(rec.desc),
            "pa": classify.stable_pa(rec.desc),
            "sources": list(rec.sources),
        }
        for rec in classify.theorem_divisors()
    ]
    return _json_dump(records)


def _model_dict(e: classify.LocalModelEntry) -> dict:
    return {
        "family": e.family,
        "label": e.label,
        "tag": e.tag,
        "p": e.param,
        "components": [
            {"genus": c.genus, "top": list(c.top), "bottom": list(c.bottom),
             "side": list(c.side)}
            for c in e.components
        ],
        "sigmaA2": None if e.sigmaA2 is None else frac_str(e.sigmaA2),
        "sigmaB2": None if e.sigmaB2 is None else frac_str(e.sigmaB2),
        "provenance": {
            "l": e.provenance.l, "n": e.provenance.n, "m": e.provenance.m,
            "sings": [f"A{k}" for k in e.provenance.sings],
        },
    }


def gen_c1_models_json() -> str:
    return _json_dump(
        {str(i): [_model_dict(e) for e in classify.enumerate_c1_models(i)]
         for i in range(1, 5)}
    )


def gen_c2_models_json() -> str:
    return _json_dump(
        {str(j): [_model_dict(e) for e in classify.enumerate_c2_models(j)]
         for j in range(1, 10)}
    )


def gen_diagram_txt(item: int) -> str:
    return DIAGRAM_ITEMS[item].contract().to_text()


def golden_artifacts() -> dict[str, Callable[[], str]]:
    arts: dict[str, Callable[[], str]] = {
        "table1.tsv": gen_table1_tsv,
        "table2.tsv": gen_table2_tsv,
        "table3.tsv": gen_table3_tsv,
        "theorem.json": gen_theorem_json,
        "c1_models.json": gen_c1_models_json,
        "c2_models.json": gen_c2_models_json,
    }
    for k in DIAGRAM_ITEMS:
        arts[f"diagrams/item{k:02d}.txt"] = (
            lambda item=k: gen_diagram_txt(item)
        )
    return arts


def verify_golden(root: Path) -> tuple[bool, list[str]]:
    """Recompute every golden artifact and report differences."""
    report: list[str] = []
    ok = True
    for name, gen in sorted(golden_artifacts().items()):
        path = root / name
        if not path.is_file():
            report.append(f"{name}: missing file")
            ok = False
            continue
        expected = gen()
        actual = path.read_text()
        if actual == expected:
            report.append(f"{name}: ok")
            continue
        ok = False
        report.append(f"{name}: MISMATCH")
        exp_lines, act_lines = expected.splitlines(), actual.splitlines()
        headers = exp_lines[0].split("\t") if name.endswith(".tsv") else None
        for ln, (e, a) in enumerate(zip(exp_lines, act_lines), 1):
            if e == a:
                continue
            if headers:
                ecols, acols = e.split("\t"), a.split("\t")
                for ci, (ec, ac) in enumerate(zip(ecols, acols)):
                    if ec != ac:
                        report.append(
                            f"{name}: line {ln} column {headers[ci]}: "
                            f"expected {ec!r}, found {ac!r}"
                        )
            else:
                report.append(
                    f"{name}: line {ln}: expected {e!r}, found {a!r}"
                )
        if len(exp_lines) != len(act_lines):
            report.append(
                f"{name}: expected {len(exp_lines)} lines, "
                f"found {len(act_lines)}"
            )
    return ok, report


# ---------------------------------------------------------------------------
# Subcommands


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_table1(args) -> int:
    if args.format == "tsv":
        _emit(args, gen_table1_tsv())
    elif args.format == "md":
        headers = ["row", "type", "r", "v1", "v2", "m1", "m2", "g1", "g2",
                   "disc1", "disc2"]
        rows = [line.split("\t") for line in gen_table1_tsv().splitlines()[1:]]
        _emit(args, _md_table(headers, rows))
    else:  # json
        _emit(args, _json_dump([
            {
                "row": r.row, "type": r.graph_type, "r": r.r,
                "v1": frac_str(r.v1), "v2": frac_str(r.v2),
                "m1": frac_str(r.m1), "m2": frac_str(r.m2),
                "g1": r.g1, "g2": r.g2, "disc1": r.disc1, "disc2": r.disc2,
            }
            for r in classify.table1()
        ]))
    return 0


def cmd_boundary_graphs(args) -> int:
    families = covergraphs.enumerate_boundary_types(args.d)
    if args.format == "json":
        _emit(args, _json_dump([
            {
                "type": fam.type_index,
                "shape": fam.shape.name,
                "param_ranges": [list(r) for r in fam.param_ranges],
                "count": len(fam.graphs),
                "graphs": [g.to_json_dict() for g in fam.graphs],
            }
            for fam in families
        ]))
    elif args.format == "dot":
        chunks = []
        for fam in families:
            for g in fam.graphs:
                chunks.append(g.to_dot())
        _emit(args, "\n".join(chunks))
    else:  # md
        headers = ["type", "shape", "param ranges", "graphs"]
        rows = [
            [str(fam.type_index), fam.shape.name,
             "; ".join(f"{lo}..{hi}" for lo, hi in fam.param_ranges) or "-",
             str(len(fam.graphs))]
            for fam in families
        ]
        _emit(args, _md_table(headers, rows))
    return 0


def cmd_resolve(args) -> int:
    chain = resolve.hj_expand(args.r, args.q)
    if args.format == "json":
        _emit(args, _json_dump(
            {"r": args.r, "q": args.q, "chain": list(chain.ints)}
        ))
    else:
        _emit(args, "[" + ",".join(map(str, chain.ints)) + "]\n")
    return 0


def cmd_coarse(args) -> int:
    a = frac(args.a)
    cs = coarse_singularities(args.r, a)
    data = {
        "r": args.r,
        "a": frac_str(a),
        "at_sigma": {"r": cs.at_sigma.r, "q": cs.at_sigma.q},
        "at_tau": {"r": cs.at_tau.r, "q": cs.at_tau.q},
        "fiber_multiplicity": cs.fiber_multiplicity,
    }
    if args.format == "json":
        _emit(args, _json_dump(data))
    else:
        _emit(
            args,
            f"coarse F_{frac_str(a)} over P^1({args.r}-th root of 0): "
            f"1/{cs.at_sigma.r}(1,{cs.at_sigma.q}) at sigma(0), "
            f"1/{cs.at_tau.r}(1,{cs.at_tau.q}) at tau(0), "
            f"fiber multiplicity {cs.fiber_multiplicity}\n",
        )
    return 0


def cmd_diagrams(args) -> int:
    if args.item not in DIAGRAM_ITEMS:
        raise resolve.ResolveError(
            f"no diagram item {args.item}; choose 1..{len(DIAGRAM_ITEMS)}"
        )
    it = DIAGRAM_ITEMS[args.item]
    config = it.build() if args.stage == "left" else it.contract()
    if args.format == "dot":
        _emit(args, config.to_dot())
    elif args.format == "json":
        _emit(args, _json_dump({
            "item": args.item, "r": it.r, "a": frac_str(it.a),
            "stage": args.stage,
            "vertices": [
                {"id": v.id, "self_int": v.self_int, "role": v.role.value}
                for v in config.vertices
            ],
            "edges": [
                {"v": e.v, "w": e.w, "mult": e.mult} for e in config.edges
            ],
        }))
    else:
        _emit(args, config.to_text())
    return 0


def cmd_recillas(args) -> int:
    perms = [recillas.parse_perm(t.strip()) for t in args.monodromy.split(";")]
    data = recillas.tetragonal_to_trigonal(perms)
    entries = []
    for p, tri, dbl in zip(perms, data.trigonal, data.double):
        c = recillas.fix_counts(p)
        entries.append({
            "perm": str(p),
            "fix4": c.fix4, "fix3": c.fix3, "fix6": c.fix6,
            "character_identity": recillas.recillas_character_check(p),
            "trigonal": str(tri),
            "double": str(dbl),
        })
    if args.format == "json":
        _emit(args, _json_dump(entries))
    else:
        headers = ["perm", "fix4", "fix3", "fix6", "1+fix6=fix3+fix4",
                   "trigonal", "double"]
        rows = [
            [e["perm"], str(e["fix4"]), str(e["fix3"]), str(e["fix6"]),
             "ok" if e["character_identity"] else "FAIL",
             e["trigonal"], e["double"]]
            for e in entries
        ]
        _emit(args, _md_table(headers, rows))
    return 0


def cmd_parity(args) -> int:
    pieces = [frac(t.strip()) for t in args.pieces.split(",") if t.strip()]
    sc = parity.SectionClass(pieces)
    p = parity.section_parity(sc)
    if args.format == "json":
        _emit(args, _json_dump({
            "pieces": [frac_str(x) for x in sc.pieces],
            "total": frac_str(sc.total),
            "parity": p.value,
            "ambient": p.ambient,
        }))
    else:
        _emit(args, f"total {frac_str(sc.total)}: {p.value} "
                    f"(degeneration of {p.ambient})\n")
    return 0


_CLASSIFY_DISPATCH = {
    "1-5": classify.classify_type_1_5,
    "6": classify.classify_type_6,
    "7": classify.classify_type_7,
    "8": classify.classify_type_8,
    "all": classify.theorem_divisors,
}


def _desc_str(desc: classify.StableCurveDesc) -> str:
    parts = []
    for v in desc.vertices:
        bits = [f"genus {v.genus}"]
        bits.extend(sorted(t.value for t in v.tags))
        marks = sorted(m.value for m in v.marks)
        if marks:
            bits.append("[" + ",".join(marks) + "]")
        parts.append(" ".join(bits))
    return " + ".join(parts) + f" ; edges {len(desc.edges)}"


def cmd_classify(args) -> int:
    records = _CLASSIFY_DISPATCH[args.type]()
    if args.format == "json":
        _emit(args, _json_dump([
            {
                "index": r.theorem_index,
                "stable_curve": _desc_dict(r.desc),
                "sources": list(r.sources),
            }
            for r in records
        ]))
    elif args.format == "tsv":
        headers = ["index", "description", "sources"]
        rows = [[str(r.theorem_index), _desc_str(r.desc),
                 " / ".join(r.sources)] for r in records]
        _emit(args, _tsv_table(headers, rows))
    else:
        headers = ["index", "stable curve", "sources"]
        rows = [[str(r.theorem_index), _desc_str(r.desc),
                 " / ".join(r.sources)] for r in records]
        _emit(args, _md_table(headers, rows))
    return 0


def cmd_genus(args) -> int:
    pa = resolve.pa_hirzebruch(args.l, args.n, args.m)
    sings = [int(t) for t in args.ak.split(",") if t.strip()] if args.ak else []
    g = resolve.geometric_genus(pa, sings)
    if args.format == "json":
        _emit(args, _json_dump({
            "l": args.l, "n": args.n, "m": args.m,
            "pa": pa, "sings": [f"A{k}" for k in sings], "genus": g,
        }))
    else:
        _emit(args, f"pa {pa}, geometric genus {g}\n")
    return 0


def cmd_verify_golden(args) -> int:
    root = Path(args.golden) if args.golden else _golden_dir()
    if not root.is_dir():
        raise FileNotFoundError(f"golden directory not found: {root}")
    ok, report = verify_golden(root)
    if args.format == "json":
        _emit(args, _json_dump({"ok": ok, "report": report}))
    else:
        _emit(args, "\n".join(report) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="orbiquint",
        description="Exact boundary arithmetic for the plane-quintic locus.",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add(name, fn, formats, default_format):
        p = sub.add_parser(name)
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.set_defaults(fn=fn)
        return p

    add("table1", cmd_table1, ["md", "tsv", "json"], "md")

    p = add("boundary-graphs", cmd_boundary_graphs, ["md", "json", "dot"], "md")
    p.add_argument("--d", type=int, required=True)

    p = add("resolve", cmd_resolve, ["md", "json"], "md")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("coarse", cmd_coarse, ["md", "json"], "md")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", required=True, help="twist a as p/q")

    p = add("diagrams", cmd_diagrams, ["txt", "dot", "json"], "txt")
    p.add_argument("--item", type=int, required=True)
    p.add_argument("--stage", choices=["left", "right"], default="right")

    p = add("recillas", cmd_recillas, ["md", "json"], "md")
    p.add_argument(
        "--monodromy", required=True,
        help="semicolon-separated cycle notation, e.g. '(1 2 3);(1 2)(3 4)'",
    )

    p = add("parity", cmd_parity, ["md", "json"], "md")
    p.add_argument("--pieces", required=True,
                   help="comma-separated half-integers, e.g. '1,0,5/2'")

    p = add("classify", cmd_classify, ["md", "tsv", "json"], "md")
    p.add_argument("--type", choices=sorted(_CLASSIFY_DISPATCH), default="all")

    p = add("genus", cmd_genus, ["md", "json"], "md")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ak", help="comma-separated A_k indices, e.g. '2,4'")

    p = add("verify-golden", cmd_verify_golden, ["md", "json"], "md")
    p.add_argument("--golden", help="golden data directory override")

    return ap


_DOMAIN_ERRORS = (ValueError, KeyError, FileNotFoundError, ZeroDivisionError)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _DOMAIN_ERRORS as exc:
        msg = str(exc)
        if getattr(args, "format", None) == "json":
            sys.stderr.write(_json_dump(
                {"error": {"code": type(exc).__name__, "message": msg}}
            ))
        else:
            sys.stderr.write(f"error ({type(exc).__name__}): {msg}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
