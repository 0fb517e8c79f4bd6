"""btlab command line: deterministic JSON or aligned-table reports.

Exit codes: 0 success, 1 verification mismatch (oracle cross-check,
ring-table check or class-count check failed), 2 input error.

Output is byte-identical for identical inputs and seed: orbit, segment,
word and JSON key orders are all canonical, and the verify sweep draws
from the documented splitmix64 stream.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, VerificationError
from .graph_oracle import orbit_summaries
from .invariants import InvariantReport, a_n, invariant_report
from .kraft import enumerate_bt1, kraft_type
from .permutations import Permutation, Signature, parse_permutation
from .rng import SplitMix64
from .sweep import verification_sweep
from .witt import (
    WittVec,
    frobenius,
    negation_polynomials,
    p_multiple,
    product_polynomials,
    ring_iso_table,
    sum_polynomials,
    teichmuller,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def _signature(args) -> Signature:
    return Signature(c=args.c, d=args.d)


def _permutation(args, sig: Signature) -> Permutation:
    perm = parse_permutation(args.perm, degree=args.degree)
    if perm.h != sig.h:
        raise InputError(
            f"permutation degree {perm.h} does not match c+d = {sig.h}"
        )
    return perm


def _report_doc(report: InvariantReport, max_level: int, p: int | None) -> dict:
    doc = {
        "h": report.h,
        "c": report.c,
        "d": report.d,
        "perm": report.perm.one_line(),
    }
    if p is not None:
        doc["p"] = p
    doc["orbits"] = [
        {
            "rep": list(prof.orbit.rep),
            "points": [list(pt) for pt in prof.orbit.points],
            "epsilon": list(prof.eps),
            "circular_level": prof.circular_level,
            "segments": [
                {"start": s.start, "length": s.length, "level": s.level}
                for s in prof.segments
            ],
            "a": [a_n(prof.eps, n) for n in range(1, max_level + 1)],
        }
        for prof in report.profiles
    ]
    doc["gamma"] = list(report.gamma)
    doc["c_exponent"] = list(report.c_exponent)
    if p is not None:
        doc["components"] = [f"{p}^{c}" for c in report.c_exponent]
    doc["isomorphism_number"] = report.isomorphism_number
    doc["specializing_height"] = report.specializing_height
    return doc


def _aligned(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )


def _report_table(doc: dict) -> str:
    lines = [f"perm  {doc['perm']}", f"h={doc['h']} c={doc['c']} d={doc['d']}"]
    rows = [["orbit", "size", "epsilon", "circ", "segments(start:len:level)", "a"]]
    for orb in doc["orbits"]:
        segs = (
            " ".join(f"{s['start']}:{s['length']}:{s['level']}" for s in orb["segments"])
            or "-"
        )
        circ = "-" if orb["circular_level"] is None else str(orb["circular_level"])
        rows.append(
            [
                "(" + ",".join(str(v) for v in orb["rep"]) + ")",
                str(len(orb["points"])),
                "(" + ",".join(str(v) for v in orb["epsilon"]) + ")",
                circ,
                segs,
                "(" + ",".join(str(v) for v in orb["a"]) + ")",
            ]
        )
    lines.append(_aligned(rows))
    table = [["m"], ["gamma"], ["c_exponent"]]
    for m, (g, ce) in enumerate(zip(doc["gamma"], doc["c_exponent"]), start=1):
        table[0].append(str(m))
        table[1].append(str(g))
        table[2].append(str(ce))
    if "components" in doc:
        table.append(["components"] + doc["components"])
    lines.append(_aligned(table))
    lines.append(f"isomorphism_number   {doc['isomorphism_number']}")
    lines.append(f"specializing_height  {doc['specializing_height']}")
    return "\n".join(lines)


def cmd_invariants(args) -> tuple[str, int]:
    _require(args.max_level >= 1, "--max-level must be >= 1")
    sig = _signature(args)
    perm = _permutation(args, sig)
    report = invariant_report(perm, sig, args.max_level)
    doc = _report_doc(report, args.max_level, args.p)
    if args.format == "json":
        return json.dumps(doc, indent=2), 0
    return _report_table(doc), 0


def cmd_oracle(args) -> tuple[str, int]:
    _require(args.level >= 1, "--level must be >= 1")
    sig = _signature(args)
    perm = _permutation(args, sig)
    level = args.level
    report = invariant_report(perm, sig, level)
    doc = _report_doc(report, level, None)
    per_orbit = []
    dimension = 0
    exponent = 0
    for prof, summary in orbit_summaries(perm, sig, level):
        dimension += summary.free_paths
        exponent += sum(c.weight for c in summary.cycles)
        per_orbit.append(
            {
                "rep": list(prof.orbit.rep),
                "free_paths": summary.free_paths,
                "zeroed_vertices": summary.zeroed_vertices,
                "cycles": [[c.length, c.weight] for c in summary.cycles],
            }
        )
    doc["oracle"] = {"dimension": dimension, "exponent": exponent, "per_orbit": per_orbit}
    ok = dimension == report.gamma[level - 1] and exponent == report.c_exponent[level - 1]
    doc["verdict"] = "pass" if ok else "fail"
    if args.format == "json":
        return json.dumps(doc, indent=2), 0 if ok else 1
    lines = [
        _report_table({k: v for k, v in doc.items() if k not in ("oracle", "verdict")}),
        f"oracle dimension  {dimension}",
        f"oracle exponent   {exponent}",
        f"verdict           {doc['verdict']}",
    ]
    return "\n".join(lines), 0 if ok else 1


def cmd_verify(args) -> tuple[str, int]:
    _require(args.samples >= 1, "--samples must be >= 1")
    _require(args.max_h >= 2, "--max-h must be >= 2")
    _require(args.max_level >= 1, "--max-level must be >= 1")
    result = verification_sweep(args.samples, args.max_h, args.max_level, args.seed)
    failures = [
        {
            "perm": chk.perm.one_line(),
            "c": chk.c,
            "d": chk.d,
            "m": chk.mismatch.m,
            "kind": chk.mismatch.kind,
            "formula": chk.mismatch.formula_value,
            "oracle": chk.mismatch.oracle_value,
        }
        for chk in result.failures
    ]
    doc = {
        "samples": args.samples,
        "max_h": args.max_h,
        "max_level": args.max_level,
        "seed": args.seed,
        "failures": failures,
        "verdict": "pass" if result.ok else "fail",
    }
    if args.format == "json":
        return json.dumps(doc, indent=2), 0 if result.ok else 1
    lines = [
        f"samples    {args.samples}",
        f"max_h      {args.max_h}",
        f"max_level  {args.max_level}",
        f"seed       {args.seed}",
        f"failures   {len(failures)}",
    ]
    for f in failures:
        lines.append(
            f"  perm={f['perm']} c={f['c']} d={f['d']} m={f['m']} "
            f"{f['kind']}: formula={f['formula']} oracle={f['oracle']}"
        )
    lines.append(f"verdict    {doc['verdict']}")
    return "\n".join(lines), 0 if result.ok else 1


def cmd_enumerate_bt1(args) -> tuple[str, int]:
    sig = _signature(args)
    classes = enumerate_bt1(sig)
    rendered = [cls.render() for cls in classes]
    if args.format == "json":
        doc = {"c": sig.c, "d": sig.d, "count": len(rendered), "classes": rendered}
        return json.dumps(doc, indent=2), 0
    return "\n".join(rendered + [str(len(rendered))]), 0


def cmd_kraft_type(args) -> tuple[str, int]:
    sig = _signature(args)
    perm = _permutation(args, sig)
    cls = kraft_type(perm, sig)
    if args.format == "json":
        doc = {
            "h": sig.h,
            "c": sig.c,
            "d": sig.d,
            "perm": perm.one_line(),
            "class": cls.render(),
            "words": [w.letters for w in cls.words],
        }
        return json.dumps(doc, indent=2), 0
    return cls.render(), 0


def _witt_poly_lines(p: int, n: int) -> list[str]:
    lines = []
    for name, polys in (
        ("S", sum_polynomials(p, n)),
        ("P", product_polynomials(p, n)),
        ("I", negation_polynomials(p, n)),
    ):
        lines.extend(f"{name}_{l} = {poly.render()}" for l, poly in enumerate(polys))
    return lines


def cmd_witt_polys(args) -> tuple[str, int]:
    _require(args.len >= 1, "--len must be >= 1")
    if args.format == "json":
        doc = {
            "p": args.p,
            "n": args.len,
            "sum": [poly.render() for poly in sum_polynomials(args.p, args.len)],
            "product": [poly.render() for poly in product_polynomials(args.p, args.len)],
            "negation": [poly.render() for poly in negation_polynomials(args.p, args.len)],
        }
        return json.dumps(doc, indent=2), 0
    return "\n".join(_witt_poly_lines(args.p, args.len)), 0


def _parse_components(text: str, p: int, n: int, flag: str) -> WittVec:
    try:
        comps = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"{flag} must be a comma-separated integer list, got {text!r}")
    if len(comps) != n:
        raise InputError(f"{flag} has {len(comps)} components, expected {n}")
    return WittVec(p, comps)


def cmd_witt_eval(args) -> tuple[str, int]:
    _require(args.len >= 1, "--len must be >= 1")
    x = _parse_components(args.lhs, args.p, args.len, "--lhs")
    y = _parse_components(args.rhs, args.p, args.len, "--rhs")
    doc = {
        "p": args.p,
        "n": args.len,
        "lhs": list(x.components),
        "rhs": list(y.components),
        "sum": list(witt_add(x, y).components),
        "product": list(witt_mul(x, y).components),
        "neg_lhs": list(witt_neg(x).components),
        "frobenius_lhs": list(frobenius(x).components),
        "verschiebung_lhs": list(verschiebung(x).components),
        "p_multiple_lhs": list(p_multiple(x).components),
    }
    if args.format == "json":
        return json.dumps(doc, indent=2), 0
    rows = [[key, "(" + ",".join(str(v) for v in val) + ")"]
            for key, val in doc.items() if isinstance(val, list)]
    head = [f"p={args.p} n={args.len}"]
    return "\n".join(head + [_aligned(rows)]), 0


def _random_vec(rng: SplitMix64, p: int, n: int) -> WittVec:
    return WittVec(p, tuple(rng.below(p) for _ in range(n)))


def cmd_witt_check(args) -> tuple[str, int]:
    _require(args.len >= 1, "--len must be >= 1")
    _require(args.samples >= 0, "--samples must be >= 0")
    p, n = args.p, args.len
    table = ring_iso_table(p, n)
    rng = SplitMix64(args.seed)
    identity_failures = []
    for _ in range(args.samples):
        x = _random_vec(rng, p, n)
        y = _random_vec(rng, p, n)
        if frobenius(verschiebung(x)) != p_multiple(x):
            identity_failures.append(f"F(V(x)) != p*x at x={x}")
        if verschiebung(frobenius(x)) != p_multiple(x):
            identity_failures.append(f"V(F(x)) != p*x at x={x}")
        if witt_mul(x, verschiebung(y)) != verschiebung(witt_mul(frobenius(x), y)):
            identity_failures.append(f"x*V(y) != V(F(x)*y) at x={x} y={y}")
    tau_ok = all(
        witt_mul(teichmuller(a, p, n), teichmuller(b, p, n))
        == teichmuller(a * b, p, n)
        for a in range(p)
        for b in range(p)
    )
    if not tau_ok:
        identity_failures.append("Teichmueller lift is not multiplicative")
    ok = table.passed and not identity_failures
    doc = {
        "p": p,
        "n": n,
        "size": table.size,
        "ring_table": "pass" if table.passed else f"fail: {table.failure}",
        "identity_samples": args.samples,
        "identity_failures": identity_failures,
        "verdict": "pass" if ok else "fail",
    }
    if args.format == "json":
        return json.dumps(doc, indent=2), 0 if ok else 1
    rows = [[k, str(v)] for k, v in doc.items() if k != "identity_failures"]
    lines = [_aligned(rows)]
    lines.extend(f"  {msg}" for msg in identity_failures)
    return "\n".join(lines), 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="btlab",
        description="Invariants of truncated Barsotti-Tate groups from permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, perm=False, levels=False):
        sp.add_argument("--format", choices=("json", "table"), default="table")
        sp.add_argument("--out", metavar="PATH", help="also write the output bytes here")
        if perm:
            sp.add_argument("--c", type=int, required=True)
            sp.add_argument("--d", type=int, required=True)
            sp.add_argument("--perm", required=True)
            sp.add_argument(
                "--degree",
                type=int,
                help="degree override for cycle notation (unlisted points stay fixed)",
            )
        if levels:
            sp.add_argument("--max-level", type=int, default=10, dest="max_level")

    sp = sub.add_parser("invariants", help="gamma table, c_m table, isomorphism number")
    add_common(sp, perm=True, levels=True)
    sp.add_argument("--p", type=int, default=None, help="annotate component counts as p^c_m")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("oracle", help="graph-oracle values and cross-check verdict")
    add_common(sp, perm=True)
    sp.add_argument("--level", type=int, default=1)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="seeded random sweep: formulas vs oracle")
    add_common(sp)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--max-h", type=int, default=7, dest="max_h")
    sp.add_argument("--max-level", type=int, default=4, dest="max_level")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate-bt1", help="all classes for a signature")
    add_common(sp)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate_bt1)

    sp = sub.add_parser("kraft-type", help="circular-word class of a permutation")
    add_common(sp, perm=True)
    sp.set_defaults(func=cmd_kraft_type)

    sp = sub.add_parser("witt-polys", help="sum/product/negation laws for (p, n)")
    add_common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--len", type=int, required=True)
    sp.set_defaults(func=cmd_witt_polys)

    sp = sub.add_parser("witt-eval", help="evaluate ring operations on two vectors")
    add_common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.set_defaults(func=cmd_witt_eval)

    sp = sub.add_parser("witt-check", help="ring table and operator identities")
    add_common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_witt_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        body, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    text = body + "\n"
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
