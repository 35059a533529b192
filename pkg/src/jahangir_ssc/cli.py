"""Command-line surface.

Two commands: `jahangir` (builds J(2,m) and allows the structured
engines) and `graph` (reads a JSON document and allows the generic
engines only). Exit codes: 0 success, 1 usage or parse error,
2 capacity error, 3 verify found at least one mismatch.

Output is byte-deterministic for fixed inputs, flags, and seed; the
optional --timings field is the one deliberately nondeterministic
extra and is off by default.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .algebra import cohen_macaulay_verdict
from .complexes import f_vector_direct, spanning_complex
from .cycles import CycleCatalog, oracle_cycle_catalog, word_cycle_catalog
from .errors import CapacityError, GraphParseError, InvalidParameterError, JssError
from .formulas import f_vector_exact_ie, f_vector_formula, hilbert_series
from .graphs import Graph, build_jahangir, matrix_tree_count, parse_graph
from .reports import RunReport, build_graph_report, build_jahangir_report
from .spanning import enumerate_spanning_trees_jahangir

ACTIONS = ("facets", "classes", "cycles", "f-vector", "hilbert", "cm", "verify")

MISMATCH_EXIT = 3

# Enumerating every spanning tree of an arbitrary document is refused
# past this count; the determinant tells us the size in advance.
TREE_ENUMERATION_LIMIT = 500_000

_MODE_ALIASES = {"paper": "formula"}
_CATALOG_ALIASES = {"paper": "word"}
_ORDERING_ALIASES = {"paper": "block"}


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="jssc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: _Parser) -> None:
        p.add_argument("action", choices=ACTIONS)
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--mode", choices=("direct", "formula", "paper", "exact-ie"),
                       default="direct",
                       help="f-vector engine (paper is an alias of formula)")
        p.add_argument("--catalog", choices=("word", "paper", "oracle"), default=None,
                       help="cycle catalog (paper is an alias of word)")
        p.add_argument("--ordering", choices=("block", "paper", "search"), default=None,
                       help="generator ordering for cm (paper is an alias of block)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings in verify output")

    pj = sub.add_parser("jahangir", help="work on J(2,m)")
    pj.add_argument("--m", type=int, required=True)
    pj.add_argument("--n", type=int, default=2,
                    help="ring width; must be 2 (reserved)")
    common(pj)

    pg = sub.add_parser("graph", help="work on a graph document")
    pg.add_argument("--input", required=True, help="path to a JSON graph document")
    common(pg)
    return parser


# ---------------------------------------------------------------------------
# Payload builders (plain dicts, deterministic key order)


def _facet_payload(g: Graph, command: str, meta: dict) -> dict:
    complex_ = spanning_complex(g)
    if g.labels is not None:
        facets = [[str(g.label_of(i)) for i in sorted(f)] for f in complex_.facets]
    else:
        facets = [sorted(f) for f in complex_.facets]
    return {**meta, "count": len(complex_.facets),
            "matrix_tree_count": matrix_tree_count(g), "facets": facets}


def _classes_payload(m: int, meta: dict) -> dict:
    records = enumerate_spanning_trees_jahangir(m)
    counts: dict[str, int] = {}
    for rec in records:
        counts[rec.tree_class.value] = counts.get(rec.tree_class.value, 0) + 1
    ordered = {k: counts.get(k, 0) for k in ("CJ1", "CJ2", "CJ3a", "CJ3b", "CJ3c")}
    return {**meta, "counts": ordered, "total": len(records),
            "matrix_tree_count": matrix_tree_count(build_jahangir(m))}


def _catalog_payload(catalog: CycleCatalog, g: Graph | None, meta: dict) -> dict:
    entries = []
    for e in catalog.entries:
        if g is not None and g.labels is not None:
            edges = [str(g.label_of(i)) for i in sorted(e.edges)]
        else:
            edges = sorted(e.edges)
        entries.append({"word": list(e.word) if e.word is not None else None,
                        "edges": edges, "beta": e.beta,
                        "is_simple_cycle": e.is_simple_cycle})
    return {**meta, "count": len(entries), "entries": entries}


def _fvector_payload(g: Graph, mode: str, m: int | None, meta: dict) -> dict:
    if mode == "direct":
        values = f_vector_direct(g)
        return {**meta, "f_vector": [str(x) for x in values]}
    if mode == "exact-ie":
        values = f_vector_exact_ie(g)
        return {**meta, "f_vector": [str(x) for x in values]}
    # closed form: only defined for the structured family
    if m is None:
        raise InvalidParameterError(
            "the closed-form engine needs the structured family; "
            "use --mode direct or exact-ie")
    formula = f_vector_formula(m)
    oracle = f_vector_direct(g)
    mism = [{"index": i, "closed_form": str(a), "direct": str(b)}
            for i, (a, b) in enumerate(zip(formula.values, oracle)) if a != b]
    audit = [{"words": [list(w) for w in t.words], "sign": t.sign,
              "union_estimate": t.union_estimate} for t in formula.terms]
    return {**meta,
            "f_vector": [str(x) for x in formula.values],
            "oracle_f_vector": [str(x) for x in oracle],
            "mismatch_indices": mism,
            "audit": audit}


def _hilbert_payload(g: Graph, mode: str, m: int | None, meta: dict) -> dict:
    if mode == "exact-ie":
        values = f_vector_exact_ie(g)
    elif mode == "formula":
        if m is None:
            raise InvalidParameterError(
                "the closed-form engine needs the structured family")
        values = f_vector_formula(m).values
    else:
        values = f_vector_direct(g)
    series = hilbert_series(values)
    return {**meta, "f_vector": [str(x) for x in values],
            "numerator": [str(c) for c in series.numerator],
            "denominator_power": series.denominator_power}


def _cm_payload(g: Graph, ordering: str, seed: int, meta: dict) -> dict:
    verdict = cohen_macaulay_verdict(g, ordering=ordering, seed=seed)
    return {**meta,
            "cohen_macaulay": verdict.cohen_macaulay,
            "ordering_source": verdict.ordering_source,
            "certificate": list(verdict.certificate)
            if verdict.certificate is not None else None,
            "block_first_failure": verdict.block_first_failure,
            "shelling_agrees": verdict.shelling_agrees}


def _report_payload(report: RunReport, meta: dict) -> dict:
    claims = [{"name": c.name, "claimed": c.claimed,
               "claimed_source": c.claimed_source, "oracle": c.oracle,
               "oracle_source": c.oracle_source, "verdict": c.verdict,
               "detail": c.detail} for c in report.claims]
    return {**meta, "parameters": report.parameters, "claims": claims,
            "mismatches": report.mismatch_count, "timings": report.timings}


def _guard_tree_enumeration(g: Graph) -> None:
    count = matrix_tree_count(g)
    if count > TREE_ENUMERATION_LIMIT:
        raise CapacityError(
            f"{count} spanning trees exceed the enumeration limit "
            f"{TREE_ENUMERATION_LIMIT}")


def _execute(args: argparse.Namespace) -> tuple[dict, int]:
    mode = _MODE_ALIASES.get(args.mode, args.mode)
    catalog = _CATALOG_ALIASES.get(args.catalog, args.catalog)
    ordering = _ORDERING_ALIASES.get(args.ordering, args.ordering)

    if args.command == "jahangir":
        if args.n != 2:
            raise InvalidParameterError("--n must be 2 (reserved for future use)")
        m = args.m
        g = build_jahangir(m)
        meta = {"command": "jahangir", "action": args.action, "m": m}
        catalog = catalog or "word"
        ordering = ordering or "block"
        if args.action == "facets":
            _guard_tree_enumeration(g)
            return _facet_payload(g, "jahangir", meta), 0
        if args.action == "classes":
            _guard_tree_enumeration(g)
            return _classes_payload(m, meta), 0
        if args.action == "cycles":
            cat = word_cycle_catalog(m) if catalog == "word" else oracle_cycle_catalog(g)
            return _catalog_payload(cat, g, {**meta, "catalog": catalog}), 0
        if args.action == "f-vector":
            return _fvector_payload(g, mode, m, {**meta, "mode": mode}), 0
        if args.action == "hilbert":
            return _hilbert_payload(g, mode, m, {**meta, "mode": mode}), 0
        if args.action == "cm":
            _guard_tree_enumeration(g)
            source = "block" if ordering == "block" else "search"
            return _cm_payload(g, source, args.seed,
                               {**meta, "ordering": ordering}), 0
        report = build_jahangir_report(m, seed=args.seed, timed=args.timings)
        payload = _report_payload(report, meta)
        return payload, MISMATCH_EXIT if report.mismatch_count else 0

    # graph command: generic engines only
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphParseError(f"cannot read {args.input}: {exc.strerror}") from None
    g = parse_graph(text)
    meta = {"command": "graph", "action": args.action, "input": args.input}
    if mode == "formula":
        raise InvalidParameterError(
            "--mode formula requires the jahangir command")
    if catalog == "word":
        raise InvalidParameterError(
            "--catalog word requires the jahangir command")
    if ordering == "block":
        raise InvalidParameterError(
            "--ordering block requires the jahangir command")
    if args.action == "facets":
        _guard_tree_enumeration(g)
        return _facet_payload(g, "graph", meta), 0
    if args.action == "classes":
        raise InvalidParameterError(
            "tree classes are defined only for the jahangir command")
    if args.action == "cycles":
        return _catalog_payload(oracle_cycle_catalog(g), g,
                                {**meta, "catalog": "oracle"}), 0
    if args.action == "f-vector":
        return _fvector_payload(g, mode, None, {**meta, "mode": mode}), 0
    if args.action == "hilbert":
        return _hilbert_payload(g, mode, None, {**meta, "mode": mode}), 0
    if args.action == "cm":
        _guard_tree_enumeration(g)
        return _cm_payload(g, "search", args.seed,
                           {**meta, "ordering": "search"}), 0
    _guard_tree_enumeration(g)
    report = build_graph_report(g, seed=args.seed, timed=args.timings)
    payload = _report_payload(report, meta)
    return payload, MISMATCH_EXIT if report.mismatch_count else 0


# ---------------------------------------------------------------------------
# Formatters


def _to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_rows(payload: dict) -> list[list[object]]:
    action = payload["action"]
    if action == "facets":
        rows = [["index", "edges"]]
        rows += [[i, " ".join(str(x) for x in f)]
                 for i, f in enumerate(payload["facets"])]
        return rows
    if action == "classes":
        rows = [["class", "count"]]
        rows += [[k, v] for k, v in payload["counts"].items()]
        rows.append(["total", payload["total"]])
        return rows
    if action == "cycles":
        rows = [["word", "beta", "is_simple_cycle", "edges"]]
        for e in payload["entries"]:
            word = " ".join(str(x) for x in e["word"]) if e["word"] else ""
            rows.append([word, e["beta"], e["is_simple_cycle"],
                         " ".join(str(x) for x in e["edges"])])
        return rows
    if action == "f-vector":
        rows = [["i", "f_i"]]
        rows += [[i, v] for i, v in enumerate(payload["f_vector"])]
        for item in payload.get("mismatch_indices", []):
            rows.append(["mismatch", f"i={item['index']} closed_form={item['closed_form']}"
                         f" direct={item['direct']}"])
        return rows
    if action == "hilbert":
        rows = [["k", "numerator_coefficient"]]
        rows += [[k, c] for k, c in enumerate(payload["numerator"])]
        rows.append(["denominator_power", payload["denominator_power"]])
        return rows
    if action == "cm":
        keys = ("cohen_macaulay", "ordering_source", "block_first_failure",
                "shelling_agrees")
        return [["key", "value"]] + [[k, payload[k]] for k in keys]
    rows = [["claim", "verdict", "claimed", "oracle"]]
    for c in payload["claims"]:
        rows.append([c["name"], c["verdict"],
                     json.dumps(c["claimed"]), json.dumps(c["oracle"])])
    return rows


def _to_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(_csv_rows(payload))
    return buf.getvalue()


def _to_text(payload: dict) -> str:
    action = payload["action"]
    lines: list[str] = []
    if action == "facets":
        lines.append(f"{payload['count']} facets "
                     f"(matrix-tree count {payload['matrix_tree_count']})")
        lines += [" ".join(str(x) for x in f) for f in payload["facets"]]
    elif action == "classes":
        lines += [f"{k}: {v}" for k, v in payload["counts"].items()]
        lines.append(f"total: {payload['total']} "
                     f"(matrix-tree count {payload['matrix_tree_count']})")
    elif action == "cycles":
        lines.append(f"{payload['count']} catalog entries")
        for e in payload["entries"]:
            word = ",".join(str(x) for x in e["word"]) if e["word"] else "-"
            flag = "" if e["is_simple_cycle"] else "  [not a simple cycle]"
            lines.append(f"word {word}: beta {e['beta']}, edges "
                         + " ".join(str(x) for x in e["edges"]) + flag)
    elif action == "f-vector":
        lines.append("f = (" + ", ".join(payload["f_vector"]) + ")")
        for item in payload.get("mismatch_indices", []):
            lines.append(f"  diverges from the direct oracle at i={item['index']}: "
                         f"{item['closed_form']} vs {item['direct']}")
    elif action == "hilbert":
        terms = []
        for k, c in enumerate(payload["numerator"]):
            if c != "0":
                terms.append(f"{c}*t^{k}" if k else c)
        lines.append(" + ".join(terms)
                     + f" over (1-t)^{payload['denominator_power']}")
    elif action == "cm":
        lines.append(f"cohen_macaulay: {payload['cohen_macaulay']}")
        lines.append(f"ordering_source: {payload['ordering_source']}")
        lines.append(f"shelling_agrees: {payload['shelling_agrees']}")
    else:
        for c in payload["claims"]:
            lines.append(f"[{c['verdict']:>9}] {c['name']}: "
                         f"claimed {json.dumps(c['claimed'])} "
                         f"vs oracle {json.dumps(c['oracle'])}")
        lines.append(f"mismatches: {payload['mismatches']}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = _execute(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2
    except (GraphParseError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except JssError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(_to_json(payload))
    elif args.format == "csv":
        sys.stdout.write(_to_csv(payload))
    else:
        sys.stdout.write(_to_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
