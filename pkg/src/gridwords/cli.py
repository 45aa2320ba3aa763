"""Command-line interface.

Exit codes: 0 affirmative/success, 1 negative verdict, 2 usage or input
error, 3 budget exceeded / inconclusive, 4 internal consistency failure
(decision routes disagree; should be impossible).

The default search budget (node expansions) can be overridden with the
``GRIDWORDS_BUDGET`` environment variable (a decimal integer).
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import documents, export, families, smart, subdivision, words
from .documents import GraphDocument, GraphDocumentError, vertex_token
from .graphs import Graph, make_graph, vertex_key
from .grid import (
    BOUNDARY,
    CellRef,
    TriGridGraph,
    boundary_type,
    classify_cell,
    classify_edge,
    property_set,
)
from .orientations import (
    DEFAULT_BUDGET,
    find_cycle,
    find_shortcut,
    find_semi_transitive_orientation,
    is_semi_transitive,
)
from .subdivision import (
    SubdividedGraph,
    cross_validate,
    find_induced_pattern,
    minimal_obstruction,
    subdivide,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INCONSISTENT = 4

_CELL_RE = re.compile(r"^(Up|Down)\((-?\d+),(-?\d+)\)$")


class UsageError(Exception):
    pass


def _default_budget() -> int:
    raw = os.environ.get("GRIDWORDS_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"GRIDWORDS_BUDGET must be a decimal integer, got {raw!r}")
    if value <= 0:
        raise UsageError(f"GRIDWORDS_BUDGET must be positive, got {value}")
    return value


def _read_document(path: str | None) -> GraphDocument:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc))
    return documents.parse(text)


def _parse_cell_spec(spec: str, doc: GraphDocument) -> CellRef:
    m = _CELL_RE.match(spec)
    if m:
        return CellRef(m.group(1), int(m.group(2)), int(m.group(3)))
    if doc.labels and all(ch in doc.labels for ch in spec):
        want = {doc.labels[ch] for ch in spec}
        for cell in doc.to_grid().belonging_cells:
            if set(cell.corners()) == want:
                return cell
        raise UsageError(f"no belonging cell has corners {spec!r}")
    raise UsageError(
        f"bad cell {spec!r}: expected Up(x,y), Down(x,y), or corner labels"
    )


def _cell_name(cell: CellRef) -> str:
    return f"{cell.pointing}({cell.x},{cell.y})"


def _parse_choices(text: str, doc: GraphDocument) -> dict:
    choices = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise UsageError(f"bad template choice {item!r}: expected CELL=TEMPLATE")
        spec, template = item.rsplit("=", 1)
        choices[_parse_cell_spec(spec.strip(), doc)] = template.strip()
    return choices


def _word_view(doc: GraphDocument) -> Graph:
    """The document's graph relabeled with word-friendly string names.

    Uses label names when they cover every vertex, vertex tokens
    otherwise.
    """
    g = doc.to_graph()
    if doc.labels and set(doc.labels.values()) == set(g.vertices):
        names = {v: name for name, v in doc.labels.items()}
    else:
        names = {v: vertex_token(v) for v in g.vertices}
    return make_graph(
        (names[v] for v in g.vertices),
        ((names[u], names[v]) for u, v in g.edges),
    )


def _emit(doc: GraphDocument) -> int:
    sys.stdout.write(documents.emit(doc))
    return EXIT_OK


# -- subcommands -------------------------------------------------------


def _cmd_gen(args) -> int:
    if args.family == "tn":
        return _emit(documents.from_grid(families.gen_tn(_positive_int(args.value, "n"))))
    if args.family == "sg":
        n = _nonnegative_int(args.value, "n")
        return _emit(documents.from_grid(families.gen_sg(n)))
    named = families.gen_named(args.value)
    if isinstance(named.graph, SubdividedGraph):
        return _emit(documents.from_subdivided(named.graph, named.labels))
    return _emit(documents.from_grid(named.graph, named.labels))


def _positive_int(text: str, name: str) -> int:
    n = _int(text, name)
    if n < 1:
        raise UsageError(f"{name} must be >= 1, got {n}")
    return n


def _nonnegative_int(text: str, name: str) -> int:
    n = _int(text, name)
    if n < 0:
        raise UsageError(f"{name} must be >= 0, got {n}")
    return n


def _int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {text!r}")


def _cmd_subdivide(args) -> int:
    doc = _read_document(args.input)
    if doc.structure_kind() not in ("grid", "subdivided"):
        raise UsageError("subdivide needs a grid or subdivided document")
    grid = doc.to_grid()
    already = doc.subdivided if doc.structure_kind() == "subdivided" else frozenset()
    if args.all_boundary:
        cells = grid.boundary_cells
    else:
        cells = frozenset(_parse_cell_spec(s.strip(), doc) for s in args.cells.split(","))
    try:
        sg = subdivide(grid, already | cells)
    except ValueError as exc:
        raise UsageError(str(exc))
    return _emit(documents.from_subdivided(sg, doc.labels))


def _classify_lines(doc: GraphDocument) -> list[str]:
    grid = doc.to_grid()
    lines = []
    for e in sorted(grid.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1]))):
        cls = classify_edge(grid, e)
        kind = boundary_type(grid, e) if cls == BOUNDARY else ""
        lines.append(f"edge\t{vertex_token(e[0])}\t{vertex_token(e[1])}\t{cls}\t{kind}")
    for cell in sorted(grid.belonging_cells):
        cls = classify_cell(grid, cell)
        types = ",".join(sorted(property_set(grid, cell)))
        lines.append(f"cell\t{_cell_name(cell)}\t{cls}\t{types}")
    return lines


def _cmd_classify(args) -> int:
    doc = _read_document(args.input)
    if doc.structure_kind() not in ("grid", "subdivided"):
        raise UsageError("classify needs a grid or subdivided document")
    for line in _classify_lines(doc):
        print(line)
    return EXIT_OK


def _as_subdivided(doc: GraphDocument) -> SubdividedGraph:
    if doc.structure_kind() == "subdivided":
        return doc.to_subdivided()
    return SubdividedGraph(doc.to_grid(), frozenset())


def _cmd_orient_smart(args) -> int:
    doc = _read_document(args.input)
    if doc.structure_kind() not in ("grid", "subdivided"):
        raise UsageError("orient smart needs a grid or subdivided document")
    sg = _as_subdivided(doc)
    if args.sweep:
        all_ok = True
        for choice, oriented in smart.sweep_smart_orientations(sg):
            ok = is_semi_transitive(oriented)
            all_ok = all_ok and ok
            combo = ",".join(
                f"{_cell_name(c)}={t}" for c, t in sorted(choice.items())
            )
            verdict = "semi-transitive" if ok else "not-semi-transitive"
            print(f"{combo or '(no subdivided cells)'}\t{verdict}")
        return EXIT_OK if all_ok else EXIT_NEGATIVE
    choices = _parse_choices(args.choices, doc) if args.choices else None
    try:
        oriented = smart.smart_orient(sg, choices)
    except (smart.InteriorSubdividedError, smart.IllegalTemplateError, ValueError) as exc:
        raise UsageError(str(exc))
    return _emit(documents.from_oriented(oriented, sg, doc.labels))


def _cmd_check_semi_transitive(args) -> int:
    doc = _read_document(args.input)
    if doc.kind != "oriented":
        raise UsageError("check semi-transitive needs an oriented document")
    d = doc.to_oriented()
    cycle = find_cycle(d)
    if cycle is not None:
        print("not-semi-transitive")
        print("cycle\t" + " -> ".join(vertex_token(v) for v in cycle))
        return EXIT_NEGATIVE
    witness = find_shortcut(d)
    if witness is not None:
        print("not-semi-transitive")
        print("shortcut-path\t" + " -> ".join(vertex_token(v) for v in witness.path))
        t, h = witness.chord
        print(f"chord\t{vertex_token(t)} -> {vertex_token(h)}")
        a, b = witness.missing
        print(f"missing\t{vertex_token(a)} -> {vertex_token(b)}")
        return EXIT_NEGATIVE
    print("semi-transitive")
    return EXIT_OK


def _cmd_check_word_representable(args) -> int:
    doc = _read_document(args.input)
    budget = args.budget if args.budget is not None else _default_budget()
    structure = doc.structure_kind()
    if doc.kind == "oriented":
        raise UsageError("check word-representable needs an unoriented document")
    if structure == "generic":
        if args.method != "search":
            raise UsageError(
                "the subdivision rule does not apply to generic graphs; use --method search"
            )
        outcome = find_semi_transitive_orientation(doc.to_graph(), budget=budget)
        print(f"search: {outcome.status} (nodes={outcome.nodes_expanded}, prunes={outcome.prunes})")
        if outcome.status == "budget":
            print("verdict: inconclusive")
            return EXIT_BUDGET
        print(f"verdict: {'word-representable' if outcome.found else 'not-word-representable'}")
        return EXIT_OK if outcome.found else EXIT_NEGATIVE

    sg = _as_subdivided(doc)
    if args.method == "theorem":
        ok = subdivision.is_word_representable(sg)
        print(f"rule: {'word-representable' if ok else 'not-word-representable'}")
        print(f"verdict: {'word-representable' if ok else 'not-word-representable'}")
        return EXIT_OK if ok else EXIT_NEGATIVE
    if args.method == "search":
        outcome = find_semi_transitive_orientation(sg.graph, budget=budget)
        print(f"search: {outcome.status} (nodes={outcome.nodes_expanded}, prunes={outcome.prunes})")
        if outcome.status == "budget":
            print("verdict: inconclusive")
            return EXIT_BUDGET
        print(f"verdict: {'word-representable' if outcome.found else 'not-word-representable'}")
        return EXIT_OK if outcome.found else EXIT_NEGATIVE

    report = cross_validate(sg, budget=budget)
    print(f"rule: {'word-representable' if report.rule_representable else 'not-word-representable'}")
    detail = (
        "no semi-transitive orientation"
        if report.orientation.status == "exhausted"
        else f"semi-transitive orientation {report.orientation.status}"
    )
    print(f"search: {report.orientation.status} ({detail})")
    print(
        "obstruction: "
        + (
            "induced minimal obstruction found"
            if report.obstruction.found
            else report.obstruction.status
        )
    )
    if report.verdict == "inconclusive":
        print("verdict: inconclusive")
        return EXIT_BUDGET
    if report.verdict == "inconsistent":
        print(
            "error: decision routes disagree; this falsifies the characterization "
            "and should be impossible",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    ok = report.rule_representable
    print(f"verdict: {'word-representable' if ok else 'not-word-representable'}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_word(args) -> int:
    if args.word_command == "graph":
        w = words.parse_word(args.word)
        return _emit(documents.from_generic(words.graph_from_word(w)))
    if args.word_command == "check":
        w = words.parse_word(args.word)
        doc = _read_document(args.input)
        g = _word_view(doc)
        try:
            ok = words.represents(w, g)
        except words.AlphabetMismatch as exc:
            raise UsageError(str(exc))
        print("represents" if ok else "does-not-represent")
        return EXIT_OK if ok else EXIT_NEGATIVE
    # find
    doc = _read_document(args.input)
    g = _word_view(doc)
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        outcome = words.find_k_uniform_representant(g, args.k, budget=budget)
    except ValueError as exc:
        raise UsageError(str(exc))
    if outcome.found:
        print(words.format_word(outcome.word))
        return EXIT_OK
    if outcome.status == "budget":
        print("budget-exceeded", file=sys.stderr)
        return EXIT_BUDGET
    print(f"no {args.k}-uniform representant", file=sys.stderr)
    return EXIT_NEGATIVE


def _cmd_find_obstruction(args) -> int:
    doc = _read_document(args.input)
    budget = args.budget if args.budget is not None else _default_budget()
    host = doc.to_graph()
    outcome = find_induced_pattern(minimal_obstruction(), host, budget=budget)
    if outcome.found:
        for pv, hv in outcome.mapping:
            print(f"{vertex_token(pv)}\t->\t{vertex_token(hv)}")
        return EXIT_OK
    if outcome.status == "budget":
        print("budget-exceeded", file=sys.stderr)
        return EXIT_BUDGET
    print("no induced obstruction", file=sys.stderr)
    return EXIT_NEGATIVE


def _cmd_export(args) -> int:
    doc = _read_document(args.input)
    if args.format == "dot":
        text = export.emit_dot(doc)
    elif args.format == "svg":
        text = export.emit_svg(doc)
    else:
        if not args.output:
            raise UsageError("export png needs -o PATH")
        export.render_figure(doc, args.output)
        return EXIT_OK
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_report(args) -> int:
    doc = _read_document(args.input)
    if doc.structure_kind() not in ("grid", "subdivided"):
        raise UsageError("report needs a grid or subdivided document")
    budget = args.budget if args.budget is not None else _default_budget()
    lines = _classify_lines(doc)
    sg = _as_subdivided(doc)
    result = cross_validate(sg, budget=budget)
    lines.append(
        f"rule\t{'word-representable' if result.rule_representable else 'not-word-representable'}"
    )
    lines.append(
        f"search\t{result.orientation.status}\tnodes={result.orientation.nodes_expanded}"
        f"\tprunes={result.orientation.prunes}"
    )
    lines.append(f"obstruction\t{result.obstruction.status}")
    lines.append(f"verdict\t{result.verdict}")
    tsv_path = args.output + ".tsv"
    png_path = args.output + ".png"
    with open(tsv_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    export.render_figure(doc, png_path)
    print(f"wrote {tsv_path}")
    print(f"wrote {png_path}")
    if result.verdict == "inconsistent":
        print("error: decision routes disagree", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


# -- parser ------------------------------------------------------------


def _add_input(p) -> None:
    p.add_argument("-i", "--input", default=None, help="input document (default: stdin)")


def _add_budget(p) -> None:
    p.add_argument("--budget", type=int, default=None, help="search node budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridwords",
        description="Word-representability of triangular grid graphs and their subdivisions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph document")
    p.add_argument("family", choices=("tn", "sg", "named"))
    p.add_argument("value", help="level count, stage, or graph name")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("subdivide", help="subdivide cells of a grid document")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all-boundary", action="store_true")
    group.add_argument("--cells", help="comma-separated cells, e.g. Up(0,0),Down(0,-1) or 123")
    _add_input(p)
    p.set_defaults(func=_cmd_subdivide)

    p = sub.add_parser("classify", help="classify edges and cells")
    _add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("orient", help="orientation constructions")
    orient_sub = p.add_subparsers(dest="orient_command", required=True)
    ps = orient_sub.add_parser("smart", help="build a smart orientation")
    ps.add_argument("--choices", help="per-cell templates, e.g. 123=b,567=A")
    ps.add_argument("--sweep", action="store_true", help="try all licensed templates")
    _add_input(ps)
    ps.set_defaults(func=_cmd_orient_smart)

    p = sub.add_parser("check", help="decision procedures")
    check_sub = p.add_subparsers(dest="check_command", required=True)
    pc = check_sub.add_parser("semi-transitive")
    _add_input(pc)
    pc.set_defaults(func=_cmd_check_semi_transitive)
    pc = check_sub.add_parser("word-representable")
    pc.add_argument("--method", choices=("theorem", "search", "both"), default="both")
    _add_budget(pc)
    _add_input(pc)
    pc.set_defaults(func=_cmd_check_word_representable)

    p = sub.add_parser("word", help="alternation-word operations")
    word_sub = p.add_subparsers(dest="word_command", required=True)
    pw = word_sub.add_parser("graph", help="the graph a word represents")
    pw.add_argument("word")
    pw.set_defaults(func=_cmd_word)
    pw = word_sub.add_parser("check", help="does the word represent the input graph?")
    pw.add_argument("word")
    _add_input(pw)
    pw.set_defaults(func=_cmd_word)
    pw = word_sub.add_parser("find", help="search for a k-uniform representant")
    pw.add_argument("--k", type=int, required=True)
    _add_budget(pw)
    _add_input(pw)
    pw.set_defaults(func=_cmd_word)

    p = sub.add_parser("find", help="pattern search")
    find_sub = p.add_subparsers(dest="find_command", required=True)
    pf = find_sub.add_parser("obstruction", help="locate an induced minimal obstruction")
    _add_budget(pf)
    _add_input(pf)
    pf.set_defaults(func=_cmd_find_obstruction)

    p = sub.add_parser("export", help="render a document")
    p.add_argument("format", choices=("dot", "svg", "png"))
    p.add_argument("-o", "--output", default=None)
    _add_input(p)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("report", help="classification report with figure")
    p.add_argument("-o", "--output", required=True, help="output prefix")
    _add_budget(p)
    _add_input(p)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphDocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
