"""Command-line front door.

Verbs: sep, pattern, order, nested, quot, linext, verify-all.  Element input
accepts one-line words for irreducible type A (e.g. "3142"), reduced words
anywhere ("s1*s3*s2" or "s1 s3 s2"), and positive-root inversion index lists
("inv:2,3,5", 1-based in the height-then-lex root ordering).  Exit codes:
0 answered or verified, 1 a checked property was falsified (witness printed),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
from typing import List, Optional, Sequence

from . import linext, nested, order, pattern, qpoly, quotient, rootsys, separable, verify, weyl
from .errors import DomainError, NotBiconvexError

USAGE_ERROR = 2
FALSIFIED = 1


def _parse_element(sys: rootsys.RootSystem, spec: str) -> weyl.GroupElement:
    spec = spec.strip()
    if spec.startswith("inv:"):
        idx = [int(x) - 1 for x in spec[4:].split(",") if x.strip()]
        return weyl.element_from_inversions(sys, idx)
    if spec == "e":
        return weyl.identity(sys)
    if "s" in spec:
        letters = []
        for tok in spec.replace("*", " ").split():
            if not tok.startswith("s"):
                raise DomainError(f"bad word token {tok!r}")
            letters.append(int(tok[1:]) - 1)
        return weyl.from_word(sys, letters)
    if spec.isdigit():
        return weyl.from_one_line(sys, [int(c) for c in spec])
    raise DomainError(f"cannot parse element spec {spec!r}")


def _element_json(w: weyl.GroupElement) -> dict:
    out = {
        "system": rootsys.type_string(w.system),
        "matrix": [list(row) for row in w.matrix],
        "word": [i + 1 for i in weyl.canonical_word(w)],
        "inversions": sorted(i + 1 for i in weyl.inversion_set(w)),
        "length": weyl.length(w),
    }
    if w.system.type_label == (("A", w.system.rank),):
        out["one_line"] = list(weyl.one_line(w))
    return out


def _element_str(w: weyl.GroupElement) -> str:
    if w.system.type_label == (("A", w.system.rank),):
        return "".join(str(v) for v in weyl.one_line(w))
    word = weyl.canonical_word(w)
    return "*".join(f"s{i + 1}" for i in word) if word else "e"


def _nested_json(fam) -> list:
    return sorted(sorted(v + 1 for v in m) for m in fam)


def _print(args, payload: dict, text_lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_sep(args) -> int:
    sys_ = rootsys.parse_type(args.type)
    if args.action == "count":
        seps = separable.enumerate_separable(sys_)
        graph = nested.dynkin_graph(sys_)
        faces = nested.count_faces(graph)
        r = len(sys_.components)
        payload = {
            "type": rootsys.type_string(sys_),
            "separable": len(seps),
            "group_order": weyl.group_order(sys_),
            "faces": faces,
            "components": r,
        }
        _print(args, payload, [str(len(seps)),
                               f"group order {weyl.group_order(sys_)}; "
                               f"2^{r} * {faces} faces = {2**r * faces}"])
        return 0
    w = _parse_element(sys_, args.element)
    trace = separable.separability_trace(w)
    payload = {
        "element": _element_json(w),
        "separable": trace is not None,
    }
    lines = [f"separable: {trace is not None}"]
    if trace is not None:
        lines.append(separable.render_trace(trace))
        payload["trace"] = separable.render_trace(trace)
    _print(args, payload, lines)
    return 0


def _cmd_pattern(args) -> int:
    sys_ = rootsys.parse_type(args.type)
    w = _parse_element(sys_, args.element)
    match = pattern.catalog_witness(w)
    payload = {"element": _element_json(w), "avoids": match is None}
    lines = [f"avoids catalog: {match is None}"]
    if match is not None:
        payload["witness"] = {
            "pattern": match.pattern.name,
            "subsystem_roots": [i + 1 for i in match.member_indices],
        }
        lines.append(
            f"contains {match.pattern.name} on subsystem roots "
            + ",".join(str(i + 1) for i in match.member_indices)
        )
    _print(args, payload, lines)
    return 0


def _cmd_order(args) -> int:
    sys_ = rootsys.parse_type(args.type)
    kind = order.OrderKind.parse(args.kind)
    if args.action == "interval":
        w = _parse_element(sys_, args.below)
        ideal = order.lower_interval(kind, w)
        gf = order.rank_gf(ideal)
        payload = {
            "element": _element_json(w),
            "kind": kind.value,
            "size": len(ideal),
            "by_rank": list(ideal.by_rank),
            "rank_gf": gf.to_json(),
        }
        _print(args, payload, [
            f"size {len(ideal)}",
            "rank histogram: " + " ".join(map(str, ideal.by_rank)),
            f"rank gf: {gf.text()}",
        ])
        return 0
    edges = order.hasse_edges(kind, sys_)
    gr = weyl.group(sys_)
    payload = {
        "kind": kind.value,
        "elements": [_element_str(el) for el in gr.elements],
        "cover_edges": [list(e) for e in edges],
    }
    lines = [f"{_element_str(gr.elements[a])} -> {_element_str(gr.elements[b])}" for a, b in edges]
    _print(args, payload, lines)
    return 0


def _parse_family(spec: str) -> List[List[int]]:
    # "1,2;2;4" -> [[0,1],[1],[3]]
    out = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append([int(v) - 1 for v in chunk.split(",")])
    return out


def _cmd_nested(args) -> int:
    if args.action == "count":
        if args.graph is None and args.type is None:
            raise DomainError("nested count needs --type or --graph")
        if args.graph is not None:
            pairs = []
            maxv = args.vertices or 0
            for tok in args.graph.split(","):
                tok = tok.strip()
                if not tok:
                    continue
                a, b = tok.split("-")
                pairs.append((int(a) - 1, int(b) - 1))
                maxv = max(maxv, int(a), int(b))
            graph = nested.graph_from_edges(pairs, maxv)
        else:
            graph = nested.dynkin_graph(rootsys.parse_type(args.type))
        faces = nested.count_faces(graph)
        total = len(nested.enumerate_nested(graph))
        payload = {"faces": faces, "nested_sets": total}
        _print(args, payload, [str(faces), f"nested sets including empty: {total}"])
        return 0
    sys_ = rootsys.parse_type(args.type)
    if args.action == "to-element":
        fam = _parse_family(args.sets)
        w = nested.element_of(fam, sys_)
        payload = {"element": _element_json(w), "nested_set": _nested_json(map(frozenset, fam))}
        _print(args, payload, [_element_str(w), f"length {weyl.length(w)}"])
        return 0
    w = _parse_element(sys_, args.element)
    if not separable.is_separable(w):
        _print(args, {"separable": False}, ["element is not separable"])
        return FALSIFIED
    fam = nested.nested_of(w)
    payload = {"element": _element_json(w), "nested_set": _nested_json(fam)}
    lines = ["{" + "; ".join(",".join(str(v) for v in m) for m in _nested_json(fam)) + "}"]
    _print(args, payload, lines)
    return 0


def _cmd_quot(args) -> int:
    sys_ = rootsys.parse_type(args.type)
    if args.action == "split":
        u = _parse_element(sys_, args.u)
        X = quotient._quotient_of_element(u)
        Y = quotient.right_ideal(u)
        ok, witness = quotient.is_splitting(X, Y)
        payload = {
            "u": _element_json(u),
            "separable": separable.is_separable(u),
            "splitting": ok,
            "quotient_size": len(X),
            "ideal_size": len(Y),
        }
        lines = [
            f"splitting: {ok} (|W/U| = {len(X)}, |U| = {len(Y)})",
            f"separable: {separable.is_separable(u)}",
        ]
        if witness is not None:
            payload["witness"] = {
                "kind": witness.kind,
                "elements": [_element_str(e) for e in witness.detail],
            }
            lines.append(
                f"witness [{witness.kind}]: "
                + ", ".join(_element_str(e) for e in witness.detail)
            )
        _print(args, payload, lines)
        return 0 if ok else FALSIFIED
    if args.action == "decompose":
        w = _parse_element(sys_, args.w)
        u = _parse_element(sys_, args.u)
        pair = quotient.decompose(w, u)
        if pair is None:
            _print(args, {"decomposable": False}, ["no decomposition found"])
            return FALSIFIED
        x, z = pair
        payload = {
            "x": _element_json(x),
            "z": _element_json(z),
            "lengths": [weyl.length(x), weyl.length(z), weyl.length(w)],
        }
        _print(args, payload, [
            f"x = {_element_str(x)} (length {weyl.length(x)})",
            f"z = {_element_str(z)} (length {weyl.length(z)})",
            f"x z = w with l(x u) = l(x) + l(u)",
        ])
        return 0
    rep = quotient.conjecture_experiments(sys_)
    rows = [
        {
            "u": _element_str(r.u),
            "length": weyl.length(r.u),
            "separable": r.separable,
            "splits": r.splits,
            "surjective": r.surjective,
        }
        for r in rep.rows
    ]
    payload = {
        "type": rep.system_label,
        "rows": rows,
        "all_surjective": rep.all_surjective,
        "split_iff_separable": rep.split_iff_separable,
    }
    lines = ["| u | len | separable | splits | surjective |", "|---|----|-----------|--------|------------|"]
    for r in rows:
        lines.append(
            f"| {r['u']} | {r['length']} | {r['separable']} | {r['splits']} | {r['surjective']} |"
        )
    lines.append(
        f"all surjective: {rep.all_surjective}; split iff separable: {rep.split_iff_separable}"
    )
    _print(args, payload, lines)
    return 0


def _cmd_linext(args) -> int:
    import itertools

    n = args.n
    rows = []
    for p in itertools.permutations(range(1, n + 1)):
        rec = linext.sidorenko_check(p)
        row = {
            "pi": "".join(map(str, p)),
            "e": rec.count,
            "e_complement": rec.complement_count,
            "product": rec.product,
            "factorial": rec.factorial,
            "equality": rec.equality,
            "separable": rec.separable,
        }
        if args.q:
            row["q_ok"] = linext.q_sidorenko_check(p)
        rows.append(row)
    payload = {"n": n, "rows": rows}
    header = "| pi | e(P) | e(P~) | product | n! | equality | separable |"
    lines = [header, "|----|------|-------|---------|----|----------|-----------|"]
    for r in rows:
        lines.append(
            f"| {r['pi']} | {r['e']} | {r['e_complement']} | {r['product']} | "
            f"{r['factorial']} | {r['equality']} | {r['separable']} |"
        )
    _print(args, payload, lines)
    return 0


def _cmd_verify_all(args) -> int:
    results = verify.run_all(budget=args.budget, long=args.long)
    payload = {
        "results": [
            {"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 2), "details": r.details}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    lines = [r.line() for r in results]
    lines.append("ALL PASSED" if payload["all_passed"] else "FAILURES PRESENT")
    text = "\n".join(lines)
    out_text = json.dumps(payload, sort_keys=True, indent=2) if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out_text + "\n")
    print(out_text)
    return 0 if payload["all_passed"] else FALSIFIED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylsep",
        description="Exact Weyl group computations: separable elements, "
        "splittings, nested sets, linear extensions.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("sep", help="separability checks and counts")
    ps = p.add_subparsers(dest="action", required=True)
    c = ps.add_parser("check")
    c.add_argument("--type", required=True)
    c.add_argument("--element", required=True, help="one-line, s-word, or inv:…")
    c = ps.add_parser("count")
    c.add_argument("--type", required=True)

    p = sub.add_parser("pattern", help="catalog pattern avoidance")
    ps = p.add_subparsers(dest="action", required=True)
    c = ps.add_parser("avoid")
    c.add_argument("--type", required=True)
    c.add_argument("--element", required=True)

    p = sub.add_parser("order", help="weak and Bruhat order queries")
    ps = p.add_subparsers(dest="action", required=True)
    c = ps.add_parser("interval")
    c.add_argument("--type", required=True)
    c.add_argument("--kind", default="left", choices=["left", "right", "bruhat"])
    c.add_argument("--below", required=True)
    c = ps.add_parser("hasse")
    c.add_argument("--type", required=True)
    c.add_argument("--kind", default="left", choices=["left", "right", "bruhat"])

    p = sub.add_parser("nested", help="nested sets and graph associahedra")
    ps = p.add_subparsers(dest="action", required=True)
    c = ps.add_parser("count")
    c.add_argument("--type")
    c.add_argument("--graph", help="edge list like 1-2,2-3 (any simple graph)")
    c.add_argument("--vertices", type=int, help="vertex count when isolated vertices exist")
    c = ps.add_parser("to-element")
    c.add_argument("--type", required=True)
    c.add_argument("--sets", required=True, help="members like 1,2;2;4 (1-based)")
    c = ps.add_parser("from-element")
    c.add_argument("--type", required=True)
    c.add_argument("--element", required=True)

    p = sub.add_parser("quot", help="generalized quotients and splittings")
    ps = p.add_subparsers(dest="action", required=True)
    c = ps.add_parser("split")
    c.add_argument("--type", required=True)
    c.add_argument("--u", required=True)
    c = ps.add_parser("decompose")
    c.add_argument("--type", required=True)
    c.add_argument("--w", required=True)
    c.add_argument("--u", required=True)
    c = ps.add_parser("conjectures")
    c.add_argument("--type", required=True)

    p = sub.add_parser("linext", help="linear extension tables")
    ps = p.add_subparsers(dest="action", required=True)
    c = ps.add_parser("sidorenko")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", action="store_true", help="include the q-analog check")

    p = sub.add_parser("verify-all", help="run the full verification suite")
    p.add_argument("--budget", type=float, default=None, help="wall-clock budget in seconds")
    p.add_argument("--long", action="store_true", help="include the larger sweeps")
    p.add_argument("--out", help="also write the report to a file")

    return parser


_DISPATCH = {
    "sep": _cmd_sep,
    "pattern": _cmd_pattern,
    "order": _cmd_order,
    "nested": _cmd_nested,
    "quot": _cmd_quot,
    "linext": _cmd_linext,
    "verify-all": _cmd_verify_all,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return _DISPATCH[args.verb](args)
    except (DomainError, NotBiconvexError, ValueError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
