"""Command line front end.

Subcommands:

    eval         evaluate a shadow's bracket and order at q = i
    compile      turn a diagram into the shadow it bounds
    skein        crossing-by-crossing bracket of a color-1 link diagram
    examples     built-in corpus of diagrams and shadows
    closed-form  circle, theta and tetrahedron values with order bounds
    verify       per-state lower bound audit of a shadow

Exit codes: 0 success, 2 usage, 10 malformed input, 11 semantic rejection
(validation or compile), 12 unbounded or incomplete enumeration where
completeness was required, 13 a verification check failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Any

from .diagram import (CompileError, DiagramFormatError, compile_diagram,
                      diagram_from_json, diagram_to_json)
from .exactq import INFINITE_ORDER, QRat, ord_at_i, render_canonical
from .examples_data import EXAMPLES, example, example_names
from .graphvals import (AdmissibilityError, ColorTriple, circle_eval,
                        is_admissible, is_red, order_bound_check, tet_eval,
                        theta_eval)
from .shadowcore import (IncompleteBracketError, ShadowFormatError,
                         ShadowValidationError, UnboundedColoringError,
                         _forced_colors, bracket, default_cap,
                         enumerate_colorings, ribbon_report, shadow_from_json,
                         shadow_to_json, validate_shadow, verify_state_bound)

USAGE_ERROR = 2
FORMAT_ERROR = 10
SEMANTIC_ERROR = 11
INCOMPLETE_ERROR = 12
CHECK_FAILED = 13


def _read_document(path: str) -> tuple[dict, str]:
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    data = json.loads(raw.decode("utf-8"))
    if not isinstance(data, dict):
        raise ShadowFormatError("input must be a JSON object")
    return data, digest


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        out = "\n".join(text_lines) + "\n"
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _ord_field(value) -> Any:
    return "infinity" if value == INFINITE_ORDER else value


def _fraction_field(value: Fraction) -> Any:
    return int(value) if value.denominator == 1 else str(value)


# ----------------------------------------------------------------------
# eval
# ----------------------------------------------------------------------

def _shadow_counts(shadow) -> dict:
    return {
        "regions": len(shadow.regions),
        "interior_edges": len(shadow.interior_edges),
        "interior_vertices": len(shadow.interior_vertices),
        "boundary_vertices": len(shadow.boundary_vertices),
        "boundary_edges": len(shadow.boundary_edges),
    }


def _graph_euler_bound(shadow, ord_i) -> dict | None:
    # Upper bound on the Euler characteristic of any surface the colored
    # boundary graph bounds: chi <= ord + (red boundary vertices)/2.
    if not shadow.boundary_vertices:
        return None
    forced, ok = _forced_colors(shadow)
    if not ok:
        return None
    red = 0
    for v in shadow.boundary_vertices:
        if any(r not in forced for r in v.regions):
            return None
        triple = ColorTriple(*(forced[r] for r in v.regions))
        if not is_admissible(triple):
            return None
        if is_red(triple):
            red += 1
    if ord_i == INFINITE_ORDER:
        return {"red_boundary_vertices": red, "euler_upper_bound": None}
    bound = Fraction(ord_i) + Fraction(red, 2)
    return {"red_boundary_vertices": red,
            "euler_upper_bound": _fraction_field(bound)}


def cmd_eval(args) -> int:
    data, digest = _read_document(args.input)
    shadow = shadow_from_json(data)
    t0 = time.perf_counter()
    result = bracket(shadow, cap=args.cap, threads=args.threads)
    elapsed = time.perf_counter() - t0

    components = sum(1 for e in shadow.boundary_edges if e.kind == "circle")
    has_graph = bool(shadow.boundary_vertices)
    ribbon: dict | None = None
    if result.complete and components >= 1 and not has_graph:
        rep = ribbon_report(result, components)
        ribbon = {
            "components": rep.components,
            "ribbon_excluded": rep.ribbon_excluded,
            "max_ribbon_euler": _ord_field(rep.max_ribbon_euler),
            "genus_lower_bound": rep.genus_lower_bound,
        }

    payload = {
        "input": {"sha256": digest, **_shadow_counts(shadow)},
        "cap": result.cap_used,
        "complete": result.complete,
        "states": result.states_evaluated,
        "bracket": render_canonical(result.value),
        "ord_q_i": _ord_field(result.ord_i),
        "components": components,
        "ribbon": ribbon,
        "graph_euler_bound": _graph_euler_bound(shadow, result.ord_i),
    }
    if args.states:
        enum = enumerate_colorings(shadow, result.cap_used)
        from .shadowcore import state_value
        listed = []
        for coloring in enum.colorings:
            value = state_value(shadow, coloring)
            listed.append({
                "coloring": dict(sorted(coloring.items())),
                "value": render_canonical(value),
                "ord_q_i": _ord_field(ord_at_i(value)),
            })
        payload["state_values"] = listed

    lines = [
        f"input sha256 {digest}",
        ("shadow: {regions} regions, {interior_edges} interior edges, "
         "{interior_vertices} interior vertices, {boundary_vertices}+"
         "{boundary_edges} boundary cells").format(**_shadow_counts(shadow)),
        f"cap {result.cap_used}, "
        f"{'complete' if result.complete else 'INCOMPLETE'}, "
        f"{result.states_evaluated} states",
        f"bracket: {payload['bracket']}",
        f"ord at q=i: {payload['ord_q_i']}",
    ]
    if components:
        lines.append(f"link components: {components}")
    if ribbon is not None:
        if ribbon["ribbon_excluded"]:
            lines.append(
                f"ribbon: excluded (ord {payload['ord_q_i']} < "
                f"{components} components)")
        else:
            lines.append("ribbon: not obstructed")
        if ribbon["genus_lower_bound"] is not None:
            lines.append(f"slice genus >= {ribbon['genus_lower_bound']}")
    if payload["graph_euler_bound"] is not None:
        gb = payload["graph_euler_bound"]
        if gb["euler_upper_bound"] is not None:
            lines.append(
                f"any bounded surface has chi <= {gb['euler_upper_bound']} "
                f"({gb['red_boundary_vertices']} red boundary vertices)")
    if args.states:
        for entry in payload["state_values"]:
            key = ", ".join(f"{k}={v}" for k, v in entry["coloring"].items())
            lines.append(f"  state [{key}]  ord {entry['ord_q_i']}  "
                         f"{entry['value']}")

    _emit(args, payload, lines)
    print(f"eval: {result.states_evaluated} states in {elapsed:.3f}s",
          file=sys.stderr)
    if args.strict and not result.complete:
        print("error: enumeration not complete at cap "
              f"{result.cap_used}; raise --cap", file=sys.stderr)
        return INCOMPLETE_ERROR
    return 0


# ----------------------------------------------------------------------
# compile
# ----------------------------------------------------------------------

def cmd_compile(args) -> int:
    data, digest = _read_document(args.input)
    diagram = diagram_from_json(data)
    shadow, report = compile_diagram(diagram)
    issues = validate_shadow(shadow)
    if issues:
        raise ShadowValidationError(issues)

    shadow_json = shadow_to_json(shadow)
    if args.report:
        payload = {
            "input": {"sha256": digest},
            "shadow": shadow_json,
            "report": {
                "merges": [list(m) for m in report.merges],
                "gleam_ledger": {cid: [list(c) for c in corners]
                                 for cid, corners in report.gleam_ledger.items()},
                "fused": list(report.fused),
                "region_map": dict(report.region_map),
            },
        }
    else:
        payload = shadow_json
    lines = [json.dumps(payload, indent=2, sort_keys=True)]
    _emit(args, payload, lines)
    return 0


# ----------------------------------------------------------------------
# skein
# ----------------------------------------------------------------------

def cmd_skein(args) -> int:
    from .skein import kauffman_bracket

    data, digest = _read_document(args.input)
    diagram = diagram_from_json(data)
    t0 = time.perf_counter()
    poly = kauffman_bracket(diagram)
    elapsed = time.perf_counter() - t0
    value = QRat(poly)
    payload = {
        "input": {"sha256": digest,
                  "arcs": len(diagram.arcs),
                  "crossings": len(diagram.crossings)},
        "bracket": render_canonical(value),
        "ord_q_i": _ord_field(ord_at_i(value)),
    }
    lines = [f"bracket: {payload['bracket']}",
             f"ord at q=i: {payload['ord_q_i']}"]
    check_failed = False
    if args.check:
        shadow, _ = compile_diagram(diagram)
        result = bracket(shadow)
        agree = result.complete and result.value == value
        payload["check"] = {
            "shadow_bracket": render_canonical(result.value),
            "complete": result.complete,
            "agree": agree,
        }
        lines.append("state-sum route: "
                     + ("agrees" if agree else "DISAGREES")
                     + f" ({payload['check']['shadow_bracket']})")
        check_failed = not agree
    _emit(args, payload, lines)
    print(f"skein: {2 ** len(diagram.crossings)} smoothings in "
          f"{elapsed:.3f}s", file=sys.stderr)
    return CHECK_FAILED if check_failed else 0


# ----------------------------------------------------------------------
# examples
# ----------------------------------------------------------------------

def cmd_examples(args) -> int:
    if args.name is None:
        payload = {name: {"kind": EXAMPLES[name][0], "note": EXAMPLES[name][1]}
                   for name in example_names()}
        lines = [f"{name:24s} {EXAMPLES[name][0]:8s} {EXAMPLES[name][1]}"
                 for name in example_names()]
        _emit(args, payload, lines)
        return 0
    try:
        doc = example(args.name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return USAGE_ERROR
    payload = doc["data"]
    lines = [json.dumps(payload, indent=2, sort_keys=True)]
    _emit(args, payload, lines)
    return 0


# ----------------------------------------------------------------------
# closed-form
# ----------------------------------------------------------------------

def cmd_closed_form(args) -> int:
    kind = args.kind
    colors = tuple(args.colors)
    arity = {"circle": 1, "theta": 3, "tet": 6}[kind]
    if len(colors) != arity:
        print(f"error: {kind} takes {arity} colors, got {len(colors)}",
              file=sys.stderr)
        return USAGE_ERROR
    try:
        if kind == "circle":
            value = QRat(circle_eval(colors[0]))
        elif kind == "theta":
            value = theta_eval(colors)
        else:
            value = tet_eval(colors)
        admissible = True
    except AdmissibilityError:
        value = QRat.zero()
        admissible = False
    payload = {
        "kind": kind,
        "colors": list(colors),
        "admissible": admissible,
        "value": render_canonical(value),
        "ord_q_i": _ord_field(ord_at_i(value)),
    }
    lines = [f"{kind}{colors}: {payload['value']}",
             f"ord at q=i: {payload['ord_q_i']}"]
    if admissible:
        rep = order_bound_check(kind, colors)
        payload["order_bound"] = {
            "bound": _fraction_field(rep.bound),
            "red_count": rep.red_count,
            "equality_expected": rep.equality_expected,
            "holds": rep.holds,
        }
        lines.append(
            f"lower bound {payload['order_bound']['bound']} "
            f"({rep.red_count} red), "
            + ("equality expected, " if rep.equality_expected else "")
            + ("holds" if rep.holds else "VIOLATED"))
        if not rep.holds:
            _emit(args, payload, lines)
            return CHECK_FAILED
    else:
        lines.append("inadmissible coloring, value 0")
    _emit(args, payload, lines)
    return 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    data, digest = _read_document(args.input)
    shadow = shadow_from_json(data)
    issues = validate_shadow(shadow)
    if issues:
        raise ShadowValidationError(issues)
    cap = args.cap if args.cap is not None else default_cap(shadow)
    t0 = time.perf_counter()
    enum = enumerate_colorings(shadow, cap)
    reports = []
    failures = 0
    for coloring in enum.colorings:
        rep = verify_state_bound(shadow, coloring)
        if not rep.holds:
            failures += 1
        reports.append((coloring, rep))
    elapsed = time.perf_counter() - t0

    payload = {
        "input": {"sha256": digest, **_shadow_counts(shadow)},
        "cap": cap,
        "complete": enum.complete,
        "states": len(enum.colorings),
        "failures": failures,
        "states_detail": [
            {
                "coloring": dict(sorted(c.items())),
                "ord_q_i": _ord_field(r.ord_i),
                "odd_surface_chi": r.chi,
                "red_boundary": r.red_boundary,
                "bound": _fraction_field(r.bound),
                "holds": r.holds,
            }
            for c, r in reports
        ],
    }
    lines = [
        f"input sha256 {digest}",
        f"cap {cap}, {'complete' if enum.complete else 'INCOMPLETE'}, "
        f"{len(enum.colorings)} states, {failures} bound failures",
    ]
    for c, r in reports:
        key = ", ".join(f"{k}={v}" for k, v in sorted(c.items()))
        lines.append(f"  [{key}]  ord {_ord_field(r.ord_i)} >= "
                     f"{_fraction_field(r.bound)}  "
                     f"{'ok' if r.holds else 'FAIL'}")
    _emit(args, payload, lines)
    print(f"verify: {len(enum.colorings)} states in {elapsed:.3f}s",
          file=sys.stderr)
    return CHECK_FAILED if failures else 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def _add_io_flags(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default text)")
    sub.add_argument("--out", default=None, metavar="FILE",
                     help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shadowcalc",
        description="exact bracket evaluation through shadow state sums")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="evaluate a shadow's bracket")
    p.add_argument("input", help="shadow JSON file, or - for stdin")
    p.add_argument("--cap", type=int, default=None,
                   help="color cap for enumeration (default: max fixed + 16)")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default $SHADOWCALC_THREADS or 1)")
    p.add_argument("--states", action="store_true",
                   help="list every admissible state with its value")
    p.add_argument("--strict", action="store_true",
                   help="fail when the enumeration is not certified complete")
    _add_io_flags(p)
    p.set_defaults(func=cmd_eval)

    p = subs.add_parser("compile", help="compile a diagram to a shadow")
    p.add_argument("input", help="diagram JSON file, or - for stdin")
    p.add_argument("--report", action="store_true",
                   help="include the merge/gleam ledger in the output")
    _add_io_flags(p)
    p.set_defaults(func=cmd_compile)

    p = subs.add_parser("skein", help="bracket by crossing resolution")
    p.add_argument("input", help="diagram JSON file, or - for stdin")
    p.add_argument("--check", action="store_true",
                   help="also compile and evaluate; fail on disagreement")
    _add_io_flags(p)
    p.set_defaults(func=cmd_skein)

    p = subs.add_parser("examples", help="built-in example documents")
    p.add_argument("name", nargs="?", default=None,
                   help="example name; omit to list all")
    _add_io_flags(p)
    p.set_defaults(func=cmd_examples)

    p = subs.add_parser("closed-form", help="circle, theta or tet value")
    p.add_argument("kind", choices=("circle", "theta", "tet"))
    p.add_argument("colors", nargs="+", type=int)
    _add_io_flags(p)
    p.set_defaults(func=cmd_closed_form)

    p = subs.add_parser("verify", help="audit per-state order bounds")
    p.add_argument("input", help="shadow JSON file, or - for stdin")
    p.add_argument("--cap", type=int, default=None)
    _add_io_flags(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", None) is None and hasattr(args, "threads"):
        import os
        try:
            args.threads = max(1, int(os.environ.get("SHADOWCALC_THREADS", "1")))
        except ValueError:
            args.threads = 1
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return FORMAT_ERROR
    except (ShadowFormatError, DiagramFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FORMAT_ERROR
    except ShadowValidationError as exc:
        print("error: shadow rejected:", file=sys.stderr)
        for issue in exc.issues:
            print(f"  - {issue}", file=sys.stderr)
        return SEMANTIC_ERROR
    except CompileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SEMANTIC_ERROR
    except UnboundedColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INCOMPLETE_ERROR
    except IncompleteBracketError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INCOMPLETE_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SEMANTIC_ERROR


if __name__ == "__main__":
    sys.exit(main())
