"""Command-line surface: generation, reports, scans, certificates, fixtures.

Every report is deterministic: identical inputs and limits produce
byte-identical JSON regardless of the requested thread count.  Exit codes:
0 success, 1 usage or domain error, 2 cap exceeded, 3 verdict mismatch
against --expect.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import config
from .circular import lower_parent, mixing_scan
from .errors import CapExceededError, CircmixError
from .fixtures import REGISTRY, resolve_graph_spec
from .extension import PrecolouringInstance, extend
from .graphs import (circular_clique, clique_number, colouring_number,
                     complete_graph, cycle_graph, format_graph,
                     frozen_regular_graph, path_graph, write_graph)
from .homgraph import components, is_frozen, is_mixing
from .homs import Hom, first_hom, format_image, parse_image
from .structure import (core_of, is_dismantlable, is_rigid, self_mixing,
                        stiff_reduction)
from .winding import (cycle_trace, is_constricting, nonmixing_certificate,
                      reflect_colouring)


@dataclass(frozen=True)
class RunConfig:
    """Limits and output shape shared by all subcommands."""

    cap: int
    threads: int
    output: str  # "json" | "text"


_VERDICT = {"mixing": "Mixing", "not_mixing": "NotMixing",
            "no_colourings": "NoColourings"}


def _parse_frac(text: str) -> tuple[int, int]:
    num, slash, den = text.partition("/")
    try:
        k = int(num)
        q = int(den) if slash else 1
    except ValueError:
        raise ValueError(f"bad fraction {text!r}, want k/q") from None
    return k, q


def _parse_pin(text: str) -> tuple[int, int]:
    v, eq, c = text.partition("=")
    if not eq:
        raise ValueError(f"bad pin {text!r}, want v=c")
    return int(v), int(c)


def _emit(payload: dict, cfg: RunConfig, text_lines) -> None:
    if cfg.output == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _check_expect(expect: str | None, verdict: str) -> int:
    if expect is not None and expect != verdict:
        sys.stderr.write(f"expected {expect}, got {verdict}\n")
        return 3
    return 0


# --- subcommand bodies --------------------------------------------------


def _cmd_gen(args, cfg: RunConfig) -> int:
    params = args.params
    kind = args.kind
    if kind == "circular-clique":
        k, q = int(params[0]), int(params[1])
        g = circular_clique(k, q)
    elif kind == "clique":
        g = complete_graph(int(params[0]))
    elif kind == "cycle":
        g = cycle_graph(int(params[0]), reflexive=args.reflexive)
    elif kind == "path":
        g = path_graph(int(params[0]), reflexive=args.reflexive)
    elif kind == "frozen-regular":
        g = frozen_regular_graph(int(params[0]), int(params[1]))
    elif kind == "gadget":
        g = resolve_graph_spec(f"gadget:{params[0]}")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write(format_graph(g))
    return 0


def _cmd_hom(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    h = resolve_graph_spec(args.target)
    pins = dict(_parse_pin(p) for p in args.pin)
    hom = first_hom(g, h, pins=pins or None, budget=cfg.cap)
    payload = {"exists": hom is not None,
               "hom": None if hom is None else format_image(hom.image)}
    _emit(payload, cfg, [payload["hom"] if hom else "none"])
    return 0


def _cmd_mixing(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    h = resolve_graph_spec(args.target)
    verdict = is_mixing(g, h, cap=cfg.cap)
    name = _VERDICT[verdict.status]
    payload = {
        "verdict": name,
        "hom_count": verdict.hom_count,
        "class_count": verdict.class_count,
        "witnesses": (None if verdict.witness is None else
                      [format_image(w.image) for w in verdict.witness]),
    }
    _emit(payload, cfg,
          [f"{name} ({verdict.hom_count} homs, {verdict.class_count} classes)"])
    return _check_expect(args.expect, name)


def _cmd_components(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    h = resolve_graph_spec(args.target)
    report = components(g, h, kind=args.kind, cap=cfg.cap)
    payload = report.to_json_dict()
    lines = [f"{report.kind}: {report.total} homs, {report.class_count} classes"]
    lines += [f"  size {c.size} rep {format_image(c.rep.image)}"
              for c in report.classes]
    _emit(payload, cfg, lines)
    return 0


def _cmd_frozen(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    h = resolve_graph_spec(args.target)
    f = Hom(g.n, h.n, parse_image(args.colouring))
    value = is_frozen(f, g, h)
    _emit({"frozen": value}, cfg, ["frozen" if value else "not frozen"])
    return 0


def _cmd_lower_parent(args, cfg: RunConfig) -> int:
    parent = lower_parent(args.k, args.q)
    payload = {"k'": parent.parent_k, "q'": parent.parent_q}
    _emit(payload, cfg, [f"{parent.parent_k}/{parent.parent_q}"])
    return 0


def _cmd_structure(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    op = args.op
    if op == "col":
        payload = {"op": op, "value": colouring_number(g)}
    elif op == "omega":
        payload = {"op": op, "value": clique_number(g)}
    elif op == "stiff":
        red = stiff_reduction(g)
        payload = {
            "op": op,
            "steps": [{"removed": s.removed, "absorber": s.absorber}
                      for s in red.steps],
            "terminal": {"n": red.terminal.n,
                         "edges": sorted(red.terminal.edges())},
        }
    elif op == "core":
        result = core_of(g, cap=cfg.cap)
        payload = {"op": op, "vertices": list(result.vertices),
                   "n": result.core.n}
    elif op == "dismantlable":
        payload = {"op": op, "value": is_dismantlable(g, cap=cfg.cap).dismantlable}
    elif op == "rigid":
        payload = {"op": op, "value": is_rigid(g, cap=cfg.cap)}
    else:  # self-mixing
        result = self_mixing(g, cap=cfg.cap)
        payload = {"op": op, "value": result.mixing, "method": result.method}
    value = payload.get("value")
    line = f"{op}: {value}" if value is not None else f"{op}: done"
    _emit(payload, cfg, [line])
    if args.expect is not None:
        return _check_expect(args.expect, str(value))
    return 0


def _cmd_sigma(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    k, q = _parse_frac(args.frac)
    cycle = [int(t) for t in args.cycle.split(",")]
    f = Hom(g.n, k, parse_image(args.colouring))
    trace = cycle_trace(f, cycle, g, k, q)
    reflected = reflect_colouring(f, k)
    back = cycle_trace(reflected, cycle, g, k, q)
    payload = {
        "cycle": list(trace.cycle),
        "taus": list(trace.taus),
        "sigma": trace.sigma,
        "sigma_reflection": back.sigma,
        "constricting": is_constricting(f, g, k, q).constricting,
    }
    _emit(payload, cfg, [f"sigma {trace.sigma} taus {list(trace.taus)}"])
    return 0


def _cmd_certify(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    k, q = _parse_frac(args.frac)
    cert = nonmixing_certificate(g, k, q, cap=cfg.cap)
    if cert is None:
        payload = {"certified": False,
                   "reason": "winding totals agree; fall back to enumeration"}
        _emit(payload, cfg, ["not certified"])
        return _check_expect(args.expect, "NotCertified")
    payload = {
        "certified": True,
        "kind": cert.kind,
        "subgraph": list(cert.subgraph),
        "cycle": list(cert.cycle),
        "colouring": format_image(cert.colouring.image),
        "reflection": format_image(cert.reflection.image),
        "sigma": cert.sigma,
        "sigma_reflection": cert.sigma_reflection,
    }
    _emit(payload, cfg,
          [f"NotMixing: {cert.kind} sigma {cert.sigma} vs {cert.sigma_reflection}"])
    return _check_expect(args.expect, "Certified")


def _cmd_extend(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    h = resolve_graph_spec(args.target)
    pins = tuple(_parse_pin(p) for p in args.pin)
    instance = PrecolouringInstance(g, h, pins)
    result = extend(instance, cap=cfg.cap)
    payload = {
        "status": result.status,
        "extension": (None if result.extension is None
                      else format_image(result.extension.image)),
        "certificate": ("exhausted backtracking over all completions"
                        if result.extension is None else None),
    }
    _emit(payload, cfg, [f"{result.status}: {payload['extension']}"])
    return _check_expect(args.expect, result.status)


def _cmd_scan(args, cfg: RunConfig) -> int:
    g = resolve_graph_spec(args.graph)
    fracs = [_parse_frac(t) for t in args.fracs.split(",")]
    report = mixing_scan(g, fracs, cap=cfg.cap)
    payload = {
        "graph": report.graph_name,
        "rows": [
            {
                "k": r.k, "q": r.q, "value": f"{r.k}/{r.q}",
                "verdict": r.verdict,
                "hom_count": r.hom_count, "class_count": r.class_count,
                "witnesses": [format_image(w) for w in r.witnesses],
            }
            for r in report.rows
        ],
        "bounds": [
            {
                "quantity": b.quantity, "relation": b.relation,
                "value": str(b.value), "source": b.source,
                "certified": b.certified,
            }
            for b in report.bounds
        ],
    }
    lines = [f"{r.k}/{r.q}: {r.verdict}" for r in report.rows]
    lines += [f"{b.quantity} {b.relation} {b.value} [{b.certified}: {b.source}]"
              for b in report.bounds]
    _emit(payload, cfg, lines)
    return 0


def _cmd_fixtures(args, cfg: RunConfig) -> int:
    rows = [{"name": name, "n": REGISTRY[name]().n} for name in sorted(REGISTRY)]
    _emit({"fixtures": rows}, cfg, [f"{r['name']} ({r['n']} vertices)" for r in rows])
    return 0


# --- parser -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="max homomorphisms to enumerate")
    common.add_argument("--threads", type=int, default=None,
                        help="worker count (output is identical for any value)")
    common.add_argument("--output", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(
        prog="circmix",
        description="decide and certify mixing of graph colourings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph")
    p.add_argument("kind", choices=("circular-clique", "clique", "cycle",
                                    "path", "frozen-regular", "gadget"))
    p.add_argument("params", nargs="+")
    p.add_argument("--reflexive", action="store_true")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("hom", parents=[common],
                       help="least homomorphism, optionally pinned")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--pin", action="append", default=[], metavar="v=c")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("mixing", parents=[common],
                       help="connectivity verdict for the colour graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--expect", default=None,
                   help="exit 3 unless the verdict matches")
    p.set_defaults(func=_cmd_mixing)

    p = sub.add_parser("components", parents=[common],
                       help="full class report for HOM(G, H)")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--kind", choices=("colour", "homomorphism"),
                   default="colour")
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("frozen", parents=[common],
                       help="is the given colouring frozen?")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--colouring", required=True)
    p.set_defaults(func=_cmd_frozen)

    p = sub.add_parser("lower-parent", parents=[common],
                       help="Farey predecessor of k/q")
    p.add_argument("k", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_lower_parent)

    p = sub.add_parser("structure", parents=[common],
                       help="structural reports on one graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--op", required=True,
                   choices=("col", "omega", "stiff", "core", "dismantlable",
                            "rigid", "self-mixing"))
    p.add_argument("--expect", default=None)
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("sigma", parents=[common],
                       help="winding totals of a colouring around a cycle")
    p.add_argument("--graph", required=True)
    p.add_argument("--cycle", required=True, metavar="v0,v1,...")
    p.add_argument("--colouring", required=True, metavar="c0,c1,...")
    p.add_argument("--frac", required=True, metavar="k/q")
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("certify-nonmixing", parents=[common],
                       help="winding certificate that mixing fails")
    p.add_argument("--graph", required=True)
    p.add_argument("--frac", required=True, metavar="k/q")
    p.add_argument("--expect", default=None)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("extend", parents=[common],
                       help="extend pinned colours to a full homomorphism")
    p.add_argument("--graph", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--pin", action="append", default=[], metavar="v=c")
    p.add_argument("--expect", default=None)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("scan", parents=[common],
                       help="mixing verdicts over a fraction list, with bounds")
    p.add_argument("--graph", required=True)
    p.add_argument("--fracs", required=True, metavar="k1/q1,k2/q2,...")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("fixtures", parents=[common],
                       help="list the named gadgets")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    cfg = RunConfig(cap=config.hom_cap(args.cap),
                    threads=config.thread_count(args.threads),
                    output=args.output)
    try:
        return args.func(args, cfg)
    except CapExceededError as e:
        sys.stderr.write(f"cap exceeded: {e}\n")
        return 2
    except (CircmixError, ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


def run() -> None:
    raise SystemExit(main())
