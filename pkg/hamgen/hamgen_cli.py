"""Command-line front end: build, verify, survey and realize."""

import argparse
import json
import sys

try:
    from .hamgen_cycles import circuit_to_chain, parse_circuit
    from .hamgen_errors import CapacityError, ConstructionError, GraphError, UsageError
    from .hamgen_families import build
    from .hamgen_generated import realize
    from .hamgen_gf2 import combine
    from .hamgen_graph import connectivity
    from .hamgen_hamilton import LengthSet
    from .hamgen_report import FAIL, SKIP, dumps, format_text, suite_document
    from .hamgen_settings import activate, load_config, log, safe_int
    from .hamgen_storage import atomic_write, read_graph, read_layout, write_graph, write_layout
    from .hamgen_suites import SUITES, SuiteOptions, run_suite
    from .hamgen_survey import MODES, PARITIES, SurveyConfig, run_survey
except ImportError:
    from hamgen_cycles import circuit_to_chain, parse_circuit
    from hamgen_errors import CapacityError, ConstructionError, GraphError, UsageError
    from hamgen_families import build
    from hamgen_generated import realize
    from hamgen_gf2 import combine
    from hamgen_graph import connectivity
    from hamgen_hamilton import LengthSet
    from hamgen_report import FAIL, SKIP, dumps, format_text, suite_document
    from hamgen_settings import activate, load_config, log, safe_int
    from hamgen_storage import atomic_write, read_graph, read_layout, write_graph, write_layout
    from hamgen_suites import SUITES, SuiteOptions, run_suite
    from hamgen_survey import MODES, PARITIES, SurveyConfig, run_survey


EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

STDOUT = "-"


def parse_rs(text):
    """``4..10`` or ``4,6,8`` as a sorted tuple of sizes."""
    text = str(text).strip()
    try:
        if ".." in text:
            low, _, high = text.partition("..")
            values = range(int(low), int(high) + 1)
        else:
            values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError("bad size list {!r}; use 4..10 or 4,6,8".format(text)) from None
    if isinstance(values, range) and not values:
        raise UsageError("empty range {!r}".format(text))
    values = sorted(set(values))
    if not values:
        raise UsageError("empty size list {!r}".format(text))
    if values[0] < 3:
        raise UsageError("sizes must be at least 3, got {}".format(values[0]))
    return tuple(values)


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a JSON config file")
    common.add_argument("--cap", type=int, help="circuit enumeration cap")
    common.add_argument("--threads", type=int, help="worker threads")
    common.add_argument("--strict", action="store_true", help="exit 3 when anything is skipped")
    common.add_argument("--json", metavar="PATH", help="write JSON to PATH, or - for stdout")
    return common


def _parse_args(argv=None):
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hamgen",
        description="Cycle spaces over GF(2), Hamilton circuits and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="write a named graph to a file")
    p.add_argument("family", help="family name, e.g. pr:4, cn2:7, ce-i1, cayley:7:1,6,2,5")
    p.add_argument("output", help="graph file to write; the layout goes beside it")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--r", help="sizes as 4..10 or 4,6,8")
    p.add_argument("--graph", help="graph file for the profile suite")
    p.add_argument("--samples", type=int, default=100, help="random trials per sampled check")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = sub.add_parser("survey", parents=[common], help="sample dense graphs and record spans")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default=MODES[0])
    p.add_argument(
        "--delta-floor",
        help="minimum degree as a fraction of n, e.g. 1/2 or 0.6; defaults by mode",
    )
    p.add_argument("--parity", choices=PARITIES, default="any", help="constraint on n")

    p = sub.add_parser("realize", parents=[common], help="write a circuit as a sum of circuits")
    p.add_argument("graph", help="graph file")
    p.add_argument("circuit", help="vertices as indices or layout names, comma separated")
    p.add_argument("--lengths", default="f0", help="length set, e.g. f0 or f0-1,f0 or 4,5")
    return parser.parse_args(argv)


def _configure(args):
    cfg = load_config(args.config)
    if args.cap is not None:
        cfg["circuit_cap"] = safe_int(args.cap, cfg["circuit_cap"])
    if args.threads is not None:
        cfg["threads"] = safe_int(args.threads, cfg["threads"])
    activate(cfg)
    return cfg


def _emit(args, text):
    if args.json in (None, STDOUT):
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        atomic_write(args.json, text)


def _load_graph(path):
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError("cannot read graph file {}: {}".format(path, exc)) from None


def cmd_build(args):
    family = build(args.family)
    g = family.graph
    write_graph(args.output, g, comment=family.spec.label())
    write_layout(args.output, family.layout)
    info = {
        "family": family.spec.label(),
        "output": args.output,
        "f0": g.f0,
        "f1": g.f1,
        "connectivity": connectivity(g),
    }
    if args.json is not None:
        _emit(args, json.dumps(info, indent=2, sort_keys=True) + "\n")
    if args.json != STDOUT:
        print("{family}: f0={f0} f1={f1} connectivity={connectivity}".format(**info))
    return EXIT_OK


def cmd_verify(args):
    g = _load_graph(args.graph) if args.graph else None
    layout = (read_layout(args.graph, g.n) or {}) if args.graph else {}
    options = SuiteOptions(
        rs=parse_rs(args.r) if args.r else (),
        graph=g,
        layout=layout,
        samples=args.samples,
        seed=args.seed,
    )
    reports = run_suite(args.suite, options)
    if args.json is not None:
        _emit(args, dumps(suite_document(args.suite, reports)))
    if args.json != STDOUT:
        print(format_text(reports))
    statuses = {r.status for r in reports}
    if FAIL in statuses:
        return EXIT_FAIL
    if SKIP in statuses and args.strict:
        return EXIT_CAPACITY
    return EXIT_OK


def cmd_survey(args):
    cfg = SurveyConfig(
        n=args.n,
        mode=args.mode,
        delta_floor=args.delta_floor,
        samples=args.samples,
        seed=args.seed,
        parity=args.parity,
    )
    to_file = args.json not in (None, STDOUT)
    lines = []
    undecided = 0
    try:
        for record in run_survey(cfg):
            if record.get("capped") and record.get("codimension") is None:
                undecided += 1
            line = json.dumps(record, sort_keys=True) + "\n"
            if to_file:
                lines.append(line)
            else:
                sys.stdout.write(line)
                sys.stdout.flush()
    finally:
        if to_file and lines:
            atomic_write(args.json, "".join(lines))
    if undecided:
        log("{} samples hit the circuit cap before the span was decided".format(undecided))
        if args.strict:
            return EXIT_CAPACITY
    return EXIT_OK


def _names(layout):
    if not layout:
        return {}
    return {index: name for name, index in layout.items()}


def _show(circuit, names):
    return ",".join(names.get(v, str(v)) for v in circuit.vertices)


def cmd_realize(args):
    g = _load_graph(args.graph)
    layout = read_layout(args.graph, g.n)
    target = parse_circuit(g, args.circuit, layout)
    try:
        lengths = LengthSet.parse(args.lengths)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    picked = realize(g, target, lengths)
    names = _names(layout)
    result = {
        "target": _show(target, names),
        "lengths": lengths.label(),
        "realized": picked is not None,
        "circuits": [] if picked is None else [_show(c, names) for c in picked],
    }
    if picked is not None:
        total = combine([circuit_to_chain(g, c) for c in picked], [1] * len(picked), g.f1)
        if total != circuit_to_chain(g, target):
            raise ConstructionError("realization of {} does not sum to it".format(target))
        result["verified"] = True
    if args.json is not None:
        _emit(args, json.dumps(result, indent=2, sort_keys=True) + "\n")
    if args.json != STDOUT:
        if picked is None:
            print("{}: no realization over {}".format(result["target"], result["lengths"]))
        else:
            print("{}: sum of {} circuits".format(result["target"], len(picked)))
            for line in result["circuits"]:
                print("  {}".format(line))
    return EXIT_OK if picked is not None else EXIT_FAIL


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "survey": cmd_survey,
    "realize": cmd_realize,
}


def main(argv=None):
    args = _parse_args(argv)
    try:
        _configure(args)
        return COMMANDS[args.command](args)
    except (UsageError, GraphError) as exc:
        log(str(exc))
        return EXIT_USAGE
    except CapacityError as exc:
        log(str(exc))
        return EXIT_CAPACITY


if __name__ == "__main__":
    raise SystemExit(main())
