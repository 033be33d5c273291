"""
Command-line interface.

    ribboncheck compute "braid:n=2:1 1 1"
    ribboncheck obstruct "braid:n=2:1 1 1" "braid:n=3:1 -2 1 -2" --both-directions
    ribboncheck batch table.csv --pairs --jobs 4
    ribboncheck validate "pd:X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)"
    ribboncheck oracle-check "braid:n=2:1 1 1" --covers 2 3 5

Exit codes carry operational status only: 0 success, 2 input/parse
error, 3 computation error.  Mathematical verdicts are data, never exit
codes.  RIBBONCHECK_MAX_CROSSINGS (default 24) bounds accepted diagram
sizes.
"""

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .linkcodec import DiagramError, ParseError, parse_link_spec
from .alexander import ComputationError, alexander_polynomial
from .obstruct import (ComponentMismatch, obstruction_from_polynomials,
                       ribbon_obstruction)
from .oracles import (cyclic_cover_check, reidemeister_schreier, torres_check)
from .wirtinger import wirtinger_presentation

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_COMPUTE = 3

DEFAULT_MAX_CROSSINGS = 24


def _max_crossings():
    raw = os.environ.get("RIBBONCHECK_MAX_CROSSINGS", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_CROSSINGS
    except ValueError:
        return DEFAULT_MAX_CROSSINGS


def _load(spec):
    diagram = parse_link_spec(spec)
    limit = _max_crossings()
    if diagram.num_crossings > limit:
        raise ParseError(
            "diagram has %d crossings; limit is %d "
            "(raise RIBBONCHECK_MAX_CROSSINGS to accept)"
            % (diagram.num_crossings, limit))
    return diagram


def _compute_record(name, spec):
    diagram = _load(spec)
    delta = alexander_polynomial(diagram)
    record = {}
    if name is not None:
        record["name"] = name
    record.update({
        "spec": spec,
        "components": diagram.num_components,
        "crossings": diagram.num_crossings,
        "alexander": str(delta),
    })
    return record


def cmd_compute(args):
    record = _compute_record(None, args.spec)
    if args.json:
        print(json.dumps(record))
    else:
        print(record["alexander"])
        print("components: %d, crossings: %d"
              % (record["components"], record["crossings"]))
    return EXIT_OK


def cmd_obstruct(args):
    dj = _load(args.spec_j)
    dl = _load(args.spec_l)
    directions = [("J", "L", dj, dl)]
    if args.both_directions:
        directions.append(("L", "J", dl, dj))
    for label_from, label_to, da, db in directions:
        try:
            report = ribbon_obstruction(da, db, names=(label_from, label_to))
        except ComponentMismatch as exc:
            payload = {"direction": [label_from, label_to],
                       "verdict": "component_mismatch", "reason": str(exc)}
            print(json.dumps(payload) if args.json
                  else "component mismatch: %s" % exc)
            continue
        print(report.to_json() if args.json else report.summary())
    return EXIT_OK


def _batch_rows(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header[:2]] != ["name", "spec"]:
            raise ParseError("batch CSV must have header 'name,spec'")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) < 2:
                raise ParseError("row %d needs both name and spec" % lineno)
            rows.append((row[0].strip(), row[1].strip()))
        return rows


def cmd_batch(args):
    rows = _batch_rows(args.csv_path)

    def compute_one(item):
        name, spec = item
        try:
            return json.dumps(_compute_record(name, spec))
        except (ParseError, DiagramError) as exc:
            return json.dumps({"name": name, "spec": spec,
                               "error": {"kind": "parse", "message": str(exc)}})
        except ComputationError as exc:
            return json.dumps({"name": name, "spec": spec,
                               "error": {"kind": "compute", "message": str(exc)}})

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(pool.map(compute_one, rows))
    else:
        lines = [compute_one(r) for r in rows]
    for line in lines:
        print(line)

    if args.pairs:
        deltas = {}
        for name, spec in rows:
            try:
                deltas[name] = alexander_polynomial(_load(spec))
            except (ParseError, DiagramError, ComputationError):
                deltas[name] = None

        def one_pair(pair):
            (name_j, name_l) = pair
            dj, dl = deltas[name_j], deltas[name_l]
            if dj is None or dl is None:
                return json.dumps({"direction": [name_j, name_l],
                                   "error": {"kind": "parse",
                                             "message": "unparseable operand"}})
            try:
                report = obstruction_from_polynomials(dj, dl,
                                                      names=(name_j, name_l))
                return report.to_json()
            except ComponentMismatch as exc:
                return json.dumps({"direction": [name_j, name_l],
                                   "verdict": "component_mismatch",
                                   "reason": str(exc)})

        pairs = [(a, b) for a, _ in rows for b, _ in rows]
        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                for line in pool.map(one_pair, pairs):
                    print(line)
        else:
            for pair in pairs:
                print(one_pair(pair))
    return EXIT_OK


def cmd_validate(args):
    diagram = _load(args.spec)
    pres, phi = wirtinger_presentation(diagram)
    print(json.dumps({
        "spec": args.spec,
        "components": diagram.num_components,
        "crossings": diagram.num_crossings,
        "arcs": diagram.num_arcs,
        "generators": pres.num_generators,
        "relators": len(pres.relators),
    }))
    return EXIT_OK


def cmd_oracle_check(args):
    diagram = _load(args.spec)
    results = []
    if diagram.num_components == 1:
        pres, phi = wirtinger_presentation(diagram)
        delta = alexander_polynomial(diagram)
        for k in args.covers:
            invariants = reidemeister_schreier(pres, phi, k)
            results.append({"kind": "cyclic_cover", "k": k,
                            "pass": cyclic_cover_check(delta, k, invariants)})
    elif diagram.num_components == 2:
        report = torres_check(diagram)
        results.append({"kind": "torres",
                        "status": report.status,
                        "pass": report.status != "fail"})
    else:
        raise ParseError("oracle-check supports knots and 2-component links")
    payload = {"spec": args.spec, "oracles": results}
    print(json.dumps(payload))
    return EXIT_OK if all(r.get("pass", True) for r in results) else EXIT_COMPUTE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ribboncheck",
        description="Alexander polynomials of links and the divisibility "
                    "obstruction to homotopy ribbon concordance.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Alexander polynomial of one link")
    p.add_argument("spec", help="link spec, e.g. 'braid:n=2:1 1 1' or 'pd:X(...)'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("obstruct", help="divisibility verdict for a pair J, L")
    p.add_argument("spec_j")
    p.add_argument("spec_l")
    p.add_argument("--json", action="store_true")
    p.add_argument("--both-directions", action="store_true")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("batch", help="process a CSV of name,spec rows")
    p.add_argument("csv_path")
    p.add_argument("--pairs", action="store_true",
                   help="also emit the full pairwise obstruction matrix")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("validate", help="parse and structurally check a spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("oracle-check", help="run independent verification")
    p.add_argument("spec")
    p.add_argument("--covers", type=int, nargs="+", default=[2, 3, 5],
                   metavar="K", help="cyclic cover degrees (knots)")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DiagramError, FileNotFoundError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (ComputationError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
