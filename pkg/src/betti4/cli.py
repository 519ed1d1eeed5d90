"""Command-line front end.

Subcommands: ``betti`` (formula pipeline), ``verify`` (formulas against
the homology oracle over every supported field), ``atlas`` (dump or
re-check the 66-class table), ``experiment`` (random-ideal statistics).
JSON is the machine interface, aligned text the human default; exit
codes are 0 for success, 1 for a verification mismatch, 2 for bad
input.
"""

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .atlas import atlas_entries, atlas_records
from .engine import full_table, pd_two_condition
from .errors import Betti4Error, ParseError
from .homology import ALL_FIELDS, oracle_betti
from .monomials import NUM_VARS, MonomialIdeal, minimalize
from .multidegrees import DEFAULT_GEN_CAP
from .parsing import DEFAULT_EXP_CAP, parse_ideal
from .squarefree import mask_monomial, mask_string

SCHEMA_VERSION = 1


def format_monomial(m):
    if not any(m):
        return "1"
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def format_ideal(ideal):
    if ideal.is_zero:
        return "(0)"
    return ", ".join(format_monomial(g) for g in ideal.gens)


def _default_jobs():
    raw = os.environ.get("BETTI4_JOBS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items, jobs):
    if jobs <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _read_inputs(args):
    """Yield (line_number, text) for every non-blank, non-comment input line."""
    if args.ideals:
        lines = args.ideals
    elif args.file:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    for number, line in enumerate(lines, start=1):
        bare = line.split("#", 1)[0].strip()
        if bare:
            yield number, line


def _common_flags(parser, caps=True):
    if caps:
        parser.add_argument(
            "--max-gens", type=int, default=DEFAULT_GEN_CAP, metavar="N",
            help=f"generator cap (default {DEFAULT_GEN_CAP})",
        )
        parser.add_argument(
            "--max-exp", type=int, default=DEFAULT_EXP_CAP, metavar="N",
            help=f"exponent cap (default {DEFAULT_EXP_CAP})",
        )
    parser.add_argument(
        "--jobs", type=int, default=_default_jobs(), metavar="N",
        help="parallel workers (default $BETTI4_JOBS or 1)",
    )


def _input_flags(parser):
    parser.add_argument("ideals", nargs="*", help="generator lists; stdin when omitted")
    parser.add_argument("--file", help="read ideals from a file, one per line")


def _multigraded_json(rows):
    return {format_monomial(m): list(row) for m, row in sorted(rows.items())}


def cmd_betti(args):
    def compute(job):
        number, line = job
        try:
            ideal = parse_ideal(line, args.max_exp)
            table = full_table(ideal, want_multigraded=args.multigraded, cap=args.max_gens)
        except Betti4Error as exc:
            return number, line, exc
        return number, ideal, table

    failed = False
    for number, source, result in _map_ordered(compute, list(_read_inputs(args)), args.jobs):
        if isinstance(result, Betti4Error):
            failed = True
            if args.json:
                record = {"schema": SCHEMA_VERSION, "line": number, "error": str(result)}
                if isinstance(result, ParseError):
                    record["position"] = result.position
                print(json.dumps(record))
            else:
                print(f"error (line {number}): {result}", file=sys.stderr)
            continue
        ideal, table = source, result
        pd2 = pd_two_condition(ideal)
        if args.json:
            record = {
                "schema": SCHEMA_VERSION,
                "generators": [format_monomial(g) for g in ideal.gens],
                "betti": list(table.betti),
                "pd": table.pd,
                "pd2_condition": pd2,
            }
            if args.multigraded:
                record["multigraded"] = _multigraded_json(table.multigraded)
            print(json.dumps(record))
        else:
            print(f"ideal: {format_ideal(ideal)}")
            cells = "  ".join(f"b{i}={v}" for i, v in enumerate(table.betti))
            print(f"  {cells}  pd={table.pd}  pd2_condition={str(pd2).lower()}")
            if args.multigraded:
                for m, row in sorted(table.multigraded.items()):
                    print(f"  {format_monomial(m):<24} {list(row)}")
    return 2 if failed else 0


def cmd_verify(args):
    def compute(job):
        number, line = job
        try:
            ideal = parse_ideal(line, args.max_exp)
            formula = full_table(ideal, want_multigraded=True, cap=args.max_gens)
            oracles = [
                (field, oracle_betti(ideal, field, args.max_gens, want_multigraded=True))
                for field in ALL_FIELDS
            ]
        except Betti4Error as exc:
            return number, line, exc
        return number, ideal, (formula, oracles)

    failed = False
    bad_input = False
    for number, source, result in _map_ordered(compute, list(_read_inputs(args)), args.jobs):
        if isinstance(result, Betti4Error):
            bad_input = True
            print(f"error (line {number}): {result}", file=sys.stderr)
            continue
        ideal, (formula, oracles) = source, result
        verdicts = []
        for field, oracle in oracles:
            agree = formula.betti == oracle.betti and formula.multigraded == oracle.multigraded
            verdicts.append((field.characteristic, agree, oracle))
        tag = " ".join(f"char{c}={'ok' if a else 'FAIL'}" for c, a, _ in verdicts)
        print(f"line {number}: {tag}  betti={list(formula.betti)}  [{format_ideal(ideal)}]")
        for characteristic, agree, oracle in verdicts:
            if agree:
                continue
            failed = True
            degrees = sorted(set(formula.multigraded) | set(oracle.multigraded))
            zero = (0,) * 5
            for m in degrees:
                want = oracle.multigraded.get(m, zero)
                got = formula.multigraded.get(m, zero)
                if want != got:
                    print(f"  mismatch at characteristic {characteristic}")
                    print(f"    multidegree: {format_monomial(m)}")
                    print(f"    expected (oracle): {list(want)}")
                    print(f"    actual (formula):  {list(got)}")
                    break
            else:
                print(f"  total mismatch at characteristic {characteristic}: "
                      f"expected {list(oracle.betti)}, got {list(formula.betti)}")
            break
    if bad_input:
        return 2
    return 1 if failed else 0


def cmd_atlas(args):
    if args.check:
        for entry in atlas_entries():
            ideal = MonomialIdeal(minimalize(mask_monomial(g) for g in entry.gens))
            y = mask_monomial(entry.y_m)
            for field in ALL_FIELDS:
                rows = oracle_betti(ideal, field, want_multigraded=True).multigraded
                row = rows.get(y, (0,) * 5)
                if (row[2], row[3]) != (entry.beta2, entry.beta3):
                    print(
                        f"entry {entry.id}: stored ({entry.beta2}, {entry.beta3}) but oracle "
                        f"gives ({row[2]}, {row[3]}) at characteristic {field.characteristic}"
                    )
                    return 1
        print("all 66 entries agree with the oracle over every supported field")
        return 0
    if args.json:
        print(json.dumps(atlas_records()))
        return 0
    print(f"{'id':>3}  {'generators':<36} {'y_m':<6} {'b2':>2}  {'b3':>2}")
    for entry in atlas_entries():
        gens = ",".join(mask_string(g) for g in entry.gens)
        print(f"{entry.id:>3}  {gens:<36} {mask_string(entry.y_m):<6} "
              f"{entry.beta2:>2}  {entry.beta3:>2}")
    return 0


def sample_ideal(rng, max_gens, max_exp):
    """Random model: generator count uniform in [1, max_gens], exponents
    uniform in [0, max_exp], zero monomials resampled, then minimalized."""
    count = rng.randint(1, max_gens)
    gens = []
    for _ in range(count):
        m = tuple(rng.randint(0, max_exp) for _ in range(NUM_VARS))
        while not any(m):
            m = tuple(rng.randint(0, max_exp) for _ in range(NUM_VARS))
        gens.append(m)
    return MonomialIdeal(minimalize(gens))


def cmd_experiment(args):
    rng = random.Random(args.seed)
    ideals = [sample_ideal(rng, args.max_gens, args.max_exp) for _ in range(args.samples)]
    tables = _map_ordered(lambda ideal: full_table(ideal, cap=args.max_gens), ideals, args.jobs)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["seed_index", "num_gens", "beta2", "beta3", "beta4", "pd", "beta3_gt_beta2"])
    wins = 0
    wins_pd4 = 0
    for index, (ideal, table) in enumerate(zip(ideals, tables)):
        b = table.betti
        greater = b[3] > b[2]
        wins += greater
        wins_pd4 += greater and table.pd == 4
        writer.writerow([index, len(ideal.gens), b[2], b[3], b[4], table.pd,
                         str(greater).lower()])
    print(f"# samples={args.samples} seed={args.seed} "
          f"max_gens={args.max_gens} max_exp={args.max_exp}")
    print(f"# beta3_gt_beta2={wins} of which pd4={wins_pd4}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="betti4",
        description="Betti numbers of monomial ideals in four variables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="compute Betti tables")
    _input_flags(p)
    style = p.add_mutually_exclusive_group()
    style.add_argument("--json", action="store_true", help="JSON Lines output")
    style.add_argument("--table", action="store_true", help="aligned text output (default)")
    p.add_argument("--multigraded", action="store_true", help="include per-degree rows")
    _common_flags(p)
    p.set_defaults(run=cmd_betti)

    p = sub.add_parser("verify", help="check formulas against the homology oracle")
    _input_flags(p)
    _common_flags(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("atlas", help="dump or re-check the squarefree class table")
    p.add_argument("--json", action="store_true", help="JSON array output")
    p.add_argument("--check", action="store_true", help="re-derive every row via the oracle")
    p.set_defaults(run=cmd_atlas)

    p = sub.add_parser("experiment", help="random-ideal statistics as CSV")
    p.add_argument("--samples", type=int, default=100, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument(
        "--max-gens", type=int, default=8, metavar="N",
        help="generator count upper bound for the random model (default 8)",
    )
    p.add_argument(
        "--max-exp", type=int, default=4, metavar="N",
        help="exponent upper bound for the random model (default 4)",
    )
    _common_flags(p, caps=False)
    p.set_defaults(run=cmd_experiment)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.run(args)


def entry():
    sys.exit(main())
