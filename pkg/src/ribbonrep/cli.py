"""Command line front end.

Exit status: 0 on success, 1 when a verification sweep finds a failure,
2 on usage errors and violated preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import AbelianGroupSpec, character_table, chi_sn, psi_wreath, psi_zero_colored
from .partitions import Composition, Partition, boundary_sequence
from .quotient import RPartitePartition, phi_r, r_core, r_quotient
from .ribbons import enumerate_mu_peelings
from .signs import sign_report
from .verify import verify_degree_fact, verify_identity, verify_identity_abelian


def _emit(args, plain: str, data: dict):
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(plain)


def cmd_boundary(args) -> int:
    lam = Partition.parse(args.partition)
    b = boundary_sequence(lam, args.k)
    _emit(args, b.marked(), {"schema": "ribbonrep.boundary/1", "lambda": str(lam), "bits": b.bits, "anchor": b.anchor})
    return 0


def cmd_core(args) -> int:
    lam = Partition.parse(args.partition)
    core = r_core(lam, args.r)
    _emit(args, str(core), {"schema": "ribbonrep.core/1", "lambda": str(lam), "r": args.r, "core": str(core)})
    return 0


def cmd_quotient(args) -> int:
    lam = Partition.parse(args.partition)
    quo = r_quotient(lam, args.r)
    _emit(args, str(quo), {"schema": "ribbonrep.quotient/1", "lambda": str(lam), "r": args.r, "quotient": str(quo)})
    return 0


def cmd_compose(args) -> int:
    label = RPartitePartition.parse(args.label)
    lam = phi_r(label)
    _emit(args, str(lam), {"schema": "ribbonrep.compose/1", "quotient": str(label), "r": label.arity, "lambda": str(lam)})
    return 0


def cmd_sign(args) -> int:
    # the report is already structured data; plain and json print the same document
    print(sign_report(Partition.parse(args.partition), args.r, args.k).dumps())
    return 0


def cmd_chi(args) -> int:
    lam = Partition.parse(args.partition)
    mu = Composition.parse(args.mu)
    value = chi_sn(lam, mu)
    _emit(args, str(value), {"schema": "ribbonrep.chi/1", "lambda": str(lam), "mu": str(mu), "value": value})
    return 0


def cmd_psi(args) -> int:
    if args.group is not None:
        group = AbelianGroupSpec.parse(args.group)
        label = RPartitePartition.parse(args.label)
        cls = RPartitePartition.parse(args.cls)
        value = psi_wreath(label, cls, group)
        data = {
            "schema": "ribbonrep.psi/1",
            "group": str(group),
            "label": str(label),
            "class": str(cls),
            "order": value.order,
            "coeffs": list(value.coeffs),
        }
        _emit(args, str(value), data)
        return 0
    lam = Partition.parse(args.label)
    mu = Composition.parse(args.cls)
    value = psi_zero_colored(lam, mu, args.r)
    data = {"schema": "ribbonrep.psi/1", "r": args.r, "lambda": str(lam), "mu": str(mu), "value": value}
    traces = enumerate_mu_peelings(lam, mu, args.r) if args.trace else None
    if args.format == "json":
        if traces is not None:
            data["traces"] = [t.dumps().splitlines() for t in traces]
        print(json.dumps(data))
        return 0
    print(value)
    for t in traces or ():
        print()
        print(t.dumps())
    return 0


def cmd_table(args) -> int:
    table = character_table(AbelianGroupSpec.parse(args.group), args.n)
    if args.format == "json":
        print(table.dumps())
    else:
        sys.stdout.write(table.to_tsv())
    return 0


def cmd_verify(args) -> int:
    if args.degree:
        report = verify_degree_fact(args.n)
    elif args.group is not None:
        report = verify_identity_abelian(AbelianGroupSpec.parse(args.group), args.n, args.jobs, args.compositions)
    else:
        report = verify_identity(args.r, args.n, args.jobs, args.compositions)
    if args.format == "json":
        print(json.dumps(report.to_json(timing=not args.no_timing)))
    else:
        print(report.summary())
        for f in report.failures:
            print(f"  lambda={f.lam} mu={f.mu} psi={f.psi} chi={f.chi} sign={f.sign:+d}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonrep", description="Ribbon combinatorics and wreath product characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("plain", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default="plain")
        p.set_defaults(func=func)
        return p

    p = add("boundary", cmd_boundary, "boundary word with anchor marker")
    p.add_argument("partition")
    p.add_argument("-k", type=int, default=None, help="pad to exactly k rows")

    p = add("core", cmd_core, "r-core")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("partition")

    p = add("quotient", cmd_quotient, "r-quotient of a partition with empty r-core")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("partition")

    p = add("compose", cmd_compose, "interlace an r-quotient back into a partition")
    p.add_argument("label", help="e.g. [4,3|2|1,1]")

    p = add("sign", cmd_sign, "r-sign report (JSON)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("partition")

    p = add("chi", cmd_chi, "symmetric group character value")
    p.add_argument("partition")
    p.add_argument("mu")

    p = add("psi", cmd_psi, "wreath product character value")
    p.add_argument("-r", type=int, default=1, help="zero-colored evaluation on a partition in Par_r")
    p.add_argument("-g", "--group", default=None, help="abelian group, e.g. 3 or 2x2")
    p.add_argument("--trace", action="store_true", help="list the peelings (zero-colored mode)")
    p.add_argument("label")
    p.add_argument("cls", metavar="class")

    p = add("table", cmd_table, "full character table", formats=("plain", "tsv", "json"))
    p.add_argument("-g", "--group", required=True)
    p.add_argument("-n", type=int, required=True)

    p = add("verify", cmd_verify, "exhaustive verification sweeps")
    target = p.add_mutually_exclusive_group()
    target.add_argument("-r", type=int, default=2)
    target.add_argument("-g", "--group", default=None)
    target.add_argument("--degree", action="store_true")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--compositions", action="store_true", help="also check reordered compositions")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"ribbonrep: error: {exc}", file=sys.stderr)
        return 2


run = main
