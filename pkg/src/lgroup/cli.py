"""Batch front door: classify / verify / enumerate over structure files.

Structured output is a stable line-oriented `field = value` format with
dotted keys, emitted in a fixed order so that runs with identical inputs
are byte-identical (the trailing wall-time line is the one field excluded
from that guarantee).
"""

import argparse
import sys
from collections import Counter

from .errors import LGroupError, ValidationError
from .formats import load_group, load_lattice, load_lsubset
from .lattice import is_distributive, product
from .suites import SUITES, run_suite
from .theory import DEFAULT_BUDGET, classify, enumerate_lsubgroups


def _fmt(value):
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "none"
    return str(value)


def _report_lines(prefix, report, group):
    yield f"{prefix}.subject = {report.subject}"
    yield f"{prefix}.parent = {report.parent}"
    for fieldname in (
        "is_lsubgroup", "tip", "tail", "proper", "normal", "abnormal",
        "contranormal", "self_normalizing", "subnormal_defect", "maximal",
    ):
        yield f"{prefix}.{fieldname} = {_fmt(getattr(report, fieldname))}"
    for label, sub in (("normalizer", report.normalizer), ("normal_closure", report.normal_closure)):
        for x in group.elements:
            yield f"{prefix}.{label}.val.{x!r} = {sub.value_of(x).name}"


def _report_text(report, group):
    lines = [f"classification of {report.subject} in {report.parent}:"]
    for fieldname in (
        "is_lsubgroup", "tip", "tail", "proper", "normal", "abnormal",
        "contranormal", "self_normalizing", "subnormal_defect", "maximal",
    ):
        lines.append(f"  {fieldname:<18} {_fmt(getattr(report, fieldname))}")
    for label, sub in (("normalizer", report.normalizer), ("normal_closure", report.normal_closure)):
        vals = ", ".join(f"{x!r}:{sub.value_of(x).name}" for x in group.elements)
        lines.append(f"  {label:<18} {{{vals}}}")
    return lines


def _load_carriers(args, out):
    lat = load_lattice(args.lattice)
    if getattr(args, "product", None):
        lat = product(lat, load_lattice(args.product))
    G = load_group(args.group)
    if not is_distributive(lat):
        print(f"warning: lattice {lat.name} is not distributive; "
              f"theorems proved under complete distributivity may not apply",
              file=sys.stderr)
    return G, lat


def _cmd_classify(args):
    G, lat = _load_carriers(args, sys.stdout)
    mu_name, mu = load_lsubset(args.mu, G, lat)
    eta_name, eta = load_lsubset(args.eta, G, lat)
    if not mu.contains(eta):
        raise ValidationError("eta is not contained in parent mu")
    report = classify(eta, mu, budget=args.budget, subject=eta_name, parent=mu_name)
    if args.format == "structured":
        for line in _report_lines("report", report, G):
            print(line)
    else:
        print("\n".join(_report_text(report, G)))
    return 0


def _cmd_enumerate(args):
    G, lat = _load_carriers(args, sys.stdout)
    mu_name, mu = load_lsubset(args.mu, G, lat)
    subs = enumerate_lsubgroups(mu, budget=args.budget)
    reports = [
        classify(sub, mu, budget=args.budget, subject=f"sub{k:04d}", parent=mu_name)
        for k, sub in enumerate(subs)
    ]
    census = Counter()
    for rep in reports:
        census["normal"] += rep.normal
        census["abnormal"] += rep.abnormal
        census["contranormal"] += rep.contranormal
        census["maximal"] += rep.maximal is True
        if not (rep.normal or rep.abnormal or rep.contranormal or rep.maximal is True):
            census["none"] += 1
    if args.format == "structured":
        print(f"census.count = {len(subs)}")
        for key in ("normal", "abnormal", "contranormal", "maximal", "none"):
            print(f"census.{key} = {census[key]}")
        for k, rep in enumerate(reports):
            for line in _report_lines(f"sub.{k:04d}", rep, G):
                print(line)
    else:
        print(f"{len(subs)} L-subgroups of {mu_name}: "
              + ", ".join(f"{k}={census[k]}" for k in ("normal", "abnormal", "contranormal", "maximal", "none")))
        for k, rep in enumerate(reports):
            flags = [f for f in ("normal", "abnormal", "contranormal") if getattr(rep, f)]
            if rep.maximal is True:
                flags.append("maximal")
            vals = ", ".join(f"{x!r}:{subs[k].value_of(x).name}" for x in G.elements)
            print(f"  sub{k:04d} [{', '.join(flags) or 'none'}] {{{vals}}}")
    return 0


def _cmd_verify(args):
    result = run_suite(args.suite, budget=args.budget)
    if args.format == "structured":
        print(f"suite.name = {result.suite}")
        print(f"suite.cases_run = {result.cases_run}")
        print(f"suite.cases_passed = {result.cases_passed}")
        print(f"suite.cases_skipped = {result.cases_skipped}")
        for c in result.cases:
            print(f"case.{c.case_id}.status = {c.status}")
        for k, (cid, expected, actual) in enumerate(result.failures):
            print(f"failure.{k}.case = {cid}")
            print(f"failure.{k}.expected = {expected}")
            print(f"failure.{k}.actual = {actual}")
        print(f"suite.wall_ms = {result.wall_ms:.1f}")
    else:
        print(f"suite {result.suite}: {result.cases_passed}/{result.cases_run} passed, "
              f"{result.cases_skipped} skipped, {result.wall_ms/1000:.1f}s")
        for c in result.cases:
            marker = {"pass": "ok  ", "fail": "FAIL", "skip": "skip"}[c.status]
            line = f"  [{marker}] {c.case_id}"
            if c.status == "fail":
                line += f"  expected: {c.expected}; actual: {c.actual}"
            elif c.status == "skip":
                line += f"  ({c.actual})"
            print(line)
    return 0 if not result.failures else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lgroup",
        description="lattice-valued subgroup classification over finite groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="search node budget (default %(default)s)")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--seed", type=int, default=0,
                       help="reserved; all computation is deterministic")

    p = sub.add_parser("classify", help="classify one valuation inside a parent")
    p.add_argument("--group", required=True)
    p.add_argument("--lattice", required=True)
    p.add_argument("--product", help="second lattice file; use the product lattice")
    p.add_argument("--mu", required=True)
    p.add_argument("--eta", required=True)
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate and classify all L-subgroups of mu")
    p.add_argument("--group", required=True)
    p.add_argument("--lattice", required=True)
    p.add_argument("--mu", required=True)
    common(p)
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
