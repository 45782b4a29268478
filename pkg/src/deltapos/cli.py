"""Command line front end.

    deltapos gcoeff --lambda 1,1,1,1
    deltapos verify all --max-n 10 --series-degree 4
    deltapos check-specializations --n 6 --samples 2,3,5/2

Exit status is 0 when no check FAILs, 1 otherwise, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .delta_core import (
    delta_e1_closed,
    delta_e1_coefficient,
    extract_certificate,
    f_poly,
    f_poly_tableau,
    g_coefficient,
    g_raw_quotient,
    reconstruct,
)
from .delta_e3 import delta3_coefficient, delta3_via_F_samplecheck, positivity_report
from .enriched import (
    WeightClass,
    check_injection,
    g_via_all_enriched,
    g_via_leftovers,
    leftover_counts,
    weight_counts,
)
from .genfun import build_F, check_F_properties, exponent_triples, g_via_genfun
from .qt_algebra import QtPoly
from .recursion import (
    ThreePartShape,
    check_qt1,
    check_rank,
    g00n_at_one,
    g_00k_closed,
    g_a0k_closed,
    g_block,
    g_block_bruteforce,
    g_via_recursion,
)
from .shapes import Partition, conjugate, partitions, three_part_shape

PASS, FAIL, WARN = "PASS", "FAIL", "WARN"


@dataclass
class Check:
    name: str
    status: str
    payload: dict = field(default_factory=dict)


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, name: str, ok: bool | str, **payload) -> None:
        status = ok if isinstance(ok, str) else (PASS if ok else FAIL)
        self.results.append(Check(name, status, payload))

    @property
    def exit_code(self) -> int:
        return 1 if any(c.status == FAIL for c in self.results) else 0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "results": [
                {"name": c.name, "status": c.status, "payload": c.payload} for c in self.results
            ],
        }
        if timing:
            out["elapsed"] = f"{self.elapsed:.3f}"
        return out


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _fractions(text: str) -> list[Fraction]:
    return [_fraction(x) for x in text.split(",") if x.strip()]


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _print_poly(label: str, p: QtPoly) -> None:
    print(f"{label}: {p}")
    print(f"{label} json: {p.to_json()}")


# -- single-shape commands ----------------------------------------------------


def cmd_gcoeff(args, report: RunReport) -> None:
    lam = args.lam
    g = g_coefficient(lam)
    cert = extract_certificate(f_poly(lam))
    _print_poly(f"g_{tuple(lam)}", g)
    if cert.positive:
        print(f"q,t-analog form: {cert}")
    print(f"certificate json: {cert.to_json()}")
    report.add("certificate reconstructs g", reconstruct(cert) == g,
               polynomial=g.to_dict(), certificate=cert.to_dict())
    report.add("certificate positive", cert.positive)


def cmd_certify(args, report: RunReport) -> None:
    lam = args.lam
    f = f_poly(lam)
    cert = extract_certificate(f)
    _print_poly(f"F_{tuple(conjugate(lam))}", f)
    print(f"certificate: {cert}")
    print(f"certificate json: {cert.to_json()}")
    report.add("F nonnegative", f.is_nonnegative() or not f, F=f.to_dict())
    report.add("F two routes agree", f == f_poly_tableau(lam))
    report.add("certificate reconstructs g", reconstruct(cert) == g_coefficient(lam))
    report.add("certificate positive", cert.positive, certificate=cert.to_dict())


def cmd_delta1(args, report: RunReport) -> None:
    lam = args.lam
    d = delta_e1_coefficient(lam)
    _print_poly(f"Delta_e1 coefficient of s_{tuple(lam)}", d)
    report.add("closed form agrees", d == delta_e1_closed(lam), polynomial=d.to_dict())


def cmd_delta3(args, report: RunReport) -> None:
    lam = args.lam
    rep = positivity_report(lam)
    _print_poly(f"Delta_e3 coefficient of s_{tuple(lam)}", rep.polynomial)
    print(f"nonnegative: {rep.nonnegative}  tau-symmetric: {rep.tau_symmetric}  "
          f"value at q=t=1: {rep.value_at_one}")
    report.add("positivity probe", rep.status, polynomial=rep.polynomial.to_dict(),
               nonnegative=rep.nonnegative, tau_symmetric=rep.tau_symmetric,
               value_at_one=str(rep.value_at_one))
    samples = [(Fraction(2), Fraction(3)), (Fraction(5), Fraction(2)), (Fraction(3, 7), Fraction(5, 2))]
    report.add("partial-fraction formula at samples", delta3_via_F_samplecheck(lam, samples))


# -- verify suites --------------------------------------------------------------


def suite_injection(report: RunReport, shapes) -> None:
    for lam in shapes:
        shape = conjugate(lam)
        counts = weight_counts(shape)
        left = leftover_counts(shape)
        classes, ok = [], True
        for cls in sorted(set(counts) | set(left), key=lambda c: (c.t_exp, c.q_exp)):
            n, m = counts.get(cls, 0), left.get(cls, 0)
            classes.append({"t": cls.t_exp, "q": cls.q_exp, "count": n, "leftover": m})
            if cls.t_exp > cls.q_exp:
                diff = n - counts.get(WeightClass(cls.q_exp, cls.t_exp), 0)
                ok &= diff >= 0 and diff == m
            else:
                ok &= m == 0
        maps = check_injection(shape)
        report.add(f"injection accounting lam={tuple(lam)}", ok, classes=classes)
        report.add(f"injection maps lam={tuple(lam)}",
                   PASS if not (maps["undefined"] or maps["collisions"] or maps["hit_leftover"]) else WARN,
                   **maps)


def suite_recursion(report: RunReport, max_n: int) -> None:
    report.add("g[0,0,k] closed = brute force, k<=20",
               all(g_00k_closed(k) == g_block_bruteforce(0, 0, k) for k in range(21)))
    report.add("g[a,0,k] closed = brute force, a<=6, k<=12",
               all(g_a0k_closed(a, k) == g_block_bruteforce(a, 0, k)
                   for a in range(7) for k in range(13)))
    report.add("g[a,k1,k2] = brute force, a+k1+k2<=12",
               all(g_block(a, k1, k2) == g_block_bruteforce(a, k1, k2)
                   for a in range(13) for k1 in range(13) for k2 in range(13)
                   if a + k1 + k2 <= 12))
    for n in range(max_n + 1):
        ok = all(g_via_recursion(ThreePartShape.from_partition(lam)) == g_coefficient(lam)
                 for lam in partitions(n, 3))
        report.add(f"recursion = algebraic route, n={n}", ok)


def suite_series(report: RunReport, degree: int) -> None:
    F = build_F(degree)
    props = check_F_properties(degree, F)
    report.add(f"F coefficients nonnegative (degree {degree})", props.nonnegative)
    report.add(f"F coefficients t-heavy (degree {degree})", props.t_heavy)
    bad = [abc for abc in exponent_triples(degree)
           if g_via_genfun(*abc, degree, F=F) != g_coefficient(three_part_shape(abc[2], abc[1], abc[0]))]
    report.add(f"series route = algebraic route (degree {degree})", not bad,
               mismatches=[list(x) for x in bad])


def suite_core(report: RunReport, max_n: int) -> None:
    for n in range(max_n + 1):
        shapes = list(partitions(n))
        narrow = [lam for lam in shapes if lam.first() <= 3]
        agree = all(
            len({g_coefficient(lam), g_raw_quotient(lam), g_via_all_enriched(lam),
                 g_via_leftovers(lam), g_via_recursion(ThreePartShape.from_partition(lam))}) == 1
            for lam in narrow
        )
        report.add(f"five routes agree, n={n}", agree, shapes=len(narrow))
        positive = all(
            extract_certificate(f_poly(lam)).positive
            and reconstruct(extract_certificate(f_poly(lam))) == g_coefficient(lam)
            for lam in shapes
        )
        report.add(f"positive certificates, n={n}", positive, shapes=len(shapes))
        report.add(f"Delta_e1 closed form, n={n}",
                   all(delta_e1_coefficient(lam) == delta_e1_closed(lam) for lam in shapes))


def suite_specializations(report: RunReport, n_max: int, samples) -> None:
    for n in range(2, n_max + 1):
        report.add(f"g_(1^{n}) at q=t=1 is 2*C({n + 2},4)", check_qt1(n))
        report.add(f"g_(1^{n}) at t=1/q matches rank formula", check_rank(n, samples),
                   samples=[str(s) for s in samples])
        report.add(f"g[0,0,{n}] at q=t=1 is 2*C({n + 1},3)", g00n_at_one(n) == 2 * comb(n + 1, 3))


def suite_delta3(report: RunReport, max_n: int) -> None:
    for lam in partitions(3):
        rhs = g_coefficient(lam) - delta_e1_coefficient(lam) + (1 if lam == (1, 1, 1) else 0)
        report.add(f"Delta_e3 n=3 identity lam={tuple(lam)}", delta3_coefficient(lam) == rhs)
    samples = [(2, 3), (5, 2), (Fraction(3, 7), Fraction(5, 2))]
    for n in range(max_n + 1):
        shapes = list(partitions(n))
        report.add(f"Delta_e3 tau-symmetric, n={n}",
                   all(delta3_coefficient(lam).tau() == delta3_coefficient(lam) for lam in shapes))
        if n <= 6:
            report.add(f"Delta_e3 partial fractions, n={n}",
                       all(delta3_via_F_samplecheck(lam, samples) for lam in shapes))
        for lam in shapes:
            rep = positivity_report(lam)
            if rep.status != PASS:
                report.add(f"Delta_e3 positivity lam={tuple(lam)}", WARN)


def cmd_verify(args, report: RunReport) -> None:
    what = args.what
    max_n = args.max_n
    if what in ("injection", "all"):
        if args.lam is not None and what == "injection":
            shapes = [args.lam]
        else:
            shapes = [lam for n in range(min(max_n, 10) + 1) for lam in partitions(n, 3)]
        suite_injection(report, shapes)
    if what in ("recursion", "all"):
        suite_recursion(report, max_n)
    if what in ("series", "all"):
        suite_series(report, args.series_degree)
    if what == "all":
        suite_core(report, max_n)
        suite_specializations(report, max_n, [Fraction(2), Fraction(3), Fraction(5, 2)])
        suite_delta3(report, min(max_n, 7))


def cmd_specializations(args, report: RunReport) -> None:
    suite_specializations(report, args.n, args.samples)


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltapos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", metavar="PATH", help="write the run report as JSON")
        p.add_argument("--timing", action="store_true", help="include elapsed time in the JSON")
        return p

    for name, fn, helptext in (
        ("gcoeff", cmd_gcoeff, "Schur coefficient of Delta_e2 e_n and its certificate"),
        ("certify", cmd_certify, "F polynomial and certificate checks"),
        ("delta1", cmd_delta1, "Schur coefficient of Delta_e1 e_n"),
        ("delta3", cmd_delta3, "Schur coefficient of Delta_e3 e_n with positivity probe"),
    ):
        p = common(sub.add_parser(name, help=helptext))
        p.add_argument("--lambda", dest="lam", type=_partition, required=True,
                       metavar="PARTS", help="comma-separated parts, e.g. 3,2,2,1")
        p.set_defaults(func=fn)

    p = common(sub.add_parser("verify", help="run identity suites"))
    p.add_argument("what", choices=("injection", "recursion", "series", "all"))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--series-degree", "--degree", dest="series_degree", type=int, default=4)
    p.add_argument("--lambda", dest="lam", type=_partition, default=None, metavar="PARTS")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("check-specializations", help="q=t=1 and t=1/q checks"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=_fractions, default=[Fraction(2), Fraction(3), Fraction(5, 2)])
    p.set_defaults(func=cmd_specializations)
    return parser


def run(argv: list[str] | None = None) -> RunReport:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {k: (list(v) if isinstance(v, tuple) else v) for k, v in vars(args).items()
              if k not in ("func", "json", "timing")}
    inputs = json.loads(json.dumps(inputs, default=str))
    report = RunReport(args.command if args.command != "verify" else f"verify {args.what}", inputs)
    start = time.perf_counter()
    try:
        args.func(args, report)
    except ValueError as exc:  # InvalidSample and friends
        parser.exit(2, f"deltapos: error: {exc}\n")
    report.elapsed = time.perf_counter() - start
    for c in report.results:
        print(f"{c.status:4}  {c.name}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(timing=args.timing), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return report


def main(argv: list[str] | None = None) -> int:
    return run(argv).exit_code


if __name__ == "__main__":
    sys.exit(main())
