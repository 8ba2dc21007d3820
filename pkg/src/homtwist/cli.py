"""Command-line front end.

Subcommands:
  verify  -- run axiom suites for a scenario at chosen degree bounds
  act     -- apply an element of U(sl(2)) to a polynomial
  twist   -- print twisted product/coproduct tables on the enumerated basis

Exit codes: 0 all checks pass, 1 axiom failure, 2 input error, 3 internal
range escape.  Output is byte-deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import actions, finalg, homcore
from .polyalg import Poly
from .report import RangeEscapeError
from .scalars import QLaurent, Rational
from .uea import UElem, enumerate_pbw, render_mono

EXIT_PASS = 0
EXIT_AXIOM_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RANGE_ESCAPE = 3

SL2_SUITES = (
    "hom-associativity",
    "hom-bialgebra",
    "module-axiom",
    "module-hom-algebra",
    "mu-module-morphism",
    "compatibility",
    "classical",
    "hom-lie",
)

FINALG_SUITES = (
    "hom-associativity",
    "hom-bialgebra",
    "module-axiom",
    "module-hom-algebra",
    "mu-module-morphism",
)


def _default_bound(name, fallback):
    value = os.environ.get(name)
    return int(value) if value else fallback


def build_parser():
    parser = argparse.ArgumentParser(
        prog="homtwist",
        description="Construct and verify Hom-algebra structures exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run axiom suites for a scenario")
    verify.add_argument("scenario", choices=["sl2-q", "finalg"])
    verify.add_argument(
        "--bound-h",
        type=int,
        default=_default_bound("HOMTWIST_BOUND_H", 3),
        help="degree bound for bialgebra-side basis elements",
    )
    verify.add_argument(
        "--bound-a",
        type=int,
        default=_default_bound("HOMTWIST_BOUND_A", 3),
        help="degree bound for algebra-side basis elements",
    )
    verify.add_argument(
        "--suite",
        action="append",
        help="axiom suite identifier (repeatable; default: all)",
    )
    verify.add_argument(
        "--negative-control",
        action="store_true",
        help="replace alpha_H^2 by alpha_H in the module Hom-algebra axiom",
    )
    verify.add_argument("--file", help="scenario file for the finalg scenario")
    verify.add_argument("--report", help="write a machine-readable JSON report here")

    act = sub.add_parser("act", help="apply a U(sl(2)) element to a polynomial")
    act.add_argument("element", help='e.g. "X" or "q^2*X Y + Z^2"')
    act.add_argument("poly", help='e.g. "y" or "x^2*y + 3*x"')
    act.add_argument("--deformed", action="store_true", help="use rho_alpha")
    act.add_argument("--q-value", help="specialize q at this rational, e.g. 1 or 1/2")

    twist = sub.add_parser("twist", help="print twisted structure tables")
    twist.add_argument("scenario", choices=["sl2", "finalg"])
    twist.add_argument(
        "--bound",
        type=int,
        default=_default_bound("HOMTWIST_BOUND_H", 2),
        help="degree bound for the enumerated basis (sl2)",
    )
    twist.add_argument("--file", help="scenario file for the finalg scenario")
    return parser


# -- verify ------------------------------------------------------------


def _sl2_reports(bounds, suites, negative_control):
    bound_h, bound_a = bounds
    deformed = actions.deformed_scenario(bound_h, bound_a)
    alpha_power = 1 if negative_control else 2
    reports = []
    for suite in suites:
        if suite == "hom-associativity":
            twisted = homcore.yau_twist_algebra(
                actions.plane_carrier(bound_a, actions.alpha_plane())
            )
            report = homcore.check_hom_associativity(twisted).merge(
                homcore.check_multiplicativity(twisted)
            )
            report.name = "hom-associativity(A_alpha)"
            report.equation = "Eq. (1.2)"
        elif suite == "hom-bialgebra":
            report = homcore.check_hom_bialgebra(deformed.H)
            report.name = "hom-bialgebra(U(sl2)_alpha)"
            report.equation = "Eqs. (2.3)-(2.5)"
        elif suite == "module-axiom":
            report = homcore.check_module_axiom(deformed.H, deformed.module_carrier())
        elif suite == "module-hom-algebra":
            report = homcore.check_module_hom_algebra(deformed, alpha_power=alpha_power)
        elif suite == "mu-module-morphism":
            report = homcore.check_mu_module_morphism(deformed, alpha_power=alpha_power)
        elif suite == "compatibility":
            report = actions.check_alphaWP(bound_a)
            report = report.merge(actions.check_alphaza(bound_h, bound_a))
            report.name = "compatibility"
            report.equation = "Eqs. (1.5)/(1.7)/(4.2)"
        elif suite == "classical":
            report = actions.check_classical_module_algebra(bound_h, bound_a)
        elif suite == "hom-lie":
            lie = actions.u_carrier(1)
            bracket = homcore.lie_yau_twist(
                homcore.commutator_bracket(lie), actions.alpha_u_handle()
            )
            twisted_lie = homcore.yau_twist_algebra(lie, actions.alpha_u_handle())
            report = homcore.check_hom_jacobi(twisted_lie, bracket)
            report.name = "hom-lie(sl2 twisted)"
        else:
            raise ValueError(f"unknown suite {suite!r}")
        reports.append(report)
    return reports


def _finalg_reports(path, suites, negative_control):
    if path:
        algebra, G, a = finalg.load_scenario(path)
    else:
        algebra, G, a = finalg.m2_example()
    scenario = finalg.build_example31(algebra, G, a)
    alpha_power = 1 if negative_control else 2
    reports = []
    for suite in suites:
        if suite == "hom-associativity":
            report = homcore.check_hom_associativity(scenario.A).merge(
                homcore.check_multiplicativity(scenario.A)
            )
            report.name = "hom-associativity(A_alpha)"
            report.equation = "Eq. (1.2)"
        elif suite == "hom-bialgebra":
            report = homcore.check_hom_bialgebra(scenario.H)
            report.name = "hom-bialgebra(k[G])"
        elif suite == "module-axiom":
            report = homcore.check_module_axiom(scenario.H, scenario.module_carrier())
        elif suite == "module-hom-algebra":
            report = homcore.check_module_hom_algebra(scenario, alpha_power=alpha_power)
        elif suite == "mu-module-morphism":
            report = homcore.check_mu_module_morphism(scenario, alpha_power=alpha_power)
        else:
            raise ValueError(f"unknown suite {suite!r}")
        reports.append(report)
    return reports


def cmd_verify(args):
    known = SL2_SUITES if args.scenario == "sl2-q" else FINALG_SUITES
    suites = args.suite if args.suite else list(known)
    for suite in suites:
        if suite not in known:
            raise InputError(
                f"unknown suite {suite!r} for scenario {args.scenario}; "
                f"known: {', '.join(known)}"
            )
    if args.bound_h < 1 or args.bound_a < 1:
        raise InputError("bounds must be >= 1")
    if args.scenario == "sl2-q":
        reports = _sl2_reports(
            (args.bound_h, args.bound_a), suites, args.negative_control
        )
    else:
        reports = _finalg_reports(args.file, suites, args.negative_control)

    for report in reports:
        print(report.summary())
        for ce in report.counterexamples[:5]:
            print(f"  at ({', '.join(ce.rendered_inputs)}):")
            print(f"    lhs = {ce.lhs}")
            print(f"    rhs = {ce.rhs}")
        if len(report.counterexamples) > 5:
            print(f"  ... {len(report.counterexamples) - 5} more")

    if args.report:
        document = {
            "scenario": args.scenario,
            "bound_h": args.bound_h,
            "bound_a": args.bound_a,
            "negative_control": args.negative_control,
            "reports": [r.to_dict() for r in reports],
        }
        with open(args.report, "w") as fh:
            json.dump(document, fh, indent=2)
            fh.write("\n")

    return EXIT_PASS if all(r.passed for r in reports) else EXIT_AXIOM_FAILURE


# -- act ---------------------------------------------------------------


def cmd_act(args):
    try:
        z = UElem.parse(args.element)
        p = Poly.parse(args.poly)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = actions.deformed_act(z, p) if args.deformed else actions.act(z, p)
    if args.q_value is not None:
        try:
            q0 = Rational(args.q_value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad q value {args.q_value!r}") from exc
        if q0 == 0:
            raise InputError("q must be nonzero")
        specialized = Poly(
            {key: QLaurent.of(c.specialize(q0)) for key, c in result.terms.items()}
        )
        print(specialized)
    else:
        print(result)
    return EXIT_PASS


# -- twist -------------------------------------------------------------


def cmd_twist(args):
    if args.scenario == "sl2":
        handle = actions.alpha_u_handle()
        carrier = homcore.yau_twist_bialgebra(actions.u_carrier(args.bound), handle)
        print("# twisted product mu_alpha on PBW basis")
        for m1 in enumerate_pbw(args.bound):
            for m2 in enumerate_pbw(args.bound):
                product = carrier.mul(UElem.monomial(m1), UElem.monomial(m2))
                print(f"({render_mono(m1)}) * ({render_mono(m2)}) = {product}")
        print("# twisted coproduct Delta_alpha on PBW basis")
        for mono in enumerate_pbw(args.bound):
            tensor = carrier.comul(UElem.monomial(mono))
            print(
                f"Delta({render_mono(mono)}) = "
                + homcore.render_tensor(tensor, carrier, carrier)
            )
    else:
        if args.file:
            algebra, G, a = finalg.load_scenario(args.file)
        else:
            algebra, G, a = finalg.m2_example()
        scenario = finalg.build_example31(algebra, G, a)
        print("# twisted product mu_alpha on algebra basis")
        for i in scenario.A.basis:
            for j in scenario.A.basis:
                product = scenario.A.mul(
                    scenario.A.element(i), scenario.A.element(j)
                )
                print(
                    f"{scenario.A.render_key(i)} * {scenario.A.render_key(j)} = "
                    + scenario.A.render_elem(product)
                )
    return EXIT_PASS


class InputError(Exception):
    pass


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad input already; normalize anything else
        return EXIT_INPUT_ERROR if exc.code else EXIT_PASS
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "act":
            return cmd_act(args)
        if args.command == "twist":
            return cmd_twist(args)
        raise InputError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (FileNotFoundError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except RangeEscapeError as exc:
        print(f"internal range escape: {exc}", file=sys.stderr)
        return EXIT_RANGE_ESCAPE


if __name__ == "__main__":
    sys.exit(main())
