"""Command-line interface: every subcommand prints one JSON document.

Exit status is 0 on success, 2 when the arguments are invalid, and 1 on an
internal error. Rationals are always written as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import dedekind, eta, invariants, monopole, rokhlin
from .exact import format_rational
from .groups import (
    acts_freely,
    construct_group,
    contains_subgroup_isomorphic_to,
    extension_candidates,
    group_profile,
    normal_subgroups,
    parse_group_spec,
    space_form_groups_of_order,
    sylow_2_subgroup,
)

__all__ = ["main", "build_parser", "reproduce_paper"]


class UsageError(ValueError):
    pass


def _q(x: Fraction | int) -> str:
    return format_rational(x)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_dedekind(args: argparse.Namespace) -> Dict[str, object]:
    kind = args.kind
    if kind == "s":
        _need(args, "b", "c")
        return {"value": _q(dedekind.s_sum(args.b, args.c, method=args.method or "fast"))}
    if kind == "d":
        _need(args, "a", "b", "c")
        return {"value": _q(dedekind.d_sum(args.a, args.b, args.c, method=args.method or "reduce"))}
    if kind == "special":
        _need(args, "x", "y")
        return {"value": _q(dedekind.d_special(args.x, args.y))}
    if kind == "cot":
        _need(args, "a", "b", "c")
        value = dedekind.cotangent_sum(args.a, args.b, args.c)
        exact = dedekind.d_sum(args.a, args.b, args.c)
        return {"value": value, "dedekind": _q(exact), "difference": abs(value - float(exact))}
    _need(args, "a", "b", "c")
    return {"defect": _q(dedekind.rademacher_defect(args.a, args.b, args.c))}


def cmd_eta(args: argparse.Namespace) -> Dict[str, object]:
    kind = args.kind
    if kind == "closed":
        _need(args, "u", "v")
        return {"value": _q(eta.eta_dihedral_closed(args.u, args.v))}
    if kind == "sum":
        _need(args, "u", "v")
        rep = eta.dihedral_representation(args.u, args.v)
        value = eta.eta_space_form(rep)
        return {"order": rep.order, **value.to_json()}
    if kind == "case":
        _need(args, "m", "b")
        return {"value": _q(eta.eta_case_formula(args.m, args.b))}
    if kind == "geometric":
        _need(args, "b", "d")
        return {"value": _q(eta.eta_geometric(args.b, args.d))}
    return eta.dihedral_contradiction_scan(args.max_m, args.max_b).to_json()


def cmd_rokhlin(args: argparse.Namespace) -> Dict[str, object]:
    if args.c is not None:
        a, b = args.c
        return {"value": rokhlin.c_function(a, b)}
    if args.tetrahedral:
        return rokhlin.tetrahedral_contradiction().to_json()
    if args.seifert is None:
        raise UsageError("give --seifert, --c A B, or --tetrahedral")
    s = rokhlin.parse_seifert(args.seifert)
    z2hs, cert = rokhlin.is_z2_homology_sphere(s)
    out: Dict[str, object] = {"seifert": str(s), "z2hs": z2hs, "certificate": str(cert)}
    out["euler"] = _q(rokhlin.euler_number(s))
    result = rokhlin.rokhlin_mu(s)
    out.update(
        {
            "mu": _q(result.mu),
            "mod2": result.mod2,
            "c_arguments": [list(x) for x in result.c_arguments],
            "c_values": list(result.c_values),
            "sign_e": result.sign_e,
        }
    )
    return out


def cmd_group(args: argparse.Namespace) -> Dict[str, object]:
    spec = parse_group_spec(args.name)
    if spec.order > 360 and (args.normal or args.contains):
        raise UsageError("subgroup searches are limited to order <= 360")
    g = construct_group(spec)
    p = group_profile(g)
    out: Dict[str, object] = {
        "group": str(spec),
        "order": p.order,
        "center_order": p.center_order,
        "involution_count": p.involution_count,
        "element_orders": {str(k): v for k, v in p.element_order_histogram},
        "abelianization": list(p.abelianization_invariants),
        "acts_freely": acts_freely(spec),
    }
    if args.normal:
        out["normal_subgroups"] = [
            {"order": s.order, "type": None if s.spec is None else str(s.spec)} for s in normal_subgroups(g)
        ]
    if args.sylow2:
        s = sylow_2_subgroup(g)
        out["sylow_2"] = {"order": s.order, "type": None if s.spec is None else str(s.spec)}
    if args.contains:
        target = parse_group_spec(args.contains)
        found, witness = contains_subgroup_isomorphic_to(g, target)
        out["contains"] = {"target": str(target), "found": found, "witness": None if witness is None else list(witness)}
    return out


def cmd_spaceforms(args: argparse.Namespace) -> Dict[str, object]:
    if args.extension is not None:
        if args.quotient is None:
            raise UsageError("--extension needs --quotient")
        normal = parse_group_spec(args.extension)
        if normal.order * args.quotient > 360:
            raise UsageError("extension checks are limited to total order <= 360")
        found = extension_candidates(normal, args.quotient)
        return {"normal": str(normal), "quotient_order": args.quotient, "groups": [str(s) for s in found]}
    if args.order is None:
        raise UsageError("give --order N or --extension NAME --quotient Q")
    if not 1 <= args.order <= 10000:
        raise UsageError("order must be between 1 and 10000")
    return {"order": args.order, "groups": [str(s) for s in space_form_groups_of_order(args.order)]}


def cmd_quotients(args: argparse.Namespace) -> object:
    config = monopole.load_config(args.file)
    return monopole.quotients_to_json(monopole.classify_quotients(config))


def cmd_bound(args: argparse.Namespace) -> Dict[str, object]:
    if args.corollary_c is not None:
        return invariants.corollary_c_descriptor(args.corollary_c).to_json()
    if args.b2 is None:
        raise UsageError("give --b2 N or --corollary-c EULER")
    value = invariants.corollary_b_bound(args.b2)
    out: Dict[str, object] = {"b2": args.b2, "energy_pi2": _q(value)}
    if args.check:
        best, witness = invariants.corollary_b_minimum(args.b2)
        out["minimum_energy_pi2"] = _q(best)
        out["achieved_by"] = witness.to_json()
    return out


def reproduce_paper(timing: bool = False) -> Dict[str, object]:
    """Run every non-cyclic case of the classification and record the verdicts."""
    cases: List[Dict[str, object]] = []

    def run(name: str, body: Callable[[], Dict[str, object]]) -> None:
        start = time.perf_counter()
        entry = {"case": name, **body()}
        if timing:
            entry["seconds"] = round(time.perf_counter() - start, 3)
        cases.append(entry)

    def icosahedral() -> Dict[str, object]:
        found = extension_candidates(parse_group_spec("I*"), 3)
        return {
            "check": "space form groups with a normal I* of index 3",
            "groups": [str(s) for s in found],
            "verdict": "impossible" if not found else "open",
        }

    def octahedral() -> Dict[str, object]:
        found = extension_candidates(parse_group_spec("O*"), 2)
        return {
            "check": "space form groups with a normal O* of index 2",
            "groups": [str(s) for s in found],
            "verdict": "impossible" if not found else "open",
        }

    def tetrahedral() -> Dict[str, object]:
        found = extension_candidates(parse_group_spec("T*"), 7)
        report = rokhlin.tetrahedral_contradiction()
        return {
            "check": "space form groups with a normal T* of index 7, then the Rokhlin invariant",
            "groups": [str(s) for s in found],
            "mu": _q(report.mu),
            "required_mu": _q(report.required_mu),
            "verdict": "impossible" if report.contradiction else "open",
        }

    def dihedral() -> Dict[str, object]:
        scan = eta.dihedral_contradiction_scan(1000, 1000)
        ok = scan.family1 == (1,) and not scan.family2
        return {
            "check": "eta invariant equations for Z_m x D*_4b and D*_8b",
            "family1_solutions": list(scan.family1),
            "family2_solutions": list(scan.family2),
            "verdict": "impossible" if ok else "open",
        }

    run("icosahedral", icosahedral)
    run("octahedral", octahedral)
    run("tetrahedral", tetrahedral)
    run("dihedral", dihedral)
    cases.append({"case": "cyclic", "check": "monopole symmetries", "verdict": "survives"})
    return {"cases": cases}


def cmd_reproduce(args: argparse.Namespace) -> Dict[str, object]:
    return reproduce_paper(timing=args.timing)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} {args.kind} needs {' '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="instanton-quotients", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind sums")
    p.add_argument("kind", choices=["s", "d", "special", "cot", "rademacher"])
    for name in ("a", "b", "c", "x", "y"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--method", choices=["fast", "brute", "reduce"])
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("eta", parents=[common], help="eta invariants of dihedral space forms")
    p.add_argument("kind", choices=["closed", "sum", "case", "geometric", "scan"])
    for name in ("u", "v", "m", "b", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--max-m", type=int, default=1000)
    p.add_argument("--max-b", type=int, default=1000)
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("rokhlin", parents=[common], help="Rokhlin invariant of Seifert data")
    p.add_argument("--seifert", help='e.g. "0; 3/4, 3/4, -2/3"')
    p.add_argument("--c", nargs=2, type=int, metavar=("A", "B"), help="evaluate c(A, B)")
    p.add_argument("--tetrahedral", action="store_true", help="the Z7 x T* contradiction")
    p.set_defaults(func=cmd_rokhlin)

    p = sub.add_parser("group", parents=[common], help="profile of a space form group")
    p.add_argument("name", help='e.g. "D*96", "Z7xT*", "T\'(v=2)"')
    p.add_argument("--normal", action="store_true")
    p.add_argument("--sylow2", action="store_true")
    p.add_argument("--contains", metavar="TARGET")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("spaceforms", parents=[common], help="space form groups of an order, or extension checks")
    p.add_argument("--order", type=int)
    p.add_argument("--extension", metavar="NORMAL")
    p.add_argument("--quotient", type=int)
    p.set_defaults(func=cmd_spaceforms)

    p = sub.add_parser("quotients", parents=[common], help="free cyclic quotients of a monopole configuration")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_quotients)

    p = sub.add_parser("bound", parents=[common], help="energy bound for a given b2")
    p.add_argument("--b2", type=int)
    p.add_argument("--check", action="store_true", help="also minimize over catalog and quotients")
    p.add_argument("--corollary-c", type=int, metavar="EULER")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("reproduce-paper", parents=[common], help="run the full non-cyclic case analysis")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds per case")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - reported, not raised
        print(json.dumps({"error": f"internal error: {exc!r}"}), file=sys.stderr)
        return 1
    print(json.dumps(result, indent=2 if args.pretty else None))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
