"""Command line: ``ordfix <command> ...``; every command prints a JSON report.

Exit codes: 0 all requested properties hold (or the validation is sound),
1 a requested property fails, 2 parse/validation error, 3 soundness violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .correspondence import (
    Correspondence,
    Monotonicity,
    ValueCondition,
    check_monotonicity,
    check_values,
    pre_fixed_sets,
)
from .errors import NoCandidate, OrdfixError
from .fixpoint import extremal_fixed_point, fix_structure
from .game import LatticeGame, check_game, nash_equilibria, nash_equilibria_direct
from .io import dumps, load
from .oracle.fixtures import FIXTURE_NAMES, fixtures
from .oracle.fuzz import default_spec, fuzz
from .oracle.theorems import TheoremId, validate
from .poset import Poset, classify

OK, FAILS, ERROR, UNSOUND = 0, 1, 2, 3


class UsageError(OrdfixError):
    pass


def _json_default(o):
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if isinstance(o, tuple):
        return list(o)
    return str(o)


def _emit(report: dict, out=None) -> None:
    print(json.dumps(report, indent=2, default=_json_default), file=out or sys.stdout)


def _load(ref: str):
    """A path to an instance file, or the name of a built-in fixture."""
    if Path(ref).exists():
        return load(ref)
    if ref in FIXTURE_NAMES:
        return fixtures(ref)
    raise UsageError(f"{ref!r} is neither a file nor a fixture name")


def _expect(obj, kind, what: str):
    if not isinstance(obj, kind):
        raise UsageError(f"expected {what}, got {type(obj).__name__}")
    return obj


def _sorted(P: Poset, xs):
    return sorted(xs, key=P.index)


def _structure(P: Poset) -> dict:
    s = classify(P)
    return {
        "size": len(P),
        "nonempty": s.nonempty,
        "lattice": s.is_lattice,
        "complete_lattice": s.is_complete_lattice,
        "chain_complete": s.is_chain_complete,
        "bottom": s.bottom,
        "top": s.top,
    }


# ---------------------------------------------------------------------------
# commands


def cmd_check_poset(args) -> int:
    obj = _load(args.file)
    P = obj.source if isinstance(obj, Correspondence) else _expect(obj, Poset, "a poset")
    _emit({"command": "check-poset", **_structure(P), "covers": P.covers()})
    return OK


def cmd_check_correspondence(args) -> int:
    F = _expect(_load(args.file), Correspondence, "a correspondence")
    verdicts = {}
    for name in (p.strip() for p in args.props.split(",") if p.strip()):
        try:
            prop = Monotonicity.parse(name)
        except ValueError:
            try:
                cond = ValueCondition.parse(name)
            except ValueError:
                raise UsageError(f"unknown property {name!r}") from None
            verdicts[name] = check_values(F, cond, exhaustive=args.exhaustive)
        else:
            verdicts[name] = check_monotonicity(F, prop)
    holds = all(verdicts.values())
    _emit({
        "command": "check-correspondence",
        "results": [{"property": k, **v.to_dict()} for k, v in verdicts.items()],
        "all_hold": holds,
    })
    return OK if holds else FAILS


def cmd_fix(args) -> int:
    F = _expect(_load(args.file), Correspondence, "a correspondence")
    X = F.source
    rep = fix_structure(F)
    a, b = pre_fixed_sets(F)
    report = {
        "command": "fix",
        "fixed_points": _sorted(X, rep.fixed_points),
        "nonempty": rep.structure.nonempty,
        "complete_lattice": rep.structure.is_complete_lattice,
        "chain_complete": rep.structure.is_chain_complete,
        "largest": rep.largest,
        "least": rep.least,
        "least_below_B": rep.least_below_b,
        "A_F": _sorted(X, a),
        "B_F": _sorted(X, b),
    }
    for side in ("largest", "least"):
        try:
            r = extremal_fixed_point(F, side)
            report[f"{side}_candidate"] = {"candidate": r.candidate, "is_fixed": r.is_fixed, "is_extremal": r.is_extremal}
        except NoCandidate as exc:
            report[f"{side}_candidate"] = {"candidate": None, "reason": str(exc)}
    _emit(report)
    return OK


def cmd_validate(args) -> int:
    obj = _load(args.file)
    aux = None
    if args.aux_m:
        aux = {"M": _expect(_load(args.aux_m), Correspondence, "a correspondence for M")}
    report = validate(args.theorem, obj, aux, dual=args.dual)
    _emit({"command": "validate", **report.to_dict()})
    return OK if report.sound else UNSOUND


def cmd_equilibria(args) -> int:
    G = _expect(_load(args.file), LatticeGame, "a game")
    rep = nash_equilibria(G)
    direct = nash_equilibria_direct(G)
    check = check_game(G)
    agree = rep.fixed_points == direct
    _emit({
        "command": "equilibria",
        "equilibria": [list(G.profile(x)) for x in _sorted(G.space, rep.fixed_points)],
        "complete_lattice": rep.structure.is_complete_lattice,
        "largest": rep.largest,
        "least": rep.least,
        "direct_definition_agrees": agree,
        "theorem": check.to_dict(),
    })
    return OK if check.sound and agree else UNSOUND


def cmd_fuzz(args) -> int:
    from dataclasses import replace

    t = TheoremId.parse(args.theorem)
    spec = default_spec(t)
    if args.max_size is not None:
        spec = replace(spec, max_size=args.max_size, min_size=min(spec.min_size, args.max_size))
    report = fuzz(t, args.count, spec, args.seed, workers=args.workers)
    _emit({"command": "fuzz", **report.to_dict()})
    return OK if report.sound else UNSOUND


def cmd_fixtures(args) -> int:
    if args.name is None:
        _emit({"command": "fixtures", "names": list(FIXTURE_NAMES)})
        return OK
    obj = fixtures(args.name)
    if args.emit:
        print(dumps(obj))
    else:
        _emit({"command": "fixtures", "name": args.name, "type": type(obj).__name__, "repr": repr(obj)})
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordfix", description="Fixed points of correspondences on finite posets.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-poset", help="order structure of a poset (or a correspondence's domain)")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_poset)

    s = sub.add_parser("check-correspondence", help="monotonicity and value conditions")
    s.add_argument("file")
    s.add_argument("--props", required=True, help="comma-separated property names")
    s.add_argument("--exhaustive", action="store_true", help="enumerate chains instead of the finite shortcut")
    s.set_defaults(func=cmd_check_correspondence)

    s = sub.add_parser("fix", help="fixed points, their structure, and extremal candidates")
    s.add_argument("file")
    s.set_defaults(func=cmd_fix)

    s = sub.add_parser("validate", help="check a theorem's hypotheses and conclusion")
    s.add_argument("file")
    s.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    s.add_argument("--dual", action="store_true", help="order-dual form")
    s.add_argument("--aux-m", help="explicit M correspondence for thm-3.1")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("equilibria", help="pure Nash equilibria of a lattice game")
    s.add_argument("file")
    s.set_defaults(func=cmd_equilibria)

    s = sub.add_parser("fuzz", help="validate a theorem on seeded random instances")
    s.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--max-size", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("fixtures", help="list or emit built-in instances")
    s.add_argument("--name", choices=FIXTURE_NAMES)
    s.add_argument("--emit", action="store_true", help="print the instance file")
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OrdfixError, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, out=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
