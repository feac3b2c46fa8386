"""Fixed points of self-correspondences, computed by enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .correspondence import Correspondence, check_monotonicity, pre_fixed_sets, require_self
from .errors import NoBottom, NoCandidate, NotCompleteLattice, NotIncreasing, NoTop
from .poset import StructureReport, check_cap, classify, induced


@dataclass(frozen=True)
class FixReport:
    fixed_points: frozenset[str]
    structure: StructureReport
    largest: Optional[str]
    least: Optional[str]
    # min Fix(F) <= B_F; None when Fix(F) has no least element
    least_below_b: Optional[bool] = None


@dataclass(frozen=True)
class ExtremalResult:
    candidate: str
    is_fixed: bool
    is_extremal: bool


def fixed_points(F: Correspondence) -> frozenset[str]:
    require_self(F)
    return frozenset(x for x, ys in F.items() if x in ys)


def extremal_fixed_point(F: Correspondence, side: str = "largest") -> ExtremalResult:
    """Evaluate ``sup A_F`` (largest) or ``inf B_F`` (least) as a fixed-point candidate.

    No hypothesis is assumed; the flags say whether the formula produced the
    extremal fixed point on this instance.
    """
    X = require_self(F)
    a, b = pre_fixed_sets(F)
    if side == "largest":
        cand = X.sup(a)
    elif side == "least":
        cand = X.inf(b)
    else:
        raise ValueError(f"side must be 'largest' or 'least', not {side!r}")
    if cand is None:
        raise NoCandidate(f"the {'sup of A_F' if side == 'largest' else 'inf of B_F'} does not exist")
    fix = fixed_points(F)
    is_fixed = cand in fix
    if side == "largest":
        extremal = is_fixed and all(X.le(z, cand) for z in fix)
    else:
        extremal = is_fixed and all(X.le(cand, z) for z in fix)
    return ExtremalResult(cand, is_fixed, extremal)


def iterate_increasing(f: Correspondence, direction: str = "up") -> str:
    """Iterate an increasing map from the bottom (up) or top (down) until it stops moving."""
    X = require_self(f)
    v = check_monotonicity(f, "increasing-map")
    if not v:
        raise NotIncreasing(f"map is not increasing: {v.witness}")
    if direction == "up":
        x = X.bottom
        if x is None:
            raise NoBottom("iteration upwards needs a least element")
    elif direction == "down":
        x = X.top
        if x is None:
            raise NoTop("iteration downwards needs a greatest element")
    else:
        raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")
    g = f.as_map()
    # the orbit is monotone, so it stabilises within |X| steps
    for _ in range(len(X) + 1):
        nxt = g[x]
        if nxt == x:
            return x
        x = nxt
    raise AssertionError("iteration of an increasing map failed to stabilise")


def a_prime_set(F: Correspondence, *, force: bool = False) -> frozenset[str]:
    """Bottom together with ``sup_X S`` for every nonempty S inside Fix(F)."""
    X = require_self(F)
    if not classify(X).is_complete_lattice:
        raise NotCompleteLattice("A'_F needs a complete-lattice source")
    fix = sorted(fixed_points(F), key=X.index)
    check_cap(len(fix), force)
    out = {X.bottom}
    for r in range(1, len(fix) + 1):
        for s in itertools.combinations(fix, r):
            out.add(X.sup(s))
    return frozenset(out)


def fix_structure(F: Correspondence) -> FixReport:
    X = require_self(F)
    fix = fixed_points(F)
    sub = induced(X, fix)
    report = classify(sub)
    least = sub.bottom
    below = None
    if least is not None:
        _, b = pre_fixed_sets(F)
        below = all(X.le(least, v) for v in b)
    return FixReport(fix, report, sub.top, least, below)
