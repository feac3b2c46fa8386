"""Hypothesis checklists and brute-force conclusion checks, one per theorem.

``validate`` never trusts a theorem: it checks every hypothesis and the
conclusion independently, and reports the instance as unsound when all
hypotheses hold but the conclusion does not.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Optional

from ..correspondence import (
    VALUE_CAP,
    Correspondence,
    Monotonicity,
    ValueCondition,
    Verdict,
    check_monotonicity,
    check_values,
    pre_fixed_sets,
    subset_violation,
)
from ..errors import IncompatibleInstance, NoCandidate
from ..fixpoint import a_prime_set, extremal_fixed_point, fix_structure, fixed_points
from ..poset import Poset, chains_of, classify, is_chain_complete_upwards
from ..report import HypothesisReport, ValidationReport

# selection-quantified hypotheses refuse larger instances
SELECTION_CAP = 8


class TheoremId(str, Enum):
    TARSKI = "tarski"
    VEINOTT_ZHOU = "veinott-zhou"
    CALCIANO = "calciano-1.6"
    SABARWAL = "sabarwal-1.7"
    WEAK_ZHOU_CHAIN = "weak-zhou-chain"
    WEAK_ZHOU_COMPLETE = "weak-zhou-complete"
    CHAIN_COMPLETE_VALUES = "thm-1.9"
    ZHOU_PLAIN = "thm-2.4-plain"
    ZHOU_DUAL = "thm-2.4-dual"
    EXTREMAL = "thm-3.1"
    CALCIANO_EXTREMAL = "calciano-extremal"
    C_ASCENDING_EXTREMAL = "lemma-3.4"
    MAXIMAL_MINIMAL = "thm-5.1"
    ABIAN_BROWN = "abian-brown-6.1"
    MARKOWSKY = "markowsky-6.2"
    GAME = "game-7.6"

    @classmethod
    def parse(cls, name) -> "TheoremId":
        return name if isinstance(name, cls) else cls(str(name).strip().lower())


Items = list[tuple[str, Verdict]]


# ---------------------------------------------------------------------------
# small verdict helpers


def _complete_lattice(X: Poset) -> Verdict:
    s = classify(X)
    if s.is_complete_lattice:
        return Verdict.ok()
    return Verdict.fail(reason="X is not a nonempty complete lattice", nonempty=s.nonempty)


def _nonempty_poset(X: Poset) -> Verdict:
    return Verdict.ok() if len(X) else Verdict.fail(reason="X is empty")


def _values(F: Correspondence, *conds) -> Verdict:
    exhaustive = len(F.target) <= VALUE_CAP
    for c in conds:
        v = check_values(F, c, exhaustive=exhaustive)
        if not v:
            return Verdict.fail(condition=ValueCondition.parse(c).value, **v.witness)
    return Verdict.ok()


def _mono(F: Correspondence, *props) -> Verdict:
    for p in props:
        v = check_monotonicity(F, p)
        if not v:
            return Verdict.fail(property=Monotonicity.parse(p).value, **v.witness)
    return Verdict.ok()


def _maximal_ordered(F: Correspondence, *, minimal: bool = False) -> Verdict:
    """x < x' implies every maximal y of F(x) <= every maximal y' of F(x')."""
    X = F.source
    pick = X.minimal if minimal else X.maximal
    for x in X:
        for xp in X.members(X.up_mask(x)):
            if xp == x:
                continue
            for y in pick(F(x)):
                for yp in pick(F(xp)):
                    if not X.le(y, yp):
                        return Verdict.fail(x=x, **{"x'": xp, "y": y, "y'": yp})
    return Verdict.ok()


def maximal_elements(F: Correspondence) -> Correspondence:
    """``x -> max F(x)``: the default auxiliary correspondence of the extremal theorem."""
    X = F.source
    return Correspondence(X, X, {x: X.maximal(ys) for x, ys in F.items()})


# ---------------------------------------------------------------------------
# conclusions


def _fix_complete(F: Correspondence) -> Verdict:
    rep = fix_structure(F)
    s = rep.structure
    if s.nonempty and s.is_complete_lattice:
        return Verdict.ok(
            fixed_points=sorted(rep.fixed_points, key=F.source.index), nonempty=True, is_complete_lattice=True
        )
    return Verdict.fail(
        fixed_points=sorted(rep.fixed_points, key=F.source.index),
        nonempty=s.nonempty,
        is_complete_lattice=s.is_complete_lattice,
    )


def _tarski_conclusion(F: Correspondence) -> Verdict:
    v = _fix_complete(F)
    if not v:
        return v
    rep = fix_structure(F)
    X = F.source
    a, b = pre_fixed_sets(F)
    if rep.largest != X.sup(a):
        return Verdict.fail(largest=rep.largest, sup_A=X.sup(a))
    if rep.least != X.inf(b):
        return Verdict.fail(least=rep.least, inf_B=X.inf(b))
    return Verdict.ok(largest=rep.largest, least=rep.least)


def _largest_is_sup_a(F: Correspondence) -> Verdict:
    try:
        r = extremal_fixed_point(F, "largest")
    except NoCandidate:
        return Verdict.fail(reason="sup A_F does not exist")
    if r.is_extremal:
        return Verdict.ok(largest=r.candidate)
    return Verdict.fail(candidate=r.candidate, is_fixed=r.is_fixed)


def _abian_brown_conclusion(F: Correspondence) -> Verdict:
    fix = fixed_points(F)
    return Verdict.ok(fixed_point=min(fix, key=F.source.index)) if fix else Verdict.fail(reason="no fixed point")


def _markowsky_conclusion(F: Correspondence) -> Verdict:
    rep = fix_structure(F)
    if rep.least is None:
        return Verdict.fail(part=1, reason="Fix(F) has no least element")
    if not rep.least_below_b:
        return Verdict.fail(part=2, reason="min Fix(F) is not below B_F", least=rep.least)
    if not rep.structure.is_chain_complete:
        return Verdict.fail(part=3, reason="Fix(F) is not chain-complete")
    return Verdict.ok(least=rep.least)


# ---------------------------------------------------------------------------
# hypothesis lists


def _truncations(F: Correspondence, hs):
    """Yield ``(h, x, F^h(x))`` for h in hs and x >= h."""
    X = F.source
    for h in sorted(hs, key=X.index):
        up = X.up_set(h)
        for x in X.members(X.up_mask(h)):
            yield h, x, F(x) & up


def _calciano_4(F: Correspondence) -> Verdict:
    X = F.source
    a, _ = pre_fixed_sets(F)
    for h, x, val in _truncations(F, a):
        if val and X.least(val) is None:
            return Verdict.fail(h=h, x=x, value=sorted(val, key=X.index))
    return Verdict.ok()


def _sabarwal_1(F: Correspondence) -> Verdict:
    X = F.source
    top = {}
    for x, ys in F.items():
        g = X.greatest(ys)
        if g is None:
            return Verdict.fail(x=x, reason="F(x) has no greatest element")
        top[x] = g
    for x in X:
        for xp in X.members(X.up_mask(x)):
            if not X.le(top[x], top[xp]):
                return Verdict.fail(x=x, **{"x'": xp}, reason="max F is not increasing")
    return Verdict.ok()


def _sabarwal_2(F: Correspondence) -> Verdict:
    X = F.source
    a, _ = pre_fixed_sets(F)
    for h in sorted(a, key=X.index):
        low = {}
        for _, x, val in _truncations(F, [h]):
            m = X.least(val)
            if m is None:
                return Verdict.fail(h=h, x=x, reason="F^h(x) has no least element")
            low[x] = m
        for x in low:
            for xp in low:
                if X.le(x, xp) and not X.le(low[x], low[xp]):
                    return Verdict.fail(h=h, x=x, **{"x'": xp}, reason="min F^h is not increasing")
    return Verdict.ok()


def _five_one_3(F: Correspondence, aprime) -> Verdict:
    X = F.source
    if len(X) > VALUE_CAP:
        # finite sets are always chain-bounded
        return Verdict.ok()
    for h, x, val in _truncations(F, aprime):
        extra = subset_violation(X, val, ValueCondition.CHAIN_BOUNDED_BELOW)
        if extra is not None:
            return Verdict.fail(h=h, x=x, **extra)
    return Verdict.ok()


def _five_one_4(F: Correspondence, aprime) -> Verdict:
    X = F.source
    for h in sorted(aprime, key=X.index):
        up = X.up_set(h)
        span = X.members(X.up_mask(h))
        for x in span:
            for xp in span:
                if x == xp or not X.le(x, xp):
                    continue
                for y in X.minimal(F(x) & up):
                    for yp in X.minimal(F(xp) & up):
                        if not X.le(y, yp):
                            return Verdict.fail(h=h, x=x, **{"x'": xp, "y": y, "y'": yp})
    return Verdict.ok()


def _selection_images(X: Poset, F: Correspondence, domain, *, optional: bool):
    """Distinct images ``f(D)`` of selections of F.

    With ``optional=False`` every element of ``domain`` is in the selection's
    domain; with ``optional=True`` the domain ranges over all subsets of
    ``domain``.  Returns ``{image: domain_used}``.
    """
    states: dict[frozenset, tuple] = {frozenset(): ()}
    for e in domain:
        nxt: dict[frozenset, tuple] = dict(states) if optional else {}
        for img, dom in states.items():
            for y in sorted(F(e), key=X.index):
                key = img | {y}
                if key not in nxt:
                    nxt[key] = dom + (e,)
        states = nxt
    return states


def _abian_brown_1(F: Correspondence) -> Verdict:
    X = F.source
    for chain in chains_of(X):
        above = X.upper_bounds_mask(chain) & ~X.mask(chain)
        if not above:
            continue
        images = _selection_images(X, F, chain, optional=False)
        for x in X.members(above):
            for img in images:
                if not any(X.le_sets(img, [y]) for y in F(x)):
                    return Verdict.fail(chain=list(chain), x=x, selection_image=sorted(img, key=X.index))
    return Verdict.ok()


def _markowsky_b(F: Correspondence) -> Verdict:
    X = F.source
    if len(X) > SELECTION_CAP:
        raise IncompatibleInstance(f"selection hypotheses are capped at {SELECTION_CAP} elements")
    for x in X:
        below = X.down_mask(x) & ~X.mask([x])
        above = X.up_mask(x) & ~X.mask([x])
        lows: dict[frozenset, tuple] = {frozenset(): ()}
        for chain in chains_of(X, X.members(below)):
            for img, dom in _selection_images(X, F, chain, optional=False).items():
                lows.setdefault(img, dom)
        highs = _selection_images(X, F, X.members(above), optional=True)
        vals = F(x)
        for lo, udom in lows.items():
            for hi, vdom in highs.items():
                if not X.le_sets(lo, hi):
                    continue
                if not any(X.le_sets(lo, [y]) and X.le_sets([y], hi) for y in vals):
                    return Verdict.fail(
                        x=x, U=list(udom), **{"f(U)": sorted(lo, key=X.index)},
                        V=list(vdom), **{"g(V)": sorted(hi, key=X.index)},
                    )
    return Verdict.ok()


def _chain_complete_poset(X: Poset) -> Verdict:
    if X.bottom is None:
        return Verdict.fail(reason="X has no least element")
    if not is_chain_complete_upwards(X):
        return Verdict.fail(reason="some nonempty chain has no sup")
    return Verdict.ok()


def _sup_chains(X: Poset) -> Verdict:
    if not len(X):
        return Verdict.fail(reason="X is empty")
    for c in chains_of(X):
        if X.sup(c) is None:
            return Verdict.fail(chain=list(c))
    return Verdict.ok()


def _hyp_tarski(F, aux) -> Items:
    single = Verdict.ok() if F.is_single_valued else Verdict.fail(
        x=next(x for x, v in F.items() if len(v) != 1), reason="not single-valued"
    )
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("f is a single-valued map", single),
        ("f increasing", _mono(F, Monotonicity.INCREASING_MAP)),
    ]


def _hyp_veinott_zhou(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("F ascending", _mono(F, Monotonicity.ASCENDING)),
        ("values nonempty subcomplete sublattices", _values(F, "nonempty", "subcomplete-sublattice")),
    ]


def _hyp_calciano(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("values nonempty", _values(F, "nonempty")),
        ("1: every value has a greatest element", _values(F, "has-greatest")),
        ("2: F upper increasing", _mono(F, Monotonicity.UPPER_INCREASING)),
        ("3: F strongly lower increasing", _mono(F, Monotonicity.STRONGLY_LOWER_INCREASING)),
        ("4: F^h(x) has a least element whenever nonempty (h in A_F, x >= h)", _calciano_4(F)),
    ]


def _hyp_sabarwal(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("values nonempty", _values(F, "nonempty")),
        ("I: max F(x) exists and max F is increasing", _sabarwal_1(F)),
        ("II: min F^h(x) exists and min F^h is increasing (h in A_F)", _sabarwal_2(F)),
    ]


def _hyp_weak_zhou_chain(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("F V-ascending", _mono(F, Monotonicity.V_ASCENDING)),
        ("values nonempty", _values(F, "nonempty")),
        ("values chain-subcomplete in X", _values(F, "chain-subcomplete-upwards", "chain-subcomplete-downwards")),
    ]


def _hyp_weak_zhou_complete(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("F V-ascending", _mono(F, Monotonicity.V_ASCENDING)),
        ("values nonempty", _values(F, "nonempty")),
        ("values are complete lattices", _values(F, "complete-lattice")),
    ]


def _hyp_chain_complete_values(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("F V-ascending", _mono(F, Monotonicity.V_ASCENDING)),
        ("values nonempty", _values(F, "nonempty")),
        ("values chain-complete downwards", _values(F, "chain-complete-downwards")),
        ("values chain-bounded above", _values(F, "chain-bounded-above")),
    ]


def _hyp_zhou_plain(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("a: values nonempty and chain-subcomplete downwards", _values(F, "nonempty", "chain-subcomplete-downwards")),
        ("b: values chain-bounded above", _values(F, "chain-bounded-above")),
        ("c: F lower V-ascending and upper C-ascending",
         _mono(F, Monotonicity.LOWER_V_ASCENDING, Monotonicity.UPPER_C_ASCENDING)),
    ]


def _hyp_zhou_dual(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("a: values nonempty and chain-subcomplete upwards", _values(F, "nonempty", "chain-subcomplete-upwards")),
        ("b: values chain-bounded below", _values(F, "chain-bounded-below")),
        ("c: F upper V-ascending and lower C-ascending",
         _mono(F, Monotonicity.UPPER_V_ASCENDING, Monotonicity.LOWER_C_ASCENDING)),
    ]


def _hyp_extremal(F, aux) -> Items:
    X = F.source
    M = (aux or {}).get("M") or maximal_elements(F)
    if M.source != X or M.target != X:
        raise IncompatibleInstance("M must be a self-correspondence on the same poset as F")
    a, _ = pre_fixed_sets(F)

    def item_a():
        for x, ys in F.items():
            if not ys:
                return Verdict.fail(x=x, reason="F(x) is empty")
            if not M(x) <= ys:
                return Verdict.fail(x=x, reason="M(x) is not inside F(x)")
        return Verdict.ok()

    def item_b():
        for x, ys in F.items():
            for y in sorted(ys, key=X.index):
                if not any(X.le(y, z) for z in M(x)):
                    return Verdict.fail(x=x, y=y)
        return Verdict.ok()

    def item_c():
        for x in X:
            for xp in X.members(X.up_mask(x)):
                if xp == x:
                    continue
                for y in M(x):
                    for yp in M(xp):
                        if not X.le(y, yp):
                            return Verdict.fail(x=x, **{"x'": xp, "y": y, "y'": yp})
        return Verdict.ok()

    return [
        ("X: nonempty poset", _nonempty_poset(X)),
        ("A: F(x) nonempty and M(x) inside F(x)", item_a()),
        ("B: every y in F(x) is below some z in M(x)", item_b()),
        ("C: x < x' implies M(x) <= M(x')", item_c()),
        ("D: A_F nonempty", Verdict.ok() if a else Verdict.fail(reason="A_F is empty")),
        ("E: sup A_F exists", Verdict.ok() if X.sup(a) is not None else Verdict.fail(reason="no sup of A_F")),
    ]


def _hyp_calciano_extremal(F, aux) -> Items:
    X = F.source
    a, _ = pre_fixed_sets(F)
    return [
        ("X: nonempty poset", _nonempty_poset(X)),
        ("F upper increasing", _mono(F, Monotonicity.UPPER_INCREASING)),
        ("1: values nonempty with a greatest element", _values(F, "nonempty", "has-greatest")),
        ("2: A_F nonempty", Verdict.ok() if a else Verdict.fail(reason="A_F is empty")),
        ("3: sup A_F exists", Verdict.ok() if X.sup(a) is not None else Verdict.fail(reason="no sup of A_F")),
    ]


def _hyp_c_ascending_extremal(F, aux) -> Items:
    return [
        ("X: nonempty complete lattice", _complete_lattice(F.source)),
        ("F upper C-ascending", _mono(F, Monotonicity.UPPER_C_ASCENDING)),
        ("values nonempty and chain-bounded above", _values(F, "nonempty", "chain-bounded-above")),
    ]


def _hyp_maximal_minimal(F, aux) -> Items:
    X = F.source
    cl = _complete_lattice(X)
    nonempty = _values(F, "nonempty")
    items = [
        ("X: nonempty complete lattice", cl),
        ("values nonempty", nonempty),
        ("i: values chain-bounded above", _values(F, "chain-bounded-above")),
        ("ii: x < x' implies maximal elements of F(x) <= maximal elements of F(x')", _maximal_ordered(F)),
    ]
    aprime = a_prime_set(F)
    items += [
        ("iii: F^h(x) chain-bounded below (h in A'_F, x >= h)", _five_one_3(F, aprime)),
        ("iv: x < x' in [h, top] implies minimal elements of F^h(x) <= those of F^h(x') (h in A'_F)",
         _five_one_4(F, aprime)),
    ]
    return items


def _hyp_abian_brown(F, aux) -> Items:
    X = F.source
    if len(X) > SELECTION_CAP:
        raise IncompatibleInstance(f"selection hypotheses are capped at {SELECTION_CAP} elements")
    a, _ = pre_fixed_sets(F)
    return [
        ("X: nonempty, every nonempty well-ordered subset has a sup", _sup_chains(X)),
        ("1: selections on a chain C are bounded in F(x) for x > C", _abian_brown_1(F)),
        ("2: A_F nonempty", Verdict.ok() if a else Verdict.fail(reason="A_F is empty")),
    ]


def _hyp_markowsky(F, aux) -> Items:
    return [
        ("a: X chain-complete (least element, chains have sups)", _chain_complete_poset(F.source)),
        ("b: f(U) <= y <= g(V) for some y in F(x) whenever U < x < V", _markowsky_b(F)),
    ]


_REGISTRY: dict[TheoremId, tuple[Callable, Callable, bool]] = {
    # id: (hypotheses, conclusion, uses lattice operations)
    TheoremId.TARSKI: (_hyp_tarski, _tarski_conclusion, False),
    TheoremId.VEINOTT_ZHOU: (_hyp_veinott_zhou, _fix_complete, True),
    TheoremId.CALCIANO: (_hyp_calciano, _fix_complete, True),
    TheoremId.SABARWAL: (_hyp_sabarwal, _fix_complete, False),
    TheoremId.WEAK_ZHOU_CHAIN: (_hyp_weak_zhou_chain, _fix_complete, True),
    TheoremId.WEAK_ZHOU_COMPLETE: (_hyp_weak_zhou_complete, _fix_complete, True),
    TheoremId.CHAIN_COMPLETE_VALUES: (_hyp_chain_complete_values, _fix_complete, True),
    TheoremId.ZHOU_PLAIN: (_hyp_zhou_plain, _fix_complete, True),
    TheoremId.ZHOU_DUAL: (_hyp_zhou_dual, _fix_complete, True),
    TheoremId.EXTREMAL: (_hyp_extremal, _largest_is_sup_a, False),
    TheoremId.CALCIANO_EXTREMAL: (_hyp_calciano_extremal, _largest_is_sup_a, False),
    TheoremId.C_ASCENDING_EXTREMAL: (_hyp_c_ascending_extremal, _largest_is_sup_a, False),
    TheoremId.MAXIMAL_MINIMAL: (_hyp_maximal_minimal, _fix_complete, True),
    TheoremId.ABIAN_BROWN: (_hyp_abian_brown, _abian_brown_conclusion, False),
    TheoremId.MARKOWSKY: (_hyp_markowsky, _markowsky_conclusion, False),
}


def _prepare(t: TheoremId, F, aux, dual: bool):
    from ..game import LatticeGame

    if t is TheoremId.GAME:
        if not isinstance(F, LatticeGame):
            raise IncompatibleInstance("game-7.6 validates a LatticeGame")
        if dual:
            raise IncompatibleInstance("game-7.6 has no dual form")
        return F, aux
    if not isinstance(F, Correspondence) or not F.is_self:
        raise IncompatibleInstance(f"{t.value} needs a self-correspondence")
    if _REGISTRY[t][2] and not F.source.is_lattice():
        raise IncompatibleInstance(f"{t.value} needs a lattice")
    if dual:
        F = F.dual()
        if aux and aux.get("M") is not None:
            aux = {**aux, "M": aux["M"].dual()}
    return F, aux


def check_hypotheses(t, F, aux: Optional[dict] = None, *, dual: bool = False) -> HypothesisReport:
    """One verdict per enumerated assumption of theorem ``t`` on instance F.

    ``dual=True`` evaluates the order-dual statement (the "resp." variant) by
    running the plain checklist on the order-reversed instance.
    """
    t = TheoremId.parse(t)
    F, aux = _prepare(t, F, aux, dual)
    if t is TheoremId.GAME:
        from ..game import game_hypotheses

        return game_hypotheses(F)
    hyp, _, _ = _REGISTRY[t]
    return HypothesisReport(t.value + ("/dual" if dual else ""), tuple(hyp(F, aux)))


def check_conclusion(t, F, *, dual: bool = False) -> Verdict:
    t = TheoremId.parse(t)
    F, _ = _prepare(t, F, None, dual)
    if t is TheoremId.GAME:
        from ..game import equilibrium_conclusion, nash_equilibria

        return equilibrium_conclusion(nash_equilibria(F))
    return _REGISTRY[t][1](F)


def validate(t, instance, aux: Optional[dict] = None, *, dual: bool = False) -> ValidationReport:
    t = TheoremId.parse(t)
    return ValidationReport(
        check_hypotheses(t, instance, aux, dual=dual),
        check_conclusion(t, instance, dual=dual),
    )


def all_theorems() -> list[TheoremId]:
    return list(TheoremId)


__all__ = [
    "SELECTION_CAP",
    "TheoremId",
    "all_theorems",
    "check_conclusion",
    "check_hypotheses",
    "maximal_elements",
    "validate",
]
