"""Finite-instance checks of the auxiliary lemmas behind the fixed-point theorems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..correspondence import Correspondence, ValueCondition, Verdict, pre_fixed_sets, subset_violation
from ..errors import IncompatibleInstance
from ..fixpoint import a_prime_set
from ..poset import Poset, classify
from ..report import HypothesisReport


@dataclass(frozen=True)
class LemmaReport:
    hypotheses: HypothesisReport
    # None when some hypothesis fails: the conclusion is then not checked
    conclusion: Optional[Verdict]

    @property
    def hypotheses_hold(self) -> bool:
        return self.hypotheses.holds

    @property
    def sound(self) -> bool:
        return self.conclusion is None or self.conclusion.holds

    def to_dict(self) -> dict:
        return {
            "lemma": self.hypotheses.theorem,
            "hypotheses": self.hypotheses.to_dict()["items"],
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion": None if self.conclusion is None else self.conclusion.to_dict(),
            "sound": self.sound,
        }


def _strictly_ordered_values(M: Correspondence) -> Verdict:
    X = M.source
    for x in X:
        for xp in X.members(X.up_mask(x)):
            if xp == x:
                continue
            for y in M(x):
                for yp in M(xp):
                    if not X.le(y, yp):
                        return Verdict.fail(x=x, **{"x'": xp, "y": y, "y'": yp})
    return Verdict.ok()


def lemma_sup_stays_prefixed(M: Correspondence, S: Iterable[str]) -> LemmaReport:
    """Sup of a nonempty part of A_M stays in A_M when M's values increase strictly."""
    X = M.source
    if not M.is_self:
        raise IncompatibleInstance("M must be a self-correspondence")
    S = frozenset(S)
    a_m, _ = pre_fixed_sets(M)
    empty = [x for x, ys in M.items() if not ys]
    z = X.sup(S)
    items = (
        ("X nonempty", Verdict.ok() if len(X) else Verdict.fail(reason="X is empty")),
        ("M has nonempty values", Verdict.ok() if not empty else Verdict.fail(x=empty[0])),
        ("x < x' implies M(x) <= M(x')", _strictly_ordered_values(M)),
        ("S nonempty and inside A_M",
         Verdict.ok() if S and S <= a_m else Verdict.fail(outside=sorted(S - a_m), empty=not S)),
        ("z = sup S exists", Verdict.ok() if z is not None else Verdict.fail(reason="no sup")),
    )
    hyp = HypothesisReport("lemma-3.2", items)
    if not hyp.holds:
        return LemmaReport(hyp, None)
    return LemmaReport(hyp, Verdict.ok(z=z) if z in a_m else Verdict.fail(z=z, reason="sup S not in A_M"))


def lemma_common_lower_bound(P: Poset, low: Iterable[str], Q: Iterable[str], x: str) -> LemmaReport:
    """Some q0 in Q lies below all of P (the set ``low``), given pairwise lower bounds in Q."""
    low, Q = frozenset(low), frozenset(Q)
    bad = [e for e in low | Q | {x} if e not in P]
    if bad:
        raise IncompatibleInstance(f"unknown elements {sorted(bad)}")

    def pairwise():
        for p in sorted(low - {x}, key=P.index):
            for q in sorted(Q, key=P.index):
                if not any(P.le(r, p) and P.le(r, q) for r in Q):
                    return Verdict.fail(p=p, q=q)
        return Verdict.ok()

    extra = subset_violation(P, Q, ValueCondition.CHAIN_BOUNDED_BELOW)
    items = (
        ("Q chain-bounded below", Verdict.ok() if extra is None else Verdict.fail(**extra)),
        ("x in P and Q", Verdict.ok() if x in low and x in Q else Verdict.fail(x=x)),
        ("p in P - {x}, q in Q have a common lower bound in Q", pairwise()),
    )
    hyp = HypothesisReport("lemma-4.1", items)
    if not hyp.holds:
        return LemmaReport(hyp, None)
    for q in sorted(Q, key=P.index):
        if P.le_sets([q], low):
            return LemmaReport(hyp, Verdict.ok(q0=q))
    return LemmaReport(hyp, Verdict.fail(reason="no element of Q below P"))


def lemma_a_prime_inside_a(F: Correspondence) -> LemmaReport:
    """A'_F is inside A_F for chain-bounded values whose maximal elements increase."""
    X = F.source
    if not F.is_self or not classify(X).is_complete_lattice:
        raise IncompatibleInstance("lemma-5.2 needs a self-correspondence on a complete lattice")
    empty = [x for x, ys in F.items() if not ys]
    bounded = None
    for x, ys in F.items():
        extra = subset_violation(X, ys, ValueCondition.CHAIN_BOUNDED_ABOVE)
        if extra is not None:
            bounded = Verdict.fail(x=x, **extra)
            break
    maxima = Correspondence(X, X, {x: X.maximal(ys) for x, ys in F.items()})
    items = (
        ("values nonempty", Verdict.ok() if not empty else Verdict.fail(x=empty[0])),
        ("values chain-bounded above", bounded or Verdict.ok()),
        ("x < x' implies maximal elements of F(x) <= those of F(x')", _strictly_ordered_values(maxima)),
    )
    hyp = HypothesisReport("lemma-5.2", items)
    if not hyp.holds:
        return LemmaReport(hyp, None)
    a, _ = pre_fixed_sets(F)
    ap = a_prime_set(F)
    outside = sorted(ap - a, key=X.index)
    return LemmaReport(hyp, Verdict.ok() if not outside else Verdict.fail(outside=outside))


_LEMMAS = {
    "lemma-3.2": lemma_sup_stays_prefixed,
    "lemma-4.1": lemma_common_lower_bound,
    "lemma-5.2": lemma_a_prime_inside_a,
}


def check_lemma(name: str, *args, **kwargs) -> LemmaReport:
    """Dispatch by lemma id: ``lemma-3.2`` (M, S), ``lemma-4.1`` (poset, P, Q, x), ``lemma-5.2`` (F)."""
    try:
        fn = _LEMMAS[name]
    except KeyError:
        raise IncompatibleInstance(f"unknown lemma {name!r}") from None
    return fn(*args, **kwargs)
