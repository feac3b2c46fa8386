"""Multivalued correspondences ``F: X -> 2^Y`` and their property checkers.

Every checker returns a :class:`Verdict`.  A failing verdict carries a
role-labelled witness (``x``, ``x'``, ``y``, ``y'``, ``missing`` ...) that
:func:`replay` can feed back into the raw definition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Mapping, Optional

from .errors import NotSelfCorrespondence, TargetNotLattice, UnknownElement, ValidationError
from .poset import Poset, check_cap, chains_of, classify, induced

# exhaustive value-condition checks refuse values larger than this
VALUE_CAP = 12


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[dict] = field(default=None, compare=True)

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls, **witness) -> "Verdict":
        return cls(True, witness or None)

    @classmethod
    def fail(cls, **witness) -> "Verdict":
        return cls(False, witness)

    def to_dict(self) -> dict:
        out: dict = {"holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class Correspondence:
    """``F: source -> 2^target``, total on ``source`` (values may be empty)."""

    __slots__ = ("source", "target", "_values")

    def __init__(self, source: Poset, target: Poset, values: Mapping[str, Iterable[str]]):
        vals = {}
        for x, ys in values.items():
            if x not in source:
                raise UnknownElement(f"value given for unknown source element {x!r}")
            ys = frozenset(ys)
            bad = [y for y in ys if y not in target]
            if bad:
                raise UnknownElement(f"F({x}) contains unknown target elements {sorted(bad)}")
            vals[x] = ys
        missing = [x for x in source if x not in vals]
        if missing:
            raise ValidationError(f"correspondence is not total: no value for {missing}")
        self.source = source
        # keep one object when source and target coincide
        self.target = source if target is source or target == source else target
        self._values = {x: vals[x] for x in source}

    @classmethod
    def from_map(cls, P: Poset, f: Mapping[str, str] | Callable[[str], str], target: Optional[Poset] = None):
        """Single-valued correspondence ``x -> {f(x)}``."""
        get = f if callable(f) else f.__getitem__
        return cls(P, target or P, {x: {get(x)} for x in P})

    def __call__(self, x: str) -> frozenset[str]:
        try:
            return self._values[x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not in the source") from None

    def items(self):
        return self._values.items()

    @property
    def is_self(self) -> bool:
        return self.source is self.target

    @property
    def is_single_valued(self) -> bool:
        return all(len(v) == 1 for v in self._values.values())

    def as_map(self) -> dict[str, str]:
        if not self.is_single_valued:
            raise ValueError("correspondence is not single-valued")
        return {x: next(iter(v)) for x, v in self._values.items()}

    def dual(self) -> "Correspondence":
        """Same values over the order-reversed source and target."""
        src = self.source.dual()
        tgt = src if self.is_self else self.target.dual()
        return Correspondence(src, tgt, self._values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Correspondence):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self._values == other._values
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {{{', '.join(sorted(v))}}}" for x, v in self._values.items())
        return f"Correspondence({body})"


def require_self(F: Correspondence) -> Poset:
    if not F.is_self:
        raise NotSelfCorrespondence("operation needs a self-correspondence X -> 2^X")
    return F.source


# ---------------------------------------------------------------------------
# monotonicity


class Monotonicity(str, Enum):
    ASCENDING = "ascending"
    UPPER_INCREASING = "upper-increasing"
    LOWER_INCREASING = "lower-increasing"
    STRONGLY_UPPER_INCREASING = "strongly-upper-increasing"
    STRONGLY_LOWER_INCREASING = "strongly-lower-increasing"
    UPPER_V_ASCENDING = "upper-v-ascending"
    LOWER_V_ASCENDING = "lower-v-ascending"
    V_ASCENDING = "v-ascending"
    UPPER_C_ASCENDING = "upper-c-ascending"
    LOWER_C_ASCENDING = "lower-c-ascending"
    C_ASCENDING = "c-ascending"
    WEAKLY_ASCENDING = "weakly-ascending"
    INCREASING_MAP = "increasing-map"

    @classmethod
    def parse(cls, name: "str | Monotonicity") -> "Monotonicity":
        return name if isinstance(name, cls) else cls(str(name).strip().lower())


# A local test receives (F, Y, x, x', y, y') and returns None when the
# configuration is fine, otherwise extra witness roles.  ``shape`` says which
# of y / y' is universally quantified: "both", "upper" (y only) or "lower"
# (y' only).


def _asc(F, Y, x, xp, y, yp):
    j, m = Y.join(y, yp), Y.meet(y, yp)
    if j not in F(xp):
        return {"missing": j, "side": "join"}
    if m not in F(x):
        return {"missing": m, "side": "meet"}
    return None


def _upper_inc(F, Y, x, xp, y, yp):
    if any(Y.le(y, q) for q in F(xp)):
        return None
    return {"reason": "no y' in F(x') with y' >= y"}


def _lower_inc(F, Y, x, xp, y, yp):
    if any(Y.le(p, yp) for p in F(x)):
        return None
    return {"reason": "no y in F(x) with y <= y'"}


def _strong_upper(F, Y, x, xp, y, yp):
    j = Y.join(y, yp)
    if any(Y.le(y, q) and Y.le(q, j) for q in F(xp)):
        return None
    return {"interval": [y, j], "reason": "no q in F(x') inside [y, y v y']"}


def _strong_lower(F, Y, x, xp, y, yp):
    m = Y.meet(y, yp)
    if any(Y.le(m, p) and Y.le(p, yp) for p in F(x)):
        return None
    return {"interval": [m, yp], "reason": "no p in F(x) inside [y ^ y', y']"}


def _upper_v(F, Y, x, xp, y, yp):
    j = Y.join(y, yp)
    return None if j in F(xp) else {"missing": j}


def _lower_v(F, Y, x, xp, y, yp):
    m = Y.meet(y, yp)
    return None if m in F(x) else {"missing": m}


def _upper_c(F, Y, x, xp, y, yp):
    if any(Y.le(y, u) and Y.le(yp, u) for u in F(xp)):
        return None
    return {"reason": "no u in F(x') above both y and y'"}


def _lower_c(F, Y, x, xp, y, yp):
    if any(Y.le(v, y) and Y.le(v, yp) for v in F(x)):
        return None
    return {"reason": "no v in F(x) below both y and y'"}


def _weak(F, Y, x, xp, y, yp):
    if Y.meet(y, yp) in F(x) or Y.join(y, yp) in F(xp):
        return None
    return {"missing": [Y.meet(y, yp), Y.join(y, yp)]}


def _inc_map(F, Y, x, xp, y, yp):
    return None if Y.le(y, yp) else {"reason": "f(x) not <= f(x')"}


@dataclass(frozen=True)
class _Def:
    strict: bool
    lattice: bool
    shape: str
    test: Callable


_DEFS: dict[Monotonicity, _Def] = {
    Monotonicity.ASCENDING: _Def(False, True, "both", _asc),
    Monotonicity.UPPER_INCREASING: _Def(False, False, "upper", _upper_inc),
    Monotonicity.LOWER_INCREASING: _Def(False, False, "lower", _lower_inc),
    Monotonicity.STRONGLY_UPPER_INCREASING: _Def(False, True, "both", _strong_upper),
    Monotonicity.STRONGLY_LOWER_INCREASING: _Def(False, True, "both", _strong_lower),
    Monotonicity.UPPER_V_ASCENDING: _Def(True, True, "both", _upper_v),
    Monotonicity.LOWER_V_ASCENDING: _Def(True, True, "both", _lower_v),
    Monotonicity.UPPER_C_ASCENDING: _Def(True, False, "both", _upper_c),
    Monotonicity.LOWER_C_ASCENDING: _Def(True, False, "both", _lower_c),
    Monotonicity.WEAKLY_ASCENDING: _Def(True, True, "both", _weak),
    Monotonicity.INCREASING_MAP: _Def(False, False, "both", _inc_map),
}

_CONJUNCTIONS = {
    Monotonicity.V_ASCENDING: (Monotonicity.UPPER_V_ASCENDING, Monotonicity.LOWER_V_ASCENDING),
    Monotonicity.C_ASCENDING: (Monotonicity.UPPER_C_ASCENDING, Monotonicity.LOWER_C_ASCENDING),
}


def _needs_lattice(prop: Monotonicity) -> bool:
    parts = _CONJUNCTIONS.get(prop, (prop,))
    return any(_DEFS[p].lattice for p in parts)


def _pairs(X: Poset, strict: bool):
    for x in X:
        for xp in X.members(X.up_mask(x)):
            if strict and xp == x:
                continue
            yield x, xp


def check_monotonicity(F: Correspondence, prop) -> Verdict:
    """Exhaustive check of a multivalued monotonicity property."""
    prop = Monotonicity.parse(prop)
    Y = F.target
    if _needs_lattice(prop) and not Y.is_lattice():
        raise TargetNotLattice(f"{prop.value} needs a lattice target")
    if prop in _CONJUNCTIONS:
        for part in _CONJUNCTIONS[prop]:
            v = check_monotonicity(F, part)
            if not v:
                return Verdict.fail(**v.witness, part=part.value)
        return Verdict.ok()
    if prop is Monotonicity.INCREASING_MAP:
        for x, ys in F.items():
            if len(ys) != 1:
                return Verdict.fail(x=x, reason="not single-valued", value=sorted(ys))
    d = _DEFS[prop]
    for x, xp in _pairs(F.source, d.strict):
        if d.shape == "both":
            configs = itertools.product(sorted(F(x)), sorted(F(xp)))
        elif d.shape == "upper":
            configs = ((y, None) for y in sorted(F(x)))
        else:
            configs = ((None, yp) for yp in sorted(F(xp)))
        for y, yp in configs:
            extra = d.test(F, Y, x, xp, y, yp)
            if extra is not None:
                w = {"x": x, "x'": xp}
                if y is not None:
                    w["y"] = y
                if yp is not None:
                    w["y'"] = yp
                w.update(extra)
                return Verdict.fail(**w)
    return Verdict.ok()


def replay(F: Correspondence, prop, witness: Mapping) -> bool:
    """True iff ``witness`` really violates ``prop`` under the raw definition."""
    prop = Monotonicity.parse(prop)
    if prop in _CONJUNCTIONS:
        prop = Monotonicity.parse(witness["part"])
    if "x'" not in witness:  # increasing-map, non-single-valued point
        return len(F(witness["x"])) != 1
    d = _DEFS[prop]
    x, xp = witness["x"], witness["x'"]
    X = F.source
    if not X.le(x, xp) or (d.strict and x == xp):
        return False
    y, yp = witness.get("y"), witness.get("y'")
    if (y is not None and y not in F(x)) or (yp is not None and yp not in F(xp)):
        return False
    return d.test(F, F.target, x, xp, y, yp) is not None


# ---------------------------------------------------------------------------
# value conditions


class ValueCondition(str, Enum):
    NONEMPTY = "nonempty"
    HAS_GREATEST = "has-greatest"
    HAS_LEAST = "has-least"
    CHAIN_BOUNDED_ABOVE = "chain-bounded-above"
    CHAIN_BOUNDED_BELOW = "chain-bounded-below"
    CHAIN_SUBCOMPLETE_UPWARDS = "chain-subcomplete-upwards"
    CHAIN_SUBCOMPLETE_DOWNWARDS = "chain-subcomplete-downwards"
    CHAIN_COMPLETE_UPWARDS = "chain-complete-upwards"
    CHAIN_COMPLETE_DOWNWARDS = "chain-complete-downwards"
    SUBLATTICE = "sublattice"
    SUBCOMPLETE_SUBLATTICE = "subcomplete-sublattice"
    COMPLETE_LATTICE = "complete-lattice"

    @classmethod
    def parse(cls, name: "str | ValueCondition") -> "ValueCondition":
        return name if isinstance(name, cls) else cls(str(name).strip().lower())


# conditions that every finite set satisfies: each finite chain holds its extremes
CHAIN_CONDITIONS = frozenset({
    ValueCondition.CHAIN_BOUNDED_ABOVE,
    ValueCondition.CHAIN_BOUNDED_BELOW,
    ValueCondition.CHAIN_SUBCOMPLETE_UPWARDS,
    ValueCondition.CHAIN_SUBCOMPLETE_DOWNWARDS,
    ValueCondition.CHAIN_COMPLETE_UPWARDS,
    ValueCondition.CHAIN_COMPLETE_DOWNWARDS,
})


def subset_violation(Y: Poset, S: Iterable[str], cond, *, force: bool = False) -> Optional[dict]:
    """Exhaustively test one subset S of Y; None when ``cond`` holds."""
    cond = ValueCondition.parse(cond)
    S = frozenset(S)
    if cond is ValueCondition.NONEMPTY:
        return None if S else {"reason": "empty value"}
    if cond is ValueCondition.HAS_GREATEST:
        return None if Y.greatest(S) is not None else {"maximal": sorted(Y.maximal(S))}
    if cond is ValueCondition.HAS_LEAST:
        return None if Y.least(S) is not None else {"minimal": sorted(Y.minimal(S))}
    if cond is ValueCondition.SUBLATTICE:
        for a, b in itertools.combinations(sorted(S), 2):
            for z in (Y.join(a, b), Y.meet(a, b)):
                if z not in S:
                    return {"pair": [a, b], "missing": z}
        return None
    if cond is ValueCondition.SUBCOMPLETE_SUBLATTICE:
        check_cap(len(S), force)
        members = sorted(S)
        for r in range(1, len(members) + 1):
            for sub in itertools.combinations(members, r):
                for z in (Y.sup(sub), Y.inf(sub)):
                    if z not in S:
                        return {"subset": list(sub), "missing": z}
        return None
    if cond is ValueCondition.COMPLETE_LATTICE:
        return None if classify(induced(Y, S)).is_complete_lattice else {"reason": "induced order is not a complete lattice"}

    check_cap(len(S), force, VALUE_CAP)
    sm = Y.mask(S)
    for chain in chains_of(Y, S, force=force):
        if cond is ValueCondition.CHAIN_BOUNDED_ABOVE:
            ok = Y.upper_bounds_mask(chain) & sm != 0
        elif cond is ValueCondition.CHAIN_BOUNDED_BELOW:
            ok = Y.lower_bounds_mask(chain) & sm != 0
        elif cond is ValueCondition.CHAIN_SUBCOMPLETE_UPWARDS:
            ok = Y.sup(chain) in S
        elif cond is ValueCondition.CHAIN_SUBCOMPLETE_DOWNWARDS:
            ok = Y.inf(chain) in S
        elif cond is ValueCondition.CHAIN_COMPLETE_UPWARDS:
            ok = Y._least_in(Y.upper_bounds_mask(chain) & sm) is not None
        else:
            ok = Y._greatest_in(Y.lower_bounds_mask(chain) & sm) is not None
        if not ok:
            return {"chain": list(chain)}
    return None


def check_values(F: Correspondence, cond, *, exhaustive: bool = False, force: bool = False) -> Verdict:
    """Check ``cond`` on every value F(x).

    Chain conditions hold for every finite set, so by default they are
    answered analytically; ``exhaustive=True`` enumerates chains instead.
    """
    cond = ValueCondition.parse(cond)
    Y = F.target
    if cond in (ValueCondition.SUBLATTICE, ValueCondition.SUBCOMPLETE_SUBLATTICE) and not Y.is_lattice():
        raise TargetNotLattice(f"{cond.value} needs a lattice target")
    if cond in CHAIN_CONDITIONS and not exhaustive:
        return Verdict.ok()
    for x, ys in F.items():
        extra = subset_violation(Y, ys, cond, force=force)
        if extra is not None:
            return Verdict.fail(x=x, **extra)
    return Verdict.ok()


# ---------------------------------------------------------------------------
# pre-fixed sets and truncation


def pre_fixed_sets(F: Correspondence) -> tuple[frozenset[str], frozenset[str]]:
    """``(A_F, B_F)``: points with a value above (resp. below) themselves."""
    X = require_self(F)
    a = frozenset(x for x, ys in F.items() if any(X.le(x, y) for y in ys))
    b = frozenset(x for x, ys in F.items() if any(X.le(y, x) for y in ys))
    return a, b


def truncate(F: Correspondence, h: str) -> Correspondence:
    """``F^h: [h, inf) -> 2^[h, inf)``, ``x -> F(x) & [h, inf)``."""
    X = require_self(F)
    if h not in X:
        raise UnknownElement(f"unknown element {h!r}")
    up = X.up_set(h)
    sub = induced(X, up)
    return Correspondence(sub, sub, {x: F(x) & up for x in sub})
