"""Finite normal-form games whose strategy sets are lattices.

Payoffs are :class:`fractions.Fraction` so argmax ties are exact.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .correspondence import Correspondence, Verdict
from .errors import IncompatibleProfile, UnknownPlayer, ValidationError
from .fixpoint import FixReport, fix_structure
from .poset import Poset, chains_of, classify, format_tuple, product
from .report import HypothesisReport, ValidationReport

Profile = tuple[str, ...]


def to_fraction(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise ValidationError(f"payoff {v!r} is not an exact rational")
    if isinstance(v, Fraction):
        return v
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"payoff {v!r} is not a rational: {exc}") from None


class PayoffProperty(str, Enum):
    PARTIALLY_QUASI_SUPERMODULAR = "partially-quasi-supermodular"
    QUASI_SUPERMODULAR = "quasi-supermodular"
    JOIN_SUPEREXTREMAL = "join-superextremal"
    SINGLE_CROSSING = "single-crossing"
    UPWARD_USC = "upward-usc"

    @classmethod
    def parse(cls, name) -> "PayoffProperty":
        return name if isinstance(name, cls) else cls(str(name).strip().lower())


class LatticeGame:
    """Players, a lattice of strategies per player, exact payoff tables.

    ``payoffs[i]`` maps full profiles (tuples ordered like ``players``) to
    player i's payoff.
    """

    def __init__(
        self,
        players: Sequence[str],
        strategies: Mapping[str, Poset],
        payoffs: Mapping[str, Mapping[Profile, object]],
    ):
        players = tuple(players)
        if not players:
            raise ValidationError("a game needs at least one player")
        if len(set(players)) != len(players):
            raise ValidationError("duplicate player ids")
        for p in players:
            if p not in strategies:
                raise ValidationError(f"no strategy lattice for player {p!r}")
            if not strategies[p].is_lattice():
                raise ValidationError(f"strategy set of player {p!r} is not a lattice")
        self.players = players
        self.strategies = {p: strategies[p] for p in players}
        profiles = list(itertools.product(*(self.strategies[p].elements for p in players)))
        tables: dict[str, dict[Profile, Fraction]] = {}
        for p in players:
            if p not in payoffs:
                raise ValidationError(f"no payoff table for player {p!r}")
            table = {tuple(k): to_fraction(v) for k, v in payoffs[p].items()}
            missing = [q for q in profiles if q not in table]
            if missing:
                raise ValidationError(f"payoff table of {p!r} misses profile {missing[0]}")
            extra = set(table) - set(profiles)
            if extra:
                raise ValidationError(f"payoff table of {p!r} has unknown profile {sorted(extra)[0]}")
            tables[p] = table
        self.payoffs = tables
        self._space: Optional[Poset] = None
        self._others: dict[str, Poset] = {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeGame):
            return NotImplemented
        return (
            self.players == other.players
            and self.strategies == other.strategies
            and self.payoffs == other.payoffs
        )

    __hash__ = None

    def __repr__(self) -> str:
        sizes = ", ".join(f"{p}:{len(self.strategies[p])}" for p in self.players)
        return f"LatticeGame({sizes})"

    # -- profiles -------------------------------------------------------------

    @property
    def space(self) -> Poset:
        """The product lattice of all strategy profiles."""
        if self._space is None:
            self._space = product([self.strategies[p] for p in self.players])
        return self._space

    def position(self, i: str) -> int:
        try:
            return self.players.index(i)
        except ValueError:
            raise UnknownPlayer(f"unknown player {i!r}") from None

    def profile(self, x: Union[str, Sequence[str], Mapping[str, str]]) -> Profile:
        """Normalise a profile given as a product id, a tuple, or a player dict."""
        if isinstance(x, str):
            return self.space.components(x)
        if isinstance(x, Mapping):
            x = tuple(x[p] for p in self.players)
        x = tuple(x)
        if len(x) != len(self.players):
            raise IncompatibleProfile(f"profile {x} has the wrong length")
        for p, s in zip(self.players, x):
            if s not in self.strategies[p]:
                raise IncompatibleProfile(f"{s!r} is not a strategy of player {p!r}")
        return x

    def profile_id(self, x) -> str:
        return format_tuple(self.profile(x))

    def others(self, i: str) -> Poset:
        """Product lattice of the opponents' strategies (a one-point lattice if none)."""
        k = self.position(i)
        if i not in self._others:
            rest = [self.strategies[p] for j, p in enumerate(self.players) if j != k]
            self._others[i] = product(rest) if rest else Poset(["()"], [1], components={"()": ()})
        return self._others[i]

    def with_choice(self, i: str, y: str, x_minus_i: Sequence[str]) -> Profile:
        k = self.position(i)
        rest = list(x_minus_i)
        return tuple(rest[:k] + [y] + rest[k:])

    def minus(self, i: str, x: Profile) -> tuple[str, ...]:
        k = self.position(i)
        return tuple(s for j, s in enumerate(x) if j != k)

    def payoff(self, i: str, x) -> Fraction:
        self.position(i)
        return self.payoffs[i][self.profile(x)]

    def section(self, i: str, x_minus_i) -> dict[str, Fraction]:
        """``y -> f_i(y, x_-i)`` on S_i."""
        rest = self._opponents(i, x_minus_i)
        table = self.payoffs[i]
        return {y: table[self.with_choice(i, y, rest)] for y in self.strategies[i]}

    def _opponents(self, i: str, x_minus_i) -> tuple[str, ...]:
        k = self.position(i)
        if isinstance(x_minus_i, str):
            x_minus_i = self.others(i).components(x_minus_i)
        elif isinstance(x_minus_i, Mapping):
            x_minus_i = tuple(x_minus_i[p] for p in self.players if p != i)
        rest = tuple(x_minus_i)
        opps = [p for j, p in enumerate(self.players) if j != k]
        if len(rest) != len(opps) or any(s not in self.strategies[p] for p, s in zip(opps, rest)):
            raise IncompatibleProfile(f"{rest} is not an opponent profile for player {i!r}")
        return rest

    def opponent_profiles(self, i: str) -> list[tuple[str, ...]]:
        k = self.position(i)
        return list(itertools.product(*(self.strategies[p].elements for j, p in enumerate(self.players) if j != k)))


# ---------------------------------------------------------------------------
# payoff properties


def _pqsm(L: Poset, f: Mapping[str, Fraction]) -> Optional[dict]:
    # weak and strict variants are required independently
    for x, xp in itertools.product(L.elements, repeat=2):
        j, m = L.join(x, xp), L.meet(x, xp)
        below = L.members(L.down_mask(m))
        if f[xp] >= f[j] and not any(f[u] >= f[x] for u in below):
            return {"x": x, "x'": xp, "variant": "weak"}
        if f[xp] > f[j] and not any(f[u] > f[x] for u in below):
            return {"x": x, "x'": xp, "variant": "strict"}
    return None


def _qsm(L: Poset, f: Mapping[str, Fraction]) -> Optional[dict]:
    for x, xp in itertools.product(L.elements, repeat=2):
        j, m = L.join(x, xp), L.meet(x, xp)
        if f[x] >= f[m] and not f[j] >= f[xp]:
            return {"x": x, "x'": xp, "variant": "weak"}
        if f[x] > f[m] and not f[j] > f[xp]:
            return {"x": x, "x'": xp, "variant": "strict"}
    return None


def _jse(L: Poset, f: Mapping[str, Fraction]) -> Optional[dict]:
    for x, xp in itertools.product(L.elements, repeat=2):
        if not (f[L.meet(x, xp)] >= min(f[x], f[xp]) or f[L.join(x, xp)] >= f[x]):
            return {"x": x, "x'": xp}
    return None


def _upward_usc(L: Poset, f: Mapping[str, Fraction]) -> Optional[dict]:
    # along a finite chain the approach to sup C is eventually constant at max C
    for chain in chains_of(L):
        s = L.sup(chain)
        limsup = f[chain[-1]]
        if s is None or not limsup <= f[s]:
            return {"chain": list(chain)}
    return None


def _single_crossing(G: LatticeGame, i: str) -> Optional[dict]:
    L, O = G.strategies[i], G.others(i)
    table = G.payoffs[i]
    opp = [O.components(o) for o in O.elements]
    for xi, xpi in ((a, b) for a in L for b in L.members(L.up_mask(a))):
        for k, lo in enumerate(O.elements):
            for hi in O.members(O.up_mask(lo)):
                lo_t, hi_t = opp[k], O.components(hi)
                before = table[G.with_choice(i, xpi, lo_t)], table[G.with_choice(i, xi, lo_t)]
                after = table[G.with_choice(i, xpi, hi_t)], table[G.with_choice(i, xi, hi_t)]
                if before[0] >= before[1] and not after[0] >= after[1]:
                    return {"x_i": xi, "x'_i": xpi, "x_-i": list(lo_t), "x'_-i": list(hi_t), "variant": "weak"}
                if before[0] > before[1] and not after[0] > after[1]:
                    return {"x_i": xi, "x'_i": xpi, "x_-i": list(lo_t), "x'_-i": list(hi_t), "variant": "strict"}
    return None


_SECTION_CHECKS = {
    PayoffProperty.PARTIALLY_QUASI_SUPERMODULAR: _pqsm,
    PayoffProperty.QUASI_SUPERMODULAR: _qsm,
    PayoffProperty.JOIN_SUPEREXTREMAL: _jse,
    PayoffProperty.UPWARD_USC: _upward_usc,
}


def check_payoff_property(G: LatticeGame, i: str, x_minus_i, prop) -> Verdict:
    """Check a payoff property of ``f_i(., x_-i)``.

    ``single-crossing`` quantifies over all of S_i x S_-i and ignores
    ``x_minus_i``.
    """
    prop = PayoffProperty.parse(prop)
    G.position(i)
    if prop is PayoffProperty.SINGLE_CROSSING:
        w = _single_crossing(G, i)
    else:
        f = G.section(i, x_minus_i)
        w = _SECTION_CHECKS[prop](G.strategies[i], f)
    return Verdict.ok() if w is None else Verdict.fail(player=i, **w)


def interval_topology_discrete(L: Poset) -> bool:
    """Whether every singleton is closed in the interval topology of L.

    ``{x} = (-inf, x] & [x, +inf)``, so this holds for any finite poset, and a
    finite T1 space is discrete: every payoff is upper semicontinuous there.
    """
    return all(L.down_mask(x) & L.up_mask(x) == L.mask([x]) for x in L)


# ---------------------------------------------------------------------------
# best replies and equilibria


def best_reply(G: LatticeGame, i: str, x) -> frozenset[str]:
    """Exact argmax of ``f_i(., x_-i)`` over S_i."""
    prof = G.profile(x)
    f = G.section(i, G.minus(i, prof))
    best = max(f.values())
    return frozenset(y for y, v in f.items() if v == best)


def joint_best_reply(G: LatticeGame) -> Correspondence:
    S = G.space
    values = {}
    for x in S:
        prof = S.components(x)
        parts = [sorted(best_reply(G, p, prof), key=G.strategies[p].index) for p in G.players]
        values[x] = {format_tuple(t) for t in itertools.product(*parts)}
    return Correspondence(S, S, values)


def nash_equilibria(G: LatticeGame) -> FixReport:
    """Fixed points of the joint best reply, with their order structure."""
    return fix_structure(joint_best_reply(G))


def nash_equilibria_direct(G: LatticeGame) -> frozenset[str]:
    """Profiles where no player gains by a unilateral deviation."""
    S = G.space
    out = set()
    for x in S:
        prof = S.components(x)
        if all(
            G.payoffs[p][G.with_choice(p, y, G.minus(p, prof))] <= G.payoffs[p][prof]
            for p in G.players
            for y in G.strategies[p]
        ):
            out.add(x)
    return frozenset(out)


def _chain_lower_bound(G: LatticeGame, i: str, rest) -> Optional[dict]:
    # b = min C; on a finite chain the liminf towards inf C is f(min C)
    L = G.strategies[i]
    f = G.section(i, rest)
    for chain in chains_of(L):
        low = L.inf(chain)
        b = chain[0]
        liminf = f[low] if low in chain else None
        if liminf is None or not (L.le_sets([b], chain) and f[b] >= liminf):
            return {"player": i, "x_-i": list(rest), "chain": list(chain)}
    return None


def game_hypotheses(G: LatticeGame) -> HypothesisReport:
    items: list[tuple[str, Verdict]] = []

    def per_player(label, check):
        for p in G.players:
            v = check(p)
            items.append((f"{label} [player {p}]", v))

    per_player(
        "strategy set is a nonempty complete lattice",
        lambda p: Verdict.ok() if classify(G.strategies[p]).is_complete_lattice
        else Verdict.fail(player=p, reason="not a complete lattice"),
    )

    def pqsm_all(p):
        for rest in G.opponent_profiles(p):
            v = check_payoff_property(G, p, rest, PayoffProperty.PARTIALLY_QUASI_SUPERMODULAR)
            if not v:
                return Verdict.fail(**v.witness, **{"x_-i": list(rest)})
        return Verdict.ok()

    per_player("game 1: sections partially quasi-supermodular", pqsm_all)
    per_player("game 2: single crossing", lambda p: check_payoff_property(G, p, (), PayoffProperty.SINGLE_CROSSING))

    def lower_bound_all(p):
        for rest in G.opponent_profiles(p):
            w = _chain_lower_bound(G, p, rest)
            if w is not None:
                return Verdict.fail(**w)
        return Verdict.ok()

    per_player("1: chains have a lower bound b with f(b) >= liminf", lower_bound_all)

    def regularity(p):
        discrete = interval_topology_discrete(G.strategies[p])
        for rest in G.opponent_profiles(p):
            jse = check_payoff_property(G, p, rest, PayoffProperty.JOIN_SUPEREXTREMAL)
            usc = check_payoff_property(G, p, rest, PayoffProperty.UPWARD_USC)
            if not ((jse and usc) or discrete):
                return Verdict.fail(player=p, **{"x_-i": list(rest)}, join_superextremal=jse.holds)
        return Verdict.ok()

    per_player("2: join-superextremal and upward usc, or usc in the interval topology", regularity)
    return HypothesisReport("game-7.6", tuple(items))


def equilibrium_conclusion(report: FixReport) -> Verdict:
    s = report.structure
    if s.nonempty and s.is_complete_lattice:
        return Verdict.ok(equilibria=sorted(report.fixed_points), nonempty=True, is_complete_lattice=True)
    return Verdict.fail(
        equilibria=sorted(report.fixed_points),
        nonempty=s.nonempty,
        is_complete_lattice=s.is_complete_lattice,
    )


def check_game(G: LatticeGame) -> ValidationReport:
    """Hypotheses of the lattice-game equilibrium theorem against its conclusion."""
    return ValidationReport(game_hypotheses(G), equilibrium_conclusion(nash_equilibria(G)))


def constant_game(players: Iterable[str], strategies: Mapping[str, Poset], value=0) -> LatticeGame:
    players = tuple(players)
    profiles = list(itertools.product(*(strategies[p].elements for p in players)))
    return LatticeGame(players, strategies, {p: {q: value for q in profiles} for p in players})
