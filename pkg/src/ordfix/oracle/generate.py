"""Seeded random instances: posets, lattices, maps, correspondences, games.

Every generator is a pure function of its :class:`GenSpec`; the same spec
and seed always give the same instance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

from ..correspondence import (
    Correspondence,
    Monotonicity,
    ValueCondition,
    check_monotonicity,
    check_values,
)
from ..errors import GenerationExhausted
from ..game import LatticeGame
from ..poset import MAX_EXHAUSTIVE, Poset, build_poset, check_cap

KINDS = (
    "poset",
    "poset-with-bottom",
    "lattice",
    "complete-lattice",
    "increasing-map",
    "correspondence",
    "ascending-interval-correspondence",
    "v-ascending-filtered",
    "game",
)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    min_size: int = 1
    max_size: int = 6
    max_value_size: int = 3
    seed: int = 0
    # carrier of maps and correspondences: "complete-lattice", "poset" or "poset-with-bottom"
    carrier: str = "complete-lattice"
    # properties a correspondence must pass (rejection sampling)
    require: tuple[str, ...] = ()
    allow_empty: bool = False
    budget: int = 20000
    # games
    max_players: int = 3
    payoff_range: int = 3
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 1 <= self.min_size <= self.max_size:
            raise ValueError("need 1 <= min_size <= max_size")
        check_cap(self.max_size, cap=MAX_EXHAUSTIVE)


Instance = Union[Poset, Correspondence, LatticeGame]


# ---------------------------------------------------------------------------
# carriers


def _ids(n: int) -> list[str]:
    return [str(i) for i in range(n)]


def random_poset(rng: random.Random, n: int, *, with_bottom: bool = False) -> Poset:
    """Random order: each pair i < j of a hidden linear order is related with a random density."""
    p = rng.uniform(0.15, 0.6)
    ids = _ids(n)
    start = 1 if with_bottom else 0
    gens = [(ids[i], ids[j]) for i in range(start, n) for j in range(i + 1, n) if rng.random() < p]
    if with_bottom:
        gens += [(ids[0], x) for x in ids[1:]]
    return build_poset(ids, gens)


def random_lattice(rng: random.Random, n: int, budget: int = 2000) -> Poset:
    """Random lattice with exactly n elements.

    A family of subsets closed under intersection and holding the full set is a
    lattice under inclusion, and every finite lattice arises this way, so
    random closure systems reach all shapes (distributive or not).
    """
    full = (1 << n) - 1
    for _ in range(budget):
        family = {full}
        stalls = 0
        while len(family) < n and stalls < 50:
            s = rng.getrandbits(n) if n else 0
            closed = set(family)
            frontier = [s]
            while frontier:
                t = frontier.pop()
                if t in closed:
                    continue
                closed.add(t)
                frontier.extend(t & u for u in list(closed))
            if len(closed) <= n:
                family = closed
            else:
                stalls += 1
        if len(family) == n:
            break
    else:
        raise GenerationExhausted(f"no closure system with {n} members found")
    members = sorted(family, key=lambda s: (bin(s).count("1"), s))
    ids = _ids(n)
    gens = [
        (ids[i], ids[j])
        for i, a in enumerate(members)
        for j, b in enumerate(members)
        if i != j and a & b == a
    ]
    return build_poset(ids, gens)


def _carrier(rng: random.Random, spec: GenSpec) -> Poset:
    n = rng.randint(spec.min_size, spec.max_size)
    if spec.carrier in ("complete-lattice", "lattice"):
        return random_lattice(rng, n)
    if spec.carrier == "poset":
        return random_poset(rng, n)
    if spec.carrier == "poset-with-bottom":
        return random_poset(rng, n, with_bottom=True)
    raise ValueError(f"unknown carrier {spec.carrier!r}")


# ---------------------------------------------------------------------------
# maps and correspondences


def random_increasing_map(rng: random.Random, X: Poset, *, floor: Optional[dict] = None, budget: int = 200) -> dict[str, str]:
    """Increasing map built along a linear extension; ``floor`` forces f >= floor."""
    order = X.linear_extension()
    for _ in range(budget):
        f: dict[str, str] = {}
        for x in order:
            lower = [f[z] for z in X.members(X.down_mask(x)) if z != x]
            if floor is not None:
                lower.append(floor[x])
            cands = X.members(X.upper_bounds_mask(lower))
            if not cands:
                break
            f[x] = rng.choice(cands)
        else:
            return f
    # constant maps are always increasing, but need an upper bound of the floor
    if floor is None:
        c = rng.choice(X.elements)
        return {x: c for x in X}
    raise GenerationExhausted("could not extend an increasing map above the floor")


def random_correspondence(rng: random.Random, X: Poset, max_value_size: int, allow_empty: bool = False) -> Correspondence:
    lo = 0 if allow_empty else 1
    values = {}
    for x in X:
        k = rng.randint(lo, min(max_value_size, len(X)))
        values[x] = rng.sample(X.elements, k)
    return Correspondence(X, X, values)


def interval_correspondence(rng: random.Random, X: Poset) -> Correspondence:
    """``F(x) = [g(x), h(x)]`` for random increasing g <= h: ascending by construction."""
    g = random_increasing_map(rng, X)
    h = random_increasing_map(rng, X, floor=g)
    return Correspondence(X, X, {x: X.interval(g[x], h[x]) for x in X})


def _perturb(rng: random.Random, F: Correspondence, max_value_size: int) -> Correspondence:
    X = F.source
    values = {x: set(F(x)) for x in X}
    for _ in range(rng.randint(1, 3)):
        x = rng.choice(X.elements)
        y = rng.choice(X.elements)
        if y in values[x] and len(values[x]) > 1:
            values[x].discard(y)
        elif len(values[x]) < max(max_value_size, 1):
            values[x].add(y)
    return Correspondence(X, X, values)


def _candidate(rng: random.Random, X: Poset, spec: GenSpec) -> Correspondence:
    # mixture: plain random values, intervals, and perturbed intervals
    r = rng.random()
    if r < 0.45:
        return random_correspondence(rng, X, spec.max_value_size, spec.allow_empty)
    if r < 0.7 and X.is_lattice():
        return interval_correspondence(rng, X)
    if X.is_lattice():
        return _perturb(rng, interval_correspondence(rng, X), spec.max_value_size)
    return random_correspondence(rng, X, spec.max_value_size, spec.allow_empty)


def passes(F: Correspondence, require) -> bool:
    for name in require:
        try:
            prop = Monotonicity.parse(name)
        except ValueError:
            if not check_values(F, ValueCondition.parse(name), exhaustive=True):
                return False
        else:
            if not check_monotonicity(F, prop):
                return False
    return True


# ---------------------------------------------------------------------------
# games


def random_game(rng: random.Random, spec: GenSpec) -> LatticeGame:
    """Random lattice game; payoffs mix separable, complementary and noise terms."""
    # lean towards several players; one-player games pass the filters too easily
    k = rng.choice([1] + [m for m in range(2, spec.max_players + 1) for _ in range(2)]) if spec.max_players > 1 else 1
    players = [str(i + 1) for i in range(k)]
    strategies = {p: random_lattice(rng, rng.randint(1, spec.max_size)) for p in players}
    # an increasing score per lattice (height) gives complementarities
    height = {p: {x: bin(strategies[p].down_mask(x)).count("1") for x in strategies[p]} for p in players}
    profiles = list(itertools.product(*(strategies[p].elements for p in players)))
    style = rng.choice(["separable", "complementary", "noise"])
    R = spec.payoff_range
    payoffs = {}
    for i, p in enumerate(players):
        own = {x: rng.randint(-R, R) for x in strategies[p]}
        w = rng.randint(0, 2)
        table = {}
        for q in profiles:
            v = Fraction(own[q[i]])
            if style == "complementary":
                others = sum(height[players[j]][q[j]] for j in range(k) if j != i)
                v += w * others * height[p][q[i]]
            elif style == "noise":
                v += rng.randint(-R, R)
            table[q] = v
        payoffs[p] = table
    return LatticeGame(players, strategies, payoffs)


# ---------------------------------------------------------------------------


def generate(spec: GenSpec) -> Instance:
    rng = random.Random(spec.seed)
    kind = spec.kind
    if kind == "poset":
        return random_poset(rng, rng.randint(spec.min_size, spec.max_size))
    if kind == "poset-with-bottom":
        return random_poset(rng, rng.randint(spec.min_size, spec.max_size), with_bottom=True)
    if kind in ("lattice", "complete-lattice"):
        return random_lattice(rng, rng.randint(spec.min_size, spec.max_size))
    if kind == "game":
        return random_game(rng, spec)
    if kind == "increasing-map":
        X = _carrier(rng, spec)
        F = Correspondence.from_map(X, random_increasing_map(rng, X))
        assert check_monotonicity(F, Monotonicity.INCREASING_MAP)
        return F
    if kind == "ascending-interval-correspondence":
        X = _carrier(rng, replace(spec, carrier="complete-lattice"))
        F = interval_correspondence(rng, X)
        if not check_monotonicity(F, Monotonicity.ASCENDING):
            raise AssertionError("interval correspondence is not ascending")
        return F
    require = tuple(spec.require)
    if kind == "v-ascending-filtered":
        require = require + ("v-ascending",)
    if not spec.allow_empty:
        require = require + ("nonempty",)
    # fix the size first so rejection does not skew towards tiny carriers
    n = rng.randint(spec.min_size, spec.max_size)
    sized = replace(spec, min_size=n, max_size=n)
    for _ in range(spec.budget):
        X = _carrier(rng, sized)
        F = _candidate(rng, X, spec)
        if passes(F, require):
            return _walk(rng, F, require, spec)
    raise GenerationExhausted(f"no instance passing {require} within {spec.budget} attempts")


def _walk(rng: random.Random, F: Correspondence, require, spec: GenSpec) -> Correspondence:
    """Random single-element edits that keep every required property.

    Moves instances off the interval family they were often seeded from.
    """
    X = F.source
    values = {x: set(F(x)) for x in X}
    for _ in range(rng.randint(0, 8 * len(X))):
        x, y = rng.choice(X.elements), rng.choice(X.elements)
        trial = {k: set(v) for k, v in values.items()}
        if y in trial[x]:
            trial[x].discard(y)
        elif len(trial[x]) < max(spec.max_value_size, len(values[x])):
            trial[x].add(y)
        else:
            continue
        G = Correspondence(X, X, trial)
        if passes(G, require):
            values = trial
    return Correspondence(X, X, values)
