"""Finite posets stored as a closed order relation.

Each element owns an "up mask": bit ``j`` of ``up[i]`` is set iff
``elements[i] <= elements[j]``.  Order queries, upper-bound sets and
sups are bit operations on these masks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded, CycleDetected, DuplicateElement, EmptyProduct, UnknownElement

# Enumerations over all subsets refuse larger instances unless forced.
MAX_EXHAUSTIVE = 16


def check_cap(n: int, force: bool = False, cap: int = MAX_EXHAUSTIVE) -> None:
    if n > cap and not force:
        raise CapExceeded(f"{n} elements exceeds the exhaustive-enumeration cap of {cap}")


def format_tuple(ids: Sequence[str]) -> str:
    return "(" + ",".join(ids) + ")"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset.

    Build one with :func:`build_poset`; the constructor takes already-closed
    up masks and trusts them.
    """

    __slots__ = ("elements", "_index", "_up", "_down", "_full", "factors", "_components", "_cache")

    def __init__(self, elements: Sequence[str], up: Sequence[int], *, factors=None, components=None):
        self.elements: tuple[str, ...] = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._up = tuple(up)
        n = len(self.elements)
        down = [0] * n
        for i, m in enumerate(self._up):
            for j in _bits(m):
                down[j] |= 1 << i
        self._down = tuple(down)
        self._full = (1 << n) - 1
        # product posets remember their factors and the tuple behind each id
        self.factors: Optional[tuple["Poset", ...]] = tuple(factors) if factors is not None else None
        self._components: Optional[dict[str, tuple[str, ...]]] = components
        self._cache: dict = {}

    # -- basic protocol ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        if set(self.elements) != set(other.elements):
            return False
        return all(
            self.le(x, y) == other.le(x, y) for x in self.elements for y in self.elements
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.le_pairs()))

    def __repr__(self) -> str:
        covers = ", ".join(f"{a}<{b}" for a, b in self.covers())
        return f"Poset([{', '.join(self.elements)}]; {covers})"

    # -- masks --------------------------------------------------------------

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def mask(self, xs: Iterable[str]) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.index(x)
        return m

    def members(self, mask: int) -> list[str]:
        return [self.elements[i] for i in _bits(mask)]

    def up_mask(self, x: str) -> int:
        return self._up[self.index(x)]

    def down_mask(self, x: str) -> int:
        return self._down[self.index(x)]

    # -- order queries --------------------------------------------------------

    def le(self, x: str, y: str) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.le(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.le(x, y) or self.le(y, x)

    def le_sets(self, s: Iterable[str], t: Iterable[str]) -> bool:
        """``S <= T``: every member of S is below every member of T."""
        tm = self.mask(t)
        return all(self.up_mask(x) & tm == tm for x in s)

    def up_set(self, x: str) -> frozenset[str]:
        """The principal filter ``[x, +inf)``."""
        return frozenset(self.members(self.up_mask(x)))

    def down_set(self, x: str) -> frozenset[str]:
        return frozenset(self.members(self.down_mask(x)))

    def interval(self, lo: str, hi: str) -> frozenset[str]:
        return frozenset(self.members(self.up_mask(lo) & self.down_mask(hi)))

    def le_pairs(self) -> list[tuple[str, str]]:
        return [(x, y) for x in self.elements for y in self.members(self.up_mask(x))]

    def covers(self) -> list[tuple[str, str]]:
        """Hasse-diagram edges, derived from the closed relation."""
        out = []
        for i, x in enumerate(self.elements):
            strict_up = self._up[i] & ~(1 << i)
            for j in _bits(strict_up):
                between = strict_up & self._down[j] & ~(1 << j)
                if not between:
                    out.append((x, self.elements[j]))
        return out

    # -- bounds ---------------------------------------------------------------

    def upper_bounds_mask(self, xs: Iterable[str]) -> int:
        m = self._full
        for x in xs:
            m &= self.up_mask(x)
        return m

    def lower_bounds_mask(self, xs: Iterable[str]) -> int:
        m = self._full
        for x in xs:
            m &= self.down_mask(x)
        return m

    def _least_in(self, m: int) -> Optional[str]:
        for i in _bits(m):
            if self._up[i] & m == m:
                return self.elements[i]
        return None

    def _greatest_in(self, m: int) -> Optional[str]:
        for i in _bits(m):
            if self._down[i] & m == m:
                return self.elements[i]
        return None

    def least(self, xs: Iterable[str]) -> Optional[str]:
        return self._least_in(self.mask(xs))

    def greatest(self, xs: Iterable[str]) -> Optional[str]:
        return self._greatest_in(self.mask(xs))

    def maximal(self, xs: Iterable[str]) -> list[str]:
        m = self.mask(xs)
        return [self.elements[i] for i in _bits(m) if self._up[i] & m == 1 << i]

    def minimal(self, xs: Iterable[str]) -> list[str]:
        m = self.mask(xs)
        return [self.elements[i] for i in _bits(m) if self._down[i] & m == 1 << i]

    def sup(self, xs: Iterable[str]) -> Optional[str]:
        return self._least_in(self.upper_bounds_mask(xs))

    def inf(self, xs: Iterable[str]) -> Optional[str]:
        return self._greatest_in(self.lower_bounds_mask(xs))

    def join(self, x: str, y: str) -> Optional[str]:
        key = ("join", x, y)
        if key not in self._cache:
            self._cache[key] = self.sup((x, y))
        return self._cache[key]

    def meet(self, x: str, y: str) -> Optional[str]:
        key = ("meet", x, y)
        if key not in self._cache:
            self._cache[key] = self.inf((x, y))
        return self._cache[key]

    @property
    def bottom(self) -> Optional[str]:
        return self._least_in(self._full)

    @property
    def top(self) -> Optional[str]:
        return self._greatest_in(self._full)

    def is_chain(self, xs: Iterable[str]) -> bool:
        xs = list(xs)
        return all(self.comparable(a, b) for a, b in itertools.combinations(xs, 2))

    def is_lattice(self) -> bool:
        if "is_lattice" not in self._cache:
            els = self.elements
            self._cache["is_lattice"] = bool(els) and all(
                self.join(a, b) is not None and self.meet(a, b) is not None
                for a, b in itertools.combinations(els, 2)
            )
        return self._cache["is_lattice"]

    # -- derived posets ---------------------------------------------------------

    def dual(self) -> "Poset":
        """The order-reversed poset on the same elements."""
        return Poset(self.elements, self._down)

    def components(self, x: str) -> tuple[str, ...]:
        if self._components is None:
            raise UnknownElement("poset is not a product")
        try:
            return self._components[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def element_of(self, parts: Sequence[str]) -> str:
        """Inverse of :meth:`components` for product posets."""
        x = format_tuple(parts)
        self.index(x)
        return x

    def linear_extension(self, xs: Optional[Iterable[str]] = None) -> list[str]:
        """Members sorted so that x < y implies x comes first."""
        xs = self.elements if xs is None else xs
        return sorted(xs, key=lambda x: (bin(self.down_mask(x)).count("1"), self.index(x)))


# ---------------------------------------------------------------------------
# construction


def build_poset(elements: Iterable[str], generators: Iterable[tuple[str, str]] = ()) -> Poset:
    """Reflexive-transitive closure of ``generators`` over ``elements``.

    Raises DuplicateElement, UnknownElement, or CycleDetected when the
    closure is not antisymmetric.
    """
    elements = list(elements)
    index: dict[str, int] = {}
    for x in elements:
        if x in index:
            raise DuplicateElement(f"duplicate element {x!r}")
        index[x] = len(index)
    n = len(elements)
    up = [1 << i for i in range(n)]
    for a, b in generators:
        for e in (a, b):
            if e not in index:
                raise UnknownElement(f"generator references unknown element {e!r}")
        up[index[a]] |= 1 << index[b]
    # Warshall over bit rows
    for k in range(n):
        bit = 1 << k
        row = up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row
    for i in range(n):
        for j in _bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CycleDetected(elements[i], elements[j])
    return Poset(elements, up)


def chain_poset(elements: Sequence[str]) -> Poset:
    return build_poset(elements, zip(elements, elements[1:]))


def antichain(elements: Sequence[str]) -> Poset:
    return build_poset(elements)


# ---------------------------------------------------------------------------
# module-level operations


def sup_of(P: Poset, S: Iterable[str]) -> Optional[str]:
    """Least upper bound of S in P, or None.  ``sup_of(P, [])`` is P's bottom."""
    return P.sup(S)


def inf_of(P: Poset, S: Iterable[str]) -> Optional[str]:
    return P.inf(S)


@dataclass(frozen=True)
class StructureReport:
    nonempty: bool
    is_lattice: bool
    is_complete_lattice: bool
    bottom: Optional[str]
    top: Optional[str]
    is_chain_complete: bool


def is_chain_complete_upwards(P: Poset, S: Optional[Iterable[str]] = None, *, force: bool = False) -> bool:
    """Every nonempty chain of S has a sup in P.  S defaults to all of P."""
    return all(P.sup(c) is not None for c in chains_of(P, S, force=force))


def is_chain_complete_downwards(P: Poset, S: Optional[Iterable[str]] = None, *, force: bool = False) -> bool:
    return all(P.inf(c) is not None for c in chains_of(P, S, force=force))


def classify(P: Poset, *, force: bool = False) -> StructureReport:
    nonempty = len(P) > 0
    lattice = P.is_lattice()
    bottom, top = P.bottom, P.top
    # a finite lattice is complete: pairwise joins/meets generate every sup/inf
    complete = nonempty and lattice
    chain_complete = bottom is not None and is_chain_complete_upwards(P, force=force)
    return StructureReport(nonempty, lattice, complete, bottom, top, chain_complete)


def is_complete_lattice_bruteforce(P: Poset, *, force: bool = False) -> bool:
    """Literal definition: nonempty, and every nonempty subset has a sup and an inf."""
    check_cap(len(P), force)
    if not len(P):
        return False
    for r in range(1, len(P) + 1):
        for s in itertools.combinations(P.elements, r):
            if P.sup(s) is None or P.inf(s) is None:
                return False
    return True


def induced(P: Poset, S: Iterable[str]) -> Poset:
    """Restriction of P's order to S (keeps P's element order)."""
    m = P.mask(S)
    idx = [i for i in range(len(P)) if m >> i & 1]
    pos = {i: k for k, i in enumerate(idx)}
    up = []
    for i in idx:
        row = 0
        for j in _bits(P._up[i] & m):
            row |= 1 << pos[j]
        up.append(row)
    comps = None
    if P._components is not None:
        comps = {P.elements[i]: P._components[P.elements[i]] for i in idx}
    return Poset([P.elements[i] for i in idx], up, components=comps)


def product(posets: Sequence[Poset]) -> Poset:
    """Componentwise order on tuples; ids are ``"(x1,x2,...)"`` strings."""
    posets = list(posets)
    if not posets:
        raise EmptyProduct("product of an empty list of posets")
    tuples = list(itertools.product(*(p.elements for p in posets)))
    ids = [format_tuple(t) for t in tuples]
    if len(set(ids)) != len(ids):
        raise DuplicateElement("component ids collide after tuple formatting")
    up = []
    for t in tuples:
        row = 0
        for j, u in enumerate(tuples):
            if all(p.le(a, b) for p, a, b in zip(posets, t, u)):
                row |= 1 << j
        up.append(row)
    return Poset(ids, up, factors=posets, components=dict(zip(ids, tuples)))


def chains_of(
    P: Poset,
    S: Optional[Iterable[str]] = None,
    mode: str = "exhaustive",
    *,
    force: bool = False,
) -> list[tuple[str, ...]]:
    """Nonempty chains inside S, each listed bottom-up, in a deterministic order.

    ``mode="maximal-only"`` keeps only the chains not contained in a larger one.
    """
    if mode not in ("exhaustive", "maximal-only"):
        raise ValueError(f"unknown mode {mode!r}")
    members = P.linear_extension(P.elements if S is None else S)
    check_cap(len(members), force)
    smask = P.mask(members)
    out: list[tuple[str, ...]] = []

    def extend(chain: list[str], start: int) -> None:
        out.append(tuple(chain))
        last = P.up_mask(chain[-1])
        for k in range(start, len(members)):
            y = members[k]
            if y != chain[-1] and last >> P.index(y) & 1:
                chain.append(y)
                extend(chain, k + 1)
                chain.pop()

    for k, x in enumerate(members):
        extend([x], k + 1)
    if mode == "exhaustive":
        return out

    def comparable_to_all(y: str, chain: tuple[str, ...]) -> bool:
        cm = P.mask(chain)
        return all(P.comparable(y, c) for c in chain) and not (cm >> P.index(y) & 1)

    return [
        c for c in out
        if not any(comparable_to_all(y, c) for y in P.members(smask))
    ]
