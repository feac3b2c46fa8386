"""Named finite instances: the worked examples and counterexamples."""

from __future__ import annotations

import itertools
from typing import Union

from ..correspondence import Correspondence
from ..errors import UnknownFixture
from ..game import LatticeGame
from ..poset import Poset, antichain, build_poset, chain_poset, format_tuple, product

Instance = Union[Correspondence, LatticeGame]


def diamond() -> Poset:
    """``0 < a, b < 1`` with a and b incomparable."""
    return build_poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def antichain_transposition() -> Correspondence:
    X = antichain(["a", "b"])
    return Correspondence.from_map(X, {"a": "b", "b": "a"})


def separating_c_from_v() -> Correspondence:
    X = chain_poset(["0", "1"])
    Y = build_poset(
        ["0", "a", "b", "1/2", "1"],
        [("0", "a"), ("0", "b"), ("a", "1/2"), ("b", "1/2"), ("1/2", "1")],
    )
    return Correspondence(X, Y, {"0": {"0", "a"}, "1": {"b", "1"}})


def non_sublattice_fix() -> Correspondence:
    X = product([chain_poset(["0", "1", "2"]), chain_poset(["0", "1"])])
    jump = {"(1,1)", "(2,0)", "(2,1)"}
    return Correspondence.from_map(X, lambda x: "(2,1)" if x in jump else x)


def v_ascending_not_ascending() -> Correspondence:
    X = diamond()
    return Correspondence(X, X, {"0": {"0"}, "1": {"1"}, "a": {"a", "b"}, "b": {"a", "b"}})


def constant_pair() -> Correspondence:
    X = diamond()
    return Correspondence(X, X, {x: {"a", "b"} for x in X})


def chain_complete_values_analogue() -> Correspondence:
    """A three-point chain stands in for the real segment; a, b sit above it, 2 on top."""
    X = build_poset(
        ["-1", "0", "1", "a", "b", "2"],
        [("-1", "0"), ("0", "1"), ("1", "a"), ("1", "b"), ("a", "2"), ("b", "2")],
    )
    low = {"-1", "0", "1"}
    values = {x: low for x in low}
    values.update({"a": {"a", "b"}, "b": {"a"}, "2": {"2"}})
    return Correspondence(X, X, values)


def _table_game() -> LatticeGame:
    s1 = diamond()
    s2 = chain_poset(["0", "1"])
    # rows: player 2's strategy; columns: player 1's strategy; (u1, u2)
    table = {
        "0": {"0": (1, 1), "1": (1, 1), "a": (0, 1), "b": (0, 1)},
        "1": {"0": (0, 0), "1": (1, 1), "a": (1, 0), "b": (1, 0)},
    }
    u1, u2 = {}, {}
    for x2, row in table.items():
        for x1, (p1, p2) in row.items():
            u1[(x1, x2)] = p1
            u2[(x1, x2)] = p2
    return LatticeGame(["1", "2"], {"1": s1, "2": s2}, {"1": u1, "2": u2})


def _pqsm_game() -> LatticeGame:
    pts = [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)]
    ids = [format_tuple([str(a), str(b)]) for a, b in pts]
    gens = [
        (format_tuple([str(a), str(b)]), format_tuple([str(c), str(d)]))
        for (a, b), (c, d) in itertools.permutations(pts, 2)
        if a <= c and b <= d
    ]
    s1 = build_poset(ids, gens)
    s2 = build_poset(["0"])

    def f1(x1):
        return 10 if x1 == "(0,0)" else 0 if x1 == "(1,1)" else 1

    profiles = [(x1, "0") for x1 in ids]
    return LatticeGame(
        ["1", "2"],
        {"1": s1, "2": s2},
        {"1": {p: f1(p[0]) for p in profiles}, "2": {p: 0 for p in profiles}},
    )


_FIXTURES = {
    "antichain-transposition": antichain_transposition,
    "example-2.3": separating_c_from_v,
    "non-sublattice-fix": non_sublattice_fix,
    "example-2.7": v_ascending_not_ascending,
    "game-2.8-2": _table_game,
    "remark-3.1": constant_pair,
    "finite-5.3-analogue": chain_complete_values_analogue,
    "game-7.7": _pqsm_game,
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixtures(name: str) -> Instance:
    try:
        return _FIXTURES[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
