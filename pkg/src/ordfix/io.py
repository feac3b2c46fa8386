"""JSON instance files: posets, correspondences, maps and games.

Every file is ``{"format_version": 1, "kind": ..., "body": {...}}``. Orders
are written as Hasse covers; product posets keep their factors so tuple ids
round-trip. Payoffs are exact rationals written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .correspondence import Correspondence
from .errors import OrdfixError, ParseError, ValidationError
from .game import LatticeGame
from .poset import Poset, build_poset, product

FORMAT_VERSION = 1
KINDS = ("poset", "correspondence", "map", "game")

Instance = Union[Poset, Correspondence, LatticeGame]


# ---------------------------------------------------------------------------
# serialize


def poset_body(P: Poset) -> dict:
    if P.factors is not None:
        return {"factors": [poset_body(f) for f in P.factors]}
    return {"elements": list(P.elements), "le": [list(e) for e in P.covers()]}


def _rational(v: Fraction) -> str:
    return str(Fraction(v))


def to_document(obj: Instance) -> dict:
    if isinstance(obj, Poset):
        kind, body = "poset", poset_body(obj)
    elif isinstance(obj, LatticeGame):
        kind = "game"
        body = {
            "players": list(obj.players),
            "strategies": {p: poset_body(obj.strategies[p]) for p in obj.players},
            "payoffs": [
                {"profile": list(q), "values": [_rational(obj.payoffs[p][q]) for p in obj.players]}
                for q in obj.payoffs[obj.players[0]]
            ],
        }
    elif isinstance(obj, Correspondence):
        X = obj.source
        if obj.is_single_valued and obj.is_self:
            kind = "map"
            body = {"poset": poset_body(X), "map": dict(obj.as_map())}
        else:
            kind = "correspondence"
            values = {x: sorted(ys, key=obj.target.index) for x, ys in obj.items()}
            if obj.is_self:
                body = {"poset": poset_body(X), "map": values}
            else:
                body = {"source": poset_body(X), "target": poset_body(obj.target), "map": values}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {"format_version": FORMAT_VERSION, "kind": kind, "body": body}


def dumps(obj: Instance, indent: int = 2) -> str:
    return json.dumps(to_document(obj), indent=indent)


def dump(obj: Instance, path) -> None:
    Path(path).write_text(dumps(obj) + "\n")


# ---------------------------------------------------------------------------
# parse


def _need(d: dict, key: str, kind, where: str):
    if not isinstance(d, dict) or key not in d:
        raise ParseError(f"{where}: missing key {key!r}")
    value = d[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}")
    return value


def _str_list(xs, where: str) -> list[str]:
    if not isinstance(xs, list) or not all(isinstance(x, str) for x in xs):
        raise ParseError(f"{where}: expected a list of strings")
    return xs


def parse_poset(body: dict, where: str = "poset") -> Poset:
    if isinstance(body, dict) and "factors" in body:
        factors = _need(body, "factors", list, where)
        return product([parse_poset(f, f"{where}.factors[{i}]") for i, f in enumerate(factors)])
    elements = _str_list(_need(body, "elements", list, where), f"{where}.elements")
    pairs = _need(body, "le", list, where) if "le" in body else []
    gens = []
    for k, pair in enumerate(pairs):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise ParseError(f"{where}.le[{k}]: expected a pair of element ids")
        gens.append(tuple(pair))
    return build_poset(elements, gens)


def _parse_rational(v, where: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"{where}: payoff must be an integer or a 'p/q' string")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: bad rational {v!r}") from None


def _parse_correspondence(body: dict, kind: str) -> Correspondence:
    if "poset" in body:
        X = Y = parse_poset(_need(body, "poset", dict, "body"), "body.poset")
    else:
        X = parse_poset(_need(body, "source", dict, "body"), "body.source")
        Y = parse_poset(_need(body, "target", dict, "body"), "body.target")
    values = _need(body, "map", dict, "body")
    if kind == "map":
        for x, y in values.items():
            if not isinstance(y, str):
                raise ParseError(f"body.map[{x!r}]: expected an element id")
        if X is not Y:
            raise ParseError("a map file has a single 'poset'")
        return Correspondence.from_map(X, values)
    for x, ys in values.items():
        _str_list(ys, f"body.map[{x!r}]")
    return Correspondence(X, Y, values)


def _parse_game(body: dict) -> LatticeGame:
    players = _str_list(_need(body, "players", list, "body"), "body.players")
    raw = _need(body, "strategies", dict, "body")
    strategies = {p: parse_poset(raw.get(p), f"body.strategies[{p!r}]") for p in players}
    payoffs: dict[str, dict] = {p: {} for p in players}
    for k, row in enumerate(_need(body, "payoffs", list, "body")):
        where = f"body.payoffs[{k}]"
        profile = tuple(_str_list(_need(row, "profile", list, where), f"{where}.profile"))
        values = _need(row, "values", list, where)
        if len(values) != len(players) or len(profile) != len(players):
            raise ParseError(f"{where}: expected one entry per player")
        for p, v in zip(players, values):
            if profile in payoffs[p]:
                raise ParseError(f"{where}: duplicate profile {list(profile)}")
            payoffs[p][profile] = _parse_rational(v, f"{where}.values")
    return LatticeGame(players, strategies, payoffs)


def from_document(doc) -> Instance:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    body = _need(doc, "body", dict, "document")
    try:
        if kind == "poset":
            return parse_poset(body, "body")
        if kind == "game":
            return _parse_game(body)
        return _parse_correspondence(body, kind)
    except ParseError:
        raise
    except OrdfixError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from exc


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_document(doc)


def load(path) -> Instance:
    return loads(Path(path).read_text())
