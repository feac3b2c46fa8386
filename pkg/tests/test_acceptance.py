"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in the
terminal summary. ``python tests/test_acceptance.py`` runs the gate without pytest.
"""

import itertools
import sys
import time
from dataclasses import replace

from ordfix.correspondence import (
    Monotonicity as M,
    ValueCondition as V,
    check_monotonicity,
    check_values,
    pre_fixed_sets,
    replay,
    truncate,
)
from ordfix.fixpoint import extremal_fixed_point, fix_structure, fixed_points, iterate_increasing
from ordfix.game import (
    PayoffProperty as P,
    best_reply,
    check_game,
    check_payoff_property,
    joint_best_reply,
    nash_equilibria,
    nash_equilibria_direct,
)
from ordfix.oracle.fixtures import FIXTURE_NAMES, diamond, fixtures
from ordfix.oracle.fuzz import instance_at
from ordfix.oracle.generate import GenSpec, generate
from ordfix.oracle.theorems import check_hypotheses, validate
from ordfix.poset import classify, induced, is_complete_lattice_bruteforce

SEED = 20240601
FIXTURE_BUDGET = 1.0  # seconds per fixture criterion
SUITE_BUDGET = 120.0

RESULTS: list[str] = []
_START = time.perf_counter()


def criterion(name, budget=None):
    """Run the decorated check, time it, and record one PASS/FAIL line."""

    def wrap(fn):
        def test():
            t0 = time.perf_counter()
            try:
                fn()
                dt = time.perf_counter() - t0
                if budget is not None:
                    assert dt < budget, f"took {dt:.2f}s, budget {budget}s"
            except BaseException as exc:
                line = f"FAIL  {name}  ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
                RESULTS.append(line)
                print(line)
                raise
            line = f"PASS  {name}  ({dt:.2f}s)"
            RESULTS.append(line)
            print(line)

        test.__name__ = fn.__name__
        test.__doc__ = name
        return test

    return wrap


# ---------------------------------------------------------------------------
# 1. fixture exactness


@criterion("1a example-2.3: C-ascending holds, upper-V-ascending fails with a v b = 1/2 missing from F(1)", FIXTURE_BUDGET)
def test_example_2_3():
    F = fixtures("example-2.3")
    assert check_monotonicity(F, M.C_ASCENDING)
    v = check_monotonicity(F, M.UPPER_V_ASCENDING)
    assert not v
    assert v.witness == {"x": "0", "x'": "1", "y": "a", "y'": "b", "missing": "1/2"}
    assert F.target.join("a", "b") == "1/2" and "1/2" not in F("1")
    assert replay(F, M.UPPER_V_ASCENDING, v.witness)


@criterion("1b example-2.7: V-ascending, not ascending, calciano-1.6 item 1 fails, thm-2.4 sound, Fix = diamond", FIXTURE_BUDGET)
def test_example_2_7():
    F = fixtures("example-2.7")
    assert check_monotonicity(F, M.V_ASCENDING)
    assert not check_monotonicity(F, M.ASCENDING)
    cal = check_hypotheses("calciano-1.6", F)
    assert not cal["1"] and cal["1"].witness["x"] in {"a", "b"}
    for t in ("thm-2.4-plain", "thm-2.4-dual"):
        r = validate(t, F)
        assert r.hypotheses_hold and r.conclusion and r.sound
    rep = fix_structure(F)
    assert rep.fixed_points == frozenset(diamond()) and rep.structure.is_complete_lattice


@criterion("1c non-sublattice-fix: Fix = {(0,0),(0,1),(1,0),(2,1)}, induced join (2,1) differs from ambient (1,1)", FIXTURE_BUDGET)
def test_non_sublattice_fix():
    F = fixtures("non-sublattice-fix")
    rep = fix_structure(F)
    assert rep.fixed_points == {"(0,0)", "(0,1)", "(1,0)", "(2,1)"}
    sub = induced(F.source, rep.fixed_points)
    assert sub.join("(0,1)", "(1,0)") == "(2,1)"
    assert F.source.join("(0,1)", "(1,0)") == "(1,1)"
    assert rep.structure.is_complete_lattice


@criterion("1d antichain-transposition: Fix empty, markowsky-6.2 hypothesis a) fails, sound", FIXTURE_BUDGET)
def test_antichain_transposition():
    F = fixtures("antichain-transposition")
    assert fixed_points(F) == frozenset()
    r = validate("markowsky-6.2", F)
    label, verdict = r.hypotheses.items[0]
    assert label.startswith("a:") and not verdict
    assert r.sound


@criterion("1e remark-3.1: extremal candidate is the top and it is not fixed", FIXTURE_BUDGET)
def test_remark_3_1():
    r = extremal_fixed_point(fixtures("remark-3.1"))
    assert r.candidate == "1" and not r.is_fixed


@criterion("1f game-2.8-2: R1(0) = {0,1}, R1(1) = {a,b,1}, R2(1) = {0,1}", FIXTURE_BUDGET)
def test_table_game_best_replies():
    G = fixtures("game-2.8-2")
    assert best_reply(G, "1", ("0", "0")) == {"0", "1"}
    assert best_reply(G, "1", ("0", "1")) == {"a", "b", "1"}
    assert best_reply(G, "2", ("1", "0")) == {"0", "1"}


@criterion("1f game-2.8-2: R^(1,0)(0,1) nonempty with no least element (as stated)", FIXTURE_BUDGET)
def test_table_game_truncation_as_stated():
    # Checked literally. [h, top] for h = (1,0) is {(1,0), (1,1)}, which does not
    # contain (0,1), so this criterion cannot hold; see the corrected form below.
    G = fixtures("game-2.8-2")
    R = joint_best_reply(G)
    h, x = "(1,0)", "(0,1)"
    Rh = truncate(R, h)
    assert x in Rh.source, f"{x} is not in the domain [{h}, top] = {sorted(Rh.source)} of the truncation"
    value = Rh(x)
    assert value and Rh.source.least(value) is None


@criterion("1f game-2.8-2: corrected form, R^(0,0)(0,1) = R(0,1) = {(a,0),(b,0),(1,0)} has no least element", FIXTURE_BUDGET)
def test_table_game_truncation_corrected():
    G = fixtures("game-2.8-2")
    R = joint_best_reply(G)
    X = R.source
    assert R("(0,1)") == {"(a,0)", "(b,0)", "(1,0)"}
    Rh = truncate(R, "(0,0)")
    assert Rh("(0,1)") and X.least(Rh("(0,1)")) is None
    # no h above (0,0) with (0,1) >= h gives a least-free nonempty value
    assert all(X.least(truncate(R, h)("(0,1)")) is not None or not truncate(R, h)("(0,1)")
               for h in X if h != "(0,0)" and X.le(h, "(0,1)"))


@criterion("1f game-2.8-2: equilibria = {(0,0),(1,0),(1,1)}, equal to the direct definition", FIXTURE_BUDGET)
def test_table_game_equilibria():
    G = fixtures("game-2.8-2")
    rep = nash_equilibria(G)
    assert rep.fixed_points == {"(0,0)", "(1,0)", "(1,1)"}
    assert nash_equilibria_direct(G) == rep.fixed_points
    assert rep.structure.is_complete_lattice


@criterion("1g game-7.7: player 1 payoff pqsm and join-superextremal, not qsm; unique equilibrium ((0,0),0); sound", FIXTURE_BUDGET)
def test_pqsm_game():
    G = fixtures("game-7.7")
    assert check_payoff_property(G, "1", ("0",), P.PARTIALLY_QUASI_SUPERMODULAR)
    assert check_payoff_property(G, "1", ("0",), P.JOIN_SUPEREXTREMAL)
    assert not check_payoff_property(G, "1", ("0",), P.QUASI_SUPERMODULAR)
    eq = nash_equilibria(G).fixed_points
    assert eq == {"((0,0),0)"} and nash_equilibria_direct(G) == eq
    assert [G.profile(x) for x in eq] == [("(0,0)", "0")]
    report = check_game(G)
    assert report.hypotheses_hold and report.sound


# ---------------------------------------------------------------------------
# 2. property suites

_GENERATED = []  # correspondences reused by the implication suite


def _suite(spec, count):
    for i in range(count):
        F = instance_at(spec, SEED, i)
        _GENERATED.append(F)
        yield i, F


@criterion("2a Tarski suite: 1000 increasing maps on complete lattices (<= 8 elements)")
def test_tarski_suite():
    spec = GenSpec("increasing-map", max_size=8)
    for i, f in _suite(spec, 1000):
        X = f.source
        r = validate("tarski", f)
        assert r.hypotheses_hold and r.conclusion, (i, r.to_dict())
        rep = fix_structure(f)
        a, b = pre_fixed_sets(f)
        assert rep.structure.nonempty and rep.structure.is_complete_lattice, i
        assert rep.largest == X.sup(a) and rep.least == X.inf(b), i
        assert iterate_increasing(f, "up") == rep.least and iterate_increasing(f, "down") == rep.largest, i


@criterion("2b thm-1.9 suite: 1000 V-ascending correspondences with nonempty values (<= 6 elements)")
def test_chain_complete_values_suite():
    spec = GenSpec("v-ascending-filtered", max_size=6)
    for i, F in _suite(spec, 1000):
        r = validate("thm-1.9", F)
        assert r.hypotheses_hold and r.conclusion, (i, r.to_dict())


@criterion("2c lemma-3.4 suite: 500 upper-C-ascending instances, sup A_F is the largest fixed point")
def test_c_ascending_extremal_suite():
    spec = GenSpec("correspondence", max_size=6, require=("upper-c-ascending",))
    for i, F in _suite(spec, 500):
        r = validate("lemma-3.4", F)
        assert r.hypotheses_hold and r.conclusion, (i, r.to_dict())
        e = extremal_fixed_point(F, "largest")
        assert e.is_extremal and e.candidate == F.source.sup(pre_fixed_sets(F)[0]), i


@criterion("2d Markowsky suite: 500 increasing maps on posets with bottom, Fix chain-complete with least <= B_f")
def test_markowsky_suite():
    spec = GenSpec("increasing-map", max_size=8, carrier="poset-with-bottom")
    for i, f in _suite(spec, 500):
        r = validate("markowsky-6.2", f)
        assert r.hypotheses_hold and r.conclusion, (i, r.to_dict())
        rep = fix_structure(f)
        assert rep.structure.is_chain_complete and rep.least is not None and rep.least_below_b, i


@criterion("2e game-7.6 suite: 200 hypothesis-satisfying games (<= 3 players, lattices <= 5), equilibria a nonempty complete lattice")
def test_game_suite():
    spec = GenSpec("game", max_size=5, max_players=3)
    kept = 0
    for i in itertools.count():
        G = instance_at(spec, SEED, i)
        report = check_game(G)
        assert report.sound, (i, report.to_dict())
        if not report.hypotheses_hold:
            continue
        rep = nash_equilibria(G)
        assert rep.structure.nonempty and rep.structure.is_complete_lattice, i
        assert rep.fixed_points == nash_equilibria_direct(G), i
        kept += 1
        if kept == 200:
            break
    assert kept == 200


def _implications(F):
    v = {p: bool(check_monotonicity(F, p)) for p in M if p is not M.INCREASING_MAP}
    nonempty = bool(check_values(F, V.NONEMPTY))
    chain = [
        (v[M.ASCENDING], v[M.V_ASCENDING]),
        (v[M.V_ASCENDING], v[M.WEAKLY_ASCENDING]),
        (v[M.ASCENDING], v[M.STRONGLY_UPPER_INCREASING] and v[M.STRONGLY_LOWER_INCREASING]),
        (v[M.STRONGLY_UPPER_INCREASING] and nonempty, v[M.UPPER_INCREASING]),
        (v[M.UPPER_C_ASCENDING] and nonempty, v[M.UPPER_INCREASING]),
    ]
    return all(b for a, b in chain if a)


@criterion("2f implication-lattice suite: every generated correspondence respects the monotonicity implications")
def test_implication_suite():
    mixed = GenSpec("correspondence", max_size=6, allow_empty=True)
    extra = [instance_at(mixed, SEED, i) for i in range(500)]
    extra += [instance_at(replace(mixed, allow_empty=False), SEED + 1, i) for i in range(500)]
    checked = 0
    for F in _GENERATED + extra:
        if not F.target.is_lattice():
            continue
        assert _implications(F), F
        checked += 1
    assert checked >= 1000


# ---------------------------------------------------------------------------
# 3. oracle cross-checks


def _fixture_correspondences():
    for name in FIXTURE_NAMES:
        obj = fixtures(name)
        if hasattr(obj, "players"):
            yield name, joint_best_reply(obj)
        elif obj.is_self:
            yield name, obj


@criterion("3a truncation identity Fix(F^h) = Fix(F) & [h, top) for every h on every fixture")
def test_truncation_identity():
    for name, F in _fixture_correspondences():
        X = F.source
        fix = fixed_points(F)
        assert fix == {x for x in X if x in F(x)}, name
        for h in X:
            assert fixed_points(truncate(F, h)) == fix & X.up_set(h), (name, h)


@criterion("3b classify shortcut equals the all-subsets definition on every instance up to 8 elements")
def test_classify_cross_check():
    posets = [F.source for _, F in _fixture_correspondences() if len(F.source) <= 8]
    for kind in ("poset", "poset-with-bottom", "lattice"):
        posets += [generate(GenSpec(kind, max_size=8, seed=SEED + i)) for i in range(300)]
    posets += [F.source for F in _GENERATED if len(F.source) <= 8]
    for Q in posets:
        assert classify(Q).is_complete_lattice == is_complete_lattice_bruteforce(Q), Q


@criterion("suite runtime under 2 minutes")
def test_runtime_budget():
    elapsed = time.perf_counter() - _START
    assert elapsed < SUITE_BUDGET, f"{elapsed:.1f}s"


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except BaseException:
                failed += 1
    print(f"\n{len(RESULTS) - failed} passed, {failed} failed")
    sys.exit(1 if failed else 0)
