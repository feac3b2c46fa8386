import pytest
from hypothesis import given

from ordfix.correspondence import Correspondence, pre_fixed_sets
from ordfix.errors import NoBottom, NoCandidate, NotCompleteLattice, NotIncreasing, NotSelfCorrespondence
from ordfix.fixpoint import a_prime_set, extremal_fixed_point, fix_structure, fixed_points, iterate_increasing
from ordfix.oracle.fixtures import diamond, fixtures
from ordfix.poset import antichain, build_poset

from strategies import correspondences, instances


def test_fixed_point_examples():
    assert fixed_points(fixtures("antichain-transposition")) == frozenset()
    D = diamond()
    assert fixed_points(Correspondence.from_map(D, lambda x: x)) == frozenset(D)
    assert fixed_points(fixtures("non-sublattice-fix")) == {"(0,0)", "(0,1)", "(1,0)", "(2,1)"}
    with pytest.raises(NotSelfCorrespondence):
        fixed_points(fixtures("example-2.3"))


def test_extremal_examples():
    r = extremal_fixed_point(fixtures("example-2.7"))
    assert (r.candidate, r.is_fixed, r.is_extremal) == ("1", True, True)
    r = extremal_fixed_point(fixtures("remark-3.1"))
    assert (r.candidate, r.is_fixed, r.is_extremal) == ("1", False, False)
    r = extremal_fixed_point(fixtures("non-sublattice-fix"))
    assert (r.candidate, r.is_fixed, r.is_extremal) == ("(2,1)", True, True)
    r = extremal_fixed_point(fixtures("non-sublattice-fix"), "least")
    assert (r.candidate, r.is_extremal) == ("(0,0)", True)
    with pytest.raises(NoCandidate):
        extremal_fixed_point(fixtures("antichain-transposition"))


def test_iteration_examples():
    D = diamond()
    assert iterate_increasing(Correspondence.from_map(D, lambda x: x)) == "0"
    assert iterate_increasing(Correspondence.from_map(D, lambda x: "a")) == "a"
    assert iterate_increasing(fixtures("non-sublattice-fix"), "down") == "(2,1)"
    with pytest.raises(NotIncreasing):
        iterate_increasing(Correspondence.from_map(D, {"0": "1", "a": "a", "b": "b", "1": "0"}))
    with pytest.raises(NoBottom):
        iterate_increasing(Correspondence.from_map(antichain(["a", "b"]), lambda x: x))


def test_a_prime_examples():
    assert a_prime_set(fixtures("example-2.7")) == frozenset("0ab1")
    D = diamond()
    assert a_prime_set(Correspondence(D, D, {x: {"a"} if x == "0" else {"0"} for x in D})) == {"0"}
    assert a_prime_set(Correspondence.from_map(D, lambda x: x)) == frozenset(D)
    with pytest.raises(NotCompleteLattice):
        a_prime_set(fixtures("antichain-transposition"))


def test_structure_examples():
    rep = fix_structure(fixtures("example-2.7"))
    assert rep.fixed_points == frozenset("0ab1") and rep.structure.is_complete_lattice
    assert not fix_structure(fixtures("antichain-transposition")).structure.nonempty


def test_fix_need_not_be_a_sublattice():
    F = fixtures("non-sublattice-fix")
    rep = fix_structure(F)
    assert rep.structure.is_complete_lattice
    assert F.source.join("(0,1)", "(1,0)") == "(1,1)" not in rep.fixed_points
    assert rep.largest == "(2,1)"


def test_least_below_b():
    X = build_poset(["0", "1", "2"], [("0", "1"), ("1", "2")])
    F = Correspondence(X, X, {"0": {"1"}, "1": {"1"}, "2": {"2", "0"}})
    rep = fix_structure(F)
    assert rep.least == "1"
    # 2 is in B_F (0 <= 2 lies in F(2)) and sits above 1
    assert rep.least_below_b is True


@given(instances("increasing-map", max_size=8))
def test_tarski_on_generated_maps(f):
    X = f.source
    rep = fix_structure(f)
    a, b = pre_fixed_sets(f)
    assert rep.structure.nonempty and rep.structure.is_complete_lattice
    assert rep.largest == X.sup(a) and rep.least == X.inf(b)
    assert iterate_increasing(f, "up") == rep.least
    assert iterate_increasing(f, "down") == rep.largest


@given(correspondences)
def test_report_extremes_are_extremes(F):
    rep = fix_structure(F)
    X = F.source
    if rep.largest is not None:
        assert all(X.le(z, rep.largest) for z in rep.fixed_points)
    if rep.least is not None:
        assert all(X.le(rep.least, z) for z in rep.fixed_points)


@given(correspondences)
def test_extremal_flags(F):
    if not F.source.is_lattice():
        return
    for side in ("largest", "least"):
        r = extremal_fixed_point(F, side)
        assert not r.is_extremal or r.is_fixed
