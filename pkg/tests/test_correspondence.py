import pytest
from hypothesis import given

from ordfix.correspondence import (
    CHAIN_CONDITIONS,
    Correspondence,
    Monotonicity as M,
    ValueCondition as V,
    Verdict,
    check_monotonicity,
    check_values,
    pre_fixed_sets,
    replay,
    truncate,
)
from ordfix.errors import NotSelfCorrespondence, TargetNotLattice, UnknownElement, ValidationError
from ordfix.oracle.fixtures import diamond, fixtures
from ordfix.poset import antichain, build_poset

from strategies import correspondences, instances, lattice_correspondences, maps

LATTICE_PROPS = [p for p in M if p is not M.INCREASING_MAP]

# the order-dual of each property
DUAL = {
    M.ASCENDING: M.ASCENDING,
    M.UPPER_INCREASING: M.LOWER_INCREASING,
    M.LOWER_INCREASING: M.UPPER_INCREASING,
    M.STRONGLY_UPPER_INCREASING: M.STRONGLY_LOWER_INCREASING,
    M.STRONGLY_LOWER_INCREASING: M.STRONGLY_UPPER_INCREASING,
    M.UPPER_V_ASCENDING: M.LOWER_V_ASCENDING,
    M.LOWER_V_ASCENDING: M.UPPER_V_ASCENDING,
    M.V_ASCENDING: M.V_ASCENDING,
    M.UPPER_C_ASCENDING: M.LOWER_C_ASCENDING,
    M.LOWER_C_ASCENDING: M.UPPER_C_ASCENDING,
    M.C_ASCENDING: M.C_ASCENDING,
    M.WEAKLY_ASCENDING: M.WEAKLY_ASCENDING,
    M.INCREASING_MAP: M.INCREASING_MAP,
}


def all_verdicts(F):
    return {p: check_monotonicity(F, p) for p in LATTICE_PROPS}


def test_verdict_requires_witness_on_failure():
    with pytest.raises(ValueError):
        Verdict(False, None)
    assert Verdict.ok() and not Verdict.fail(x="a")


def test_values_must_lie_in_target():
    D = diamond()
    with pytest.raises(UnknownElement):
        Correspondence(D, D, {"0": {"z"}, "a": set(), "b": set(), "1": set()})
    with pytest.raises(ValidationError):
        Correspondence(D, D, {"0": {"0"}})


def test_separating_c_from_v():
    F = fixtures("example-2.3")
    assert check_monotonicity(F, M.C_ASCENDING)
    v = check_monotonicity(F, M.UPPER_V_ASCENDING)
    assert not v
    assert v.witness == {"x": "0", "x'": "1", "y": "a", "y'": "b", "missing": "1/2"}
    assert replay(F, M.UPPER_V_ASCENDING, v.witness)


def test_separating_v_from_ascending():
    F = fixtures("example-2.7")
    assert check_monotonicity(F, M.V_ASCENDING)
    a = check_monotonicity(F, M.ASCENDING)
    assert not a and replay(F, M.ASCENDING, a.witness)
    s = check_values(F, V.SUBLATTICE)
    assert not s and s.witness["x"] in {"a", "b"}


def test_lattice_dependent_properties_need_a_lattice():
    A = antichain(["a", "b"])
    F = Correspondence.from_map(A, {"a": "b", "b": "a"})
    with pytest.raises(TargetNotLattice):
        check_monotonicity(F, M.ASCENDING)
    with pytest.raises(TargetNotLattice):
        check_values(F, V.SUBLATTICE)
    assert check_monotonicity(F, M.INCREASING_MAP)


def test_increasing_map_needs_single_values():
    v = check_monotonicity(fixtures("example-2.7"), M.INCREASING_MAP)
    assert not v and v.witness["reason"] == "not single-valued"


def test_value_condition_examples():
    F = fixtures("example-2.7")
    assert check_values(F, V.CHAIN_SUBCOMPLETE_UPWARDS)
    D = diamond()
    G = Correspondence(D, D, {"0": set(), "a": {"a"}, "b": {"b"}, "1": {"1"}})
    v = check_values(G, V.NONEMPTY)
    assert not v and v.witness["x"] == "0"
    assert not check_values(F, V.HAS_GREATEST) and check_values(F, V.COMPLETE_LATTICE) is not None


def test_pre_fixed_sets_examples():
    a, b = pre_fixed_sets(fixtures("example-2.7"))
    assert a == b == frozenset("0ab1")
    a, _ = pre_fixed_sets(fixtures("remark-3.1"))
    assert a == {"0", "a", "b"}
    ident = Correspondence.from_map(diamond(), lambda x: x)
    assert pre_fixed_sets(ident) == (frozenset("0ab1"), frozenset("0ab1"))
    with pytest.raises(NotSelfCorrespondence):
        pre_fixed_sets(fixtures("example-2.3"))


def test_truncation_examples():
    F = fixtures("example-2.7")
    assert truncate(F, "0") == F
    Fa = truncate(F, "a")
    assert set(Fa.source) == {"a", "1"}
    assert Fa("a") == {"a"} and Fa("1") == {"1"}
    with pytest.raises(UnknownElement):
        truncate(F, "z")


def test_dual_correspondence_is_involutive():
    F = fixtures("example-2.3")
    assert F.dual().dual() == F


@given(lattice_correspondences)
def test_implication_lattice(F):
    v = all_verdicts(F)
    nonempty = bool(check_values(F, V.NONEMPTY))
    if v[M.ASCENDING]:
        assert v[M.V_ASCENDING]
        assert v[M.STRONGLY_UPPER_INCREASING] and v[M.STRONGLY_LOWER_INCREASING]
    if v[M.V_ASCENDING]:
        assert v[M.WEAKLY_ASCENDING] and v[M.C_ASCENDING]
    if nonempty:
        if v[M.STRONGLY_UPPER_INCREASING] or v[M.UPPER_C_ASCENDING]:
            assert v[M.UPPER_INCREASING]
        if v[M.STRONGLY_LOWER_INCREASING] or v[M.LOWER_C_ASCENDING]:
            assert v[M.LOWER_INCREASING]
    for whole, parts in (
        (M.V_ASCENDING, (M.UPPER_V_ASCENDING, M.LOWER_V_ASCENDING)),
        (M.C_ASCENDING, (M.UPPER_C_ASCENDING, M.LOWER_C_ASCENDING)),
    ):
        assert bool(v[whole]) == all(v[p] for p in parts)


@given(instances("increasing-map", max_size=7) | maps)
def test_singletons_reduce_to_increasing(F):
    inc = bool(check_monotonicity(F, M.INCREASING_MAP))
    for p in LATTICE_PROPS:
        assert bool(check_monotonicity(F, p)) == inc, p


@given(correspondences)
def test_failing_witnesses_replay(F):
    props = LATTICE_PROPS + [M.INCREASING_MAP] if F.target.is_lattice() else [M.INCREASING_MAP]
    for p in props:
        v = check_monotonicity(F, p)
        if not v:
            assert replay(F, p, v.witness), (p, v.witness)


@given(lattice_correspondences)
def test_duality(F):
    D = F.dual()
    for p in LATTICE_PROPS:
        assert bool(check_monotonicity(F, p)) == bool(check_monotonicity(D, DUAL[p])), p


@given(correspondences)
def test_chain_conditions_hold_on_finite_values(F):
    for cond in CHAIN_CONDITIONS:
        fast = check_values(F, cond)
        slow = check_values(F, cond, exhaustive=True)
        assert bool(fast) == bool(slow)
        if cond.value.startswith("chain-complete"):
            continue
        assert slow


@given(correspondences)
def test_truncation_fixes(F):
    fix = {x for x, ys in F.items() if x in ys}
    X = F.source
    for h in X:
        Fh = truncate(F, h)
        assert {x for x, ys in Fh.items() if x in ys} == fix & X.up_set(h)


def test_non_lattice_value_is_not_chain_complete():
    # inside a lattice target, the value {a, b} has no sup of its own
    X = build_poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    F = Correspondence(X, X, {x: {"a", "b"} for x in X})
    assert check_values(F, V.CHAIN_COMPLETE_UPWARDS)
    assert not check_values(F, V.COMPLETE_LATTICE)
