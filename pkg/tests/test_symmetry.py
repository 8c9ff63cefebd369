import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spindiv import (
    AntipodalProfile,
    BranchDivisor,
    ConjugationProfile,
    OddOrderProfile,
    SymmetryAction,
    alpha,
    count_fixed_closed_form,
    fixed_spin,
    fixed_spin_count,
    hyperelliptic_curve,
    induced_matrix,
    orbit_subgroup,
    parse_divisor,
    reduce,
    spin_set,
    standard_curve,
)
from spindiv.curve import constants
from spindiv.divisors import relation_generators
from spindiv.errors import BadPermutation, BadProfile, NotHyperelliptic, ParseError
from spindiv.spin import SpinClass
from spindiv.symmetry import apply, apply_class, scan_fixed_spin, symmetry_from_json
from spindiv.torsion import FpMatrix

from conftest import REAL_G3_THETAS


def brute_fixed(s, m):
    """Fixed spin classes found by acting on one representative of each class."""
    return frozenset(t for t in spin_set(s.curve, m) if apply_class(s, t.divisor_class) == t.divisor_class)


def test_identity_action(g3_real):
    d = parse_divisor(g3_real, "2*inf - 1*0 + 1*xi1")
    assert apply(SymmetryAction.identity(g3_real), d) == d


def test_conjugation_on_divisors(g3_real, g3_conj):
    t8 = parse_divisor(g3_real, REAL_G3_THETAS[7])
    assert apply(g3_conj, t8) == t8
    xi = BranchDivisor.point(g3_real, "xi1")
    img = apply(g3_conj, xi)
    assert img == BranchDivisor.point(g3_real, "xi1bar")
    assert reduce(img) != reduce(xi)


def test_induced_matrix(g3_real, g3_conj):
    d = g3_real.rank
    assert induced_matrix(SymmetryAction.identity(g3_real)) == FpMatrix.identity(d, 2)
    m = induced_matrix(g3_conj)
    assert (m - FpMatrix.identity(d, 2)).rank() == 2
    assert m @ m == FpMatrix.identity(d, 2)
    c = standard_curve(3, 6)
    s = SymmetryAction.from_cycles(c, [("a1", "a2", "a3"), ("a4", "a5", "a6")])
    assert induced_matrix(s) ** 3 == FpMatrix.identity(c.rank, 3)


def test_example_fixed_set(g3_real, g3_conj):
    got = fixed_spin(g3_conj, 2)
    assert len(got) == 16
    expected = {SpinClass(reduce(parse_divisor(g3_real, t)), 2) for t in REAL_G3_THETAS}
    assert got == expected
    assert got == scan_fixed_spin(g3_conj, 2) == brute_fixed(g3_conj, 2)


def test_identity_fixes_everything():
    for curve in (hyperelliptic_curve(3), standard_curve(3, 6)):
        s = SymmetryAction.identity(curve)
        for m in constants(curve).admissible_m:
            assert fixed_spin(s, m) == spin_set(curve, m)


@pytest.mark.parametrize(
    "profile, count",
    [
        (ConjugationProfile(3, 2), 16),
        (OddOrderProfile(2, 3, 0), 1),
        (OddOrderProfile(3, 3, 2), 4),
        (OddOrderProfile(4, 3, 1), 4),
        (OddOrderProfile(7, 5, 1), 4),
    ],
)
def test_profiles_match_closed_form(profile, count):
    s = profile.symmetry()
    assert count_fixed_closed_form(profile) == count
    assert fixed_spin_count(s, 2) == count
    assert orbit_subgroup(s).cardinality == count
    assert fixed_spin(s, 2) == scan_fixed_spin(s, 2) == brute_fixed(s, 2)


@pytest.mark.parametrize("g", [1, 3, 5])
def test_antipodal_class_count(g):
    """A fixed-point-free pairing fixes 2^(g+1) classes; only 2^g come from orbit unions."""
    prof = AntipodalProfile(g)
    s = prof.symmetry()
    assert orbit_subgroup(s).cardinality == 2**g
    if g >= 2:
        assert fixed_spin_count(s, 2) == 2 ** (g + 1)
        assert fixed_spin(s, 2) == scan_fixed_spin(s, 2)


def test_antipodal_extra_classes_are_swapped_transversals():
    curve = hyperelliptic_curve(3)
    s = AntipodalProfile(3).symmetry(curve)
    labels = curve.branch_labels
    sub = orbit_subgroup(s)
    extra = set()
    for t in itertools.combinations(range(curve.r), curve.r // 2):
        image = {s.perm[i] for i in t}
        if image == set(range(curve.r)) - set(t):
            c = alpha(curve, [labels[i] for i in t])
            assert apply_class(s, c) == c
            assert c.coords not in sub
            extra.add(c.coords)
    assert len(extra) == 8


@given(st.sampled_from([hyperelliptic_curve(2), hyperelliptic_curve(3), standard_curve(3, 6)]), st.data())
def test_action_is_well_defined(curve, data):
    perm = data.draw(st.permutations(range(curve.r)))
    s = SymmetryAction(curve, tuple(perm))
    coeffs = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=curve.r, max_size=curve.r)))
    d = BranchDivisor(curve, coeffs)
    rel = data.draw(st.sampled_from(relation_generators(curve)))
    assert reduce(apply(s, d)) == reduce(apply(s, d + rel))
    assert apply_class(s, reduce(d)) == reduce(apply(s, d))


@given(st.sampled_from([hyperelliptic_curve(2), standard_curve(3, 6), standard_curve(5, 5)]), st.data())
def test_functoriality(curve, data):
    s = SymmetryAction(curve, tuple(data.draw(st.permutations(range(curve.r)))))
    t = SymmetryAction(curve, tuple(data.draw(st.permutations(range(curve.r)))))
    d = BranchDivisor(curve, tuple(data.draw(st.lists(st.integers(-3, 3), min_size=curve.r, max_size=curve.r))))
    assert apply(s @ t, d) == apply(s, apply(t, d))
    assert induced_matrix(s @ t) == induced_matrix(s) @ induced_matrix(t)
    assert induced_matrix(s) ** s.order == FpMatrix.identity(curve.rank, curve.p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([hyperelliptic_curve(2), hyperelliptic_curve(3), standard_curve(3, 6)]), st.data())
def test_fixed_spin_matches_scan(curve, data):
    s = SymmetryAction(curve, tuple(data.draw(st.permutations(range(curve.r)))))
    m = data.draw(st.sampled_from(constants(curve).admissible_m))
    got = fixed_spin(s, m)
    assert got == scan_fixed_spin(s, m)
    assert got <= spin_set(curve, m)
    assert fixed_spin_count(s, m) == len(got)


def test_symmetry_parts(g3_real, g3_conj):
    assert g3_conj.is_involution()
    assert g3_conj.order == 2
    assert g3_conj.fixed_labels() == ["-1", "0", "1", "inf"]
    assert g3_conj.to_dict() == {
        "perm": {"xi1": "xi1bar", "xi1bar": "xi1", "xi2": "xi2bar", "xi2bar": "xi2"},
        "antiholomorphic": True,
    }
    assert symmetry_from_json(g3_real, g3_conj.to_dict()) == g3_conj
    assert not (g3_conj @ g3_conj).antiholomorphic


def test_bad_symmetries(g3_real):
    with pytest.raises(BadPermutation):
        SymmetryAction.from_mapping(g3_real, {"xi1": "xi2"})
    with pytest.raises(BadPermutation):
        SymmetryAction.from_cycles(g3_real, [("xi1", "xi2"), ("xi2", "inf")])
    with pytest.raises(ParseError):
        symmetry_from_json(g3_real, ["xi1"])
    with pytest.raises(NotHyperelliptic):
        orbit_subgroup(SymmetryAction.identity(standard_curve(3, 6)))


@pytest.mark.parametrize(
    "cls, args",
    [
        (AntipodalProfile, (2,)),
        (ConjugationProfile, (3, 4)),
        (OddOrderProfile, (3, 4, 0)),
        (OddOrderProfile, (2, 3, 1)),
        (OddOrderProfile, (4, 3, 3)),
    ],
)
def test_bad_profiles(cls, args):
    with pytest.raises(BadProfile):
        cls(*args)
