import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spindiv import (
    MumfordForm,
    alpha,
    class_to_form,
    count_identity_terms,
    enumerate_forms,
    form_to_class,
    hyperelliptic_curve,
    parse_divisor,
    reduce,
    spin_set,
    standard_curve,
    verify_count_identity,
)
from spindiv.divisors import BranchDivisor
from spindiv.errors import BadDivisibility, BadLength, DuplicateLabel, NotHyperelliptic, NotSpin, ParseError
from spindiv.mumford import admissible_lengths, form_from_json, parse_form
from spindiv.spin import SpinClass

from conftest import REAL_G3_THETAS

G3 = hyperelliptic_curve(3)
CASES = [(g, n) for g in range(2, 7) for n in range(1, g) if (g - 1) % n == 0]


def test_example_forms(g3_real):
    f1 = MumfordForm(g3_real, 1, 1, ())
    assert form_to_class(f1).divisor_class == reduce(parse_divisor(g3_real, REAL_G3_THETAS[0]))
    f5 = MumfordForm(g3_real, 1, 0, ("1", "0"))
    assert form_to_class(f5).divisor_class == reduce(parse_divisor(g3_real, REAL_G3_THETAS[4]))


def test_complement_relation():
    labels = G3.branch_labels
    for t in itertools.combinations(labels, 4):
        tc = tuple(x for x in labels if x not in t)
        assert form_to_class(MumfordForm(G3, 1, -1, t)) == form_to_class(MumfordForm(G3, 1, -1, tc))


def test_class_to_form_examples():
    a = G3.branch_labels
    base = SpinClass(reduce(BranchDivisor.point(G3, a[7], 2)), 2)
    assert class_to_form(base) == MumfordForm(G3, 1, 1, ())
    pair = SpinClass(reduce(BranchDivisor.from_mapping(G3, {a[1]: 1, a[2]: 1})), 2)
    assert class_to_form(pair) == MumfordForm(G3, 1, 0, (a[1], a[2]))
    # a1 + a2 + a3 + a4 - D with D = 2*a1; the smaller of T and its complement is kept
    quad = BranchDivisor.from_mapping(G3, {a[0]: -1, a[1]: 1, a[2]: 1, a[3]: 1})
    assert class_to_form(SpinClass(reduce(quad), 2)) == MumfordForm(G3, 1, -1, a[:4])


def test_enumerate_genus_three():
    forms = enumerate_forms(G3, 1)
    assert len(forms) == 64
    by_len = {}
    for f in forms:
        by_len[f.length] = by_len.get(f.length, 0) + 1
    assert by_len == {0: 1, 2: 28, 4: 35}


@pytest.mark.parametrize("g, n", CASES)
def test_forms_biject_onto_spin_set(g, n):
    curve = hyperelliptic_curve(g)
    forms = enumerate_forms(curve, n)
    assert len(forms) == 2 ** (2 * g)
    classes = [form_to_class(f) for f in forms]
    assert len(set(classes)) == len(forms)
    assert set(classes) == set(spin_set(curve, 2 * n))
    for f, c in zip(forms, classes):
        assert class_to_form(c) == f


def test_enumerate_genus_five_m4():
    assert len(enumerate_forms(hyperelliptic_curve(5), 2)) == 2**10


@pytest.mark.parametrize(
    "g, n, terms",
    [(2, 1, {1: 6, 3: 10}), (1, 1, {0: 1, 2: 3}), (3, 1, {0: 1, 2: 28, 4: 35}), (3, 2, {1: 8, 3: 56})],
)
def test_count_identity_terms(g, n, terms):
    assert count_identity_terms(g, n) == terms
    assert verify_count_identity(g, n)


def test_count_identity_up_to_thirty():
    for g in range(1, 31):
        for n in range(1, max(g, 2)):
            if g == 1 or (g - 1) % n == 0:
                assert verify_count_identity(g, n), (g, n)


@given(st.integers(1, 40), st.integers(1, 40))
def test_admissible_lengths_parity(g, n):
    if g > 1 and (g - 1) % n:
        return
    q = (g - 1) // n
    for l in admissible_lengths(g, n):
        assert 0 <= l <= g + 1 and (q - l) % 2 == 0
    expected = sum(comb(2 * g + 2, l) for l in range(g + 1) if (q - l) % 2 == 0)
    if (q - g - 1) % 2 == 0:
        expected += comb(2 * g + 2, g + 1) // 2
    assert sum(count_identity_terms(g, n).values()) == expected


@pytest.mark.parametrize("g", range(1, 7))
def test_alpha_is_isomorphism(g):
    curve = hyperelliptic_curve(g)
    labels = curve.branch_labels
    seen = {}
    for size in range(0, len(labels) + 1, 2):
        for t in itertools.combinations(labels, size):
            c = alpha(curve, t)
            assert (2 * c).is_zero()
            comp = frozenset(labels) - frozenset(t)
            key = min(frozenset(t), comp, key=lambda s: sorted(labels.index(x) for x in s))
            seen.setdefault(c, set()).add(key)
    assert len(seen) == 2 ** (2 * g)
    assert all(len(v) == 1 for v in seen.values())


@given(st.integers(2, 5), st.data())
def test_alpha_respects_symmetric_difference(g, data):
    curve = hyperelliptic_curve(g)
    labels = list(curve.branch_labels)
    t = set(data.draw(st.lists(st.sampled_from(labels), unique=True)))
    u = set(data.draw(st.lists(st.sampled_from(labels), unique=True)))
    if len(t) % 2 or len(u) % 2:
        return
    assert alpha(curve, t ^ u) == alpha(curve, t) + alpha(curve, u)


def test_validation():
    with pytest.raises(NotHyperelliptic):
        MumfordForm(standard_curve(3, 6), 1, 0, ())
    with pytest.raises(BadDivisibility):
        MumfordForm(hyperelliptic_curve(4), 2, 0, ())
    with pytest.raises(BadDivisibility):
        enumerate_forms(hyperelliptic_curve(1), 1)
    with pytest.raises(BadLength):
        MumfordForm(G3, 1, 0, ("a1",))
    with pytest.raises(DuplicateLabel):
        MumfordForm(G3, 1, 0, ("a1", "a1"))
    with pytest.raises(NotSpin):
        class_to_form(SpinClass(reduce(BranchDivisor.point(G3, "a1", 3)), 2))
    with pytest.raises(BadDivisibility):
        count_identity_terms(4, 2)


def test_parse_form(g3_real):
    f = parse_form(g3_real, "k=0; points=1,0")
    assert f.points == ("0", "1")
    assert str(f) == "k=0; points=0,1"
    assert form_from_json(g3_real, {"k": 0, "points": ["1", "0"]}) == f
    assert parse_form(g3_real, "k=1; points=") == MumfordForm(g3_real, 1, 1, ())
    with pytest.raises(ParseError):
        parse_form(g3_real, "points=1,0")
    with pytest.raises(ParseError):
        form_from_json(g3_real, {"points": []})
