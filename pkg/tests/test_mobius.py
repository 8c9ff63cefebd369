from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spindiv import make_curve
from spindiv.errors import NotStable, ParseError, SingularMap
from spindiv.mobius import (
    INF,
    GaussianRational,
    MobiusMap,
    induce_permutation,
    mobius_from_json,
    parse_point,
    values_from_json,
)

Q = GaussianRational


def test_conjugation_on_real_and_imaginary_values():
    curve = make_curve(2, ["-1", "0", "1", "inf", "i", "-i"])
    values = values_from_json(curve, ["-1", "0", "1", "inf", ["0", "1"], ["0", "-1"]])
    s = induce_permutation(curve, MobiusMap.conjugation(), values)
    assert s.label_map() == {"-1": "-1", "0": "0", "1": "1", "inf": "inf", "i": "-i", "-i": "i"}
    assert s.antiholomorphic


def test_antipodal_map_pairs_points():
    labels = ["1", "-1", "i", "-i", "2", "-1/2", "2i", "-i/2"]
    curve = make_curve(2, labels)
    values = values_from_json(curve, [1, -1, [0, 1], [0, -1], 2, "-1/2", [0, 2], [0, "-1/2"]])
    antipodal = mobius_from_json({"a": [0, 0], "b": [-1, 0], "c": [1, 0], "d": [0, 0], "conjugating": True})
    s = induce_permutation(curve, antipodal, values)
    assert s.label_map() == {
        "1": "-1", "-1": "1", "i": "-i", "-i": "i", "2": "-1/2", "-1/2": "2", "2i": "-i/2", "-i/2": "2i",
    }
    assert s.fixed_labels() == [] and s.is_involution()


def test_doubling_is_not_stable():
    curve = make_curve(3, ["0", "1", "inf"])
    doubling = MobiusMap(Q(2), Q(0), Q(0), Q(1))
    with pytest.raises(NotStable):
        induce_permutation(curve, doubling, values_from_json(curve, [0, 1, "inf"]))


def test_infinity_handling():
    inv = MobiusMap(Q(0), Q(1), Q(1), Q(0))
    assert inv(INF) == Q(0)
    assert inv(Q(0)) is INF
    assert MobiusMap.conjugation()(INF) is INF


def test_singular_and_parse_errors():
    with pytest.raises(SingularMap):
        MobiusMap(Q(1), Q(2), Q(2), Q(4))
    with pytest.raises(ParseError):
        mobius_from_json({"a": [1, 0]})
    with pytest.raises(ParseError):
        parse_point([1, 2, 3])
    with pytest.raises(ParseError):
        parse_point("one")
    with pytest.raises(ParseError):
        mobius_from_json({"a": "inf", "b": 0, "c": 0, "d": 1})
    curve = make_curve(3, ["0", "1", "inf"])
    with pytest.raises(ParseError):
        values_from_json(curve, [0, 1])
    with pytest.raises(ParseError):
        values_from_json(curve, {"0": 0, "1": 1})
    with pytest.raises(ParseError):
        induce_permutation(curve, MobiusMap.conjugation(), [Q(0), Q(0), INF])


def test_parse_point_forms():
    assert parse_point("3/4") == Q(Fraction(3, 4))
    assert parse_point(["1/2", "-2"]) == Q(Fraction(1, 2), -2)
    assert parse_point("inf") is INF


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
gauss = st.builds(Q, rationals, rationals)


@given(gauss, gauss, gauss, gauss, gauss)
def test_composition_matches_matrix_product(a, b, c, d, z):
    try:
        f = MobiusMap(a, b, c, d)
    except SingularMap:
        return
    g = MobiusMap(Q(0), Q(1), Q(1), Q(0))
    # g(f(z)) = 1/f(z), whose matrix is [[c, d], [a, b]]
    gf = MobiusMap(c, d, a, b)
    assert g(f(z)) == gf(z)


@given(gauss)
def test_arithmetic(z):
    if not z.is_zero():
        assert (z / z) == Q(1)
    assert z * z.conjugate() == Q(z.re * z.re + z.im * z.im)
