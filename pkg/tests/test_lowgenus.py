from math import gcd

import pytest

from spindiv import sphere_spin, torus_gcd_lcm_check, torus_spin
from spindiv.errors import InadmissibleM
from spindiv.lowgenus import TorusTorsionPoint, format_torus_divisor, torus_torsion


def test_sphere():
    s = sphere_spin()
    assert s.divisor == {"inf": -1}
    assert s.count == 1
    assert {k: 2 * v for k, v in s.divisor.items()} == s.canonical
    with pytest.raises(InadmissibleM):
        sphere_spin(3)


def test_torus_two_spin():
    pts = torus_spin(2)
    assert [(p.a, p.b) for p in pts] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    divs = [p.divisor() for p in pts]
    assert divs == [{}, {"w2/2": 1, "0": -1}, {"w1/2": 1, "0": -1}, {"(w1+w2)/2": 1, "0": -1}]
    assert format_torus_divisor(divs[3]) == "1*(w1+w2)/2 - 1*0"
    assert format_torus_divisor({}) == "0"


@pytest.mark.parametrize("m, size", [(1, 1), (2, 4), (3, 9), (6, 36)])
def test_torus_sizes(m, size):
    assert len(torus_spin(m)) == size
    assert len(set(torus_torsion(m))) == size


def test_point_labels_and_lattice_form():
    p = TorusTorsionPoint(2, 4, 6)
    assert p.label == "(w1+2*w2)/3"
    assert p.lattice_divisor() == {"w1/6": 2, "w2/6": 4, "0": -6}
    assert TorusTorsionPoint(3, 0, 6).label == "w1/2"
    assert (TorusTorsionPoint(1, 1, 2) + TorusTorsionPoint(1, 0, 2)) == TorusTorsionPoint(0, 1, 2)
    with pytest.raises(InadmissibleM):
        torus_spin(0)


def test_gcd_lcm_examples():
    r = torus_gcd_lcm_check(2, 4)
    assert (r.intersection_size, r.sum_size, r.sum_is_lcm) == (4, 16, True)
    r = torus_gcd_lcm_check(2, 3)
    assert (r.intersection_size, r.sum_size, r.sum_is_lcm) == (1, 36, True)
    r = torus_gcd_lcm_check(5, 5)
    assert (r.intersection_size, r.sum_size) == (25, 25)


def test_gcd_lcm_sweep():
    for m1 in range(1, 13):
        for m2 in range(1, 13):
            r = torus_gcd_lcm_check(m1, m2)
            assert r.passed
            assert r.intersection_size == gcd(m1, m2) ** 2
            assert r.ambient == m1 * m2
