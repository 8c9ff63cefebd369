"""Genus 0 and genus 1: the sphere and the torus.

On the sphere the canonical divisor is ``-2*inf`` and the Jacobian is
trivial, so ``-1*inf`` is the only 2-spin divisor.  On a torus ``C/L`` the
canonical divisor is 0 and ``Jac(T) = T``, so the m-spin divisors are the
m-torsion points ``(a w1 + b w2)/m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InadmissibleM
from .torsion import subgroup_intersection, subgroup_sum


@dataclass(frozen=True)
class SphereSpin:
    divisor: dict[str, int]
    canonical: dict[str, int]
    count: int


def sphere_spin(m: int = 2) -> SphereSpin:
    if m != 2:
        raise InadmissibleM("on the sphere the only admissible m is 2")
    return SphereSpin(divisor={"inf": -1}, canonical={"inf": -2}, count=1)


def _point_label(a: int, b: int, m: int) -> str:
    if a == 0 and b == 0:
        return "0"
    k = gcd(gcd(a, b), m)
    a, b, m = a // k, b // k, m // k
    terms = [f"{'' if c == 1 else f'{c}*'}{w}" for c, w in ((a, "w1"), (b, "w2")) if c]
    num = "+".join(terms)
    if m == 1:
        return num
    return f"({num})/{m}" if len(terms) > 1 else f"{num}/{m}"


@dataclass(frozen=True, order=True)
class TorusTorsionPoint:
    """The point ``a*w1/m + b*w2/m`` of the torus."""

    a: int
    b: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InadmissibleM("m must be positive")
        object.__setattr__(self, "a", self.a % self.m)
        object.__setattr__(self, "b", self.b % self.m)

    def __add__(self, other: TorusTorsionPoint) -> TorusTorsionPoint:
        if other.m != self.m:
            return NotImplemented
        return TorusTorsionPoint(self.a + other.a, self.b + other.b, self.m)

    @property
    def label(self) -> str:
        return _point_label(self.a, self.b, self.m)

    def divisor(self) -> dict[str, int]:
        """``1*P - 1*0``; the zero divisor at the origin."""
        if self.a == 0 and self.b == 0:
            return {}
        return {self.label: 1, "0": -1}

    def lattice_divisor(self) -> dict[str, int]:
        """The linearly equivalent ``a*(w1/m) + b*(w2/m) - (a+b)*0``."""
        out: dict[str, int] = {}
        if self.a:
            out[_point_label(1, 0, self.m)] = self.a
        if self.b:
            out[_point_label(0, 1, self.m)] = self.b
        if self.a + self.b:
            out["0"] = -(self.a + self.b)
        return out

    def embed(self, modulus: int) -> tuple[int, int]:
        """Coordinates in ``Z_modulus^2`` for ``m | modulus``."""
        f = modulus // self.m
        return (self.a * f, self.b * f)


def format_torus_divisor(div: dict[str, int]) -> str:
    if not div:
        return "0"
    out = ""
    for i, (lab, c) in enumerate(div.items()):
        sign = "-" if c < 0 else "+"
        term = f"{abs(c)}*{lab}"
        out += (("-" if sign == "-" else "") + term) if i == 0 else f" {sign} {term}"
    return out


def torus_torsion(m: int) -> list[TorusTorsionPoint]:
    if m < 1:
        raise InadmissibleM("m must be positive")
    return [TorusTorsionPoint(a, b, m) for a in range(m) for b in range(m)]


def torus_spin(m: int) -> list[TorusTorsionPoint]:
    """m-spin divisors on the torus; ``K = 0`` so they are exactly ``Tor_m``."""
    return torus_torsion(m)


@dataclass(frozen=True)
class GcdLcmReport:
    m1: int
    m2: int
    ambient: int
    intersection_size: int
    sum_size: int
    intersection_is_gcd: bool
    sum_in_lcm: bool
    sum_is_lcm: bool

    @property
    def passed(self) -> bool:
        return self.intersection_is_gcd and self.sum_in_lcm

    def to_dict(self) -> dict:
        return {
            "m1": self.m1,
            "m2": self.m2,
            "ambient": self.ambient,
            "intersection_size": self.intersection_size,
            "sum_size": self.sum_size,
            "intersection_is_gcd": self.intersection_is_gcd,
            "sum_in_lcm": self.sum_in_lcm,
            "sum_is_lcm": self.sum_is_lcm,
            "passed": self.passed,
        }


def torus_gcd_lcm_check(m1: int, m2: int) -> GcdLcmReport:
    """Compare ``Tor_m1 & Tor_m2`` with ``Tor_gcd`` and ``Tor_m1 + Tor_m2`` with ``Tor_lcm``.

    All groups are embedded in ``Z_N^2`` with ``N = m1*m2`` so that
    ``Tor_lcm`` is a proper subgroup whenever ``gcd > 1``.
    """
    if m1 < 1 or m2 < 1:
        raise InadmissibleM("m1 and m2 must be positive")
    g = gcd(m1, m2)
    l = m1 * m2 // g
    n = m1 * m2

    def emb(m: int) -> frozenset[tuple[int, int]]:
        return frozenset(pt.embed(n) for pt in torus_torsion(m))

    t1, t2 = emb(m1), emb(m2)
    inter = subgroup_intersection(t1, t2)
    total = subgroup_sum(t1, t2, n)
    # Tor_l has l^2 elements, so containment plus equal size means equality
    in_lcm = all(l * a % n == 0 and l * b % n == 0 for a, b in total)
    return GcdLcmReport(
        m1=m1,
        m2=m2,
        ambient=n,
        intersection_size=len(inter),
        sum_size=len(total),
        intersection_is_gcd=inter == emb(g),
        sum_in_lcm=in_lcm,
        sum_is_lcm=in_lcm and len(total) == l * l,
    )
