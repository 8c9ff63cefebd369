"""Exact (anti-)Möbius maps on Gaussian-rational branch values.

Only values with rational real and imaginary parts (plus infinity) are
supported.  Curves whose branch values need other algebraic numbers should be
given a permutation directly.

>>> m = MobiusMap.conjugation()
>>> m(GaussianRational(1, 2))
GaussianRational(re=Fraction(1, 1), im=Fraction(-2, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence, Union

from .curve import CurveSpec
from .errors import NotStable, ParseError, SingularMap
from .symmetry import SymmetryAction


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, o: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __mul__(self, o: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o: GaussianRational) -> GaussianRational:
        den = o.re * o.re + o.im * o.im
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"


INF = _Infinity()
Point = Union[GaussianRational, _Infinity]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


@dataclass(frozen=True)
class MobiusMap:
    """``z -> (a w + b)/(c w + d)`` with ``w = z`` or ``w = conj(z)``."""

    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational
    conjugating: bool = False

    def __post_init__(self) -> None:
        if (self.a * self.d + GaussianRational(-1) * self.b * self.c).is_zero():
            raise SingularMap("ad - bc = 0")

    @classmethod
    def conjugation(cls) -> MobiusMap:
        return cls(ONE, ZERO, ZERO, ONE, True)

    def __call__(self, z: Point) -> Point:
        if isinstance(z, _Infinity):
            return INF if self.c.is_zero() else self.a / self.c
        w = z.conjugate() if self.conjugating else z
        den = self.c * w + self.d
        if den.is_zero():
            return INF
        return (self.a * w + self.b) / den


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational number: {x!r}")
    try:
        return Fraction(str(x).strip()) if not isinstance(x, int) else Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {x!r}") from None


def parse_point(x: Any) -> Point:
    """``"inf"`` or ``[re, im]`` (a bare number means a real value)."""
    if isinstance(x, str) and x.strip().lower() in ("inf", "infinity", "∞"):
        return INF
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise ParseError(f"complex value must be [re, im], got {x!r}")
        return GaussianRational(parse_rational(x[0]), parse_rational(x[1]))
    return GaussianRational(parse_rational(x))


def mobius_from_json(data: Any) -> MobiusMap:
    if not isinstance(data, dict) or not all(k in data for k in "abcd"):
        raise ParseError('Möbius JSON needs keys "a", "b", "c", "d"')
    coeffs = []
    for key in "abcd":
        pt = parse_point(data[key])
        if pt is INF:
            raise ParseError(f"coefficient {key} cannot be infinite")
        coeffs.append(pt)
    return MobiusMap(*coeffs, conjugating=bool(data.get("conjugating", False)))


def values_from_json(curve: CurveSpec, data: Any) -> list[Point]:
    """Branch values as a list in label order or a dict keyed by label."""
    if isinstance(data, dict):
        missing = [lab for lab in curve.branch_labels if lab not in data]
        if missing or len(data) != curve.r:
            raise ParseError(f"values must cover exactly the branch labels (missing {missing})")
        return [parse_point(data[lab]) for lab in curve.branch_labels]
    if isinstance(data, list):
        if len(data) != curve.r:
            raise ParseError(f"expected {curve.r} branch values, got {len(data)}")
        return [parse_point(x) for x in data]
    raise ParseError("branch values must be a JSON list or object")


def induce_permutation(curve: CurveSpec, mapping: MobiusMap, values: Sequence[Point]) -> SymmetryAction:
    """Permutation of branch labels induced by an exact (anti-)Möbius map."""
    if len(values) != curve.r:
        raise ParseError(f"expected {curve.r} branch values, got {len(values)}")
    where = {}
    for i, v in enumerate(values):
        if v in where:
            raise ParseError(f"branch value {v} repeated")
        where[v] = i
    perm = []
    for i, v in enumerate(values):
        img = mapping(v)
        if img not in where:
            raise NotStable(f"{curve.branch_labels[i]} = {v} maps to {img}, outside the branch set")
        perm.append(where[img])
    return SymmetryAction(curve, tuple(perm), mapping.conjugating)
