"""Branch-supported divisors and their normal form.

The branch-supported divisor class group is ``Z^r`` modulo the relations
``p*a_i - p*a_j`` and ``a_1 + ... + a_r - r*a_i``.  It is isomorphic to
``Z + Z_p^(r-2)``: the degree, plus torsion coordinates with respect to the
generators ``a_i - a_r`` (base point is the last label).

>>> from spindiv.curve import standard_curve
>>> c = standard_curve(2, 8)
>>> d = parse_divisor(c, "1*a1 - 1*a2")
>>> reduce(d).coords
(1, 1, 0, 0, 0, 0)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Mapping

from .curve import CurveSpec
from .errors import CurveMismatch, ParseError


def _check_same(c1: CurveSpec, c2: CurveSpec) -> None:
    if c1 is not c2 and c1 != c2:
        raise CurveMismatch("operands live on different curves")


@dataclass(frozen=True)
class BranchDivisor:
    """Integer combination of branch points, stored densely in label order."""

    curve: CurveSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.curve.r:
            raise ValueError(f"expected {self.curve.r} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, curve: CurveSpec) -> BranchDivisor:
        return cls(curve, (0,) * curve.r)

    @classmethod
    def point(cls, curve: CurveSpec, label: str, coeff: int = 1) -> BranchDivisor:
        c = [0] * curve.r
        c[curve.index(label)] = coeff
        return cls(curve, tuple(c))

    @classmethod
    def from_mapping(cls, curve: CurveSpec, mapping: Mapping[str, int]) -> BranchDivisor:
        c = [0] * curve.r
        for label, k in mapping.items():
            if isinstance(k, bool) or not isinstance(k, int):
                raise ParseError(f"coefficient of {label!r} must be an integer")
            c[curve.index(label)] += k
        return cls(curve, tuple(c))

    def as_dict(self) -> dict[str, int]:
        """Nonzero coefficients keyed by label, in label order."""
        return {lab: c for lab, c in zip(self.curve.branch_labels, self.coeffs) if c}

    @property
    def degree(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: BranchDivisor) -> BranchDivisor:
        if not isinstance(other, BranchDivisor):
            return NotImplemented
        _check_same(self.curve, other.curve)
        return BranchDivisor(self.curve, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BranchDivisor:
        return BranchDivisor(self.curve, tuple(-a for a in self.coeffs))

    def __sub__(self, other: BranchDivisor) -> BranchDivisor:
        if not isinstance(other, BranchDivisor):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, k: int) -> BranchDivisor:
        if not isinstance(k, int):
            return NotImplemented
        return BranchDivisor(self.curve, tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        return format_divisor(self)


@dataclass(frozen=True)
class DivisorClass:
    """Normal form ``(degree, coords)`` with coords in ``Z_p^(r-2)``."""

    curve: CurveSpec
    degree: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.curve.p
        if len(self.coords) != self.curve.rank:
            raise ValueError(f"expected {self.curve.rank} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(x) % p for x in self.coords))

    @classmethod
    def zero(cls, curve: CurveSpec) -> DivisorClass:
        return cls(curve, 0, (0,) * curve.rank)

    def is_zero(self) -> bool:
        return self.degree == 0 and not any(self.coords)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        _check_same(self.curve, other.curve)
        return DivisorClass(
            self.curve,
            self.degree + other.degree,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.curve, -self.degree, tuple(-a for a in self.coords))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.curve, k * self.degree, tuple(k * a for a in self.coords))

    def representative(self) -> BranchDivisor:
        """``degree*a_r + sum w_i (a_i - a_r)``; one divisor in the class."""
        c = list(self.coords) + [0, self.degree - sum(self.coords)]
        return BranchDivisor(self.curve, tuple(c))

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.degree, "coords": list(self.coords)}


def add(d1: BranchDivisor, d2: BranchDivisor) -> BranchDivisor:
    return d1 + d2


def scale(c: int, d: BranchDivisor) -> BranchDivisor:
    return c * d


def negate(d: BranchDivisor) -> BranchDivisor:
    return -d


def degree(d: BranchDivisor) -> int:
    return d.degree


def class_add(c1: DivisorClass, c2: DivisorClass) -> DivisorClass:
    return c1 + c2


def class_scale(k: int, c: DivisorClass) -> DivisorClass:
    return k * c


def reduce(d: BranchDivisor) -> DivisorClass:
    """Normal form of ``d`` modulo the branch relations.

    Excess multiples of ``p`` move onto the base point ``a_r``; the all-ones
    relation then eliminates the coordinate of ``a_{r-1}``.
    """
    p = d.curve.p
    v = [c % p for c in d.coeffs[:-1]]
    t = v[-1]
    return DivisorClass(d.curve, d.degree, tuple(x - t for x in v[:-1]))


def equivalent(d1: BranchDivisor, d2: BranchDivisor) -> bool:
    _check_same(d1.curve, d2.curve)
    return reduce(d1) == reduce(d2)


def relation_generators(curve: CurveSpec) -> list[BranchDivisor]:
    """``p*a_i - p*a_r`` for i < r and ``sum a_j - r*a_r``; these span all relations."""
    r, p = curve.r, curve.p
    gens = []
    for i in range(r - 1):
        c = [0] * r
        c[i], c[-1] = p, -p
        gens.append(BranchDivisor(curve, tuple(c)))
    gens.append(BranchDivisor(curve, tuple([1] * (r - 1) + [1 - r])))
    return gens


# -- text and JSON syntax --------------------------------------------------

_TERM = re.compile(r"\s*([+-])?\s*(\d+)\s*\*\s*(\S+?)(?=\s*[+-]\s*\d+\s*\*|\s*$)")


def parse_divisor(curve: CurveSpec, text: str) -> BranchDivisor:
    """Parse ``"2*inf - 1*0 + 1*xi1"``; every term needs an explicit coefficient."""
    s = text.strip()
    if s in ("", "0"):
        return BranchDivisor.zero(curve)
    coeffs = [0] * curve.r
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or (not first and m.group(1) is None):
            raise ParseError(f"cannot parse divisor at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeffs[curve.index(m.group(3))] += sign * int(m.group(2))
        pos = m.end()
        first = False
    return BranchDivisor(curve, tuple(coeffs))


def divisor_from_json(curve: CurveSpec, data: Any) -> BranchDivisor:
    if not isinstance(data, dict):
        raise ParseError("divisor JSON must be an object mapping label to integer")
    return BranchDivisor.from_mapping(curve, data)


def format_divisor(d: BranchDivisor) -> str:
    parts = []
    for lab, c in d.as_dict().items():
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{abs(c)}*{lab}"))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out
