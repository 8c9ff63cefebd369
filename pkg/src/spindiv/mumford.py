"""Mumford representations of branch-supported spin classes on hyperelliptic curves.

For ``m = 2n`` with ``n | g - 1`` every branch-supported m-spin class can be
written as ``k*D + p_1 + ... + p_l`` with ``D = 2*a_1``, distinct branch
points ``p_i`` and ``l = (g - 1 - 2nk)/n`` between 0 and g + 1.  The form is
unique except when ``l = g + 1``, where a point set and its complement give
the same class; we keep the lexicographically smaller one.

>>> from spindiv.curve import hyperelliptic_curve
>>> len(enumerate_forms(hyperelliptic_curve(3), 1))
64
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any, Iterable

from .curve import CurveSpec
from .divisors import BranchDivisor, DivisorClass, reduce
from .errors import BadDivisibility, BadLength, DuplicateLabel, NotHyperelliptic, NotSpin, ParseError
from .spin import SpinClass, is_spin


def _check_curve(curve: CurveSpec, n: int) -> None:
    if curve.p != 2:
        raise NotHyperelliptic(f"Mumford forms need p = 2, got p = {curve.p}")
    g = curve.genus
    if n < 1 or g < 2 or (g - 1) % n:
        raise BadDivisibility(f"need n >= 1 dividing g - 1 with g >= 2 (g = {g}, n = {n})")


def admissible_lengths(g: int, n: int) -> list[int]:
    """Point counts l in [0, g + 1] with ``(g - 1 - n*l)`` an even multiple of n."""
    q = (g - 1) // n
    return [l for l in range(g + 2) if (q - l) % 2 == 0]


@dataclass(frozen=True)
class MumfordForm:
    curve: CurveSpec
    n: int
    k: int
    points: tuple[str, ...]

    def __post_init__(self) -> None:
        _check_curve(self.curve, self.n)
        idx = sorted(self.curve.index(lab) for lab in self.points)
        if len(set(idx)) != len(idx):
            raise DuplicateLabel("Mumford form points must be distinct")
        object.__setattr__(self, "points", tuple(self.curve.branch_labels[i] for i in idx))
        g, l = self.curve.genus, len(self.points)
        if self.n * l != g - 1 - 2 * self.n * self.k or l > g + 1:
            raise BadLength(
                f"{l} points do not fit k = {self.k}, n = {self.n}, g = {g}: "
                f"need l = (g - 1 - 2nk)/n in [0, g + 1]"
            )

    @property
    def m(self) -> int:
        return 2 * self.n

    @property
    def length(self) -> int:
        return len(self.points)

    def _indices(self) -> tuple[int, ...]:
        return tuple(self.curve.index(lab) for lab in self.points)

    def divisor(self) -> BranchDivisor:
        """``k * (2 a_1) + sum of points``."""
        c = [0] * self.curve.r
        c[0] += 2 * self.k
        for i in self._indices():
            c[i] += 1
        return BranchDivisor(self.curve, tuple(c))

    def canonical(self) -> MumfordForm:
        if self.length != self.curve.genus + 1:
            return self
        own = self._indices()
        comp = tuple(i for i in range(self.curve.r) if i not in own)
        if comp < own:
            labels = self.curve.branch_labels
            return MumfordForm(self.curve, self.n, self.k, tuple(labels[i] for i in comp))
        return self

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "points": list(self.points)}

    def __str__(self) -> str:
        return f"k={self.k}; points={','.join(self.points)}"


def form_to_class(f: MumfordForm) -> SpinClass:
    return SpinClass(reduce(f.divisor()), f.m)


def _forms(curve: CurveSpec, n: int) -> Iterable[MumfordForm]:
    g, r = curve.genus, curve.r
    labels = curve.branch_labels
    q = (g - 1) // n
    for l in admissible_lengths(g, n):
        k = (q - l) // 2
        for combo in itertools.combinations(range(r), l):
            if l == g + 1:
                comp = tuple(i for i in range(r) if i not in combo)
                if comp < combo:
                    continue
            yield MumfordForm(curve, n, k, tuple(labels[i] for i in combo))


def enumerate_forms(curve: CurveSpec, n: int) -> tuple[MumfordForm, ...]:
    """All canonical forms, ordered by point count then lexicographically."""
    _check_curve(curve, n)
    return tuple(_forms(curve, n))


@lru_cache(maxsize=32)
def _table(curve: CurveSpec, n: int) -> dict[DivisorClass, MumfordForm]:
    return {form_to_class(f).divisor_class: f for f in _forms(curve, n)}


def class_to_form(s: SpinClass) -> MumfordForm:
    """Inverse of :func:`form_to_class` via a cached form table."""
    c = s.divisor_class
    if s.m % 2 or not is_spin(c, s.m):
        raise NotSpin(f"class is not a {s.m}-spin class with even m")
    n = s.m // 2
    _check_curve(c.curve, n)
    return _table(c.curve, n)[c]


def count_identity_terms(g: int, n: int) -> dict[int, int]:
    """Number of distinct forms for each admissible point count l."""
    if g < 1 or n < 1 or (g - 1) % n:
        raise BadDivisibility(f"need n | g - 1 (g = {g}, n = {n})")
    terms = {}
    for l in admissible_lengths(g, n):
        c = comb(2 * g + 2, l)
        terms[l] = c // 2 if l == g + 1 else c
    return terms


def verify_count_identity(g: int, n: int) -> bool:
    """Exact check that the form counts add up to ``2^(2g)``."""
    return sum(count_identity_terms(g, n).values()) == 2 ** (2 * g)


def alpha(curve: CurveSpec, subset: Iterable[str]) -> DivisorClass:
    """Class of ``sum_{t in T} t - |T| * a_r``; a 2-torsion class for p = 2."""
    c = [0] * curve.r
    count = 0
    for lab in subset:
        c[curve.index(lab)] += 1
        count += 1
    c[-1] -= count
    return reduce(BranchDivisor(curve, tuple(c)))


_FORM = re.compile(r"^\s*k\s*=\s*(-?\d+)\s*;\s*points\s*=\s*(.*?)\s*$")


def parse_form(curve: CurveSpec, text: str, n: int = 1) -> MumfordForm:
    """Parse ``"k=0; points=1,0"``."""
    m = _FORM.match(text)
    if m is None:
        raise ParseError(f"cannot parse Mumford form {text!r}; expected 'k=<int>; points=a,b,...'")
    pts = [s.strip() for s in m.group(2).split(",") if s.strip()]
    return MumfordForm(curve, n, int(m.group(1)), tuple(pts))


def form_from_json(curve: CurveSpec, data: Any, n: int = 1) -> MumfordForm:
    if not isinstance(data, dict) or "k" not in data or not isinstance(data.get("points", []), list):
        raise ParseError('form JSON must look like {"k": 0, "points": ["1", "0"]}')
    return MumfordForm(curve, n, int(data["k"]), tuple(str(x) for x in data.get("points", [])))
