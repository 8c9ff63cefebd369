"""Combinatorial curve specifications.

A curve ``y^p = (x - e_1)...(x - e_r)`` with simple roots is described by the
prime ``p`` and an ordered list of ``r`` branch labels.  Nothing about the
actual root values is stored; every computation in this package depends only
on ``p``, ``r`` and permutations of the labels.

>>> c = make_curve(2, ["-1", "0", "1", "inf", "xi1", "xi1bar", "xi2", "xi2bar"])
>>> c.genus, c.r, c.n
(3, 8, 4)
>>> constants(c).admissible_m
(2, 4)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .errors import (
    BadBranchCount,
    DuplicateLabel,
    NotPrime,
    ParseError,
    TooFewPoints,
    UnknownLabel,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class CurveSpec:
    """A hyperelliptic (p = 2) or p-gonal curve given by its branch labels.

    Use :func:`make_curve` to build one; the constructor performs the same
    validation but accepts any iterable of labels.
    """

    p: int
    branch_labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.branch_labels)
        object.__setattr__(self, "branch_labels", labels)
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NotPrime(f"p = {self.p!r} is not a prime")
        if len(labels) < 3:
            raise TooFewPoints(f"need at least 3 branch points, got {len(labels)}")
        seen: dict[str, int] = {}
        for i, lab in enumerate(labels):
            if lab in seen:
                raise DuplicateLabel(f"label {lab!r} appears more than once")
            seen[lab] = i
        if len(labels) % self.p:
            raise BadBranchCount(
                f"r = {len(labels)} branch points is not a multiple of p = {self.p}"
            )
        object.__setattr__(self, "_index", seen)

    @property
    def r(self) -> int:
        return len(self.branch_labels)

    @property
    def n(self) -> int:
        return self.r // self.p

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.r - 2) // 2

    @property
    def rank(self) -> int:
        """Number of torsion coordinates, r - 2."""
        return self.r - 2

    @property
    def base_label(self) -> str:
        return self.branch_labels[-1]

    @property
    def is_hyperelliptic(self) -> bool:
        return self.p == 2

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownLabel(f"{label!r} is not a branch label of this curve") from None

    def summary(self) -> dict[str, Any]:
        return {"p": self.p, "r": self.r, "n": self.n, "genus": self.genus}

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "branch_labels": list(self.branch_labels)}


@dataclass(frozen=True)
class CurveConstants:
    canonical_degree: int
    D_degree: int
    admissible_m: tuple[int, ...]


def make_curve(p: int, branch_labels: Iterable[Any]) -> CurveSpec:
    """Validate and build a :class:`CurveSpec`; label order is preserved."""
    return CurveSpec(p, tuple(branch_labels))


def standard_curve(p: int, r: int, prefix: str = "a") -> CurveSpec:
    """Curve with labels ``a1 .. ar``, used for synthetic sweeps."""
    return make_curve(p, [f"{prefix}{i}" for i in range(1, r + 1)])


def hyperelliptic_curve(g: int) -> CurveSpec:
    return standard_curve(2, 2 * g + 2)


def constants(curve: CurveSpec) -> CurveConstants:
    k = 2 * curve.genus - 2
    # for g = 1 every m divides 0; by convention no m is admissible there
    admissible = tuple(m for m in range(2, k + 1) if k % m == 0) if k > 0 else ()
    return CurveConstants(canonical_degree=k, D_degree=curve.p, admissible_m=admissible)


def canonical_class(curve: CurveSpec):
    """Class of (2g - 2) times the base point."""
    from .divisors import DivisorClass

    return DivisorClass(curve, 2 * curve.genus - 2, (0,) * curve.rank)


def curve_from_dict(data: Any) -> CurveSpec:
    if not isinstance(data, dict) or "p" not in data or "branch_labels" not in data:
        raise ParseError('curve JSON must be an object with "p" and "branch_labels"')
    labels = data["branch_labels"]
    if not isinstance(labels, list):
        raise ParseError('"branch_labels" must be a list')
    p = data["p"]
    if isinstance(p, bool) or not isinstance(p, int):
        raise ParseError('"p" must be an integer')
    return make_curve(p, labels)


def load_curve(path: str | Path) -> CurveSpec:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return curve_from_dict(data)
