"""m-spin divisor classes supported on the branch set.

A class ``theta`` is m-spin when ``m * theta`` is the canonical class.  The
branch-supported m-spin classes form a coset ``base_spin + J_m*``; its size
is ``p^(r-2)`` when ``p | m`` and 1 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .curve import CurveSpec, canonical_class, constants
from .divisors import DivisorClass
from .errors import InadmissibleM
from .torsion import check_budget, torsion_star

JACOBIAN_NOTE = "branch-supported count; full Jacobian count is m^(2g)"


@dataclass(frozen=True)
class SpinClass:
    divisor_class: DivisorClass
    m: int

    @property
    def curve(self) -> CurveSpec:
        return self.divisor_class.curve

    @property
    def degree(self) -> int:
        return self.divisor_class.degree

    @property
    def coords(self) -> tuple[int, ...]:
        return self.divisor_class.coords

    def to_dict(self) -> dict:
        return {"m": self.m, **self.divisor_class.to_dict()}


def check_admissible(curve: CurveSpec, m: int) -> None:
    if m not in constants(curve).admissible_m:
        raise InadmissibleM(
            f"m = {m} is not admissible for genus {curve.genus}: need m >= 2 and m | {2 * curve.genus - 2}"
        )


def is_spin(c: DivisorClass, m: int) -> bool:
    return m * c == canonical_class(c.curve)


def base_spin(curve: CurveSpec, m: int) -> SpinClass:
    """``((2g-2)/m) * a_r``."""
    check_admissible(curve, m)
    deg = (2 * curve.genus - 2) // m
    return SpinClass(DivisorClass(curve, deg, (0,) * curve.rank), m)


def iter_spin(curve: CurveSpec, m: int) -> Iterator[SpinClass]:
    """Stream the spin classes in coordinate order."""
    base = base_spin(curve, m)
    for t in torsion_star(curve, m):
        yield SpinClass(DivisorClass(curve, base.degree, t), m)


def spin_set(curve: CurveSpec, m: int) -> frozenset[SpinClass]:
    """All branch-supported m-spin classes; refuses sets above the budget."""
    check_admissible(curve, m)
    check_budget(torsion_star(curve, m).size, "spin set")
    return frozenset(iter_spin(curve, m))


def spin_count(curve: CurveSpec, m: int) -> int:
    check_admissible(curve, m)
    return torsion_star(curve, m).size


def scan_spin_count(curve: CurveSpec, m: int, chunk: int = 1 << 16) -> int:
    """Brute-force count of classes of the spin degree whose m-th multiple is canonical.

    Scans every coordinate vector of ``Z_p^(r-2)``; independent of
    :func:`torsion_star`.
    """
    check_admissible(curve, m)
    p, d = curve.p, curve.rank
    total = p**d
    check_budget(total, "spin-count scan")
    deg = (2 * curve.genus - 2) // m
    if m * deg != 2 * curve.genus - 2:
        return 0
    count = 0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        ok = np.ones(idx.size, dtype=bool)
        for j in range(d):
            ok &= (m * ((idx // p**j) % p)) % p == 0
        count += int(ok.sum())
    return count
