"""Symmetries of curves acting on branch-supported classes.

A holomorphic automorphism or an anti-holomorphic involution acts on
branch-supported divisors through the permutation it induces on the branch
points.  The relations are symmetric in the branch points, so the action
descends to classes; on torsion coordinates it is an F_p-linear map.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .curve import CurveSpec, hyperelliptic_curve
from .divisors import BranchDivisor, DivisorClass, _check_same, reduce
from .errors import BadPermutation, BadProfile, NotHyperelliptic, ParseError
from .spin import SpinClass, base_spin, check_admissible
from .torsion import FpMatrix, FpSubspace, check_budget, fixed_subgroup, solve, span, torsion_star

ONE_FIXED_NOTE = (
    "one-fixed: the fixed group is Z_2^((2g+1)/n - 1), so the count is 2^((2g+1)/n - 1), "
    "not 2^((2g+2)/n - 1)"
)


@dataclass(frozen=True)
class SymmetryAction:
    """Permutation of branch labels; ``perm[i]`` is the image index of label i."""

    curve: CurveSpec
    perm: tuple[int, ...]
    antiholomorphic: bool = False

    def __post_init__(self) -> None:
        perm = tuple(int(i) for i in self.perm)
        if sorted(perm) != list(range(self.curve.r)):
            raise BadPermutation("symmetry must be a bijection of the branch labels")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, curve: CurveSpec, antiholomorphic: bool = False) -> SymmetryAction:
        return cls(curve, tuple(range(curve.r)), antiholomorphic)

    @classmethod
    def from_mapping(
        cls, curve: CurveSpec, mapping: Mapping[str, str], antiholomorphic: bool = False
    ) -> SymmetryAction:
        """Labels absent from ``mapping`` are fixed."""
        perm = list(range(curve.r))
        for src, dst in mapping.items():
            perm[curve.index(src)] = curve.index(dst)
        return cls(curve, tuple(perm), antiholomorphic)

    @classmethod
    def from_cycles(
        cls, curve: CurveSpec, cycles: Iterable[Sequence[str]], antiholomorphic: bool = False
    ) -> SymmetryAction:
        perm = list(range(curve.r))
        touched: set[int] = set()
        for cyc in cycles:
            idx = [curve.index(lab) for lab in cyc]
            if touched & set(idx) or len(set(idx)) != len(idx):
                raise BadPermutation("cycles must be disjoint")
            touched.update(idx)
            for a, b in zip(idx, idx[1:] + idx[:1]):
                perm[a] = b
        return cls(curve, tuple(perm), antiholomorphic)

    def label_map(self) -> dict[str, str]:
        labels = self.curve.branch_labels
        return {labels[i]: labels[j] for i, j in enumerate(self.perm)}

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(self.curve.r):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.perm[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.perm[nxt]
            out.append(tuple(cyc))
        return out

    @property
    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def is_involution(self) -> bool:
        return all(self.perm[self.perm[i]] == i for i in range(self.curve.r))

    def fixed_labels(self) -> list[str]:
        return [self.curve.branch_labels[i] for i, j in enumerate(self.perm) if i == j]

    def __matmul__(self, other: SymmetryAction) -> SymmetryAction:
        """Composition ``self after other``."""
        _check_same(self.curve, other.curve)
        return SymmetryAction(
            self.curve,
            tuple(self.perm[other.perm[i]] for i in range(self.curve.r)),
            self.antiholomorphic != other.antiholomorphic,
        )

    def to_dict(self) -> dict[str, Any]:
        moved = {a: b for a, b in self.label_map().items() if a != b}
        return {"perm": moved, "antiholomorphic": self.antiholomorphic}


def compose(s1: SymmetryAction, s2: SymmetryAction) -> SymmetryAction:
    return s1 @ s2


def symmetry_from_json(curve: CurveSpec, data: Any) -> SymmetryAction:
    if not isinstance(data, dict) or not isinstance(data.get("perm", {}), dict):
        raise ParseError('symmetry JSON must look like {"perm": {"a": "b", ...}, "antiholomorphic": true}')
    return SymmetryAction.from_mapping(
        curve, {str(k): str(v) for k, v in data.get("perm", {}).items()}, bool(data.get("antiholomorphic", False))
    )


def apply(s: SymmetryAction, d: BranchDivisor) -> BranchDivisor:
    _check_same(s.curve, d.curve)
    out = [0] * s.curve.r
    for i, c in enumerate(d.coeffs):
        out[s.perm[i]] += c
    return BranchDivisor(d.curve, tuple(out))


def apply_class(s: SymmetryAction, c: DivisorClass) -> DivisorClass:
    return reduce(apply(s, c.representative()))


def induced_matrix(s: SymmetryAction) -> FpMatrix:
    """Column j holds the coordinates of ``s(a_j - a_r)``."""
    curve = s.curve
    cols = []
    for j in range(curve.rank):
        c = [0] * curve.r
        c[j], c[-1] = 1, -1
        cols.append(reduce(apply(s, BranchDivisor(curve, tuple(c)))).coords)
    return FpMatrix.from_columns(cols, curve.p)


@dataclass(frozen=True)
class FixedSpinCoset:
    """Fixed spin classes as ``base + particular + kernel``, or empty."""

    base: DivisorClass
    particular: tuple[int, ...] | None
    kernel: FpSubspace
    m: int

    @property
    def count(self) -> int:
        return 0 if self.particular is None else self.kernel.cardinality

    def __iter__(self):
        if self.particular is None:
            return
        curve, p = self.base.curve, self.base.curve.p
        for k in self.kernel:
            coords = tuple((a + b) % p for a, b in zip(self.particular, k))
            yield SpinClass(DivisorClass(curve, self.base.degree, coords), self.m)


def fixed_spin_coset(s: SymmetryAction, m: int) -> FixedSpinCoset:
    """Solve ``(M - I) x = theta0 - s(theta0)`` inside ``J_m*``."""
    curve = s.curve
    base = base_spin(curve, m).divisor_class
    image = apply_class(s, base)
    rhs = tuple(-x % curve.p for x in image.coords)
    d = curve.rank
    if torsion_star(curve, m).rank == 0:
        ok = image == base
        return FixedSpinCoset(base, (0,) * d if ok else None, FpSubspace((), curve.p, d), m)
    mat = induced_matrix(s)
    x0 = solve(mat - FpMatrix.identity(d, curve.p), rhs)
    return FixedSpinCoset(base, x0, fixed_subgroup(mat), m)


def fixed_spin(s: SymmetryAction, m: int) -> frozenset[SpinClass]:
    """Spin classes ``theta`` with ``s(theta) = theta``."""
    coset = fixed_spin_coset(s, m)
    check_budget(coset.count, "fixed spin set")
    return frozenset(coset)


def fixed_spin_count(s: SymmetryAction, m: int) -> int:
    return fixed_spin_coset(s, m).count


def scan_fixed_spin(s: SymmetryAction, m: int, chunk: int = 1 << 16) -> frozenset[SpinClass]:
    """Exhaustive oracle for :func:`fixed_spin`.

    Permutes a representative of every spin class and renormalises, without
    going through the induced matrix.
    """
    check_admissible(s.curve, m)
    curve, p, r = s.curve, s.curve.p, s.curve.r
    group = torsion_star(curve, m)
    check_budget(group.size, "fixed-spin scan")
    deg = base_spin(curve, m).degree
    perm = np.asarray(s.perm)
    d = curve.rank
    found: list[tuple[int, ...]] = []
    for start in range(0, group.size, chunk):
        idx = np.arange(start, min(group.size, start + chunk), dtype=np.int64)
        x = np.zeros((idx.size, d), dtype=np.int64)
        if group.rank:
            for j in range(d):
                x[:, j] = (idx // p**j) % p
        c = np.zeros((idx.size, r), dtype=np.int64)
        c[:, :d] = x
        c[:, r - 1] = deg - x.sum(axis=1)
        img = np.zeros_like(c)
        img[:, perm] = c
        v = img[:, : r - 1] % p
        w = (v[:, :d] - v[:, d : d + 1]) % p
        hit = np.all(w == x, axis=1)
        found.extend(tuple(int(t) for t in row) for row in x[hit])
    return frozenset(SpinClass(DivisorClass(curve, deg, t), m) for t in found)


def orbit_subgroup(s: SymmetryAction) -> FpSubspace:
    """Classes ``alpha(T)`` with ``T`` an even-size union of orbits of ``s``.

    Here ``alpha(T) = sum_{t in T} t - |T| * a_r``.  Every such class is fixed
    by ``s``.  The converse can fail: when ``s`` maps an even set ``T`` onto
    its complement, ``alpha(T)`` is fixed as a class although ``T`` is not a
    union of orbits (this happens for fixed-point-free involutions).
    """
    curve = s.curve
    if curve.p != 2:
        raise NotHyperelliptic("orbit subgroup is defined for hyperelliptic curves")
    orbits = s.cycles()
    odd = [o for o in orbits if len(o) % 2]
    pieces = [o for o in orbits if len(o) % 2 == 0]
    pieces += [odd[0] + o for o in odd[1:]]
    vecs = []
    for piece in pieces:
        c = [0] * curve.r
        for i in piece:
            c[i] += 1
        c[-1] -= len(piece)
        vecs.append(reduce(BranchDivisor(curve, tuple(c))).coords)
    return FpSubspace(tuple(span(vecs, curve.p, curve.rank)), curve.p, curve.rank)


# -- synthetic profiles and their closed-form counts -------------------------


@dataclass(frozen=True)
class ConjugationProfile:
    """Complex conjugation on a real hyperelliptic curve with 2k real branch points."""

    g: int
    k: int

    def __post_init__(self) -> None:
        if self.g < 1 or not 1 <= self.k <= self.g:
            raise BadProfile(f"conjugation needs 1 <= k <= g (g = {self.g}, k = {self.k})")

    def curve(self) -> CurveSpec:
        return hyperelliptic_curve(self.g)

    def symmetry(self, curve: CurveSpec | None = None) -> SymmetryAction:
        curve = curve or self.curve()
        labels = curve.branch_labels
        pairs = [(labels[i], labels[i + 1]) for i in range(2 * self.k, curve.r, 2)]
        return SymmetryAction.from_cycles(curve, pairs, antiholomorphic=True)


@dataclass(frozen=True)
class AntipodalProfile:
    """The antipodal map ``z -> -1/conj(z)``: branch points in g + 1 swapped pairs."""

    g: int

    def __post_init__(self) -> None:
        if self.g < 1 or self.g % 2 == 0:
            raise BadProfile(f"antipodal profile needs odd genus, got {self.g}")

    def curve(self) -> CurveSpec:
        return hyperelliptic_curve(self.g)

    def symmetry(self, curve: CurveSpec | None = None) -> SymmetryAction:
        curve = curve or self.curve()
        labels = curve.branch_labels
        pairs = [(labels[i], labels[i + 1]) for i in range(0, curve.r, 2)]
        return SymmetryAction.from_cycles(curve, pairs, antiholomorphic=True)


@dataclass(frozen=True)
class OddOrderProfile:
    """Automorphism of odd order n fixing 0, 1 or 2 branch points, rest in n-cycles."""

    g: int
    n: int
    fixed: int

    def __post_init__(self) -> None:
        if self.n < 3 or self.n % 2 == 0:
            raise BadProfile(f"order must be odd and >= 3, got {self.n}")
        if self.fixed not in (0, 1, 2):
            raise BadProfile("fixed must be 0, 1 or 2")
        moved = 2 * self.g + 2 - self.fixed
        if self.g < 1 or moved % self.n:
            raise BadProfile(f"{moved} moved branch points do not split into {self.n}-cycles")

    def curve(self) -> CurveSpec:
        return hyperelliptic_curve(self.g)

    def symmetry(self, curve: CurveSpec | None = None) -> SymmetryAction:
        curve = curve or self.curve()
        labels = curve.branch_labels[self.fixed :]
        cycles = [labels[i : i + self.n] for i in range(0, len(labels), self.n)]
        return SymmetryAction.from_cycles(curve, cycles)


Profile = ConjugationProfile | AntipodalProfile | OddOrderProfile


def count_fixed_closed_form(profile: Profile) -> int:
    if isinstance(profile, ConjugationProfile):
        return 2 ** (profile.g + profile.k - 1)
    if isinstance(profile, AntipodalProfile):
        return 2**profile.g
    if isinstance(profile, OddOrderProfile):
        g, n = profile.g, profile.n
        if profile.fixed == 0:
            return 2 ** ((2 * g + 2) // n - 2)
        if profile.fixed == 1:
            return 2 ** ((2 * g + 1) // n - 1)
        return 2 ** (2 * g // n)
    raise BadProfile(f"unknown profile {profile!r}")
