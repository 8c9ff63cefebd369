"""Branch-supported torsion subgroups and linear algebra over F_p.

Degree-zero branch-supported classes form ``Z_p^(r-2)``; the m-torsion part
``J_m*`` is the whole group when ``p | m`` and trivial otherwise.  Symmetries
act on it by matrices over ``F_p`` (:class:`FpMatrix`), and fixed subgroups
are kernels computed by exact Gaussian elimination.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .curve import CurveSpec
from .divisors import BranchDivisor, DivisorClass, reduce
from .errors import BudgetExceeded, GroupMismatch, InadmissibleM

DEFAULT_BUDGET = 2**20

Vector = tuple[int, ...]


def exhaustive_budget() -> int:
    """Cap on the number of group elements an exhaustive mode may touch."""
    raw = os.environ.get("SPINDIV_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BUDGET


def check_budget(size: int, what: str = "enumeration") -> None:
    cap = exhaustive_budget()
    if size > cap:
        raise BudgetExceeded(f"{what} of {size} elements exceeds budget {cap} (SPINDIV_BUDGET)")


# -- matrices over F_p -----------------------------------------------------


@dataclass(frozen=True)
class FpMatrix:
    """Square or rectangular matrix with entries reduced mod a prime ``p``."""

    rows: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, size: int, p: int) -> FpMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)), p)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], p: int) -> FpMatrix:
        if not columns:
            return cls((), p)
        return cls(tuple(zip(*columns)), p)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def __matmul__(self, other):
        p = self.p
        if isinstance(other, FpMatrix):
            if other.p != p:
                raise GroupMismatch("matrices over different fields")
            cols = list(zip(*other.rows)) if other.rows else []
            return FpMatrix(
                tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows),
                p,
            )
        return tuple(sum(a * b for a, b in zip(row, other)) % p for row in self.rows)

    def __sub__(self, other: FpMatrix) -> FpMatrix:
        return FpMatrix(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
            self.p,
        )

    def __pow__(self, k: int) -> FpMatrix:
        result = FpMatrix.identity(len(self.rows), self.p)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rank(self) -> int:
        return len(_rref(self.rows, self.p)[1])

    def kernel_basis(self) -> list[Vector]:
        return nullspace(self.rows, self.p, self.shape[1])

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _rref(rows: Iterable[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int) -> list[Vector]:
    red, pivots = _rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] % p
        basis.append(tuple(v))
    return basis


def solve(a: FpMatrix, b: Sequence[int]) -> Vector | None:
    """One solution of ``a x = b`` over F_p, or None if inconsistent."""
    p = a.p
    nrows, ncols = a.shape
    aug = [list(row) + [b[i] % p] for i, row in enumerate(a.rows)]
    red, pivots = _rref(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def span(vectors: Iterable[Sequence[int]], p: int, dim: int) -> list[Vector]:
    """Row-reduced basis of the span."""
    red, _ = _rref([list(v) for v in vectors], p)
    return [tuple(r) for r in red if any(r)] if red else []


# -- subspaces and element sets --------------------------------------------


@dataclass(frozen=True)
class FpSubspace:
    """Subgroup of ``Z_p^dim`` given by a row-reduced basis."""

    basis: tuple[Vector, ...]
    p: int
    dim: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return self.p ** len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        return len(span(list(self.basis) + [tuple(v)], self.p, self.dim)) == len(self.basis)

    def __iter__(self) -> Iterator[Vector]:
        p, dim = self.p, self.dim
        for coeffs in itertools.product(range(p), repeat=len(self.basis)):
            v = [0] * dim
            for c, b in zip(coeffs, self.basis):
                if c:
                    for i, x in enumerate(b):
                        v[i] += c * x
            yield tuple(x % p for x in v)

    def elements(self) -> frozenset[Vector]:
        check_budget(self.cardinality)
        return frozenset(self)

    def to_dict(self) -> dict:
        return {"basis": [list(b) for b in self.basis], "cardinality": self.cardinality}


def _dims(*sets: Iterable[Vector]) -> int:
    lengths = {len(v) for s in sets for v in s}
    if len(lengths) > 1:
        raise GroupMismatch(f"element sets have vectors of different lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def subgroup_intersection(a: Iterable[Vector], b: Iterable[Vector]) -> frozenset[Vector]:
    a, b = frozenset(a), frozenset(b)
    _dims(a, b)
    return a & b


def subgroup_sum(a: Iterable[Vector], b: Iterable[Vector], modulus: int) -> frozenset[Vector]:
    """``{x + y}`` for subgroups a, b of ``Z_modulus^d``.

    Built by adjoining cosets of elements of ``a`` one at a time, which costs
    about ``|a + b|`` per new coset instead of ``|a| * |b|``.
    """
    a, b = frozenset(a), frozenset(b)
    _dims(a, b)
    if not b:
        return a

    group = set(b)
    for x in a:
        if x in group:
            continue
        base = frozenset(group)
        step = x
        while step not in base:
            group.update(tuple((i + j) % modulus for i, j in zip(step, y)) for y in base)
            step = tuple((i + j) % modulus for i, j in zip(step, x))
    return frozenset(group)


# -- the groups J_m* -------------------------------------------------------


@dataclass(frozen=True)
class TorsionGroup:
    """``J_m*``: branch-supported classes killed by ``m``, as coordinate vectors."""

    curve: CurveSpec
    m: int

    @property
    def modulus(self) -> int:
        return self.curve.p

    @property
    def rank(self) -> int:
        return self.curve.rank if self.m % self.curve.p == 0 else 0

    @property
    def size(self) -> int:
        return self.curve.p ** self.rank

    def __len__(self) -> int:
        return self.size

    @property
    def subspace(self) -> FpSubspace:
        d = self.curve.rank
        basis = tuple(tuple(int(i == j) for j in range(d)) for i in range(self.rank))
        return FpSubspace(basis, self.curve.p, d)

    def __contains__(self, x) -> bool:
        if isinstance(x, DivisorClass):
            return x.degree == 0 and all(self.m * c % self.curve.p == 0 for c in x.coords)
        return all(self.m * c % self.curve.p == 0 for c in x)

    def __iter__(self) -> Iterator[Vector]:
        d = self.curve.rank
        if self.rank == d:
            return itertools.product(range(self.curve.p), repeat=d)
        return iter([(0,) * d])

    def elements(self) -> frozenset[Vector]:
        check_budget(self.size)
        return frozenset(self)

    def classes(self) -> Iterator[DivisorClass]:
        for v in self:
            yield DivisorClass(self.curve, 0, v)


def torsion_star(curve: CurveSpec, m: int) -> TorsionGroup:
    if m < 1:
        raise InadmissibleM("m must be a positive integer")
    return TorsionGroup(curve, m)


def generator_classes(curve: CurveSpec) -> list[DivisorClass]:
    """Classes of ``v_i = a_i - a_r`` for i = 1 .. r-1."""
    out = []
    for i in range(curve.r - 1):
        c = [0] * curve.r
        c[i], c[-1] = 1, -1
        out.append(reduce(BranchDivisor(curve, tuple(c))))
    return out


def _closure_size(gens: Sequence[Vector], p: int, dim: int, cap: int) -> int | None:
    """Breadth-first closure of ``gens`` under addition, on numpy digit arrays."""
    weights = np.array([p**j for j in range(dim)], dtype=np.int64)
    gen_arr = np.array(gens, dtype=np.int64).reshape(len(gens), dim)
    seen = np.zeros(p**dim, dtype=bool)
    seen[0] = True
    frontier = np.zeros((1, dim), dtype=np.int64)
    count = 1
    while frontier.size:
        cand = ((frontier[:, None, :] + gen_arr[None, :, :]) % p).reshape(-1, dim)
        idx, first = np.unique(cand @ weights, return_index=True)
        fresh = ~seen[idx]
        seen[idx[fresh]] = True
        frontier = cand[first[fresh]]
        count += int(fresh.sum())
        if count > cap:
            return None
    return count


def presentation_check(curve: CurveSpec, exhaustive: bool | None = None) -> bool:
    """Verify the presentation of ``J_p*`` by ``v_i = a_i - a_r``.

    Checks that each ``v_i`` has degree 0 and order dividing p, that their sum
    vanishes, that they span the degree-0 part and that the group they
    generate has ``p^(r-2)`` elements.  The last count is an explicit closure
    when within budget (or when ``exhaustive`` is forced), otherwise a rank.
    """
    p, d = curve.p, curve.rank
    gens = generator_classes(curve)
    if any(g.degree != 0 for g in gens):
        return False
    if any(not (p * g).is_zero() for g in gens):
        return False
    total = DivisorClass.zero(curve)
    for g in gens:
        total = total + g
    if not total.is_zero():
        return False
    vecs = [g.coords for g in gens]
    if len(span(vecs, p, d)) != d:
        return False
    expected = p**d
    if exhaustive is None:
        exhaustive = expected <= exhaustive_budget()
    if exhaustive:
        return _closure_size(vecs, p, d, expected) == expected
    return True


def fixed_subgroup(m: FpMatrix) -> FpSubspace:
    """Kernel of ``m - I``: the coordinate vectors fixed by ``m``."""
    size = m.shape[0]
    basis = nullspace((m - FpMatrix.identity(size, m.p)).rows, m.p, size)
    return FpSubspace(tuple(span(basis, m.p, size)), m.p, size)
