"""Block diagonal matching fields.

Lowest weight wins everywhere: the initial term of a Plucker form is its
unique minimal-weight term under ``M_ell``, and the induced weight of
``P_J`` is the weight of that term.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import KSubset, _check_kn, enumerate_subsets
from .errors import ParameterError


class Perm(enum.Enum):
    ID = "id"
    SWAP12 = "swap12"
    OTHER = "other"  # only produced by brute-force scans


@dataclass(frozen=True)
class WeightMatrix:
    k: int
    n: int
    ell: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij) -> int:
        # 1-based (row, column), matching the x_{i,j} indexing
        i, j = ij
        return self.entries[i - 1][j - 1]

    def monomial_weight(self, cells) -> int:
        """Weight of a monomial given as (row, column) pairs, both 1-based."""
        return sum(self.entries[i - 1][j - 1] for i, j in cells)


def _check_ell(n: int, ell: int) -> None:
    if not 0 <= ell <= n:
        raise ParameterError(f"block parameter ell={ell} outside 0..{n}")


def weight_matrix(k: int, n: int, ell: int) -> WeightMatrix:
    _check_kn(k, n)
    _check_ell(n, ell)
    rows = []
    for i in range(1, k + 1):
        if i == 2:
            row = tuple(ell - j + 1 if j <= ell else n - j + ell + 1 for j in range(1, n + 1))
        else:
            row = tuple((i - 1) * (n - j + 1) for j in range(1, n + 1))
        rows.append(row)
    return WeightMatrix(k, n, ell, tuple(rows))


def mf_permutation(ell: int, J: KSubset) -> Perm:
    """B_ell(J): swap the two smallest entries iff exactly one lies in {1..ell}."""
    if J.k >= 2 and J[0] <= ell < J[1]:
        return Perm.SWAP12
    return Perm.ID


@dataclass(frozen=True)
class MFColumn:
    subset: KSubset
    ordered_entries: tuple[int, ...]
    permutation: Perm

    def cells(self) -> tuple[tuple[int, int], ...]:
        """Variables x_{row, col} of the initial term, rows 1..k."""
        return tuple((r, c) for r, c in enumerate(self.ordered_entries, start=1))


def mf_column(ell: int, J: KSubset) -> MFColumn:
    perm = mf_permutation(ell, J)
    els = J.elements
    if perm is Perm.SWAP12:
        els = (els[1], els[0]) + els[2:]
    return MFColumn(J, els, perm)


def initial_term(M: WeightMatrix, J: KSubset) -> MFColumn:
    """Minimal-weight term of det(X_J) under M, written as a matching-field column."""
    if J.k != M.k or J.n != M.n:
        raise ParameterError(f"subset {J} does not fit a {M.k}x{M.n} weight matrix")
    return mf_column(M.ell, J)


def induced_weight(ell: int, J: KSubset, n: int | None = None) -> int:
    """Closed-form weight of P_J, four cases by |J ∩ {1..ell}|."""
    n = J.n if n is None else n
    k = J.k
    if k == 1:
        return 0
    j = J.elements
    tail = sum((i - 1) * (n + 1 - j[i - 1]) for i in range(3, k + 1))
    low = sum(1 for x in j if x <= ell)
    if low == 0:
        return (n + ell + 1 - j[1]) + tail
    if low == 1:
        return (ell + 1 - j[0]) + tail
    return (ell + 1 - j[1]) + tail


@dataclass(frozen=True)
class PluckerWeightVector:
    k: int
    n: int
    ell: int
    weights: dict

    def __getitem__(self, J: KSubset) -> int:
        return self.weights[J]

    def ordered(self) -> list[tuple[KSubset, int]]:
        return sorted(self.weights.items())

    def values(self) -> list[int]:
        return [w for _, w in self.ordered()]

    def monomial_weight(self, mono) -> int:
        return sum(self.weights[J] for J in mono)


def weight_vector(k: int, n: int, ell: int) -> PluckerWeightVector:
    _check_kn(k, n)
    _check_ell(n, ell)
    return PluckerWeightVector(k, n, ell, {J: induced_weight(ell, J, n) for J in enumerate_subsets(k, n)})


@dataclass(frozen=True)
class MFTableau:
    ell: int
    columns: tuple[MFColumn, ...]

    @property
    def k(self) -> int:
        return self.columns[0].subset.k if self.columns else 0

    def rows(self) -> tuple[tuple[int, ...], ...]:
        if not self.columns:
            return ()
        return tuple(zip(*(c.ordered_entries for c in self.columns)))

    def subsets(self) -> tuple[KSubset, ...]:
        return tuple(c.subset for c in self.columns)

    def text(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows())


def mf_tableau(ell: int, subsets: Sequence[KSubset]) -> MFTableau:
    shapes = {(J.k, J.n) for J in subsets}
    if len(shapes) > 1:
        raise ParameterError(f"mixed subset shapes in one tableau: {sorted(shapes)}")
    if shapes:
        _check_ell(next(iter(shapes))[1], ell)
    return MFTableau(ell, tuple(mf_column(ell, J) for J in subsets))
