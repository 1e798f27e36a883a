"""Semi-standard tableaux for Richardson intervals and the degree-two map Gamma_ell."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Interval, KSubset, interval as make_interval, leq
from .errors import ContractViolation, NormalizationError, ParameterError
from .matching_field import MFTableau, mf_tableau


@dataclass(frozen=True, order=True)
class Tableau:
    """k rows by d columns; each column is listed top to bottom."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len({len(c) for c in cols}) > 1:
            raise ParameterError("tableau columns have different lengths")
        for c in cols:
            if len(set(c)) != len(c):
                raise ParameterError(f"column {c} repeats an entry")

    @classmethod
    def from_subsets(cls, subsets: Sequence[KSubset]) -> "Tableau":
        return cls(tuple(J.elements for J in subsets))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(tuple(zip(*rows)))

    @property
    def k(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def d(self) -> int:
        return len(self.columns)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.columns))

    def text(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows())


def is_ssyt(T: Tableau) -> bool:
    if any(a >= b for c in T.columns for a, b in zip(c, c[1:])):
        return False
    return all(a <= b for r in T.rows() for a, b in zip(r, r[1:]))


def _ssyt_columns(iv: Interval, d: int) -> list[tuple[KSubset, ...]]:
    members = iv.members
    out: list[tuple[KSubset, ...]] = []
    stack: list[KSubset] = []

    def extend(start: int) -> None:
        if len(stack) == d:
            out.append(tuple(stack))
            return
        prev = stack[-1] if stack else None
        for idx in range(start, len(members)):
            I = members[idx]
            if prev is None or leq(prev, I):
                stack.append(I)
                # componentwise <= implies lex <=, so the scan resumes at idx
                extend(idx)
                stack.pop()

    extend(0)
    return out


def enumerate_ssyt(v: KSubset, w: KSubset, d: int) -> list[Tableau]:
    """All k x d SSYT whose columns lie in [v, w], in lexicographic column order."""
    if d < 0:
        raise ParameterError(f"degree must be >= 0, got {d}")
    iv = make_interval(v, w)
    return [Tableau.from_subsets(cols) for cols in _ssyt_columns(iv, d)]


def count_ssyt(v: KSubset, w: KSubset, d: int) -> int:
    return len(_ssyt_columns(make_interval(v, w), d))


def _swap_case(ell: int, I: tuple[int, ...], J: tuple[int, ...]) -> bool:
    i1, i2, j1, j2 = I[0], I[1], J[0], J[1]
    if i1 <= ell and i2 <= ell and j1 <= ell and j2 > ell and i1 < j1 < i2:
        return True
    return i1 <= ell and i2 > ell and j1 > ell and j2 > ell and j1 < i2 < j2


def gamma_sets(ell: int, I: tuple[int, ...], J: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Column sets of Gamma_ell for a two-column SSYT with columns I, J."""
    if len(I) >= 2 and _swap_case(ell, I, J):
        return (J[0],) + I[1:], (I[0],) + J[1:]
    return I, J


def gamma_ell(ell: int, T: Tableau, n: int | None = None) -> MFTableau:
    """Gamma_ell on a two-column SSYT; output columns in matching-field order.

    ``n`` defaults to the largest entry (or ell, if larger).
    """
    if T.d != 2 or not is_ssyt(T):
        raise ContractViolation(f"Gamma_ell is defined on two-column SSYT only, got {T.text()!r}")
    if n is None:
        n = max(ell, *T.columns[1])
    I2, J2 = gamma_sets(ell, *T.columns)
    return mf_tableau(ell, [KSubset(I2, n), KSubset(J2, n)])


def _rows(T) -> tuple[tuple[int, ...], ...]:
    return T.rows()


def row_wise_equal(T1, T2) -> bool:
    """True iff each row of T1 equals the corresponding row of T2 as a multiset."""
    r1, r2 = _rows(T1), _rows(T2)
    if len(r1) != len(r2) or any(len(a) != len(b) for a, b in zip(r1, r2)):
        raise ParameterError("row-wise comparison needs tableaux of the same shape")
    return all(Counter(a) == Counter(b) for a, b in zip(r1, r2))


def row_key(T) -> tuple[tuple[int, ...], ...]:
    """Canonical row-multiset key; equal keys iff row-wise equal."""
    return tuple(tuple(sorted(r)) for r in _rows(T))


def row_sort_normalize(T) -> Tableau:
    rows = row_key(T)
    out = Tableau.from_rows(rows) if rows else Tableau(())
    if any(a >= b for c in out.columns for a, b in zip(c, c[1:])):
        raise NormalizationError(f"row-sorted tableau {out.text()!r} is not column-strict")
    return out


def image_gamma_restricted(ell: int, v: KSubset, w: KSubset) -> list[MFTableau]:
    n = v.n
    return [gamma_ell(ell, T, n) for T in enumerate_ssyt(v, w, 2)]


def vanish_correspondence(ell: int, T: Tableau, v: KSubset, w: KSubset) -> tuple[bool, bool]:
    """(T vanishes on [v, w], Gamma_ell(T) vanishes on [v, w]); the two should agree."""
    iv = make_interval(v, w)
    n = v.n
    t_van = any(KSubset(c, n) not in iv for c in T.columns)
    g_van = any(J not in iv for J in gamma_ell(ell, T, n).subsets())
    return t_van, g_van
