"""The monomial map phi_ell, its degree-2 kernel, and restriction to Richardson intervals.

The initial ideal ``in_{w_ell}(G_{k,n})`` equals ``ker(phi_ell)`` and is generated
by quadratic binomials, so its degree-2 part is spanned by differences of
monomials sharing a phi-image. Generators here are built from those classes
directly; no signed Plucker relation is ever formed in this module.

A restricted ideal contains a monomial exactly when some phi-class mixes
surviving and vanishing monomials. If no class mixes, every restricted
generator is 0 or a pure difference, all of which vanish at the all-ones
point, so no monomial can lie in the ideal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .combinatorics import (
    Interval,
    KSubset,
    _check_kn,
    _same_shape,
    enumerate_subsets,
    interval as make_interval,
    leq,
    w0_act,
)
from .errors import EmptyRichardsonError, ParameterError
from .matching_field import _check_ell, mf_column

PhiImage = tuple  # sorted tuple of (row, column) cells, with repetition
Monomial = tuple  # sorted tuple of KSubset factors, with repetition


def monomial_label(mono: Iterable[KSubset]) -> str:
    return "".join(J.label() for J in mono)


@dataclass(frozen=True, order=True)
class QuadMonomial:
    first: KSubset
    second: KSubset

    def __post_init__(self):
        _same_shape(self.first, self.second)
        if self.second < self.first:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    @property
    def factors(self) -> Monomial:
        return (self.first, self.second)

    def __iter__(self):
        return iter((self.first, self.second))

    def label(self) -> str:
        return monomial_label(self.factors)

    def survives(self, iv: Interval) -> bool:
        return self.first in iv and self.second in iv


@dataclass(frozen=True)
class QuadClass:
    image: PhiImage
    monomials: tuple[QuadMonomial, ...]


@dataclass(frozen=True)
class QuadBinomial:
    plus: QuadMonomial
    minus: QuadMonomial

    def label(self) -> str:
        return f"{self.plus.label()} - {self.minus.label()}"


@dataclass(frozen=True)
class RestrictedGenSet:
    interval: Interval
    binomials: tuple[QuadBinomial, ...]
    monomials: tuple[QuadMonomial, ...]


@lru_cache(maxsize=None)
def _column_cells(ell: int, J: KSubset) -> tuple:
    return mf_column(ell, J).cells()


def phi_image(ell: int, mono) -> PhiImage:
    """Multiset of (row, column) variables of the product of initial terms."""
    cells = []
    for J in mono:
        cells.extend(_column_cells(ell, J))
    return tuple(sorted(cells))


@lru_cache(maxsize=None)
def _classes(k: int, n: int, ell: int) -> tuple[QuadClass, ...]:
    groups: dict = defaultdict(list)
    for I, J in combinations_with_replacement(enumerate_subsets(k, n), 2):
        m = QuadMonomial(I, J)
        groups[phi_image(ell, m.factors)].append(m)
    out = [QuadClass(img, tuple(sorted(ms))) for img, ms in groups.items()]
    out.sort(key=lambda c: c.monomials[0])
    return tuple(out)


def kernel_deg2_classes(k: int, n: int, ell: int) -> list[QuadClass]:
    """Partition of every degree-2 monomial (squares included) by phi_ell-image."""
    _check_kn(k, n)
    _check_ell(n, ell)
    return list(_classes(k, n, ell))


def quadratic_generators(k: int, n: int, ell: int) -> list[QuadBinomial]:
    """Star pattern per class: each member minus the lexicographically least one."""
    gens = []
    for c in kernel_deg2_classes(k, n, ell):
        rep = c.monomials[0]
        gens.extend(QuadBinomial(rep, m) for m in c.monomials[1:])
    return gens


def restrict_generators(
    gens: Sequence[QuadBinomial], classes: Sequence[QuadClass], iv: Interval
) -> RestrictedGenSet:
    """Set every variable outside ``iv`` to zero.

    A binomial is kept when all four factors survive. A surviving monomial is
    reported on its own when its class also holds a vanishing monomial: the
    star binomial joining them restricts to that single monomial.
    """
    binoms = tuple(g for g in gens if g.plus.survives(iv) and g.minus.survives(iv))
    monos = []
    for c in classes:
        alive = [m for m in c.monomials if m.survives(iv)]
        if alive and len(alive) < len(c.monomials):
            monos.extend(alive)
    return RestrictedGenSet(iv, binoms, tuple(sorted(monos)))


@dataclass(frozen=True)
class MonomialFreeResult:
    free: bool
    witness: QuadMonomial | None = None

    def __bool__(self) -> bool:
        return self.free


def _first_mixed(classes: Sequence[QuadClass], iv: Interval) -> QuadMonomial | None:
    for c in classes:
        alive = [m for m in c.monomials if m.survives(iv)]
        if alive and len(alive) < len(c.monomials):
            return alive[0]
    return None


def is_monomial_free(k: int, n: int, ell: int, v: KSubset, w: KSubset) -> MonomialFreeResult:
    """Semantic test on the generating set; the witness is a surviving monomial of a mixed class."""
    if (v.k, v.n) != (k, n):
        raise ParameterError(f"v={v} is not a {k}-subset of [{n}]")
    iv = make_interval(v, w)
    witness = _first_mixed(kernel_deg2_classes(k, n, ell), iv)
    return MonomialFreeResult(witness is None, witness)


def classify_w(w: KSubset, k: int, n: int, ell: int) -> bool:
    """Schubert side: ``w`` lies in T_{k,n,ell}."""
    # k = 1: G_{1,n} is zero, so every restriction is monomial-free
    if k == 1 or ell == 0 or ell > n - k + 1:
        return True
    return w[0] in (1, ell, n - k + 1) or w[1] <= ell or w[1] == w[0] + 1


def classify_v(v: KSubset, k: int, n: int, ell: int) -> bool:
    """Opposite side: ``v`` lies in T^opp_{k,n,ell}."""
    if k == 1 or ell == 0 or ell > n - k + 1:
        return True
    if v[0] >= ell + 1:
        return True
    return v[1] in (v[0] + 1, ell + 1)


def classify_richardson(v: KSubset, w: KSubset, k: int, n: int, ell: int) -> bool:
    """Closed-form monomial-freeness: classify_w(w) and classify_v(v)."""
    if not leq(v, w):
        raise EmptyRichardsonError(f"v={v} is not <= w={w}")
    return classify_w(w, k, n, ell) and classify_v(v, k, n, ell)


def zero_set(k: int, n: int) -> frozenset[KSubset]:
    """Z_{k,n}: the w whose Schubert restriction carries no relation at all."""
    _check_kn(k, n)
    out = set()
    head = tuple(range(1, k))
    for i in range(k, n + 1):
        out.add(KSubset(head + (i,), n))
    if k + 1 <= n:
        for i in range(1, k):
            out.add(KSubset(tuple(x for x in range(1, k + 1) if x != i) + (k + 1,), n))
    return frozenset(out)


def is_zero_schubert(w: KSubset) -> bool:
    return w in zero_set(w.k, w.n)


def is_zero_opposite(v: KSubset) -> bool:
    return w0_act(v) in zero_set(v.k, v.n)


def distinct_images(ell: int, variables: Sequence[KSubset], d: int) -> int:
    if d == 0:
        return 1
    cols = [_column_cells(ell, J) for J in variables]
    seen = set()
    for combo in combinations_with_replacement(range(len(cols)), d):
        cells = []
        for i in combo:
            cells.extend(cols[i])
        cells.sort()
        seen.add(tuple(cells))
    return len(seen)


def quotient_dimension(ell: int, iv: Interval, d: int) -> int:
    """dim of the degree-d slice of K[P_I : I in iv] / ker(phi_ell restricted)."""
    if d < 0:
        raise ParameterError(f"degree must be >= 0, got {d}")
    _check_ell(iv.n, ell)
    return distinct_images(ell, iv.members, d)


def degree_monomials(variables: Sequence[KSubset], d: int) -> list[Monomial]:
    """All degree-d monomials in ``variables``, each a sorted factor tuple, in lex order."""
    return list(combinations_with_replacement(sorted(variables), d))
