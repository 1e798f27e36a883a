"""k-subsets of [n], the componentwise order, the w0 action and Richardson intervals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyRichardsonError, ParameterError


@dataclass(frozen=True, order=True)
class KSubset:
    """A strictly increasing subset of {1, ..., n}.

    Ordering is lexicographic on ``elements``; this is the canonical
    enumeration order used for every output.
    """

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        els = self.elements
        if not isinstance(els, tuple):
            object.__setattr__(self, "elements", tuple(els))
            els = self.elements
        if not els:
            raise ParameterError("a k-subset needs at least one element")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ParameterError(f"subset {els} is not strictly increasing")
        if els[0] < 1 or els[-1] > self.n:
            raise ParameterError(f"subset {els} is not inside [1, {self.n}]")

    @property
    def k(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))

    def label(self) -> str:
        """Plucker-variable label such as ``P_{134}`` (entries joined when n < 10)."""
        sep = "" if self.n < 10 else ","
        return "P_{" + sep.join(map(str, self.elements)) + "}"


def parse_subset(text: str, n: int, k: int | None = None) -> KSubset:
    """Parse the textual encoding ``"1,3,5"``.

    Only strictly ascending lists are accepted; ``"3,1"`` is a usage error.
    """
    try:
        els = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParameterError(f"malformed subset {text!r}") from None
    s = KSubset(els, n)
    if k is not None and s.k != k:
        raise ParameterError(f"subset {text!r} has size {s.k}, expected {k}")
    return s


def _check_kn(k: int, n: int) -> None:
    if k < 1 or n < 1 or k > n:
        raise ParameterError(f"need 1 <= k <= n, got k={k}, n={n}")


@lru_cache(maxsize=None)
def _subsets(k: int, n: int) -> tuple[KSubset, ...]:
    return tuple(KSubset(c, n) for c in combinations(range(1, n + 1), k))


def enumerate_subsets(k: int, n: int) -> list[KSubset]:
    """All C(n, k) subsets in lexicographic order."""
    _check_kn(k, n)
    return list(_subsets(k, n))


def identity_subset(k: int, n: int) -> KSubset:
    _check_kn(k, n)
    return KSubset(tuple(range(1, k + 1)), n)


def longest_subset(k: int, n: int) -> KSubset:
    """The maximum ``w0 = {n-k+1, ..., n}``."""
    _check_kn(k, n)
    return KSubset(tuple(range(n - k + 1, n + 1)), n)


def _same_shape(I: KSubset, J: KSubset) -> None:
    if I.k != J.k or I.n != J.n:
        raise ParameterError(f"cannot compare subsets of different shape: {I} / {J}")


def leq(I: KSubset, J: KSubset) -> bool:
    """Componentwise (Bruhat) order: ``i_s <= j_s`` for every s."""
    _same_shape(I, J)
    return all(a <= b for a, b in zip(I.elements, J.elements))


def w0_act(I: KSubset) -> KSubset:
    n = I.n
    return KSubset(tuple(sorted(n + 1 - i for i in I.elements)), n)


@dataclass(frozen=True)
class Interval:
    v: KSubset
    w: KSubset
    members: tuple[KSubset, ...]

    @property
    def k(self) -> int:
        return self.v.k

    @property
    def n(self) -> int:
        return self.v.n

    def __contains__(self, I: KSubset) -> bool:
        return I in self._member_set

    @property
    def _member_set(self) -> frozenset:
        # cached lazily on the frozen instance
        try:
            return self.__dict__["_ms"]
        except KeyError:
            ms = frozenset(self.members)
            object.__setattr__(self, "_ms", ms)
            return ms

    def __len__(self) -> int:
        return len(self.members)


def interval(v: KSubset, w: KSubset) -> Interval:
    """The Richardson index set ``{I : v <= I <= w}``, sorted lexicographically."""
    _same_shape(v, w)
    if not leq(v, w):
        raise EmptyRichardsonError(f"v={v} is not <= w={w}; the Richardson variety is empty")
    members = tuple(
        I for I in _subsets(v.k, v.n)
        if all(a <= b for a, b in zip(v.elements, I.elements))
        and all(a <= b for a, b in zip(I.elements, w.elements))
    )
    return Interval(v, w, members)


def full_interval(k: int, n: int) -> Interval:
    return interval(identity_subset(k, n), longest_subset(k, n))


def richardson_pairs(k: int, n: int) -> Iterable[tuple[KSubset, KSubset]]:
    """Every pair v <= w, ordered by v then w lexicographically."""
    subs = enumerate_subsets(k, n)
    for v in subs:
        for w in subs:
            if leq(v, w):
                yield v, w
