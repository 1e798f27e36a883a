"""Exact ground truth for the restricted ideals, built without the matching-field shortcuts.

Everything here starts from signed determinants. The degree-d slice of the
Plucker ideal is the kernel of ``P_I -> det(X_I)`` on degree-d monomials;
restricting to a Richardson interval sets the outside variables to zero,
which on a graded slice is just a projection. The substitution map respects
the column-content grading (the multiset of all tableau entries), so every
space splits into independent content blocks and is eliminated blockwise.

No floating point anywhere: coefficients are Python integers and the
elimination is fraction-free.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Mapping

from .combinatorics import Interval, KSubset, enumerate_subsets, interval as make_interval
from .errors import CapabilityError, ParameterError, UniquenessError
from .ideal_core import (
    Monomial,
    is_monomial_free,
    kernel_deg2_classes,
    monomial_label,
    phi_image,
    quadratic_generators,
    restrict_generators,
)
from .linalg import left_nullspace, rank, rref
from .matching_field import MFColumn, Perm, PluckerWeightVector, WeightMatrix, weight_vector
from .tableaux_smt import count_ssyt

DEFAULT_DEG_MAX = 3
# degree 4 is only attempted on intervals with at most this many variables
TINY_INTERVAL = 10


class ExactPoly:
    """Polynomial in the x_{i,j}; a term key is the sorted tuple of (row, column) cells."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        out: dict = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[tuple(sorted(m1 + m2))] += c1 * c2
        return ExactPoly(out)

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ExactPoly(out)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def scale(self, c: int) -> "ExactPoly":
        return ExactPoly({m: c * a for m, a in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}{j}" for i, j in m)
            parts.append(f"{c:+d}*{mono}")
        return " ".join(parts)


ONE = ExactPoly({(): 1})


def _sign(perm: tuple[int, ...]) -> int:
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def plucker_form(J: KSubset) -> ExactPoly:
    """det of the columns J of the generic k x n matrix (Leibniz expansion)."""
    k = J.k
    terms = {}
    for perm in permutations(range(k)):
        cells = tuple(sorted((i + 1, J[perm[i]]) for i in range(k)))
        terms[cells] = _sign(perm)
    return ExactPoly(terms)


def substitute(poly: Mapping[Monomial, int]) -> ExactPoly:
    """Image of a polynomial in Plucker variables under P_I -> det(X_I)."""
    out = ExactPoly()
    for mono, c in poly.items():
        term = ONE
        for J in mono:
            term = term * plucker_form(J)
        out = out + term.scale(c)
    return out


def brute_min_weight_term(M: WeightMatrix, J: KSubset) -> MFColumn:
    """Scan all k! terms of det(X_J); raise if the minimum weight is not attained uniquely."""
    if J.k != M.k or J.n != M.n:
        raise ParameterError(f"subset {J} does not fit a {M.k}x{M.n} weight matrix")
    best = None
    best_w = None
    ties = 0
    for perm in permutations(range(J.k)):
        wt = sum(M.entries[i][J[perm[i]] - 1] for i in range(J.k))
        if best_w is None or wt < best_w:
            best, best_w, ties = perm, wt, 1
        elif wt == best_w:
            ties += 1
    if ties > 1:
        raise UniquenessError(f"minimum weight {best_w} attained {ties} times for {J} at ell={M.ell}")
    ordered = tuple(J[p] for p in best)
    if ordered == J.elements:
        kind = Perm.ID
    elif J.k >= 2 and ordered == (J[1], J[0]) + J.elements[2:]:
        kind = Perm.SWAP12
    else:
        kind = Perm.OTHER
    return MFColumn(J, ordered, kind)


# -- degree bound -------------------------------------------------------------

def degree_cap(allow_deg4: bool = False) -> int:
    cap = 4 if allow_deg4 else DEFAULT_DEG_MAX
    env = os.environ.get("RDEGEN_DEG_MAX")
    if env:
        try:
            cap = min(cap, int(env))
        except ValueError:
            raise ParameterError(f"RDEGEN_DEG_MAX must be an integer, got {env!r}") from None
    return cap


def check_degree(d: int, iv: Interval | None = None, allow_deg4: bool = False) -> None:
    if d < 0:
        raise ParameterError(f"degree must be >= 0, got {d}")
    cap = degree_cap(allow_deg4)
    if d > cap:
        raise CapabilityError(f"degree {d} exceeds the oracle bound {cap}")
    if d >= 4 and iv is not None and len(iv) > TINY_INTERVAL:
        raise CapabilityError(
            f"degree {d} needs an interval of at most {TINY_INTERVAL} variables, got {len(iv)}"
        )


# -- graded pieces ------------------------------------------------------------

def content(mono: Iterable[KSubset]) -> tuple[int, ...]:
    return tuple(sorted(x for J in mono for x in J.elements))


@dataclass(frozen=True)
class Block:
    cols: tuple[int, ...]                 # global positions in variable_index
    rows: tuple[tuple[int, ...], ...]     # canonical integer RREF over cols


@dataclass
class GradedPiece:
    """One homogeneous degree of a subspace of K[P_I : I in T].

    ``variable_index`` lists the degree-d monomials in lexicographic order;
    the basis is stored per content block in canonical integer RREF.
    """

    degree: int
    variable_index: tuple[Monomial, ...]
    blocks: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(len(b.rows) for b in self.blocks.values())

    @property
    def ambient_dim(self) -> int:
        return len(self.variable_index)

    def rows(self) -> Iterable[dict[int, int]]:
        for key in sorted(self.blocks):
            b = self.blocks[key]
            for r in b.rows:
                yield {b.cols[j]: c for j, c in enumerate(r) if c}

    def polynomials(self) -> list[dict[Monomial, int]]:
        vi = self.variable_index
        return [{vi[i]: c for i, c in r.items()} for r in self.rows()]

    def monomial_rows(self) -> list[Monomial]:
        """Basis rows that are a single monomial."""
        return [self.variable_index[next(iter(r))] for r in self.rows() if len(r) == 1]

    def contains(self, poly: Mapping[Monomial, int]) -> bool:
        pos = _positions(self.variable_index)
        sparse = {}
        for m, c in poly.items():
            if c:
                if m not in pos:
                    return False
                sparse[pos[m]] = c
        for key, part in _split_by_content(self.variable_index, [sparse]).items():
            block = self.blocks.get(key)
            if block is None:
                return False
            idx = {g: j for j, g in enumerate(block.cols)}
            vec = [0] * len(block.cols)
            for g, c in part[0].items():
                vec[idx[g]] = c
            if rank(list(block.rows) + [vec], len(block.cols)) != len(block.rows):
                return False
        return True

    def is_subspace_of(self, other: "GradedPiece") -> bool:
        if self.variable_index != other.variable_index:
            raise ParameterError("pieces live in different monomial spaces")
        for key, b in self.blocks.items():
            ob = other.blocks.get(key)
            if ob is None:
                return False
            if rank(list(ob.rows) + list(b.rows), len(b.cols)) != len(ob.rows):
                return False
        return True

    def same_space(self, other: "GradedPiece") -> bool:
        return self.dim == other.dim and self.is_subspace_of(other)

    def to_text(self) -> list[str]:
        out = []
        for poly in self.polynomials():
            out.append(" ".join(f"{c:+d}*{monomial_label(m)}" for m, c in sorted(poly.items())))
        return out


@lru_cache(maxsize=None)
def _positions(variable_index: tuple) -> dict:
    return {m: i for i, m in enumerate(variable_index)}


@lru_cache(maxsize=None)
def _content_groups(variable_index: tuple) -> dict:
    groups: dict = defaultdict(list)
    for i, m in enumerate(variable_index):
        groups[content(m)].append(i)
    return {key: tuple(v) for key, v in groups.items()}


def _split_by_content(variable_index, sparse_rows):
    out: dict = defaultdict(list)
    for r in sparse_rows:
        if not r:
            continue
        keys = {content(variable_index[i]) for i in r}
        if len(keys) != 1:
            raise ValueError("row mixes content blocks; the spaces here are content-graded")
        out[keys.pop()].append(r)
    return out


def piece_from_rows(degree: int, variable_index: tuple, sparse_rows) -> GradedPiece:
    """Span of sparse rows ``{global index: coefficient}``, reduced blockwise."""
    groups = _content_groups(variable_index)
    blocks = {}
    for key, rows in _split_by_content(variable_index, sparse_rows).items():
        cols = groups[key]
        idx = {g: j for j, g in enumerate(cols)}
        dense = []
        for r in rows:
            vec = [0] * len(cols)
            for g, c in r.items():
                vec[idx[g]] = c
            dense.append(vec)
        red, _ = rref(dense, len(cols))
        if red:
            blocks[key] = Block(cols, tuple(tuple(r) for r in red))
    return GradedPiece(degree, variable_index, blocks)


@lru_cache(maxsize=None)
def monomial_index(members: tuple, d: int) -> tuple:
    return tuple(combinations_with_replacement(members, d))


@lru_cache(maxsize=None)
def _all_by_content(k: int, n: int, d: int) -> dict:
    groups: dict = defaultdict(list)
    for m in combinations_with_replacement(enumerate_subsets(k, n), d):
        groups[content(m)].append(m)
    return groups


@lru_cache(maxsize=None)
def _plucker_kernel_block(k: int, n: int, d: int, key: tuple):
    """Degree-d Plucker relations with column content ``key``, over every k-subset."""
    monos = tuple(_all_by_content(k, n, d).get(key, ()))
    images = [substitute({m: 1}).terms for m in monos]
    xmons = sorted({x for img in images for x in img})
    xpos = {x: j for j, x in enumerate(xmons)}
    mat = []
    for img in images:
        row = [0] * len(xmons)
        for x, c in img.items():
            row[xpos[x]] = c
        mat.append(row)
    return monos, left_nullspace(mat, len(xmons))


def plucker_ideal_piece(k: int, n: int, d: int, allow_deg4: bool = False) -> GradedPiece:
    """Degree-d slice of the full Plucker ideal G_{k,n}."""
    iv = make_interval(enumerate_subsets(k, n)[0], enumerate_subsets(k, n)[-1])
    return richardson_ideal_piece(iv.v, iv.w, d, allow_deg4=allow_deg4)


@lru_cache(maxsize=None)
def _richardson_piece(v: KSubset, w: KSubset, d: int) -> GradedPiece:
    iv = make_interval(v, w)
    k, n = v.k, v.n
    vi = monomial_index(iv.members, d)
    groups = _content_groups(vi)
    blocks = {}
    for key, cols in groups.items():
        monos, kernel = _plucker_kernel_block(k, n, d, key)
        if not kernel:
            continue
        full_pos = {m: j for j, m in enumerate(monos)}
        take = [full_pos[vi[g]] for g in cols]
        projected = [[row[j] for j in take] for row in kernel]
        red, _ = rref(projected, len(cols))
        if red:
            blocks[key] = Block(cols, tuple(tuple(r) for r in red))
    return GradedPiece(d, vi, blocks)


def richardson_ideal_piece(v: KSubset, w: KSubset, d: int, allow_deg4: bool = False) -> GradedPiece:
    """Degree-d slice of I(X_w^v): Plucker relations with outside variables set to zero."""
    iv = make_interval(v, w)
    check_degree(d, iv, allow_deg4)
    return _richardson_piece(v, w, d)


def initial_space(piece: GradedPiece, weights: PluckerWeightVector) -> GradedPiece:
    """Minimal-weight parts of an echelon basis taken in ascending-weight column order."""
    vi = piece.variable_index
    wt = [weights.monomial_weight(m) for m in vi]
    blocks = {}
    for key, b in piece.blocks.items():
        order = sorted(range(len(b.cols)), key=lambda j: (wt[b.cols[j]], b.cols[j]))
        permuted = [[r[j] for j in order] for r in b.rows]
        red, piv = rref(permuted, len(order))
        init_rows = []
        for r, p in zip(red, piv):
            lead = wt[b.cols[order[p]]]
            vec = [0] * len(b.cols)
            for pos, j in enumerate(order):
                if r[pos] and wt[b.cols[j]] == lead:
                    vec[j] = r[pos]
            init_rows.append(vec)
        red2, _ = rref(init_rows, len(b.cols))
        blocks[key] = Block(b.cols, tuple(tuple(r) for r in red2))
    return GradedPiece(piece.degree, vi, blocks)


@lru_cache(maxsize=None)
def _initial_richardson(v: KSubset, w: KSubset, ell: int, d: int) -> GradedPiece:
    return initial_space(_richardson_piece(v, w, d), weight_vector(v.k, v.n, ell))


def initial_richardson_piece(v: KSubset, w: KSubset, ell: int, d: int, allow_deg4: bool = False) -> GradedPiece:
    """Degree-d slice of in_{w_ell}(I(X_w^v))."""
    iv = make_interval(v, w)
    check_degree(d, iv, allow_deg4)
    return _initial_richardson(v, w, ell, d)


def _multiply(vi: tuple, lower: Iterable[Mapping[Monomial, int]], factors: Iterable[Monomial]):
    """Sparse rows of m * g for g in ``lower`` and m in ``factors``."""
    pos = _positions(vi)
    rows = []
    factors = list(factors)
    for g in lower:
        for m in factors:
            row = {}
            for mono, c in g.items():
                prod = tuple(sorted(mono + m))
                row[pos[prod]] = row.get(pos[prod], 0) + c
            row = {i: c for i, c in row.items() if c}
            if row:
                rows.append(row)
    return rows


def generators_piece(v: KSubset, w: KSubset, ell: int, d: int) -> GradedPiece:
    """Degree-d slice of the restricted matching-field ideal, from its degree-2 generators."""
    iv = make_interval(v, w)
    k, n = v.k, v.n
    vi = monomial_index(iv.members, d)
    if d < 2:
        return GradedPiece(d, vi, {})
    rgs = restrict_generators(quadratic_generators(k, n, ell), kernel_deg2_classes(k, n, ell), iv)
    lower = [{b.plus.factors: 1, b.minus.factors: -1} for b in rgs.binomials]
    lower += [{m.factors: 1} for m in rgs.monomials]
    rows = _multiply(vi, lower, monomial_index(iv.members, d - 2))
    return piece_from_rows(d, vi, rows)


def kernel_piece(v: KSubset, w: KSubset, ell: int, d: int) -> GradedPiece:
    """Degree-d slice of ker(phi_ell) on the interval variables: star differences per image."""
    iv = make_interval(v, w)
    vi = monomial_index(iv.members, d)
    by_image: dict = defaultdict(list)
    for i, m in enumerate(vi):
        by_image[phi_image(ell, m)].append(i)
    rows = []
    for idxs in by_image.values():
        rows.extend({idxs[0]: 1, j: -1} for j in idxs[1:])
    return piece_from_rows(d, vi, rows)


# -- verification ---------------------------------------------------------------

@dataclass
class DegreeReport:
    degree: int
    monomials: int
    gens: int
    kernel: int
    initial: int
    ssyt: int
    kernel_in_gens: bool
    gens_in_initial: bool

    @property
    def equal(self) -> bool:
        return (
            self.gens == self.kernel == self.initial
            and self.kernel_in_gens
            and self.gens_in_initial
        )

    @property
    def hilbert_ok(self) -> bool:
        """Quotient by the initial slice has one dimension per standard tableau."""
        return self.monomials - self.initial == self.ssyt


@dataclass
class VerifyReport:
    k: int
    n: int
    ell: int
    v: KSubset
    w: KSubset
    max_degree: int
    monomial_free: bool
    witness: str | None
    degrees: dict = field(default_factory=dict)
    quad_gen: bool | None = None

    @property
    def equal(self) -> bool:
        return all(r.equal for r in self.degrees.values())

    def equal_at(self, d: int) -> bool:
        return self.degrees[d].equal

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "ell": self.ell,
            "v": str(self.v),
            "w": str(self.w),
            "monomial_free": self.monomial_free,
            "witness": self.witness,
            "dims": {
                str(d): {"gens": r.gens, "kernel": r.kernel, "initial": r.initial}
                for d, r in sorted(self.degrees.items())
            },
            "inclusions": {
                str(d): {"kernel_in_gens": r.kernel_in_gens, "gens_in_initial": r.gens_in_initial}
                for d, r in sorted(self.degrees.items())
            },
            "hilbert": {
                str(d): {"monomials": r.monomials, "ssyt": r.ssyt, "ok": r.hilbert_ok}
                for d, r in sorted(self.degrees.items())
            },
            "equal": self.equal,
            "quad_gen": self.quad_gen,
        }


def verify_theorem_main(v: KSubset, w: KSubset, ell: int, D: int = 3, allow_deg4: bool = False) -> VerifyReport:
    """Compare gens / kernel / initial slices in every degree 2..D.

    The chain kernel <= gens <= initial holds unconditionally and is checked by
    membership; equality in a degree means all three coincide.
    """
    iv = make_interval(v, w)
    check_degree(D, iv, allow_deg4)
    k, n = v.k, v.n
    mf = is_monomial_free(k, n, ell, v, w)
    rep = VerifyReport(
        k, n, ell, v, w, D, mf.free, mf.witness.label() if mf.witness else None
    )
    for d in range(2, D + 1):
        a = generators_piece(v, w, ell, d)
        b = kernel_piece(v, w, ell, d)
        c = _initial_richardson(v, w, ell, d)
        rep.degrees[d] = DegreeReport(
            degree=d,
            monomials=a.ambient_dim,
            gens=a.dim,
            kernel=b.dim,
            initial=c.dim,
            ssyt=count_ssyt(v, w, d),
            kernel_in_gens=b.is_subspace_of(a),
            gens_in_initial=a.is_subspace_of(c),
        )
    if D >= 3:
        rep.quad_gen = _quadratic_generation(v, w, ell, D)
    return rep


def _quadratic_generation(v: KSubset, w: KSubset, ell: int, D: int) -> bool:
    iv = make_interval(v, w)
    c2 = _initial_richardson(v, w, ell, 2).polynomials()
    for d in range(3, D + 1):
        cd = _initial_richardson(v, w, ell, d)
        vi = cd.variable_index
        spanned = piece_from_rows(d, vi, _multiply(vi, c2, monomial_index(iv.members, d - 2)))
        if not spanned.same_space(cd):
            return False
    return True


def quadratic_generation_check(v: KSubset, w: KSubset, ell: int, D: int = 3, allow_deg4: bool = False) -> bool:
    """True iff the degree-2 part of in_{w_ell}(I(X_w^v)) generates its slices up to degree D."""
    iv = make_interval(v, w)
    check_degree(D, iv, allow_deg4)
    return _quadratic_generation(v, w, ell, D)


def clear_caches() -> None:
    for fn in (_richardson_piece, _initial_richardson, _plucker_kernel_block, _all_by_content,
               monomial_index, _positions, _content_groups, plucker_form):
        fn.cache_clear()
