from collections import Counter
from itertools import combinations_with_replacement, product

import pytest

from rdegen.combinatorics import KSubset, enumerate_subsets, full_interval, interval, leq, parse_subset, richardson_pairs
from rdegen.errors import ContractViolation, EmptyRichardsonError, NormalizationError, ParameterError
from rdegen.ideal_core import is_monomial_free, quotient_dimension
from rdegen.matching_field import mf_tableau
from rdegen.tableaux_smt import (
    Tableau,
    count_ssyt,
    enumerate_ssyt,
    gamma_ell,
    gamma_sets,
    image_gamma_restricted,
    is_ssyt,
    row_key,
    row_sort_normalize,
    row_wise_equal,
    vanish_correspondence,
)


def S(text, n):
    return parse_subset(text, n)


def T(*cols):
    return Tableau(tuple(tuple(c) for c in cols))


def test_is_ssyt_examples():
    assert is_ssyt(T((1, 3), (2, 4)))
    assert not is_ssyt(T((1, 4), (2, 3)))
    assert is_ssyt(T((1, 2, 5)))
    assert Tableau.from_rows([(1, 2), (3, 4)]) == T((1, 3), (2, 4))
    assert T((1, 3), (2, 4)).text() == "1,2;3,4"
    with pytest.raises(ParameterError):
        T((1, 1))


def test_enumerate_examples():
    assert len(enumerate_ssyt(S("1,2", 4), S("3,4", 4), 2)) == 20
    v, w = S("1,3", 5), S("3,5", 5)
    assert count_ssyt(v, w, 1) == len(interval(v, w))
    assert enumerate_ssyt(v, w, 0) == [Tableau(())]
    with pytest.raises(EmptyRichardsonError):
        enumerate_ssyt(S("1,4", 4), S("2,3", 4), 2)


def _brute_ssyt(v, w, d):
    # independent oracle: all lex-sorted column tuples, filtered by the SSYT test
    members = interval(v, w).members
    out = []
    for cols in combinations_with_replacement(members, d):
        t = Tableau.from_subsets(cols)
        if is_ssyt(t):
            out.append(t)
    return out


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_enumerate_matches_brute(k, n):
    for v, w in list(richardson_pairs(k, n))[::5]:
        for d in (1, 2, 3):
            assert enumerate_ssyt(v, w, d) == _brute_ssyt(v, w, d)


def test_gamma_examples():
    g = gamma_ell(3, T((1, 3), (2, 5)), 5)
    assert [c.ordered_entries for c in g.columns] == [(2, 3), (5, 1)]
    assert gamma_sets(2, (1, 4), (3, 5)) == ((3, 4), (1, 5))
    g = gamma_ell(1, T((2, 3), (4, 5)), 5)
    assert [c.ordered_entries for c in g.columns] == [(2, 3), (4, 5)]
    with pytest.raises(ContractViolation):
        gamma_ell(1, T((1, 4), (2, 3)), 5)
    with pytest.raises(ContractViolation):
        gamma_ell(1, T((1, 4), (2, 5), (3, 5)), 5)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6)])
def test_gamma_preserves_content_and_lower_rows(k, n):
    for ell in range(n + 1):
        for t in enumerate_ssyt(*_full(k, n), 2):
            g = gamma_ell(ell, t, n)
            assert Counter(x for c in g.subsets() for x in c) == Counter(x for c in t.columns for x in c)
            assert g.rows()[2:] == t.rows()[2:]


def _full(k, n):
    iv = full_interval(k, n)
    return iv.v, iv.w


def test_row_wise_equal_examples():
    t = T((1, 3), (2, 4))
    assert row_wise_equal(t, T((2, 4), (1, 3)))
    assert row_wise_equal(Tableau.from_rows([(1, 2), (3, 4)]), Tableau.from_rows([(2, 1), (4, 3)]))
    assert not row_wise_equal(Tableau.from_rows([(1, 2), (3, 4)]), Tableau.from_rows([(1, 2), (3, 5)]))
    with pytest.raises(ParameterError):
        row_wise_equal(t, T((1, 3)))


def test_row_sort_examples():
    assert row_sort_normalize(T((1, 4), (2, 3))) == T((1, 3), (2, 4))
    t = T((1, 3), (2, 4))
    assert row_sort_normalize(t) == t
    assert row_sort_normalize(T((2, 5))) == T((2, 5))
    with pytest.raises(NormalizationError):
        row_sort_normalize(Tableau.from_rows([(5, 1), (2, 4)]))


def test_row_sort_of_diagonal_tableaux_is_ssyt():
    n = 5
    for cols in combinations_with_replacement(enumerate_subsets(3, n), 2):
        t = row_sort_normalize(mf_tableau(0, cols))
        assert is_ssyt(t)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)])
def test_gamma_injective_and_surjective(k, n):
    ssyt = enumerate_ssyt(*_full(k, n), 2)
    for ell in range(n + 1):
        keys = [row_key(gamma_ell(ell, t, n)) for t in ssyt]
        assert len(set(keys)) == len(keys)
        pool = set(keys)
        for cols in combinations_with_replacement(enumerate_subsets(k, n), 2):
            assert row_key(mf_tableau(ell, cols)) in pool


def test_image_examples():
    assert len(image_gamma_restricted(0, S("1,3", 4), S("2,4", 4))) == 9
    assert len(image_gamma_restricted(0, S("1,2", 4), S("3,4", 4))) == 20


@pytest.mark.parametrize("k,n", [(2, 5), (3, 5), (3, 6)])
def test_count_identity_when_monomial_free(k, n):
    for ell in range(n + 1):
        for v, w in richardson_pairs(k, n):
            if is_monomial_free(k, n, ell, v, w):
                imgs = image_gamma_restricted(ell, v, w)
                c = count_ssyt(v, w, 2)
                assert len({row_key(g) for g in imgs}) == c == quotient_dimension(ell, interval(v, w), 2)


def test_vanish_examples():
    v, w = S("1,3", 5), S("3,5", 5)
    assert vanish_correspondence(2, T((1, 3), (2, 4)), v, w) == (False, False)
    t = T((1, 3), (1, 3))
    assert vanish_correspondence(2, t, S("1,3", 5), S("1,3", 5)) == (False, False)
    t = T((1, 3), (1, 4))
    assert vanish_correspondence(2, t, S("1,3", 5), S("1,3", 5)) == (True, True)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 5)])
def test_vanish_correspondence_exhaustive(k, n):
    ssyt = enumerate_ssyt(*_full(k, n), 2)
    for ell in range(n + 1):
        for v, w in richardson_pairs(k, n):
            for t in ssyt:
                a, b = vanish_correspondence(ell, t, v, w)
                assert a == b
