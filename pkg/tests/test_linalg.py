from fractions import Fraction
from math import gcd, lcm

import pytest
from hypothesis import given, settings, strategies as st

from rdegen import linalg, _rref_py
from rdegen.linalg import left_nullspace, rank, rref


def _rational_rref(rows, ncols):
    """Textbook Fraction RREF, rescaled to primitive integer rows: an independent oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    piv, top = [], 0
    for c in range(ncols):
        sel = next((r for r in range(top, len(m)) if m[r][c] != 0), None)
        if sel is None:
            continue
        m[top], m[sel] = m[sel], m[top]
        p = m[top][c]
        m[top] = [x / p for x in m[top]]
        for r in range(len(m)):
            if r != top and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[top])]
        piv.append(c)
        top += 1
    out = []
    for r in m[:top]:
        den = lcm(*[x.denominator for x in r]) if r else 1
        ints = [int(x * den) for x in r]
        g = 0
        for x in ints:
            g = gcd(g, x)
        out.append([x // g for x in ints])
    return out, piv


matrices = st.integers(1, 7).flatmap(
    lambda nc: st.tuples(st.just(nc), st.lists(st.lists(st.integers(-6, 6), min_size=nc, max_size=nc), max_size=8))
)


@given(matrices)
@settings(max_examples=300)
def test_python_kernel_matches_rational(data):
    nc, rows = data
    assert _rref_py.rref_int(rows, nc) == _rational_rref(rows, nc)


@pytest.mark.skipif(linalg._rref_c is None, reason="compiled kernel not built")
@given(matrices)
@settings(max_examples=300)
def test_backends_agree(data):
    nc, rows = data
    assert rref(rows, nc, backend="cython") == rref(rows, nc, backend="python")


@pytest.mark.skipif(linalg._rref_c is None, reason="compiled kernel not built")
def test_overflow_falls_back():
    big = 2**62
    rows = [[big, 3, 1], [3, big, 2], [5, 7, big]]
    assert rref(rows, 3, backend="cython") == _rref_py.rref_int(rows, 3)
    with pytest.raises(OverflowError):
        linalg._rref_c.rref_int([[2**70, 1]], 2)


def test_empty_and_zero():
    assert rref([], 3) == ([], [])
    assert rref([[0, 0], [0, 0]], 2) == ([], [])
    assert rank([[1, 2], [2, 4]], 2) == 1


@given(matrices)
@settings(max_examples=200)
def test_left_nullspace(data):
    nc, rows = data
    basis = left_nullspace(rows, nc)
    assert len(basis) == len(rows) - rank(rows, nc)
    for c in basis:
        for j in range(nc):
            assert sum(c[i] * rows[i][j] for i in range(len(rows))) == 0
    if basis:
        assert rank(basis, len(rows)) == len(basis)


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    code = (
        "from rdegen import linalg, oracle\n"
        "from rdegen.combinatorics import parse_subset as P\n"
        "r = oracle.verify_theorem_main(P('1,2,3', 5), P('3,4,5', 5), 2, D=3)\n"
        "print(linalg.BACKEND, r.equal, r.degrees[3].initial)\n"
    )
    env = dict(os.environ, RDEGEN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, equal, dim = out.stdout.split()
    from rdegen.combinatorics import parse_subset as P
    from rdegen.oracle import verify_theorem_main

    assert backend == "python"
    rep = verify_theorem_main(P("1,2,3", 5), P("3,4,5", 5), 2, D=3)
    assert equal == str(rep.equal) and int(dim) == rep.degrees[3].initial
