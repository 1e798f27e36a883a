"""Exact integer linear algebra used by the oracle.

The elimination kernel comes from the compiled extension when it is built
and importable, otherwise from the pure-Python module. Setting
``RDEGEN_PURE_PYTHON=1`` forces the fallback. Both produce the same
canonical rows; the compiled path hands off to the big-integer path on int64
overflow, so results are exact either way.
"""

from __future__ import annotations

import os
from math import gcd

from . import _rref_py

try:
    if os.environ.get("RDEGEN_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _rref_c
except ImportError:
    _rref_c = None

BACKEND = "cython" if _rref_c is not None else "python"


def rref(rows, ncols, backend: str | None = None):
    """Canonical integer RREF: primitive rows, positive pivots, zero rows dropped."""
    backend = backend or BACKEND
    if backend == "cython":
        if _rref_c is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            return _rref_c.rref_int(rows, ncols)
        except OverflowError:
            pass
    return _rref_py.rref_int(rows, ncols)


def rank(rows, ncols) -> int:
    return len(rref(rows, ncols)[1])


def left_nullspace(rows, ncols):
    """Integer basis of {c : sum_i c_i * rows[i] = 0}, one primitive vector per free row."""
    m = len(rows)
    if m == 0:
        return []
    # transpose: kernel of the map coefficient-vector -> combination
    cols = [[rows[i][j] for i in range(m)] for j in range(ncols)]
    red, piv = rref(cols, m)
    pivset = set(piv)
    free = [j for j in range(m) if j not in pivset]
    basis = []
    for f in free:
        # x_f = L, x_p = -row[f] * L / pivot_value
        L = 1
        for r, p in zip(red, piv):
            if r[f]:
                L = L * r[p] // gcd(L, r[p])
        vec = [0] * m
        vec[f] = L
        for r, p in zip(red, piv):
            if r[f]:
                vec[p] = -r[f] * L // r[p]
        basis.append(_rref_py._primitive(vec))
    return basis

