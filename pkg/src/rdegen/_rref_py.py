"""Pure-Python fraction-free reduced row echelon form over the integers.

Every row is kept primitive (content 1) with a positive pivot, so the result
is the unique integer normalisation of the rational RREF. Arbitrary-precision
Python ints make this path overflow-free.
"""

from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    lead = next((x for x in row if x), 0)
    if g > 1 or lead < 0:
        if lead < 0:
            g = -g
        return [x // g for x in row]
    return row


def rref_int(rows, ncols):
    """Return ``(reduced_rows, pivot_columns)``; zero rows are dropped."""
    work = [list(r) for r in rows if any(r)]
    pivots = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        sel = -1
        for r in range(top, len(work)):
            if work[r][col]:
                sel = r
                break
        if sel < 0:
            continue
        work[top], work[sel] = work[sel], work[top]
        prow = _primitive(work[top])
        work[top] = prow
        pv = prow[col]
        for r in range(len(work)):
            if r == top:
                continue
            a = work[r][col]
            if a:
                row = work[r]
                work[r] = _primitive([pv * x - a * y for x, y in zip(row, prow)])
        pivots.append(col)
        top += 1
        # rows that became zero are moved out of the active region
        keep = work[:top] + [r for r in work[top:] if any(r)]
        work = keep
    return work[:top], pivots
