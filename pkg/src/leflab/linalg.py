"""Exact Gaussian elimination over QQ (rows are lists of mpq)."""

from __future__ import annotations

from .polyring import QQ


def row_echelon(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[QQ(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    m = [[QQ(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        p = row[c]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], row)]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows, ncols=None):
    """Basis of {v : rows . v = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    ech, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [QQ(0)] * ncols
        v[f] = QQ(1)
        for row, pc in zip(ech, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def left_nullspace(rows):
    """Basis of {w : w . rows = 0}."""
    if not rows:
        return []
    cols = [list(c) for c in zip(*rows)]
    return nullspace(cols, len(rows))
