"""Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """One solution ``x`` of ``sum_j x_j columns[j] = target``, or None.

    Free variables are set to zero.
    """
    n = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, piv = rref(aug)
    if k in piv:
        return None
    x = [Fraction(0)] * k
    for row, c in zip(red, piv):
        x[c] = row[k]
    return x


def nullspace(columns: Sequence[Sequence[Fraction]], length: int) -> list[list[Fraction]]:
    """Basis of ``{x : sum_j x_j columns[j] = 0}``; ``length`` is the column height."""
    k = len(columns)
    if k == 0:
        return []
    rows = [[columns[j][i] for j in range(k)] for i in range(length)]
    red, piv = rref(rows)
    free = [c for c in range(k) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * k
        v[f] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis
