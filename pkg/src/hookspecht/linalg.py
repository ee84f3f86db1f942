"""Exact kernels of integer matrices over Q or F_p."""

from __future__ import annotations

from array import array
from fractions import Fraction
from typing import Sequence

from .arith import Field
from .kernels import rref_mod_p


def rref_rational(rows: Sequence[Sequence[int]], ncols: int):
    """RREF over Q with Fractions; first nonzero pivot, row-major scan."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][col]
        mat[r] = [x / lead for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rref(rows: Sequence[Sequence[int]], ncols: int, field: Field):
    """Reduced row echelon form of an integer matrix; returns (rows, pivots)."""
    p = field.characteristic
    if p == 0:
        return rref_rational(rows, ncols)
    nrows = len(rows)
    flat = array("q", (x % p for row in rows for x in row))
    pivots = list(rref_mod_p(flat, nrows, ncols, p))
    out = [list(flat[i * ncols : (i + 1) * ncols]) for i in range(len(pivots))]
    return out, pivots


def nullspace(rows: Sequence[Sequence[int]], ncols: int, field: Field) -> list[list]:
    """Canonical kernel basis: one vector per free column, read off the RREF."""
    if not rows:
        return [[field(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows, ncols, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(R, pivots):
            v[pc] = field.neg(field(row[f]))
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence[int]], ncols: int, field: Field) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols, field)[1])
