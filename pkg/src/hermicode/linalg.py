"""Small dense linear algebra over the code alphabet.

Matrices are lists of lists of encodings; everything here runs on
dimensions bounded by the code dimension (at most 22), so plain loops
over the field tables are fine.
"""

from __future__ import annotations

from .gf import Field


def row_reduce(field: Field, rows: list[list[int]]) -> tuple[list[list[int]], list[int], list[list[int]]]:
    """Row-reduce a copy of ``rows``.

    Returns (rref, pivot_columns, transform) with transform * rows == rref
    over the field; transform is square of size len(rows).
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    trans = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        trans[r], trans[pivot] = trans[pivot], trans[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        trans[r] = [field.mul(inv, x) for x in trans[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                coef = m[i][c]
                m[i] = [field.sub(x, field.mul(coef, y)) for x, y in zip(m[i], m[r])]
                trans[i] = [field.sub(x, field.mul(coef, y)) for x, y in zip(trans[i], trans[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots, trans


def rank(field: Field, rows: list[list[int]]) -> int:
    _, pivots, _ = row_reduce(field, rows)
    return len(pivots)


def in_row_space(field: Field, rref: list[list[int]], pivots: list[int], vec: list[int]) -> list[int] | None:
    """Coefficients of ``vec`` against the reduced rows, or None."""
    residue = vec[:]
    coeffs = [0] * len(rref)
    for idx, c in enumerate(pivots):
        coef = residue[c]
        if coef != 0:
            coeffs[idx] = coef
            residue = [field.sub(x, field.mul(coef, y)) for x, y in zip(residue, rref[idx])]
    if any(residue):
        return None
    return coeffs


def express_rows(field: Field, rows: list[list[int]], targets: list[list[int]]) -> list[list[int]] | None:
    """Matrix A with A * rows == targets, or None if some target is
    outside the row space."""
    rref, pivots, trans = row_reduce(field, rows)
    out = []
    for t in targets:
        coeffs = in_row_space(field, rref, pivots, t)
        if coeffs is None:
            return None
        row = [0] * len(rows)
        for idx, coef in enumerate(coeffs):
            if coef != 0:
                for jdx in range(len(rows)):
                    row[jdx] = field.add(row[jdx], field.mul(coef, trans[idx][jdx]))
        out.append(row)
    return out


def mat_vec(field: Field, mat: list[list[int]], vec: list[int]) -> list[int]:
    out = []
    for row in mat:
        acc = 0
        for a, b in zip(row, vec):
            acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out
