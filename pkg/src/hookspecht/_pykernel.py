"""Pure-Python twins of the routines in ``_kernel.pyx``; same signatures."""

from array import array


def apply_word(target, sign, n_basis, codes, starts):
    codes = list(codes)[::-1]
    out_idx = array("q")
    out_sgn = array("q")
    for cur in starts:
        s = 1
        for code in codes:
            off = code * n_basis + cur
            if target[off] < 0:
                cur = -1
                break
            s *= sign[off]
            cur = target[off]
        out_idx.append(cur)
        out_sgn.append(s if cur >= 0 else 0)
    return out_idx, out_sgn


def rref_mod_p(mat, nrows, ncols, p):
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        piv = next((r for r in range(row, nrows) if mat[r * ncols + col]), None)
        if piv is None:
            continue
        if piv != row:
            for c in range(ncols):
                i, j = piv * ncols + c, row * ncols + c
                mat[i], mat[j] = mat[j], mat[i]
        inv = pow(mat[row * ncols + col], -1, p)
        base = row * ncols
        for c in range(col, ncols):
            mat[base + c] = mat[base + c] * inv % p
        for r in range(nrows):
            if r == row:
                continue
            factor = mat[r * ncols + col]
            if factor:
                off = r * ncols
                for c in range(col, ncols):
                    mat[off + c] = (mat[off + c] - factor * mat[base + c]) % p
        pivots.append(col)
        row += 1
    return pivots
