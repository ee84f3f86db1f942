# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops: word application on operator tables, mod-p RREF."""

from array import array


def apply_word(const long long[:] target, const long long[:] sign, long long n_basis,
               const long long[:] codes, const long long[:] starts):
    """Apply a token word (rightmost first) to each start index.

    Returns ``(idx, sgn)`` arrays; ``idx[j] = -1`` where the word kills start ``j``.
    """
    cdef Py_ssize_t n = starts.shape[0], L = codes.shape[0], j, t
    cdef long long cur, s, off
    out_idx = array("q", bytes(8 * n))
    out_sgn = array("q", bytes(8 * n))
    cdef long long[:] oi = out_idx
    cdef long long[:] os = out_sgn
    for j in range(n):
        cur = starts[j]
        s = 1
        for t in range(L - 1, -1, -1):
            off = codes[t] * n_basis + cur
            if target[off] < 0:
                cur = -1
                break
            s *= sign[off]
            cur = target[off]
        oi[j] = cur
        os[j] = s if cur >= 0 else 0
    return out_idx, out_sgn


def rref_mod_p(long long[:] mat, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    """In-place reduced row echelon form mod ``p`` of a row-major matrix.

    Entries must already lie in ``[0, p)``.  Pivots are chosen as the first
    nonzero entry scanning rows top to bottom.  Returns the pivot columns.
    """
    cdef Py_ssize_t row = 0, col, r, c, piv
    cdef long long inv, factor, a, b, x, y, q
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        piv = -1
        for r in range(row, nrows):
            if mat[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for c in range(ncols):
                x = mat[piv * ncols + c]
                mat[piv * ncols + c] = mat[row * ncols + c]
                mat[row * ncols + c] = x
        # modular inverse by extended Euclid
        a = mat[row * ncols + col]
        b = p
        x = 1
        y = 0
        while b:
            q = a // b
            a, b = b, a - q * b
            x, y = y, x - q * y
        inv = x % p
        for c in range(col, ncols):
            mat[row * ncols + c] = mat[row * ncols + c] * inv % p
        for r in range(nrows):
            if r == row:
                continue
            factor = mat[r * ncols + col]
            if factor == 0:
                continue
            for c in range(col, ncols):
                mat[r * ncols + c] = (mat[r * ncols + c] - factor * mat[row * ncols + c]) % p
        pivots.append(col)
        row += 1
    return pivots
