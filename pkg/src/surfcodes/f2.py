"""Dense linear algebra over GF(2) on bitmask rows.

A matrix is a sequence of Python ints: row i has bit j set iff entry (i, j)
is 1.  Small matrices (Frobenius modules, polynomial evaluation) stay in this
form; rank computations pack the rows into numpy uint64 words so that the
elimination inner loop runs vectorized, which matters for Kronecker products
up to 4096 x 4096.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def identity_rows(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def zero_rows(n: int) -> list[int]:
    return [0] * n


def add_rows(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x ^ y for x, y in zip(a, b)]


def matmul_rows(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Row-convention product: (AB)[i] = xor of B[k] over set bits k of A[i]."""
    out = []
    for row in a:
        acc = 0
        r = row
        while r:
            k = (r & -r).bit_length() - 1
            acc ^= b[k]
            r &= r - 1
        out.append(acc)
    return out


def matpow_rows(a: Sequence[int], e: int, n: int) -> list[int]:
    result = identity_rows(n)
    base = list(a)
    while e:
        if e & 1:
            result = matmul_rows(result, base)
        base = matmul_rows(base, base)
        e >>= 1
    return result


def transpose_rows(rows: Sequence[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, row in enumerate(rows):
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            out[j] |= 1 << i
            r &= r - 1
    return out


def kron_rows(a: Sequence[int], na: int, b: Sequence[int], nb: int) -> list[int]:
    """Kronecker product with index convention (i, j) -> i*nb + j on both axes."""
    out = []
    for ra in a:
        for rb in b:
            acc = 0
            r = ra
            while r:
                k = (r & -r).bit_length() - 1
                acc |= rb << (k * nb)
                r &= r - 1
            out.append(acc)
    return out


def poly_eval_rows(coeffs01: Sequence[int], m: Sequence[int], n: int) -> list[int]:
    """Evaluate a GF(2)[x] polynomial (coeffs ascending, entries 0/1) at a
    matrix, by Horner."""
    acc = zero_rows(n)
    ident = identity_rows(n)
    for c in reversed(list(coeffs01)):
        acc = matmul_rows(acc, m)
        if c & 1:
            acc = add_rows(acc, ident)
    return acc


def _pack(rows: Sequence[int], ncols: int) -> np.ndarray:
    words = max(1, (ncols + 63) // 64)
    nbytes = words * 8
    buf = bytearray(len(rows) * nbytes)
    for i, row in enumerate(rows):
        buf[i * nbytes:(i + 1) * nbytes] = row.to_bytes(nbytes, "little")
    return np.frombuffer(bytes(buf), dtype=np.uint64).reshape(len(rows), words).copy()


def rank(rows: Sequence[int], ncols: int) -> int:
    """Rank over GF(2) by packed forward elimination."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    m = _pack(rows, ncols)
    r = 0
    for c in range(ncols):
        w, b = divmod(c, 64)
        col = (m[r:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        below = r + 1 + np.nonzero((m[r + 1:, w] >> np.uint64(b)) & np.uint64(1))[0]
        if below.size:
            m[below] ^= m[r]
        r += 1
        if r == nrows:
            break
    return r


def kernel_dim(rows: Sequence[int], ncols: int) -> int:
    """Dimension of {x : Mx = 0} for the nrows-by-ncols matrix M."""
    return ncols - rank(rows, ncols)


def charpoly(rows: Sequence[int], n: int) -> list[int]:
    """Characteristic polynomial over GF(2), coefficients ascending (length
    n + 1, leading coefficient 1), by the division-free Samuelson-Berkowitz
    recurrence on leading principal submatrices."""
    if n == 0:
        return [1]
    # c holds coefficients highest-degree first
    c = [1]
    for r in range(1, n + 1):
        a = (rows[r - 1] >> (r - 1)) & 1
        # column pieces: R = row r-1 restricted to cols < r-1, C = col r-1 of rows < r-1
        mask = (1 << (r - 1)) - 1
        rvec = rows[r - 1] & mask
        cvec = 0
        for i in range(r - 1):
            cvec |= ((rows[i] >> (r - 1)) & 1) << i
        # toeplitz column: [1, a, R C, R M C, R M^2 C, ...]
        col = [1, a]
        v = cvec
        sub = rows[: r - 1]
        for _ in range(r - 1):
            col.append(bin(rvec & v).count("1") & 1)
            # v <- M_{r-1} v  (column vector: entry i = parity of row_i & v)
            nv = 0
            for i in range(r - 1):
                nv |= (bin(sub[i] & mask & v).count("1") & 1) << i
            v = nv
        newc = [0] * (r + 1)
        for i in range(r + 1):
            s = 0
            for j in range(len(c)):
                k = i - j
                if 0 <= k < len(col):
                    s ^= col[k] & c[j]
            newc[i] = s
        c = newc
    c.reverse()  # ascending
    return c
