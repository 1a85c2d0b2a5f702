"""Row reduction over GF(q) on small numpy matrices."""

import numpy as np


def rref(M, F):
    """Return ``(R, pivots)`` with ``R`` the reduced row echelon form of ``M``.

    Zero rows are dropped, so ``R`` has ``len(pivots)`` rows.
    """
    A = np.array(M, dtype=F.dtype, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    nrows, ncols = A.shape
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            A[[row, piv]] = A[[piv, row]]
        A[row] = mul[inv[A[row, col]], A[row]]
        for other in range(nrows):
            c = A[other, col]
            if other != row and c:
                A[other] = add[A[other], mul[neg[c], A[row]]]
        pivots.append(col)
        row += 1
    return A[:row], pivots


def rank(M, F):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, F)[1])


def matmul(A, B, F):
    """Matrix product over GF(q)."""
    A = np.asarray(A)
    B = np.asarray(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=F.dtype)
    for j in range(A.shape[1]):
        out = F.add_table[out, F.mul_table[A[:, j, None], B[None, j, :]]]
    return out


def nullspace(M, F):
    """Basis (as rows) of ``{x : M x^T = 0}``."""
    M = np.asarray(M)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=F.dtype)
    R, pivots = rref(M, F)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=F.dtype)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = F.neg_table[R[r, fc]]
    return basis
