"""Dense linear algebra over GF(p) with numpy int64 (p < 2^31)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def _reduce_int64(A: np.ndarray, p: int, full: bool):
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        colv = A[:, c].copy()
        colv[r] = 0
        if not full:
            colv[:r] = 0
        hit = np.flatnonzero(colv)
        if hit.size:
            A[hit, c:] = (A[hit, c:] - np.outer(colv[hit], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _reduce_fraction(A, full: bool):
    M = [[Fraction(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        i = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for k in range(rows):
            if k != r and (full or k > r) and M[k][c] != 0:
                f = M[k][c]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rref(A, p: int):
    """Reduced row echelon form and pivot columns."""
    if p:
        return _reduce_int64(A, p, True)
    return _reduce_fraction(A, True)


def rank(A, p: int) -> int:
    A = np.asarray(A) if p else A
    if p and (A.size == 0):
        return 0
    if p:
        return len(_reduce_int64(A, p, False)[1])
    return len(_reduce_fraction(A, False)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis (as rows) of the right kernel {v : A v = 0}."""
    A = np.asarray(A, dtype=np.int64) if p else A
    ncols = A.shape[1] if p else len(A[0])
    if p and A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(ncols) if c not in set(piv)]
    if p:
        N = np.zeros((len(free), ncols), dtype=np.int64)
        for k, fc in enumerate(free):
            N[k, fc] = 1
            for r, pc in enumerate(piv):
                N[k, pc] = (-R[r, fc]) % p
        return N
    N = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -R[r][fc]
        N.append(v)
    return N


def row_space_basis(A, p: int) -> np.ndarray:
    R, _ = rref(A, p)
    return R
