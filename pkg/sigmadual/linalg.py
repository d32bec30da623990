from typing import List, Tuple

import numpy as np


def mod_p(A: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(A % p, dtype=np.int64)


def inv_mod_scalar(a, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return pow(a, p - 2, p)


def rref_mod(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p with lowest-index pivoting."""
    A = mod_p(A.copy(), p)
    rows, cols = A.shape
    r = 0
    pivots: List[int] = []
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if len(nonzero) == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, :] = mod_p(A[r, :] * inv_mod_scalar(A[r, c], p), p)
        factors = A[:, c].copy()
        factors[r] = 0
        A = mod_p(A - np.outer(factors, A[r, :]), p)
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod(A: np.ndarray, p: int) -> int:
    return len(rref_mod(A, p)[1])


def nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace of A over F_p; rows of the result form a basis."""
    rows, cols = A.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref_mod(A, p)
    free = [j for j in range(cols) if j not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = -R[row, f] % p
    return basis
