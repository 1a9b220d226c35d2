"""Exact dense linear algebra.

Two layers:

* ``fp_*`` functions work over the prime field F_p on numpy integer arrays.
  Everything F_q-linear in the library (q-linearized kernels, Hom spaces,
  tau-invariants) is restricted to F_p and solved here.
* ``k_*`` functions work over a :class:`~drinfeld.rings.FiniteField` (or a
  local ring when pivots are units) on nested lists of ring elements.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import SingularLeadingMatrix


# -- over F_p -----------------------------------------------------------------------


def fp_rref(A, p: int):
    """Reduced row echelon form of A mod p; returns (R, pivot_columns)."""
    R = np.array(A, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            R[nzr] = (R[nzr] - np.outer(col[nzr], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def fp_rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(fp_rref(A, p)[1])


def fp_nullspace(A, p: int):
    """Basis of {x : A x = 0} as the rows of an integer array (canonical: the
    standard basis attached to the free columns of the RREF)."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = fp_rref(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, f]) % p
    return basis


def fp_row_space(A, p: int):
    R, pivots = fp_rref(A, p)
    return R[: len(pivots)]


def fp_solve(A, b, p: int):
    """One solution x of A x = b, or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([A, b])
    R, pivots = fp_rref(aug, p)
    n = A.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


def fp_span_elements(basis, p: int):
    """All F_p-combinations of the rows of basis (lexicographic in the
    coefficients)."""
    basis = np.asarray(basis, dtype=np.int64)
    k = basis.shape[0]
    n = basis.shape[1] if basis.ndim == 2 else 0
    if k == 0:
        yield np.zeros(n, dtype=np.int64)
        return
    for coefs in itertools.product(range(p), repeat=k):
        yield (np.asarray(coefs, dtype=np.int64) @ basis) % p


def fp_matpow(A, e: int, p: int):
    A = np.asarray(A, dtype=np.int64) % p
    result = np.eye(A.shape[0], dtype=np.int64)
    while e:
        if e & 1:
            result = (result @ A) % p
        A = (A @ A) % p
        e >>= 1
    return result


# -- over a field or local ring k -------------------------------------------------------


def k_zero(R, n, m=None):
    m = n if m is None else m
    return [[R.zero] * m for _ in range(n)]


def k_identity(R, n):
    M = k_zero(R, n)
    for i in range(n):
        M[i][i] = R.one
    return M


def k_mul(R, A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = k_zero(R, n, m)
    for i in range(n):
        for l in range(k):
            a = A[i][l]
            if R.is_zero(a):
                continue
            Bl = B[l]
            row = out[i]
            for j in range(m):
                if not R.is_zero(Bl[j]):
                    row[j] = R.add(row[j], R.mul(a, Bl[j]))
    return out


def k_add(R, A, B):
    return [[R.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def k_sub(R, A, B):
    return [[R.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def k_frob(R, A, i=1):
    return [[R.frob(a, i) for a in row] for row in A]


def k_is_zero(R, A) -> bool:
    return all(R.is_zero(a) for row in A for a in row)


def k_apply(R, A, v):
    return [R.sum(R.mul(a, x) for a, x in zip(row, v)) for row in A]


def k_rref(R, A):
    """RREF over a local ring, pivoting on units only; returns (M, pivots).
    Over a field this is ordinary RREF."""
    M = [list(row) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R.is_unit(M[i][c])), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = R.inv(M[r][c])
        M[r] = [R.mul(inv, x) for x in M[r]]
        for i in range(rows):
            if i != r and not R.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def k_rank(R, A) -> int:
    if not A or not A[0]:
        return 0
    return len(k_rref(R, A)[1])


def k_inverse(R, A):
    n = len(A)
    aug = [list(row) + [R.one if i == j else R.zero for j in range(n)] for i, row in enumerate(A)]
    M, pivots = k_rref(R, aug)
    if pivots[:n] != list(range(n)):
        raise SingularLeadingMatrix("matrix is not invertible over the coefficient ring")
    return [row[n:] for row in M[:n]]


def k_is_invertible(R, A) -> bool:
    n = len(A)
    return k_rref(R, A)[1] == list(range(n))


def k_nullspace(R, A, ncols=None):
    """Basis of {x : A x = 0} over a field, as a list of column vectors."""
    if not A:
        n = ncols or 0
        return [[R.one if i == j else R.zero for i in range(n)] for j in range(n)]
    M, pivots = k_rref(R, A)
    cols = len(A[0])
    pset = set(pivots)
    out = []
    for f in range(cols):
        if f in pset:
            continue
        v = [R.zero] * cols
        v[f] = R.one
        for i, pc in enumerate(pivots):
            v[pc] = R.neg(M[i][f])
        out.append(v)
    return out


def k_column_space(R, A):
    """A basis (list of columns) of the column span of A over a field."""
    if not A or not A[0]:
        return []
    cols = [list(c) for c in zip(*A)]
    _, pivots = k_rref(R, A)
    return [cols[c] for c in pivots]


def k_solve(R, A, b):
    """A solution x of A x = b over a field, or None."""
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    M, pivots = k_rref(R, aug)
    if n in pivots:
        return None
    x = [R.zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = M[i][n]
    return x


def k_det(R, A):
    M = [list(row) for row in A]
    n = len(M)
    det = R.one
    for c in range(n):
        piv = next((i for i in range(c, n) if not R.is_zero(M[i][c])), None)
        if piv is None:
            return R.zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = R.neg(det)
        det = R.mul(det, M[c][c])
        inv = R.inv(M[c][c])
        for i in range(c + 1, n):
            if not R.is_zero(M[i][c]):
                f = R.mul(M[i][c], inv)
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[c])]
    return det


def k_twisted_power(R, A, n: int, shift: int = 1):
    """A * A^(q^s) * A^(q^2s) * ... (n factors): the linear part of the n-th
    iterate of the semilinear map x -> A x^(q^s)."""
    size = len(A)
    P = k_identity(R, size)
    for i in range(n):
        P = k_mul(R, P, k_frob(R, A, i * shift))
    return P
