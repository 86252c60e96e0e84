"""Exact integer and rational matrix routines: HNF, Smith form, kernels.

All matrices are tuples of tuples.  Lattice bases are stored row-wise:
the rows of a basis matrix are the generating vectors.
"""

from fractions import Fraction
from math import gcd, lcm


def frac_rows(rows):
    """Normalize an iterable of vectors to tuples of Fraction."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def common_denominator(rows):
    d = 1
    for row in rows:
        for x in row:
            d = lcm(d, Fraction(x).denominator)
    return d


def scale_to_int(rows):
    """Return (integer rows, denominator) with rows = int_rows / den."""
    rows = frac_rows(rows)
    den = common_denominator(rows)
    return tuple(tuple(int(x * den) for x in row) for row in rows), den


def hnf(rows):
    """Row Hermite normal form of the lattice spanned by integer rows.

    Returns the nonzero rows only: pivots positive, entries above each
    pivot reduced into [0, pivot).  The result is the canonical basis of
    the integer row span.
    """
    h, _ = hnf_with_transform(rows)
    return h


def hnf_with_transform(rows):
    """Row HNF together with a unimodular transform.

    Returns (H, U) where U is unimodular, U * A = H_full and H is the
    tuple of nonzero rows of H_full (zero rows of H_full come last, and
    the corresponding rows of U span the left kernel of A).
    """
    a = [list(map(int, row)) for row in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    piv_row = 0
    pivots = []
    for col in range(m):
        # find a row at or below piv_row with a nonzero entry in col
        k = None
        for i in range(piv_row, n):
            if a[i][col] != 0:
                k = i
                break
        if k is None:
            continue
        a[piv_row], a[k] = a[k], a[piv_row]
        u[piv_row], u[k] = u[k], u[piv_row]
        # eliminate below via euclidean steps
        for i in range(piv_row + 1, n):
            while a[i][col] != 0:
                q = a[piv_row][col] // a[i][col]
                if q != 0:
                    a[piv_row] = [x - q * y for x, y in zip(a[piv_row], a[i])]
                    u[piv_row] = [x - q * y for x, y in zip(u[piv_row], u[i])]
                a[piv_row], a[i] = a[i], a[piv_row]
                u[piv_row], u[i] = u[i], u[piv_row]
        if a[piv_row][col] < 0:
            a[piv_row] = [-x for x in a[piv_row]]
            u[piv_row] = [-x for x in u[piv_row]]
        pivots.append((piv_row, col))
        piv_row += 1
    # reduce entries above pivots
    for r, c in pivots:
        p = a[r][c]
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
    h = tuple(tuple(row) for row in a[:piv_row])
    return h, tuple(tuple(row) for row in u)


def left_kernel(rows):
    """Basis of the integer left kernel {x : x * A = 0} (saturated).

    Entries may be Fractions; scaling all rows by a common denominator
    leaves the kernel unchanged.
    """
    if not rows:
        return ()
    rows, _ = scale_to_int(rows)
    h, u = hnf_with_transform(rows)
    rank = len(h)
    return tuple(u[rank:])


def solve_in_rowspan(rows, target):
    """Integer x with x * A = target, or None.

    `rows` may be rationally dependent; any integer solution is returned
    (the one with zero coefficients on kernel directions of the HNF
    transform).  Entries may be Fractions.
    """
    rows = frac_rows(rows)
    target = tuple(Fraction(x) for x in target)
    if not rows:
        return () if all(x == 0 for x in target) else None
    den = common_denominator(list(rows) + [target])
    a = [[int(x * den) for x in row] for row in rows]
    t = [int(x * den) for x in target]
    h, u = hnf_with_transform(a)
    n = len(a)
    m = len(t)
    # back-substitute against echelon rows of h
    y = [0] * len(h)
    rem = list(t)
    for i, row in enumerate(h):
        col = next(j for j in range(m) if row[j] != 0)
        if rem[col] % row[col] != 0:
            return None
        y[i] = rem[col] // row[col]
        rem = [x - y[i] * z for x, z in zip(rem, row)]
    if any(rem):
        return None
    x = [0] * n
    for i, yi in enumerate(y):
        for j in range(n):
            x[j] += yi * u[i][j]
    return tuple(x)


def smith_left_transform(rows):
    """Smith data for the subgroup of Z^m spanned by integer `rows`.

    Returns (U, diag) where U is an m x m unimodular matrix such that in
    the coordinates y = U * x the subgroup becomes diag[i] * Z on the
    first k = len(diag) coordinates and 0 on the rest.  Requires the
    rows to be linearly independent (diag entries are positive).
    """
    rows = [list(map(int, r)) for r in rows]
    k = len(rows)
    m = len(rows[0]) if k else 0
    # work on B = A^T (m x k), reduce to diagonal via row ops (tracked in U)
    # and column ops (untracked).
    b = [[rows[i][j] for i in range(k)] for j in range(m)]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    diag = []
    for s in range(k):
        # find pivot with nonzero entry in submatrix [s:, s:]
        found = False
        for j in range(s, k):
            for i in range(s, m):
                if b[i][j]:
                    found = True
                    break
            if found:
                break
        if not found:
            raise ValueError("vectors are linearly dependent")
        if j != s:
            for row in b:
                row[s], row[j] = row[j], row[s]
        if i != s:
            b[s], b[i] = b[i], b[s]
            u[s], u[i] = u[i], u[s]
        # clear column s below and row s to the right, iterating until clean
        while True:
            for i in range(s + 1, m):
                while b[i][s]:
                    q = b[s][s] // b[i][s]
                    if q:
                        b[s] = [x - q * y for x, y in zip(b[s], b[i])]
                        u[s] = [x - q * y for x, y in zip(u[s], u[i])]
                    b[s], b[i] = b[i], b[s]
                    u[s], u[i] = u[i], u[s]
            for j in range(s + 1, k):
                while b[s][j]:
                    q = b[s][s] // b[s][j]
                    if q:
                        for row in b:
                            row[s] -= q * row[j]
                    for row in b:
                        row[s], row[j] = row[j], row[s]
            if all(b[i][s] == 0 for i in range(s + 1, m)):
                break
        # divisibility condition is irrelevant for our use; skip fixing it
        if b[s][s] < 0:
            b[s] = [-x for x in b[s]]
            u[s] = [-x for x in u[s]]
        diag.append(b[s][s])
    return tuple(tuple(row) for row in u), tuple(diag)


def mat_mul_int(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def vec_mat(v, a):
    m = len(a[0]) if a else 0
    return tuple(sum(v[i] * a[i][j] for i in range(len(a))) for j in range(m))


def identity_matrix(d):
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def mat_inverse_frac(a):
    """Exact inverse of a square matrix with rational entries."""
    d = len(a)
    m = [[Fraction(a[i][j]) for j in range(d)] + [Fraction(int(i == j)) for j in range(d)]
         for i in range(d)]
    for col in range(d):
        piv = next((i for i in range(col, d) if m[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(d):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(row[d:]) for row in m)


def is_primitive_vector(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1
