"""Exact integer matrix kernels: determinant, Hermite and Smith normal forms,
integer kernels and rational rank.

Matrices are plain lists of lists of Python ints. Every routine uses a fixed
pivoting order, so results are reproducible byte for byte.
"""

from fractions import Fraction


def _copy(a):
    return [list(row) for row in a]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det(a):
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = _copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a):
    """Rank over Q."""
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def hnf_with_transform(a):
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``h == u * a``, ``u`` unimodular. Nonzero rows of
    ``h`` come first, pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``.
    """
    h = _copy(a)
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        # Euclid down column c on rows r.. using the smallest nonzero entry.
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(h[i][c]), i))
            if p != r:
                h[r], h[p] = h[p], h[r]
                u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r >= rows or h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def hnf(a):
    """Hermite normal form with zero rows dropped."""
    if not a:
        return []
    h, _ = hnf_with_transform(a)
    return [row for row in h if any(row)]


def left_kernel(a):
    """Basis (in Hermite normal form) of ``{x in Z^m : x * a == 0}``.

    The basis spans a saturated sublattice of ``Z^m`` because it is read
    off a unimodular transform.
    """
    m = len(a)
    if m == 0:
        return []
    if not a[0]:
        return identity(m)
    h, u = hnf_with_transform(a)
    basis = [u[i] for i in range(m) if not any(h[i])]
    return hnf(basis)


def right_kernel(a):
    """Basis of ``{x in Z^n : a * x == 0}`` for an ``k x n`` matrix ``a``."""
    return left_kernel(transpose(a))


def smith_diagonal(a):
    """Nonzero invariant factors of ``a`` in divisibility order."""
    m = _copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if m[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t] != 0:
                    clean = False
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j] != 0:
                    clean = False
            if clean:
                bad = next(((i, j) for i in range(t + 1, rows)
                            for j in range(t + 1, cols) if m[i][j] % p), None)
                if bad is None:
                    break
                m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
                continue
            # a smaller remainder appeared; move it to the pivot slot
            entries = [(abs(m[i][t]), i, t) for i in range(t, rows) if m[i][t]]
            entries += [(abs(m[t][j]), t, j) for j in range(t, cols) if m[t][j]]
            _, pi, pj = min(entries)
            m[t], m[pi] = m[pi], m[t]
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def solve_rational(a, b):
    """Solve ``x * a == b`` for row vector ``x`` when ``a`` has full row rank.

    Returns a list of Fractions, or None if ``b`` is outside the row span.
    """
    k = len(a)
    n = len(b)
    # augmented system a^T x^T = b^T
    m = [[Fraction(a[i][j]) for i in range(k)] + [Fraction(b[j])] for j in range(n)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, n) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(m[i][k] != 0 for i in range(r, n)):
        return None
    x = [Fraction(0)] * k
    for row, c in enumerate(pivots):
        x[c] = m[row][k]
    return x
