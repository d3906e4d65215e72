"""Exact integer matrix algorithms: determinant, Hermite and Smith normal forms.

Matrices are lists of rows of Python ints, so entries never overflow.
"""


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det(a):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
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


def hnf(a, with_transform=False):
    """Row-style Hermite normal form.

    Returns ``H`` (and ``U`` with ``U @ a == H`` when requested). ``H`` is in
    row echelon form, pivots are positive and entries above a pivot lie in
    ``[0, pivot)``. Zero rows are kept at the bottom so ``H`` has the shape of
    ``a``.
    """
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = identity(rows)

    def swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def combine(i, j, a_, b_, c_, d_):
        # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j), det = 1
        for mat in (m, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [a_ * x + b_ * y for x, y in zip(ri, rj)]
            mat[j] = [c_ * x + d_ * y for x, y in zip(ri, rj)]

    r = 0
    for c in range(cols):
        if r == rows:
            break
        for i in range(r + 1, rows):
            if m[i][c] == 0:
                continue
            if m[r][c] == 0:
                swap(r, i)
                continue
            g, x, y = xgcd(m[r][c], m[i][c])
            combine(r, i, x, y, -m[i][c] // g, m[r][c] // g)
        if m[r][c] == 0:
            continue
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        piv = m[r][c]
        for i in range(r):
            q = m[i][c] // piv
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return (m, u) if with_transform else m


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def smith(a):
    """Smith normal form with transforms.

    Returns ``(D, U, W)`` with ``U @ a @ W == D``, ``U`` and ``W`` unimodular,
    ``D`` diagonal with nonnegative entries and ``D[i][i] | D[i+1][i+1]``.
    """
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = identity(rows)
    w = identity(cols)

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in w:
            row[i], row[j] = row[j], row[i]

    def row_add(dst, src, k):
        m[dst] = [x + k * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def col_add(dst, src, k):
        for row in m:
            row[dst] += k * row[src]
        for row in w:
            row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return m, u, w
            row_swap(t, best[0])
            col_swap(t, best[1])
            piv = m[t][t]
            clean = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    row_add(i, t, -(m[i][t] // piv))
                    clean = clean and m[i][t] == 0
            for j in range(t + 1, cols):
                if m[t][j]:
                    col_add(j, t, -(m[t][j] // piv))
                    clean = clean and m[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if m[i][j] % piv), None)
            if bad is None:
                break
            row_add(t, bad, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
    return m, u, w


def solve_echelon(h, target):
    """Integer ``y`` with ``y @ h == target`` for ``h`` in row echelon form.

    ``h`` must have no zero rows. Raises ``ValueError`` if ``target`` is not
    in the integer row span.
    """
    rest = list(target)
    y = []
    for row in h:
        c = next(j for j, x in enumerate(row) if x)
        q, rem = divmod(rest[c], row[c])
        if rem:
            raise ValueError("target is not in the row lattice")
        y.append(q)
        if q:
            rest = [x - q * z for x, z in zip(rest, row)]
    if any(rest):
        raise ValueError("target is not in the row lattice")
    return y
