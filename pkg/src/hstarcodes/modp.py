"""Small helpers for arithmetic over the prime field F_p."""

import math


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, math.isqrt(n) + 1, 2))


def rref(rows, p):
    """Reduced row echelon form over F_p; returns ``(rows, pivot_columns)``.

    Zero rows are dropped.
    """
    m = [[x % p for x in row] for row in rows]
    pivots = []
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, p):
    return len(rref(rows, p)[1])


def normalize(vec, p):
    """Scale ``vec`` so its first nonzero entry is 1; returns ``(scaled, scalar)``.

    ``scalar`` is the first nonzero entry of ``vec``, so ``vec == scalar * scaled``.
    The zero vector is returned unchanged with scalar 1.
    """
    lead = next((x for x in vec if x % p), None)
    if lead is None:
        return tuple(x % p for x in vec), 1
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in vec), lead % p
