"""Independent reference computations used to freeze expected values.

Nothing here calls the star implementations under test.
"""

import itertools

from pconway.matrix import Matrix
from pconway.series import Series, SeriesSemiring


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def naive_mul(ring: SeriesSemiring, s: Series, t: Series) -> Series:
    """Cauchy product by enumerating every factorization w = uv."""
    c = ring.coeff
    out = {}
    for w in all_words(ring.alphabet, ring.max_len):
        acc = c.zero
        for k in range(len(w) + 1):
            u, v = w[:k], w[k:]
            acc = c.add(acc, c.mul(s.coeffs.get(u, c.zero), t.coeffs.get(v, c.zero)))
        out[w] = acc
    return ring.series(out)


def naive_add(ring, s, t):
    c = ring.coeff
    return ring.series({
        w: c.add(s.coeffs.get(w, c.zero), t.coeffs.get(w, c.zero))
        for w in set(s.coeffs) | set(t.coeffs)
    })


def iterate_star(s: Series, start=None, rhs=None) -> Series:
    """Solve t = s t + rhs by iterating from ``start`` with the naive product."""
    ring = s.ring
    t = start if start is not None else ring.zero
    rhs = rhs if rhs is not None else ring.one
    for _ in range(ring.max_len + 2):
        t = naive_add(ring, naive_mul(ring, s, t), rhs)
    return t


def naive_mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ring = a.ring
    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = ring.zero
            for k in range(a.cols):
                acc = naive_add(ring, acc, naive_mul(ring, a[i, k], b[k, j]))
            row.append(acc)
        rows.append(row)
    return Matrix.of(ring, rows, b.cols)


def naive_mat_add(a, b):
    return Matrix.of(a.ring, [[naive_add(a.ring, a[i, j], b[i, j]) for j in range(a.cols)]
                              for i in range(a.rows)], a.cols)


def iterate_mat_star(a: Matrix, rhs: Matrix = None, start: Matrix = None) -> Matrix:
    """Solve X = A X + rhs (rhs defaults to the identity) by iteration."""
    ring = a.ring
    n = a.rows
    if rhs is None:
        rhs = Matrix.of(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n)
    x = start if start is not None else Matrix.of(
        ring, [[ring.zero] * rhs.cols for _ in range(n)], rhs.cols)
    for _ in range(ring.max_len + 2):
        x = naive_mat_add(naive_mat_mul(a, x), rhs)
    return x


def reverse_series(s: Series) -> Series:
    return s.ring.series({w[::-1]: c for w, c in s.coeffs.items()})


def run_weight_by_enumeration(aut, word):
    """Sum over all state sequences of the product of weights along the run."""
    c = aut.coeff
    n = aut.dim
    total = c.zero
    for states in itertools.product(range(n), repeat=len(word) + 1):
        wgt = aut.alpha[states[0]]
        for k, sigma in enumerate(word):
            wgt = c.mul(wgt, dict(aut.trans[states[k]][states[k + 1]]).get(sigma, c.zero))
        wgt = c.mul(wgt, aut.beta[states[-1]])
        total = c.add(total, wgt)
    return total
