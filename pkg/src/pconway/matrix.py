"""Dense rectangular matrices over a semiring, with the block star."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadSplit, NotBijective, NotSquare, ShapeMismatch, StarUndefined
from .semiring import Semiring, dual


@dataclass(frozen=True)
class Matrix:
    ring: Semiring
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeMismatch(
                f"entries table does not have shape {self.rows}x{self.cols}"
            )

    @classmethod
    def of(cls, ring: Semiring, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else (cols or 0)
        return cls(ring, len(rows), ncols, rows)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    @property
    def T(self):
        return transpose(self)

    def over(self, ring: Semiring) -> "Matrix":
        """Same entries, reinterpreted in another semiring on the same carrier."""
        return Matrix(ring, self.rows, self.cols, self.entries)

    def block(self, r0, r1, c0, c1) -> "Matrix":
        return Matrix(
            self.ring, r1 - r0, c1 - c0,
            tuple(row[c0:c1] for row in self.entries[r0:r1]),
        )

    def map(self, fn, ring=None) -> "Matrix":
        return Matrix(
            ring or self.ring, self.rows, self.cols,
            tuple(tuple(fn(x) for x in row) for row in self.entries),
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        eq = self.ring.eq
        return all(
            eq(a, b)
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        fmt = self.ring.format
        body = "; ".join(", ".join(fmt(x) for x in row) for row in self.entries)
        return f"Matrix[{self.rows}x{self.cols}]({body})"


def zero_matrix(ring: Semiring, m: int, n: int) -> Matrix:
    return Matrix(ring, m, n, tuple((ring.zero,) * n for _ in range(m)))


def identity(ring: Semiring, n: int) -> Matrix:
    z, o = ring.zero, ring.one
    return Matrix(ring, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))


def ones_column(ring: Semiring, n: int) -> Matrix:
    return Matrix(ring, n, 1, tuple((ring.one,) for _ in range(n)))


def unit_row(ring: Semiring, n: int, i: int) -> Matrix:
    """The 1 x n coproduct injection with a 1 at 0-based position i."""
    return Matrix(ring, 1, n, (tuple(ring.one if j == i else ring.zero for j in range(n)),))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    add = a.ring.add
    return Matrix(
        a.ring, a.rows, a.cols,
        tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)),
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    ring = a.ring
    add, mul, is_zero, zero = ring.add, ring.mul, ring.is_zero, ring.zero
    bcols = list(zip(*b.entries)) if b.rows else [()] * b.cols
    out = []
    for row in a.entries:
        nz = [(k, x) for k, x in enumerate(row) if not is_zero(x)]
        new_row = []
        for col in bcols:
            acc = zero
            for k, x in nz:
                y = col[k]
                if not is_zero(y):
                    acc = add(acc, mul(x, y))
            new_row.append(acc)
        out.append(tuple(new_row))
    return Matrix(ring, a.rows, b.cols, tuple(out))


def transpose(a: Matrix) -> Matrix:
    if a.rows == 0:
        return Matrix(a.ring, a.cols, 0, tuple(() for _ in range(a.cols)))
    return Matrix(a.ring, a.cols, a.rows, tuple(zip(*a.entries)))


def hstack(*ms: Matrix) -> Matrix:
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise ShapeMismatch("hstack needs equal row counts")
    return Matrix(
        ms[0].ring, rows, sum(m.cols for m in ms),
        tuple(sum((m.entries[i] for m in ms), ()) for i in range(rows)),
    )


def vstack(*ms: Matrix) -> Matrix:
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise ShapeMismatch("vstack needs equal column counts")
    return Matrix(ms[0].ring, sum(m.rows for m in ms), cols, sum((m.entries for m in ms), ()))


def from_blocks(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    return vstack(hstack(a, b), hstack(c, d))


def in_matrix_ideal(a: Matrix) -> bool:
    dom = a.ring.in_star_domain
    return all(dom(x) for row in a.entries for x in row)


def _require_star_domain(a: Matrix):
    if a.rows != a.cols:
        raise NotSquare(f"star needs a square matrix, got {a.rows}x{a.cols}")
    dom = a.ring.in_star_domain
    for i, row in enumerate(a.entries):
        for j, x in enumerate(row):
            if not dom(x):
                raise StarUndefined(
                    f"entry ({i},{j}) = {a.ring.format(x)} is outside the star domain"
                )


def _star(a: Matrix) -> Matrix:
    n = a.rows
    ring = a.ring
    if n == 0:
        return a
    if n == 1:
        return Matrix(ring, 1, 1, ((ring.star(a.entries[0][0]),),))
    m = n - 1
    top, right = a.block(0, m, 0, m), a.block(0, m, m, n)
    low, corner = a.block(m, n, 0, m), a.block(m, n, m, n)
    top_star = _star(top)
    corner_star = _star(corner)
    delta = _star(corner + low @ top_star @ right)
    gamma = delta @ low @ top_star
    # (top + right corner* low)* rewritten as top* + top* right delta low top*,
    # which avoids a second (n-1)-dimensional star per level
    alpha = top_star + (top_star @ right) @ gamma
    beta = alpha @ right @ corner_star
    return from_blocks(alpha, beta, gamma, delta)


def mat_star(a: Matrix) -> Matrix:
    """Star of a square matrix whose entries all lie in the star domain.

    Recurses on the split with a 1x1 bottom-right corner.
    """
    _require_star_domain(a)
    return _star(a)


def mat_plus(a: Matrix) -> Matrix:
    return a @ mat_star(a)


def block_star(a: Matrix, split_at: int) -> Matrix:
    """Star via the four-block formula with a split_at x split_at top-left block.

    The formula is evaluated verbatim, with both diagonal stars recomputed,
    so it can be compared against ``mat_star``.
    """
    _require_star_domain(a)
    n = a.rows
    if not 0 < split_at < n:
        raise BadSplit(f"split point {split_at} not in 1..{n - 1}")
    k = split_at
    ta, tb = a.block(0, k, 0, k), a.block(0, k, k, n)
    tc, td = a.block(k, n, 0, k), a.block(k, n, k, n)
    ta_star, td_star = _star(ta), _star(td)
    alpha = _star(ta + tb @ td_star @ tc)
    delta = _star(td + tc @ ta_star @ tb)
    beta = alpha @ tb @ td_star
    gamma = delta @ tc @ ta_star
    return from_blocks(alpha, beta, gamma, delta)


def dual_mat_star(a: Matrix) -> Matrix:
    """Star of ``a`` computed in the matrix theory of the dual semiring."""
    return mat_star(a.over(dual(a.ring))).over(a.ring)


def dual_mul(a: Matrix, b: Matrix) -> Matrix:
    """Product of a and b in the matrix theory of the dual semiring."""
    d = dual(a.ring)
    return mat_mul(a.over(d), b.over(d)).over(a.ring)


def from_function(ring: Semiring, mapping: Sequence[int], target_size: int) -> Matrix:
    """0-1 matrix of a map {0..m-1} -> {0..target_size-1} given as a list."""
    for j in mapping:
        if not 0 <= j < target_size:
            raise ValueError(f"image {j} outside 0..{target_size - 1}")
    z, o = ring.zero, ring.one
    return Matrix(
        ring, len(mapping), target_size,
        tuple(tuple(o if j == t else z for j in range(target_size)) for t in mapping),
    )


def permutation_matrix(ring: Semiring, perm: Sequence[int]) -> Matrix:
    if sorted(perm) != list(range(len(perm))):
        raise NotBijective(f"{list(perm)} is not a permutation of 0..{len(perm) - 1}")
    return from_function(ring, perm, len(perm))
