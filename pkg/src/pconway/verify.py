"""Randomized verification of star identities over truncated power series.

Every check compares two independently computed sides with exact
equality and records the first differing word on failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import SizeMismatch
from .groups import FiniteGroup, standard_groups
from .matrix import (
    Matrix,
    block_star,
    dual_mat_star,
    dual_mul,
    from_blocks,
    hstack,
    identity,
    mat_plus,
    mat_star,
    ones_column,
    permutation_matrix,
    transpose,
    unit_row,
    vstack,
    zero_matrix,
)
from .ratexpr import kleene_round_trip, random_expr
from .semiring import NATMAT2, Semiring
from .series import (
    Series,
    SeriesSemiring,
    cycle_free_index,
    cycle_free_star,
    format_word,
    iterate_fixed_point,
    proper_star,
)


@dataclass
class Failure:
    inputs: str
    left: str
    right: str
    word: Optional[str]
    where: str = ""

    def __str__(self):
        loc = f" entry {self.where}" if self.where else ""
        w = "-" if self.word is None else format_word(self.word)
        return f"{self.inputs}:{loc} at {w}: {self.left} != {self.right}"


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, label: str, left, right) -> bool:
        """Compare two series, two matrices of series, or two plain values."""
        diff = first_difference(left, right)
        if diff is None:
            return True
        where, word, lv, rv = diff
        self.failures.append(Failure(label, lv, rv, word, where))
        return False

    def merge(self, other: "CheckReport"):
        self.cases += other.cases
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}: {self.cases} cases, {len(self.failures)} failures"


def _series_diff(s: Series, t: Series):
    if s.coeffs == t.coeffs:
        return None
    ring = s.ring
    z = ring.coeff.zero
    bad = [w for w in set(s.coeffs) | set(t.coeffs) if s.coeffs.get(w, z) != t.coeffs.get(w, z)]
    w = min(bad, key=ring.word_key)
    fmt = ring.coeff.format
    return w, fmt(s.coeffs.get(w, z)), fmt(t.coeffs.get(w, z))


def first_difference(left, right):
    """(entry, word, left value, right value) of the first mismatch, or None."""
    if isinstance(left, Matrix):
        if left.shape != right.shape:
            return "", None, f"shape {left.shape}", f"shape {right.shape}"
        for i in range(left.rows):
            for j in range(left.cols):
                d = first_difference(left[i, j], right[i, j])
                if d is not None:
                    return f"({i},{j})", d[1], d[2], d[3]
        return None
    if isinstance(left, Series):
        d = _series_diff(left, right)
        return None if d is None else ("", *d)
    if left == right:
        return None
    return "", None, str(left), str(right)


class SeriesGen:
    """Seeded generator of random series and matrices of series."""

    def __init__(self, ring: SeriesSemiring, seed: int = 0, max_coeff: int = 3,
                 max_word: int = 2, zero_rate: float = 0.15):
        self.ring = ring
        self.rng = random.Random(seed)
        self.max_coeff = max_coeff
        self.max_word = max(1, min(max_word, ring.max_len))
        self.zero_rate = zero_rate

    def word(self, lo=1):
        n = self.rng.randint(lo, self.max_word)
        return "".join(self.rng.choice(self.ring.alphabet) for _ in range(n))

    def scalar(self, lo=1):
        return self.ring.coeff.from_int(self.rng.randint(lo, self.max_coeff))

    def proper(self) -> Series:
        if self.ring.max_len == 0 or self.rng.random() < self.zero_rate:
            return self.ring.zero
        terms = {}
        for _ in range(self.rng.randint(1, 3)):
            w = self.word()
            terms[w] = self.ring.coeff.add(terms[w], self.scalar()) if w in terms else self.scalar()
        return self.ring.series(terms)

    def any(self) -> Series:
        """A series that may have a nonzero constant term."""
        s = self.proper()
        if self.rng.random() < 0.7:
            s = s + self.ring.inject(self.scalar())
        return s

    def cycle_free(self) -> Series:
        """Proper part plus a nilpotent constant when the coefficients allow one."""
        s = self.proper()
        if self.ring.coeff == NATMAT2:
            n = self.rng.randint(1, self.max_coeff)
            nil = ((0, n), (0, 0)) if self.rng.random() < 0.5 else ((0, 0), (n, 0))
            s = s + self.ring.inject(nil)
        return s

    def matrix(self, n: int, m: int, entry: Optional[Callable] = None) -> Matrix:
        entry = entry or self.proper
        return Matrix.of(self.ring, [[entry() for _ in range(m)] for _ in range(n)], m)

    def permutation(self, n: int) -> list:
        p = list(range(n))
        self.rng.shuffle(p)
        return p


# scalar laws

def check_basic_star_laws(gen: SeriesGen, cases: int) -> CheckReport:
    r = CheckReport("basic star laws", cases)
    ring = gen.ring
    one = ring.one
    r.expect("0* = 1", proper_star(ring.zero), one)
    for k in range(cases):
        a, b = gen.proper(), gen.proper()
        tag = f"case {k}: a={a}, b={b}"
        sa = proper_star(a)
        r.expect(f"{tag}: a a* + 1 = a*", a * sa + one, sa)
        r.expect(f"{tag}: a* a + 1 = a*", sa * a + one, sa)
        r.expect(f"{tag}: (ab)* a = a (ba)*", proper_star(a * b) * a, a * proper_star(b * a))
        r.expect(f"{tag}: a a* = a* a", a * sa, sa * a)
        r.expect(f"{tag}: (a+b)* = (a* b)* a*", proper_star(a + b), proper_star(sa * b) * sa)
        # product identity with one operand arbitrary
        c = gen.any()
        r.expect(f"{tag}, c={c}: (ac)* a = a (ca)*", proper_star(a * c) * a, a * proper_star(c * a))
    return r


def check_conway_scalar(gen: SeriesGen, cases: int) -> CheckReport:
    r = CheckReport("Conway scalar identities", cases)
    one = gen.ring.one
    for k in range(cases):
        a, b = gen.proper(), gen.proper()
        tag = f"case {k}: a={a}, b={b}"
        r.expect(f"{tag}: (a+b)* = a*(b a*)*", proper_star(a + b),
                 proper_star(a) * proper_star(b * proper_star(a)))
        c = gen.any()
        tag = f"case {k}: a={a}, c={c}"
        r.expect(f"{tag}: (ac)* = 1 + a(ca)*c", proper_star(a * c), one + a * proper_star(c * a) * c)
        r.expect(f"{tag}: (ca)* = 1 + c(ac)*a", proper_star(c * a), one + c * proper_star(a * c) * a)
    return r


# matrix laws

def check_matrix_conway(gen: SeriesGen, dims=(0, 1, 2, 3, 4), cases: int = 100) -> CheckReport:
    r = CheckReport("matrix Conway identities", cases)
    ring = gen.ring
    dims = list(dims)
    for k in range(cases):
        n, m = gen.rng.choice(dims), gen.rng.choice(dims)
        a, b = gen.matrix(n, n), gen.matrix(n, n)
        e = identity(ring, n)
        sa = mat_star(a)
        tag = f"case {k}: n={n}"
        r.expect(f"{tag}: (A+B)* = A*(BA*)*", mat_star(a + b), sa @ mat_star(b @ sa))
        r.expect(f"{tag}: A* = AA* + E", sa, a @ sa + e)
        r.expect(f"{tag}: A* = A*A + E", sa, sa @ a + e)
        r.expect(f"{tag}: AA* = A*A", a @ sa, sa @ a)
        r.expect(f"{tag}: 0* = E", mat_star(zero_matrix(ring, n, n)), e)
        c, d = gen.matrix(n, m), gen.matrix(m, n)
        r.expect(f"{tag}, m={m}: (CD)* = E + C(DC)*D", mat_star(c @ d), e + c @ mat_star(d @ c) @ d)
        if n >= 2:
            r.merge(_check_block_forms(a, k))
    return r


def _check_block_forms(a: Matrix, k: int) -> CheckReport:
    """Plus and alternative star block forms for the last-row split."""
    r = CheckReport("block forms")
    n = a.rows
    m = n - 1
    ta, tb = a.block(0, m, 0, m), a.block(0, m, m, n)
    tc, td = a.block(m, n, 0, m), a.block(m, n, m, n)
    sa, sd = mat_star(ta), mat_star(td)
    alpha = mat_star(ta + tb @ sd @ tc)
    delta = mat_star(td + tc @ sa @ tb)
    plus = from_blocks(
        mat_plus(ta + tb @ sd @ tc), alpha @ tb @ sd,
        delta @ tc @ sa, mat_plus(td + tc @ sa @ tb),
    )
    r.expect(f"case {k}: A+ block form", mat_plus(a), plus)
    alt = from_blocks(alpha, sa @ tb @ delta, sd @ tc @ alpha, delta)
    r.expect(f"case {k}: A* alternative block form", mat_star(a), alt)
    return r


def check_permutation(gen: SeriesGen, n: int = 4, cases: int = 50) -> CheckReport:
    r = CheckReport("permutation identity", cases)
    for k in range(cases):
        a = gen.matrix(n, n)
        perm = gen.permutation(n)
        p = permutation_matrix(gen.ring, perm)
        r.expect(f"case {k}: pi={perm}", mat_star(p @ a @ p.T), p @ mat_star(a) @ p.T)
    return r


def check_block_invariance(gen: SeriesGen, n: int = 4, cases: int = 50) -> CheckReport:
    r = CheckReport("block invariance", cases)
    for k in range(cases):
        a = gen.matrix(n, n)
        sa = mat_star(a)
        for split in range(1, n):
            r.expect(f"case {k}: split {split}", block_star(a, split), sa)
    return r


def check_transpose_duality(gen: SeriesGen, n: int = 3, cases: int = 50) -> CheckReport:
    r = CheckReport("transpose duality", cases)
    for k in range(cases):
        size = gen.rng.randint(0, n)
        a = gen.matrix(size, size)
        r.expect(f"case {k}: n={size}: (A^T)^dual* = (A*)^T", dual_mat_star(transpose(a)), transpose(mat_star(a)))
        m = gen.rng.randint(0, n)
        b = gen.matrix(size, m, gen.any)
        c = gen.matrix(m, size, gen.any)
        r.expect(f"case {k}: (BC)^T = C^T o B^T", transpose(b @ c), dual_mul(transpose(c), transpose(b)))
    return r


# group identities

def build_group_matrix(group: FiniteGroup, a: list) -> Matrix:
    """n x n matrix with (i, j) entry a[i^-1 j]."""
    if len(a) != group.order:
        raise SizeMismatch(f"need {group.order} series, got {len(a)}")
    ring = a[0].ring
    inv = group.inv
    return Matrix.of(
        ring, [[a[group.mul(inv[i], j)] for j in range(group.order)] for i in range(group.order)]
    )


def check_group_identity(group: FiniteGroup, gen: SeriesGen, cases: int) -> CheckReport:
    r = CheckReport(f"group identity {group.name}", cases)
    ring = gen.ring
    n = group.order
    e1 = unit_row(ring, n, 0)
    u = ones_column(ring, n)
    one = ring.one
    for k in range(cases):
        a = [gen.proper() for _ in range(n)]
        total = proper_star(ring.sum(a))
        ms = mat_star(build_group_matrix(group, a))
        tag = f"case {k}: a={a}"
        r.expect(f"{tag}: e1 M* u = (sum a)*", (e1 @ ms @ u)[0, 0], total)
        r.expect(f"{tag}: u^T M* e1^T = (sum a)*", (u.T @ ms @ e1.T)[0, 0], total)
        if n == 2:
            a1, a2 = a
            s1 = proper_star(a1)
            r.expect(f"{tag}: (a1 + a2 a1* a2)*(1 + a2 a1*) = (a1+a2)*",
                     proper_star(a1 + a2 * s1 * a2) * (one + a2 * s1), total)
        x = a[0]
        r.expect(f"case {k}: a={x}: (a^2)*(1+a) = a*", proper_star(x * x) * (one + x), proper_star(x))
    return r


def verify_group_table(group: FiniteGroup) -> CheckReport:
    n = group.order
    r = CheckReport(f"group table {group.name}", n ** 3)
    t = group.table
    for i in range(n):
        if t[0][i] != i or t[i][0] != i:
            r.failures.append(Failure(f"identity at element {i + 1}", str(t[0][i] + 1), str(i + 1), None))
    for i in range(n):
        if sorted(t[i]) != list(range(n)):
            r.failures.append(Failure(f"row {i + 1} is not a permutation", str([v + 1 for v in t[i]]), "", None))
        col = [t[j][i] for j in range(n)]
        if sorted(col) != list(range(n)):
            r.failures.append(Failure(f"column {i + 1} is not a permutation", str([v + 1 for v in col]), "", None))
    for i, inv in enumerate(group.inv):
        if inv is None:
            r.failures.append(Failure(f"element {i + 1} has no left inverse", "", "", None))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs, rhs = t[t[a][b]][c], t[a][t[b][c]]
                if lhs != rhs:
                    r.failures.append(Failure(
                        f"associativity at ({a + 1},{b + 1},{c + 1})", str(lhs + 1), str(rhs + 1), None))
    return r


# functorial star

def _rows_with_sum(gen: SeriesGen, rows: int, cols: int):
    """A rows x cols matrix whose every row sums to the same series b."""
    pieces = [gen.proper() for _ in range(cols)]
    entries = []
    for _ in range(rows):
        p = pieces[:]
        gen.rng.shuffle(p)
        entries.append(p)
    return Matrix.of(gen.ring, entries), gen.ring.sum(pieces)


def functorial_triple(gen: SeriesGen, family: str):
    """A constructed (A, C, B) with AC = CB for the given family."""
    ring = gen.ring
    rng = gen.rng
    if family == "ones":
        n = rng.randint(1, 4)
        a, b = _rows_with_sum(gen, n, n)
        return a, ones_column(ring, n), Matrix.of(ring, [[b]])
    if family == "injection":
        n, k = rng.randint(1, 3), rng.randint(0, 2)
        a = gen.matrix(n, n)
        x, y = gen.matrix(k, n), gen.matrix(k, k)
        c = hstack(identity(ring, n), zero_matrix(ring, n, k))
        if rng.random() < 0.5:
            return a, c, from_blocks(a, zero_matrix(ring, n, k), x, y)
        # transposed injection: C^T (n+k x n), block upper-triangular A
        return from_blocks(a, transpose(x), zero_matrix(ring, k, n), y), transpose(c), a
    if family == "blockdiag":
        m1, m2 = rng.randint(1, 3), rng.randint(1, 3)
        sizes = (m1, m2)
        blocks, bs = {}, {}
        for p in range(2):
            for q in range(2):
                blocks[p, q], bs[p, q] = _rows_with_sum(gen, sizes[p], sizes[q])
        a = from_blocks(blocks[0, 0], blocks[0, 1], blocks[1, 0], blocks[1, 1])
        c = from_blocks(ones_column(ring, m1), zero_matrix(ring, m1, 1),
                        zero_matrix(ring, m2, 1), ones_column(ring, m2))
        b = Matrix.of(ring, [[bs[0, 0], bs[0, 1]], [bs[1, 0], bs[1, 1]]])
        return a, c, b
    raise ValueError(f"unknown functorial family {family!r}")


FUNCTORIAL_FAMILIES = ("ones", "injection", "blockdiag")


def check_functorial_star(gen: SeriesGen, families=FUNCTORIAL_FAMILIES, cases: int = 50) -> CheckReport:
    r = CheckReport("functorial star", cases * len(families))
    for family in families:
        for k in range(cases):
            a, c, b = functorial_triple(gen, family)
            tag = f"{family} case {k}: {a.rows}x{a.rows} vs {b.rows}x{b.rows}"
            if r.expect(f"{tag}: AC = CB", a @ c, c @ b):
                r.expect(f"{tag}: A*C = CB*", mat_star(a) @ c, c @ mat_star(b))
    return r


def check_group_functorial(group: FiniteGroup, gen: SeriesGen, cases: int) -> CheckReport:
    """M_G u = u (sum a) and therefore M_G* u = u (sum a)*."""
    r = CheckReport(f"group functorial {group.name}", cases)
    ring = gen.ring
    u = ones_column(ring, group.order)
    for k in range(cases):
        a = [gen.proper() for _ in range(group.order)]
        m = build_group_matrix(group, a)
        b = Matrix.of(ring, [[ring.sum(a)]])
        r.expect(f"case {k}: M u = u a", m @ u, u @ b)
        r.expect(f"case {k}: M* u = u a*", mat_star(m) @ u, u @ mat_star(b))
    return r


# unique solutions

def check_uniqueness(gen: SeriesGen, cases: int, max_dim: int = 3) -> CheckReport:
    """Iteration of t <- s t + r from two starts agrees with s* r, scalar and
    matrix, and the cycle-free star does not depend on the chosen index."""
    r = CheckReport("unique solutions", cases)
    ring = gen.ring
    steps = ring.max_len + 1
    for k in range(cases):
        s, rhs, start = gen.proper(), gen.any(), gen.any()
        expected = proper_star(s) * rhs
        tag = f"case {k}: s={s}, r={rhs}"
        r.expect(f"{tag}: iterate from 0", iterate_fixed_point(s, rhs, ring.zero, steps), expected)
        r.expect(f"{tag}: iterate from {start}", iterate_fixed_point(s, rhs, start, steps), expected)

        n, p = gen.rng.randint(1, max_dim), gen.rng.randint(1, max_dim)
        a, b = gen.matrix(n, n), gen.matrix(n, p, gen.any)
        x0, x1 = zero_matrix(ring, n, p), gen.matrix(n, p, gen.any)
        sol = mat_star(a) @ b
        for label, x in (("0", x0), ("random", x1)):
            for _ in range(steps):
                x = a @ x + b
            r.expect(f"case {k}: X <- AX + B from {label} ({n}x{p})", x, sol)

        c = gen.cycle_free()
        idx = cycle_free_index(c)
        t = cycle_free_star(c, k=idx)
        r.expect(f"case {k}: c={c}: k={idx} vs k={idx + 1}", t, cycle_free_star(c, k=idx + 1))
        r.expect(f"case {k}: c={c}: t = c t + 1", c * t + ring.one, t)
    return r


# Kleene round trip

def check_kleene(coeff: Semiring, alphabet: str, max_len: int, seed: int, cases: int,
                 max_depth: int = 5, max_const: int = 3) -> CheckReport:
    r = CheckReport("Kleene round trip", cases)
    rng = random.Random(seed)
    for _ in range(cases):
        e = random_expr(rng, max_depth, alphabet, coeff, max_const)
        v = kleene_round_trip(e, coeff, alphabet, max_len)
        if not v.passed:
            r.failures.append(Failure(f"{v.expr} ({v.stage})", v.left, v.right, v.word))
    return r


# suite registry used by the CLI

def _suite_gen(coeff, alphabet, max_len, seed):
    return SeriesGen(SeriesSemiring(coeff, alphabet, max_len), seed)


def run_suite(name: str, coeff: Semiring, alphabet: str, max_len: int, seed: int, cases: int):
    """Run one named suite; returns a list of reports."""
    if name not in SUITES:
        raise KeyError(name)
    gen = _suite_gen(coeff, alphabet, max_len, seed)
    if name == "basic":
        return [check_basic_star_laws(gen, cases)]
    if name == "conway":
        return [check_conway_scalar(gen, cases)]
    if name == "matrix":
        return [check_matrix_conway(gen, cases=cases)]
    if name == "permutation":
        return [check_permutation(gen, 4, cases)]
    if name == "block":
        return [check_block_invariance(gen, 4, cases)]
    if name == "duality":
        return [check_transpose_duality(gen, 3, cases)]
    if name == "functorial":
        reps = [check_functorial_star(gen, cases=cases)]
        reps += [check_group_functorial(g, gen, max(1, cases // 10)) for g in standard_groups()]
        return reps
    if name == "group":
        reps = [verify_group_table(g) for g in standard_groups()]
        reps += [check_group_identity(g, gen, cases) for g in standard_groups()]
        return reps
    if name == "kleene":
        return [check_kleene(coeff, alphabet, max_len, seed, cases)]
    raise AssertionError(name)


SUITES = ("basic", "conway", "matrix", "permutation", "block", "duality",
          "functorial", "group", "kleene")
