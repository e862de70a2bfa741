"""Partial star semirings and the concrete base instances.

A semiring here is an object bundling the operations; carrier values are
plain immutable Python values (ints, floats for infinity, tuples).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce

from .errors import FormatError, Overflow, StarUndefined

INF = math.inf
NAT_MAX = 2**64 - 1


class Semiring:
    """Base class. Subclasses define ``add``, ``mul``, ``zero``, ``one``,
    ``in_star_domain`` and ``_star``; ``star`` enforces the domain."""

    name = "semiring"
    zero = 0
    one = 1
    commutative = True
    total_star = False
    direct_sum_property = False

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def in_star_domain(self, a):
        raise NotImplementedError

    def _star(self, a):
        raise NotImplementedError

    def star(self, a):
        if not self.in_star_domain(a):
            raise StarUndefined(f"{self.name}: star undefined at {self.format(a)}")
        return self._star(a)

    def plus(self, a):
        return self.mul(a, self.star(a))

    def sum(self, values):
        return reduce(self.add, values, self.zero)

    def prod(self, values):
        return reduce(self.mul, values, self.one)

    def from_int(self, n: int):
        """The element 1 + 1 + ... + 1 (n times)."""
        acc = self.zero
        for _ in range(n):
            acc = self.add(acc, self.one)
        return acc

    # text and JSON forms
    def format(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return a

    def from_json(self, v):
        return v

    def key(self):
        return (type(self).__name__,)

    def __eq__(self, other):
        return isinstance(other, Semiring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class BooleanSemiring(Semiring):
    name = "bool"
    total_star = True

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def in_star_domain(self, a):
        return True

    def _star(self, a):
        return 1

    def from_int(self, n):
        return 1 if n else 0

    def from_json(self, v):
        if v in (0, 1) and not isinstance(v, float):
            return int(v)
        raise FormatError(f"bool coefficient must be 0 or 1, got {v!r}")


def _check_nat(v):
    if v > NAT_MAX:
        raise Overflow(f"nat value {v} exceeds 2^64 - 1")
    return v


class NatSemiring(Semiring):
    """Unsigned 64-bit naturals; arithmetic past the bound raises Overflow.

    Only 0 has a star: x = ax + b has a unique solution in N iff a = 0.
    """

    name = "nat"
    direct_sum_property = True

    def add(self, a, b):
        return _check_nat(a + b)

    def mul(self, a, b):
        return _check_nat(a * b)

    def in_star_domain(self, a):
        return a == 0

    def _star(self, a):
        return 1

    def from_int(self, n):
        return _check_nat(n)

    def from_json(self, v):
        if isinstance(v, int) and not isinstance(v, bool) and 0 <= v <= NAT_MAX:
            return v
        raise FormatError(f"nat coefficient must be an integer in [0, 2^64), got {v!r}")


class NatInfSemiring(Semiring):
    """Naturals with a top element; star is the least solution of x = ax + 1."""

    name = "natinf"
    total_star = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return a * b

    def in_star_domain(self, a):
        return True

    def _star(self, a):
        return 1 if a == 0 else INF

    def from_int(self, n):
        return n

    def format(self, a):
        return "inf" if a == INF else str(a)

    def to_json(self, a):
        return "inf" if a == INF else a

    def from_json(self, v):
        if v == "inf":
            return INF
        if isinstance(v, int) and not isinstance(v, bool) and v >= 0:
            return v
        raise FormatError(f"natinf coefficient must be a natural or 'inf', got {v!r}")


class NatMat2Semiring(Semiring):
    """2x2 matrices over bounded naturals, as nested tuples.

    Noncommutative and has nilpotents; star is defined on the zero matrix only.
    """

    name = "natmat2"
    zero = ((0, 0), (0, 0))
    one = ((1, 0), (0, 1))
    commutative = False
    direct_sum_property = True

    def add(self, a, b):
        return tuple(
            tuple(_check_nat(a[i][j] + b[i][j]) for j in range(2)) for i in range(2)
        )

    def mul(self, a, b):
        return tuple(
            tuple(
                _check_nat(a[i][0] * b[0][j] + a[i][1] * b[1][j]) for j in range(2)
            )
            for i in range(2)
        )

    def in_star_domain(self, a):
        return a == self.zero

    def _star(self, a):
        return self.one

    def from_int(self, n):
        _check_nat(n)
        return ((n, 0), (0, n))

    def format(self, a):
        return "[[{},{}],[{},{}]]".format(a[0][0], a[0][1], a[1][0], a[1][1])

    def to_json(self, a):
        return [list(a[0]), list(a[1])]

    def from_json(self, v):
        try:
            rows = tuple(tuple(int(x) for x in row) for row in v)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"natmat2 coefficient must be a 2x2 list, got {v!r}") from exc
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise FormatError(f"natmat2 coefficient must be a 2x2 list, got {v!r}")
        if any(isinstance(x, bool) or x < 0 or x > NAT_MAX for r in v for x in r):
            raise FormatError(f"natmat2 entries must be naturals, got {v!r}")
        return rows


class DualSemiring(Semiring):
    """Same carrier and star as ``base``, multiplication reversed."""

    def __init__(self, base: Semiring):
        self.base = base
        self.name = f"{base.name}^d"
        self.zero = base.zero
        self.one = base.one
        self.commutative = base.commutative
        self.total_star = base.total_star
        self.direct_sum_property = base.direct_sum_property

    def add(self, a, b):
        return self.base.add(a, b)

    def mul(self, a, b):
        return self.base.mul(b, a)

    def eq(self, a, b):
        return self.base.eq(a, b)

    def in_star_domain(self, a):
        return self.base.in_star_domain(a)

    def _star(self, a):
        return self.base._star(a)

    def from_int(self, n):
        return self.base.from_int(n)

    def format(self, a):
        return self.base.format(a)

    def to_json(self, a):
        return self.base.to_json(a)

    def from_json(self, v):
        return self.base.from_json(v)

    def key(self):
        return ("dual", self.base.key())


def dual(s: Semiring) -> Semiring:
    if isinstance(s, DualSemiring):
        return s.base
    return DualSemiring(s)


BOOL = BooleanSemiring()
NAT = NatSemiring()
NATINF = NatInfSemiring()
NATMAT2 = NatMat2Semiring()

BASE_INSTANCES = {s.name: s for s in (BOOL, NAT, NATINF, NATMAT2)}


def get_semiring(name: str) -> Semiring:
    try:
        return BASE_INSTANCES[name]
    except KeyError:
        raise ValueError(
            f"unknown semiring {name!r}; expected one of {sorted(BASE_INSTANCES)}"
        ) from None


def star(s: Semiring, a):
    return s.star(a)


def plus(s: Semiring, a):
    return s.plus(a)


@dataclass
class AxiomReport:
    semiring: str
    samples: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return f"{self.semiring}: all axioms hold on {self.samples} samples"
        lines = [f"{self.semiring}: {len(self.violations)} violation(s)"]
        lines += [f"  {name}: {witness}" for name, witness in self.violations]
        return "\n".join(lines)


def axiom_check(s: Semiring, samples) -> AxiomReport:
    """Exhaustively test the semiring and ideal axioms on ``samples``.

    Only the first witness per axiom is recorded. Values whose computation
    overflows are skipped rather than reported.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("axiom_check needs at least one sample")
    report = AxiomReport(s.name, len(samples))
    seen = set()

    def fail(axiom, witness):
        if axiom not in seen:
            seen.add(axiom)
            report.violations.append((axiom, witness))

    eq, add, mul, zero, one = s.eq, s.add, s.mul, s.zero, s.one
    for a in samples:
        try:
            if not eq(add(a, zero), a):
                fail("additive identity", (a,))
            if not (eq(mul(a, one), a) and eq(mul(one, a), a)):
                fail("multiplicative identity", (a,))
            if not (eq(mul(a, zero), zero) and eq(mul(zero, a), zero)):
                fail("zero absorbing", (a,))
            if s.in_star_domain(a):
                st = s.star(a)
                if not (eq(add(mul(a, st), one), st) and eq(add(mul(st, a), one), st)):
                    fail("star fixed point", (a,))
        except Overflow:
            continue
    if not s.in_star_domain(zero):
        fail("ideal contains zero", (zero,))
    elif not eq(s.star(zero), one):
        fail("star of zero", (zero,))

    for a, b in itertools.product(samples, repeat=2):
        try:
            if not eq(add(a, b), add(b, a)):
                fail("additive commutativity", (a, b))
            if s.in_star_domain(a):
                if s.in_star_domain(b) and not s.in_star_domain(add(a, b)):
                    fail("ideal closed under sum", (a, b))
                if not (s.in_star_domain(mul(a, b)) and s.in_star_domain(mul(b, a))):
                    fail("ideal closed under product", (a, b))
        except Overflow:
            continue

    for a, b, c in itertools.product(samples, repeat=3):
        try:
            if not eq(add(add(a, b), c), add(a, add(b, c))):
                fail("additive associativity", (a, b, c))
            if not eq(mul(mul(a, b), c), mul(a, mul(b, c))):
                fail("multiplicative associativity", (a, b, c))
            if not eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))):
                fail("left distributivity", (a, b, c))
            if not eq(mul(add(a, b), c), add(mul(a, c), mul(b, c))):
                fail("right distributivity", (a, b, c))
        except Overflow:
            continue
    return report
