"""Formal power series in noncommuting letters, truncated at a fixed length.

Words are Python strings of single-character letters; the empty string is
the empty word. Coefficients of all words of length <= max_len are exact.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping

from .errors import (
    AlphabetMismatch,
    CoefficientStarUndefined,
    CommutationViolated,
    NotCycleFree,
    NotProper,
    UnknownLetter,
    WordTooLong,
)
from .semiring import Semiring

DEFAULT_MAX_LEN = 6
DEFAULT_K_MAX = 8


def format_word(w: str) -> str:
    return w if w else "eps"


def parse_word(text: str) -> str:
    return "" if text in ("", "eps") else text


class SeriesSemiring(Semiring):
    """The semiring of series over ``coeff`` in letters ``alphabet``, truncated
    at ``max_len``. Star is defined on the proper series."""

    commutative = False
    direct_sum_property = True

    def __init__(self, coeff: Semiring, alphabet: str, max_len: int = DEFAULT_MAX_LEN):
        if not alphabet or len(set(alphabet)) != len(alphabet):
            raise ValueError(f"alphabet must be nonempty with distinct letters: {alphabet!r}")
        if max_len < 0:
            raise ValueError("max_len must be nonnegative")
        self.coeff = coeff
        self.alphabet = alphabet
        self.max_len = max_len
        self.name = f"{coeff.name}<<{alphabet}>>/{max_len}"
        self._rank = {c: i for i, c in enumerate(alphabet)}
        self._key = ("series", coeff.key(), alphabet, max_len)
        self.zero = Series(self, {})
        self.one = self.inject(coeff.one)

    def key(self):
        return self._key

    # construction
    def series(self, coeffs: Mapping[str, object]) -> "Series":
        """Build a series from a word -> coefficient mapping, dropping zeros."""
        cz = self.coeff.is_zero
        out = {}
        for w, c in coeffs.items():
            self._check_word(w)
            if not cz(c):
                out[w] = c
        return Series(self, out)

    def inject(self, x) -> "Series":
        return Series(self, {} if self.coeff.is_zero(x) else {"": x})

    def letter(self, sigma: str) -> "Series":
        if sigma not in self._rank:
            raise UnknownLetter(f"letter {sigma!r} not in alphabet {self.alphabet!r}")
        if self.max_len < 1:
            return self.zero
        return Series(self, {sigma: self.coeff.one})

    def from_int(self, n):
        return self.inject(self.coeff.from_int(n))

    def _check_word(self, w: str):
        for ch in w:
            if ch not in self._rank:
                raise UnknownLetter(f"letter {ch!r} not in alphabet {self.alphabet!r}")
        if len(w) > self.max_len:
            raise WordTooLong(f"word {w!r} longer than truncation length {self.max_len}")

    def words(self) -> list[str]:
        """All words up to max_len, by length then lexicographically."""
        letters = sorted(self.alphabet)
        out = []
        for n in range(self.max_len + 1):
            out.extend("".join(t) for t in itertools.product(letters, repeat=n))
        return out

    @staticmethod
    def word_key(w: str):
        return (len(w), w)

    # semiring operations
    def _same(self, s: "Series"):
        if s.ring is not self and s.ring != self:
            raise AlphabetMismatch(f"series over {s.ring.name} used in {self.name}")

    def add(self, s, t):
        self._same(s)
        self._same(t)
        if not t.coeffs:
            return s
        if not s.coeffs:
            return t
        add, cz = self.coeff.add, self.coeff.is_zero
        out = dict(s.coeffs)
        for w, c in t.coeffs.items():
            if w in out:
                v = add(out[w], c)
                if cz(v):
                    del out[w]
                else:
                    out[w] = v
            else:
                out[w] = c
        return Series(self, out)

    def mul(self, s, t):
        self._same(s)
        self._same(t)
        if not s.coeffs or not t.coeffs:
            return self.zero
        L = self.max_len
        add, mul = self.coeff.add, self.coeff.mul
        sl, tl = s.by_length(), t.by_length()
        acc = {}
        for lu, us in sl.items():
            for lv, vs in tl.items():
                if lu + lv > L:
                    continue
                for u, a in us:
                    for v, b in vs:
                        w = u + v
                        p = mul(a, b)
                        acc[w] = add(acc[w], p) if w in acc else p
        cz = self.coeff.is_zero
        return Series(self, {w: c for w, c in acc.items() if not cz(c)})

    def is_zero(self, s):
        return not s.coeffs

    def eq(self, s, t):
        return s.coeffs == t.coeffs

    def in_star_domain(self, s):
        return is_proper(s)

    def _star(self, s):
        return proper_star(s)

    def format(self, s):
        return str(s)


class Series:
    """Immutable truncated series; ``coeffs`` never stores a zero coefficient."""

    __slots__ = ("ring", "coeffs", "_by_len", "_hash")

    def __init__(self, ring: SeriesSemiring, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs
        self._by_len = None
        self._hash = None

    def by_length(self) -> dict:
        if self._by_len is None:
            groups: dict = {}
            for w, c in self.coeffs.items():
                groups.setdefault(len(w), []).append((w, c))
            self._by_len = groups
        return self._by_len

    def __getitem__(self, w: str):
        return coefficient(self, w)

    def __add__(self, other):
        return self.ring.add(self, _lift(self.ring, other))

    def __radd__(self, other):
        return self.ring.add(_lift(self.ring, other), self)

    def __mul__(self, other):
        return self.ring.mul(self, _lift(self.ring, other))

    def __rmul__(self, other):
        return self.ring.mul(_lift(self.ring, other), self)

    def __pow__(self, n: int):
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def support(self) -> list[str]:
        return sorted(self.coeffs, key=self.ring.word_key)

    def items(self):
        return [(w, self.coeffs[w]) for w in self.support()]

    def dump(self) -> str:
        """``word<TAB>coefficient`` lines, shortest words first."""
        fmt = self.ring.coeff.format
        return "".join(f"{format_word(w)}\t{fmt(c)}\n" for w, c in self.items())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        fmt = self.ring.coeff.format
        parts = []
        for w, c in self.items():
            cs = fmt(c)
            if not w:
                parts.append(cs)
            else:
                parts.append(w if cs == "1" else f"{cs}{w}")
        return " + ".join(parts)


def _lift(ring: SeriesSemiring, x) -> Series:
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return ring.from_int(x)
    return ring.inject(x)


def series_add(s: Series, t: Series) -> Series:
    return s.ring.add(s, t)


def series_mul(s: Series, t: Series) -> Series:
    return s.ring.mul(s, t)


def coefficient(s: Series, w: str):
    s.ring._check_word(w)
    return s.coeffs.get(w, s.ring.coeff.zero)


def is_proper(s: Series) -> bool:
    return "" not in s.coeffs


def constant_term(s: Series):
    return s.coeffs.get("", s.ring.coeff.zero)


def proper_part(s: Series) -> Series:
    """s with its empty-word coefficient removed."""
    if "" not in s.coeffs:
        return s
    return Series(s.ring, {w: c for w, c in s.coeffs.items() if w})


def proper_star(s: Series) -> Series:
    """Sum of s^n for n <= max_len; exact up to max_len since s is proper."""
    if not is_proper(s):
        raise NotProper(f"star needs a proper series; constant term is "
                        f"{s.ring.coeff.format(constant_term(s))}")
    ring = s.ring
    total = ring.one
    power = ring.one
    for _ in range(ring.max_len):
        power = power * s
        if not power.coeffs:
            break
        total = total + power
    return total


def proper_plus(s: Series) -> Series:
    return s * proper_star(s)


def cycle_free_index(s: Series, k_max: int = DEFAULT_K_MAX):
    """Least k <= k_max with s^k proper, or None."""
    c = s.ring.coeff
    x = constant_term(s)
    power = c.one
    for k in range(1, k_max + 1):
        power = c.mul(power, x)
        if c.is_zero(power):
            return k
    return None


def cycle_free_star(s: Series, k_max: int = DEFAULT_K_MAX, k: int | None = None) -> Series:
    """Unique solution of t = s t + 1 when some power s^k is proper.

    Computed as (s^k)* (s^(k-1) + ... + s + 1). ``k`` may be forced to any
    valid index; by default the least one is used.
    """
    if k is None:
        k = cycle_free_index(s, k_max)
        if k is None:
            raise NotCycleFree(f"no power s^k with k <= {k_max} is proper")
    sk = s ** k
    if not is_proper(sk):
        raise NotCycleFree(f"s^{k} is not proper")
    ring = s.ring
    partial = ring.zero
    power = ring.one
    for _ in range(k):
        partial = partial + power
        power = power * s
    return proper_star(sk) * partial


def total_star(s: Series) -> Series:
    """Star of an arbitrary series when the coefficient semiring has a total star.

    Splits s = x + a into constant and proper part and returns (x* a)* x*.
    """
    ring = s.ring
    c = ring.coeff
    if not c.total_star:
        raise CoefficientStarUndefined(f"coefficient semiring {c.name} has no total star")
    xs = ring.inject(c.star(constant_term(s)))
    return proper_star(xs * proper_part(s)) * xs


def extend_morphism(
    p: Series,
    h_coeff: Callable,
    h_letter: Mapping[str, object] | Callable,
    target: Semiring,
):
    """Evaluate polynomial p under the unique morphism extending the coefficient
    map ``h_coeff`` and the letter assignment ``h_letter`` into ``target``.

    Raises CommutationViolated if an image coefficient fails to commute with
    an image letter, checked over the symbols occurring in p.
    """
    hl = h_letter if callable(h_letter) else h_letter.__getitem__
    letters = sorted({ch for w in p.coeffs for ch in w}, key=p.ring._rank.get)
    letter_img = {ch: hl(ch) for ch in letters}
    coeff_img = {w: h_coeff(c) for w, c in p.coeffs.items()}
    for w, hc in coeff_img.items():
        for ch, hx in letter_img.items():
            if not target.eq(target.mul(hc, hx), target.mul(hx, hc)):
                raise CommutationViolated(
                    f"image of coefficient of {format_word(w)} does not commute with image of {ch}"
                )
    terms = []
    for w in p.support():
        terms.append(target.mul(coeff_img[w], target.prod(letter_img[ch] for ch in w)))
    return target.sum(terms)


def iterate_fixed_point(s: Series, r: Series, start: Series, steps: int | None = None) -> Series:
    """Apply t <- s t + r repeatedly (max_len + 1 times by default)."""
    if steps is None:
        steps = s.ring.max_len + 1
    t = start
    for _ in range(steps):
        t = s * t + r
    return t


def polynomial(ring: SeriesSemiring, terms: Iterable[tuple]) -> Series:
    """Build a series from (coefficient, word) pairs, summing duplicates."""
    out = ring.zero
    for c, w in terms:
        out = out + ring.series({parse_word(w): ring.coeff.from_int(c) if isinstance(c, int) else c})
    return out
