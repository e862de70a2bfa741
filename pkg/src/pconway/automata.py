"""Finite automata (alpha, A, beta) with letter-linear transitions.

The behavior alpha A* beta is computed in the truncated series semiring;
``coefficient_by_paths`` is the independent run-weight semantics.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce

from .errors import FormatError, PreconditionViolated, UnknownLetter
from .matrix import Matrix, mat_mul, mat_star
from .semiring import Semiring, get_semiring
from .series import DEFAULT_MAX_LEN, Series, SeriesSemiring

# A linear combination sum_sigma c_sigma * sigma is stored as a tuple of
# (letter, coefficient) pairs in alphabet order with no zero coefficients.
LinComb = tuple


def lc(coeff: Semiring, alphabet: str, terms: dict) -> LinComb:
    return tuple(
        (a, terms[a]) for a in alphabet if a in terms and not coeff.is_zero(terms[a])
    )


def lc_add(coeff: Semiring, alphabet: str, p: LinComb, q: LinComb) -> LinComb:
    acc = dict(p)
    for a, c in q:
        acc[a] = coeff.add(acc[a], c) if a in acc else c
    return lc(coeff, alphabet, acc)


def lc_scale(coeff: Semiring, x, p: LinComb) -> LinComb:
    """x * p, multiplying each coefficient on the left."""
    out = []
    for a, c in p:
        v = coeff.mul(x, c)
        if not coeff.is_zero(v):
            out.append((a, v))
    return tuple(out)


@dataclass(frozen=True)
class Automaton:
    coeff: Semiring
    alphabet: str
    alpha: tuple
    trans: tuple
    beta: tuple
    zero_alpha_beta: bool = False

    def __post_init__(self):
        n = len(self.alpha)
        if len(self.beta) != n or len(self.trans) != n or any(len(r) != n for r in self.trans):
            raise FormatError(
                f"inconsistent automaton shapes: alpha {n}, beta {len(self.beta)}, "
                f"trans {len(self.trans)}x{[len(r) for r in self.trans]}"
            )
        for row in self.trans:
            for comb in row:
                for a, _ in comb:
                    if a not in self.alphabet:
                        raise UnknownLetter(f"letter {a!r} not in alphabet {self.alphabet!r}")
        if self.zero_alpha_beta and not self.coeff.is_zero(self.alpha_beta()):
            raise PreconditionViolated("zero_alpha_beta set but alpha * beta != 0")

    @property
    def dim(self) -> int:
        return len(self.alpha)

    def alpha_beta(self):
        c = self.coeff
        return c.sum(c.mul(a, b) for a, b in zip(self.alpha, self.beta))

    def letter_matrix(self, sigma: str) -> Matrix:
        """The S0-matrix of sigma-coefficients of the transition matrix."""
        if sigma not in self.alphabet:
            raise UnknownLetter(f"letter {sigma!r} not in alphabet {self.alphabet!r}")
        z = self.coeff.zero
        return Matrix.of(
            self.coeff, [[dict(comb).get(sigma, z) for comb in row] for row in self.trans]
        )

    def transition_matrix(self, ring: SeriesSemiring) -> Matrix:
        return Matrix.of(
            ring, [[ring.series({a: c for a, c in comb}) for comb in row] for row in self.trans]
        )


def _require_flag(*auts: Automaton):
    for aut in auts:
        if not aut.zero_alpha_beta:
            raise PreconditionViolated("construction needs an automaton with alpha * beta = 0")


def behavior(aut: Automaton, max_len: int = DEFAULT_MAX_LEN) -> Series:
    ring = SeriesSemiring(aut.coeff, aut.alphabet, max_len)
    if aut.dim == 0:
        return ring.zero
    a = aut.transition_matrix(ring)
    alpha = Matrix.of(ring, [[ring.inject(x) for x in aut.alpha]])
    beta = Matrix.of(ring, [[ring.inject(x)] for x in aut.beta])
    return (alpha @ mat_star(a) @ beta)[0, 0]


def coefficient_by_paths(aut: Automaton, word: str):
    """alpha A_{w1} ... A_{wk} beta, with A_sigma the sigma-coefficient matrix."""
    c = aut.coeff
    row = Matrix.of(c, [list(aut.alpha)])
    for sigma in word:
        row = mat_mul(row, aut.letter_matrix(sigma))
    return mat_mul(row, Matrix.of(c, [[b] for b in aut.beta]))[0, 0]


def zero_automaton(coeff: Semiring, alphabet: str) -> Automaton:
    z = coeff.zero
    return Automaton(coeff, alphabet, (z,), (((),),), (z,), True)


def letter_automaton(coeff: Semiring, alphabet: str, sigma: str) -> Automaton:
    if sigma not in alphabet:
        raise UnknownLetter(f"letter {sigma!r} not in alphabet {alphabet!r}")
    z, o = coeff.zero, coeff.one
    return Automaton(
        coeff, alphabet, (o, z), (((), ((sigma, o),)), ((), ())), (z, o), True
    )


def _compatible(a1: Automaton, a2: Automaton):
    if a1.coeff != a2.coeff or a1.alphabet != a2.alphabet:
        raise PreconditionViolated("automata over different (S0, alphabet)")


def aut_sum(a1: Automaton, a2: Automaton) -> Automaton:
    _require_flag(a1, a2)
    _compatible(a1, a2)
    n1, n2 = a1.dim, a2.dim
    trans = tuple(r + ((),) * n2 for r in a1.trans) + tuple(((),) * n1 + r for r in a2.trans)
    return Automaton(a1.coeff, a1.alphabet, a1.alpha + a2.alpha, trans, a1.beta + a2.beta, True)


def aut_prod(a1: Automaton, a2: Automaton) -> Automaton:
    """Block construction ((alpha1, 0), [[A1, beta1 alpha2 A2], [0, A2]],
    (beta1 alpha2 beta2; beta2)), without using alpha2 beta2 = 0."""
    _require_flag(a1, a2)
    _compatible(a1, a2)
    c, sig = a1.coeff, a1.alphabet
    n1, n2 = a1.dim, a2.dim
    # alpha2 A2 as a row of linear combinations
    alpha2_a2 = tuple(
        reduce(
            lambda acc, k: lc_add(c, sig, acc, lc_scale(c, a2.alpha[k], a2.trans[k][j])),
            range(n2), (),
        )
        for j in range(n2)
    )
    top = tuple(
        a1.trans[i] + tuple(lc_scale(c, a1.beta[i], alpha2_a2[j]) for j in range(n2))
        for i in range(n1)
    )
    bottom = tuple(((),) * n1 + a2.trans[i] for i in range(n2))
    ab2 = a2.alpha_beta()
    beta = tuple(c.mul(b, ab2) for b in a1.beta) + a2.beta
    return Automaton(c, sig, a1.alpha + (c.zero,) * n2, top + bottom, beta, True)


def aut_plus(aut: Automaton) -> Automaton:
    """(alpha, A + beta alpha A, beta); behavior is the plus of |aut|."""
    _require_flag(aut)
    c, sig, n = aut.coeff, aut.alphabet, aut.dim
    alpha_a = tuple(
        reduce(
            lambda acc, k: lc_add(c, sig, acc, lc_scale(c, aut.alpha[k], aut.trans[k][j])),
            range(n), (),
        )
        for j in range(n)
    )
    trans = tuple(
        tuple(lc_add(c, sig, aut.trans[i][j], lc_scale(c, aut.beta[i], alpha_a[j])) for j in range(n))
        for i in range(n)
    )
    return Automaton(c, sig, aut.alpha, trans, aut.beta, True)


def scale_left(x, aut: Automaton) -> Automaton:
    _require_flag(aut)
    c = aut.coeff
    return Automaton(c, aut.alphabet, tuple(c.mul(x, a) for a in aut.alpha), aut.trans, aut.beta, True)


def scale_right(aut: Automaton, x) -> Automaton:
    _require_flag(aut)
    c = aut.coeff
    return Automaton(c, aut.alphabet, aut.alpha, aut.trans, tuple(c.mul(b, x) for b in aut.beta), True)


def const_wrap(x, aut: Automaton) -> Automaton:
    """((x, alpha), [[0, 0], [0, A]], (1; beta)), whose behavior is x + |aut|."""
    c, n = aut.coeff, aut.dim
    trans = (((),) * (n + 1),) + tuple(((),) + r for r in aut.trans)
    return Automaton(c, aut.alphabet, (x,) + aut.alpha, trans, (c.one,) + aut.beta, False)


# JSON interchange

def to_json_dict(aut: Automaton) -> dict:
    c = aut.coeff
    transitions = []
    for i, row in enumerate(aut.trans):
        for j, comb in enumerate(row):
            for a, v in comb:
                transitions.append({"from": i, "to": j, "letter": a, "coeff": c.to_json(v)})
    return {
        "semiring": c.name,
        "alphabet": list(aut.alphabet),
        "dim": aut.dim,
        "alpha": [c.to_json(v) for v in aut.alpha],
        "beta": [c.to_json(v) for v in aut.beta],
        "transitions": transitions,
    }


def dumps(aut: Automaton) -> str:
    return json.dumps(to_json_dict(aut), indent=2) + "\n"


def from_json_dict(data) -> Automaton:
    try:
        coeff = get_semiring(data["semiring"])
        letters = data["alphabet"]
        if not isinstance(letters, list) or not all(
            isinstance(a, str) and len(a) == 1 for a in letters
        ) or len(set(letters)) != len(letters):
            raise FormatError("alphabet must be a list of distinct single characters")
        alphabet = "".join(letters)
        n = data["dim"]
        if not isinstance(n, int) or n < 0:
            raise FormatError("dim must be a nonnegative integer")
        alpha = tuple(coeff.from_json(v) for v in data["alpha"])
        beta = tuple(coeff.from_json(v) for v in data["beta"])
        if len(alpha) != n or len(beta) != n:
            raise FormatError("alpha and beta must have length dim")
        cells = [[{} for _ in range(n)] for _ in range(n)]
        for t in data.get("transitions", []):
            i, j, a = t["from"], t["to"], t["letter"]
            if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n):
                raise FormatError(f"transition index out of range: {t}")
            if a not in alphabet or len(a) != 1:
                raise FormatError(f"transition letter {a!r} not in alphabet")
            v = coeff.from_json(t["coeff"])
            cell = cells[i][j]
            cell[a] = coeff.add(cell[a], v) if a in cell else v
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FormatError(f"malformed automaton JSON: {exc}") from exc
    trans = tuple(tuple(lc(coeff, alphabet, cell) for cell in row) for row in cells)
    return Automaton(coeff, alphabet, alpha, trans, beta)


def loads(text: str) -> Automaton:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("automaton JSON must be an object")
    return from_json_dict(data)
