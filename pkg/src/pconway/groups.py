"""Finite groups given by Cayley tables (0-based internally, element 0 = identity)."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Optional

from .errors import FormatError


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: tuple

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise FormatError(f"{self.name}: Cayley table must be a nonempty square")
        if any(not (isinstance(v, int) and 0 <= v < n) for row in self.table for v in row):
            raise FormatError(f"{self.name}: Cayley entries must be element indices")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> Optional[int]:
        for j in range(self.order):
            if self.table[j][i] == 0:
                return j
        return None

    @property
    def inv(self) -> tuple:
        return tuple(self.inverse(i) for i in range(self.order))

    def to_json_dict(self) -> dict:
        return {"order": self.order, "table": [[v + 1 for v in row] for row in self.table]}


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(f"Z{n}", tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def symmetric3() -> FiniteGroup:
    perms = list(itertools.permutations(range(3)))  # identity first
    index = {p: k for k, p in enumerate(perms)}
    # (p q)(k) = q(p(k))
    table = tuple(
        tuple(index[tuple(q[p[k]] for k in range(3))] for q in perms) for p in perms
    )
    return FiniteGroup("S3", table)


def standard_groups() -> list[FiniteGroup]:
    return [cyclic(n) for n in range(1, 6)] + [symmetric3()]


def group_from_json(data, name: str = "G") -> FiniteGroup:
    """Load ``{"order": n, "table": [[...]]}`` with 1-based indices."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
    try:
        n = data["order"]
        rows = data["table"]
        table = tuple(tuple(v - 1 for v in row) for row in rows)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed Cayley table: {exc}") from exc
    if len(table) != n:
        raise FormatError(f"order {n} does not match table size {len(table)}")
    return FiniteGroup(name, table)
