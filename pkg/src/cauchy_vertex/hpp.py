"""Half plane partitions, their diagonal slices and chain enumerations.

A half plane partition lives on cells ``(i, j)`` with ``i >= j >= 1`` and is
weakly decreasing down columns and along rows.  Its diagonal slices
``pi_k = (pi(1+k, 1), pi(2+k, 2), ...)`` form an interlacing chain ending at
the empty partition, and that chain determines ``pi``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import (
    EMPTY,
    Partition,
    _check_cap,
    enumerate_interlacing_below,
    interlaces,
    partitions_up_to,
)
from .poly import QSeries

Cell = tuple[int, int]


class Chain(tuple):
    """Sequence of partitions, each interlacing the next from above, ending at the empty one."""

    __slots__ = ()

    def __new__(cls, slices: Iterable[Sequence[int]]):
        slices = tuple(Partition(s) for s in slices)
        if not slices or slices[-1]:
            raise ValueError("a chain must end at the empty partition")
        for upper, lower in zip(slices, slices[1:]):
            if not interlaces(upper, lower):
                raise ValueError(f"{upper} does not interlace {lower}")
        return super().__new__(cls, slices)

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self)

    def trimmed(self) -> "Chain":
        """Drop surplus trailing empty slices, keeping exactly one."""
        n = len(self)
        while n > 1 and not self[n - 2]:
            n -= 1
        return Chain(self[:n])

    def __str__(self) -> str:
        return " > ".join(f"({p})" if p else "0" for p in self)


class HalfPlanePartition:
    __slots__ = ("cells",)

    def __init__(self, cells: Mapping[Cell, int] | None = None):
        clean = {}
        for (i, j), v in (cells or {}).items():
            if i < j or j < 1:
                raise ValueError(f"cell {(i, j)} lies outside the region i >= j >= 1")
            if v < 0:
                raise ValueError(f"negative entry at {(i, j)}")
            if v:
                clean[(i, j)] = v
        for (i, j), v in clean.items():
            if i - 1 >= j and clean.get((i - 1, j), 0) < v:
                raise ValueError(f"column not decreasing at {(i, j)}")
            if j > 1 and clean.get((i, j - 1), 0) < v:
                raise ValueError(f"row not decreasing at {(i, j)}")
        self.cells = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "HalfPlanePartition":
        """Build from lower-triangular rows; row ``i`` lists ``pi(i, 1..i)``."""
        cells = {}
        for i, row in enumerate(rows, start=1):
            if len(row) > i:
                raise ValueError(f"row {i} has {len(row)} entries, at most {i} allowed")
            for j, v in enumerate(row, start=1):
                cells[(i, j)] = v
        return cls(cells)

    def __getitem__(self, cell: Cell) -> int:
        return self.cells.get(cell, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HalfPlanePartition):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(frozenset(self.cells.items()))

    @property
    def weight(self) -> int:
        return sum(self.cells.values())

    @property
    def height(self) -> int:
        """Largest ``i`` with ``pi(i, 1) > 0``; 0 for the empty array."""
        return max((i for (i, j) in self.cells if j == 1), default=0)

    def rows(self) -> list[list[int]]:
        out = []
        for i in range(1, self.height + 1):
            row = [self[(i, j)] for j in range(1, i + 1)]
            while row and row[-1] == 0:
                row.pop()
            out.append(row)
        return out

    def slices(self) -> Chain:
        return slices(self)

    def to_json(self) -> dict:
        return {"rows": self.rows()}

    @classmethod
    def from_json(cls, data: dict) -> "HalfPlanePartition":
        return cls.from_rows(data["rows"])

    def render(self) -> str:
        """Tableau text with row 1 on top, one box per cell."""
        rows = self.rows()
        if not rows:
            return "(empty)"
        width = max(len(str(v)) for r in rows for v in r)
        lines = []
        for r in rows:
            lines.append("".join(f"|{v:>{width}}" for v in r) + "|")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"HalfPlanePartition(rows={self.rows()})"


def slices(pi: HalfPlanePartition) -> Chain:
    """Diagonal slices ``pi_0, pi_1, ...`` through the last nonempty one, then the empty slice."""
    out = []
    k = 0
    while True:
        s = []
        j = 1
        while pi[(j + k, j)]:
            s.append(pi[(j + k, j)])
            j += 1
        if not s:
            break
        out.append(Partition(s))
        k += 1
    out.append(EMPTY)
    return Chain(out)


def from_chain(chain: Sequence[Sequence[int]]) -> HalfPlanePartition:
    """Inverse of :func:`slices`: put slice ``k`` on the ``k``-th subdiagonal."""
    chain = Chain(chain)
    cells = {}
    for k, part in enumerate(chain):
        for j, v in enumerate(part, start=1):
            cells[(j + k, j)] = v
    return HalfPlanePartition(cells)


def hpp_stats(pi: HalfPlanePartition) -> tuple[int, int]:
    return pi.weight, pi.height


def enumerate_chains(lam, n: int, weight_cap: int | None = None) -> list[Chain]:
    """All chains ``lam = c_0 > c_1 > ... > c_n`` ending at the empty partition.

    With ``weight_cap`` only chains of total weight at most the cap are kept.
    """
    if weight_cap is not None:
        _check_cap(weight_cap)
    return _chains(Partition(lam), n, weight_cap)


def _chains(lam: Partition, n: int, weight_cap: int | None) -> list[Chain]:
    if n < 0:
        raise ValueError("number of steps must be nonnegative")
    cap = float("inf") if weight_cap is None else weight_cap
    out: list[Chain] = []

    def rec(path: list[Partition], used: int) -> None:
        current = path[-1]
        remaining = n - (len(path) - 1)
        if remaining == 0:
            if not current:
                out.append(Chain(path))
            return
        # each slice has at most one more part than the next, so reaching
        # the empty partition needs at least l(current) steps
        if len(current) > remaining:
            return
        for nu in enumerate_interlacing_below(current):
            if used + nu.weight > cap:
                continue
            rec(path + [nu], used + nu.weight)

    if lam.weight <= cap:
        rec([lam], lam.weight)
    return out


def enumerate_hpps(lam, weight_cap: int) -> list[HalfPlanePartition]:
    """Every half plane partition with top slice ``lam`` and weight at most the cap."""
    lam = Partition(lam)
    # each nonempty slice weighs at least 1, so weight_cap + 1 steps always suffice
    steps = max(weight_cap + 1, 1)
    return [from_chain(c) for c in enumerate_chains(lam, steps, weight_cap)]


def chain_weight_series(lam, n: int, order: int) -> QSeries:
    """``sum q^{|pi|}`` over the chain set of ``lam`` with ``n`` steps, through ``q**order``."""
    counts = [0] * (order + 1)
    for c in _chains(Partition(lam), n, order):
        counts[c.weight] += 1
    return QSeries(order, counts)


@lru_cache(maxsize=None)
def hpp_weight_series(lam: Partition, order: int) -> QSeries:
    """``sum q^{|pi|}`` over all half plane partitions with top slice ``lam``."""
    counts = [0] * (order + 1)
    for pi in enumerate_hpps(lam, order):
        counts[pi.weight] += 1
    return QSeries(order, counts)


def enumerate_plane_partitions(weight_cap: int) -> list[int]:
    """Number of plane partitions of each weight ``0..weight_cap``.

    A plane partition splits along its main diagonal into two half plane
    partitions sharing the diagonal slice ``lam``; the weight of the glued
    array is ``|pi| + |pi'| - |lam|``.
    """
    _check_cap(weight_cap)
    counts = [0] * (weight_cap + 1)
    for lam in partitions_up_to(weight_cap):
        # both halves contain lam, so each has weight <= cap
        halves = hpp_weight_series(lam, weight_cap).coeffs
        for a, ca in enumerate(halves):
            if not ca:
                continue
            for b, cb in enumerate(halves):
                w = a + b - lam.weight
                if w > weight_cap:
                    break
                counts[w] += ca * cb
    return counts
