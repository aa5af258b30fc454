"""Integer partitions, compositions and the straightening rule.

A :class:`Partition` is an immutable, hashable tuple of weakly decreasing
positive parts.  Zero parts are stripped on construction so that equality is
structural on the canonical form.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

# Upper bound on weights handled by the enumerations.
MAX_WEIGHT = 64


class CapError(ValueError):
    """A weight or degree cap was violated or exceeded the configured bound."""


def _check_cap(cap: int) -> None:
    if cap < 0:
        raise CapError(f"negative cap {cap}")
    if cap > MAX_WEIGHT:
        raise CapError(f"cap {cap} exceeds MAX_WEIGHT={MAX_WEIGHT}")


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts are not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,3,1"``; ``"-"`` or the empty string is the empty partition."""
        text = text.strip()
        if text in ("", "-", "∅"):
            return cls()
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {text!r}")
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def sort_key(self) -> tuple:
        return graded_lex_key(self)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


EMPTY = Partition()


def graded_lex_key(lam: Sequence[int]) -> tuple:
    """Sort key: weight first, then lexicographic on the parts."""
    return (sum(lam), tuple(lam))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: ``lam'_i = #{j : lam_j >= i}``."""
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def interlaces(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu`` interlaces ``lam`` from above, ``mu_i >= lam_i >= mu_{i+1}``."""
    mu, lam = Partition(mu), Partition(lam)
    if len(mu) > len(lam) + 1:
        return False
    for i in range(len(lam)):
        if not mu.part(i) >= lam[i] >= mu.part(i + 1):
            return False
    return True


def z_lambda(lam: Sequence[int]) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a sequence of distinct comparable items, by inversion count."""
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def straighten(comp: Sequence[int]) -> tuple[int, Partition] | None:
    """Rewrite a composition as a signed partition, or ``None`` for zero.

    Shift by the staircase ``(l-1, ..., 1, 0)``; repeated or negative shifted
    entries make the Jacobi-Trudi determinant vanish.  Otherwise sort the
    shifted entries decreasingly, unshift, and carry the sign of the sort.
    """
    n = len(comp)
    shifted = [c + n - 1 - i for i, c in enumerate(comp)]
    if any(s < 0 for s in shifted) or len(set(shifted)) != n:
        return None
    sign = permutation_sign([-s for s in shifted])
    ordered = sorted(shifted, reverse=True)
    return sign, Partition(s - (n - 1 - i) for i, s in enumerate(ordered))


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographic order of parts."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining: int, bound: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(1, min(bound, remaining) + 1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(max_weight: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """All partitions of weight at most ``max_weight``, graded-lex order."""
    _check_cap(max_weight)
    return [
        lam
        for n in range(max_weight + 1)
        for lam in partitions_of(n, max_part=max_part, max_length=max_length)
    ]


def enumerate_partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")
    _check_cap(rows * cols)
    return partitions_up_to(rows * cols, max_part=cols, max_length=rows)


def enumerate_interlacing_above(lam: Partition, weight_cap: int) -> list[Partition]:
    """All ``mu`` interlacing ``lam`` from above with ``|mu| <= weight_cap``."""
    lam = Partition(lam)
    if weight_cap < lam.weight:
        raise CapError(f"weight_cap {weight_cap} below |lam| = {lam.weight}")
    _check_cap(weight_cap)
    slack = weight_cap - lam.weight
    # mu_1 in [lam_1, lam_1 + slack]; mu_{i+1} in [lam_{i+1}, lam_i] for i >= 1.
    ranges = [range(lam.part(0), lam.part(0) + slack + 1)]
    ranges += [range(lam.part(i), lam[i - 1] + 1) for i in range(1, len(lam) + 1)]
    out = []
    for parts in product(*ranges):
        if sum(parts) <= weight_cap:
            out.append(Partition(parts))
    out.sort(key=graded_lex_key)
    return out


def enumerate_interlacing_below(lam: Partition) -> list[Partition]:
    """All ``nu`` with ``lam`` interlacing ``nu`` from above (finite set)."""
    lam = Partition(lam)
    ranges = [range(lam.part(i + 1), lam[i] + 1) for i in range(len(lam))]
    out = [Partition(parts) for parts in product(*ranges)]
    out.sort(key=graded_lex_key)
    return out
