"""Schur polynomials in finitely many variables.

Two independent routes are provided: the Jacobi-Trudi determinant in the
complete homogeneous polynomials, and the branching recursion that peels off
the last variable one interlacing step at a time.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from itertools import combinations_with_replacement

from .partitions import Partition, enumerate_interlacing_below
from .poly import MultiPoly, poly_mul


class SchurContext:
    """Schur polynomials in ``num_vars`` variables with a cache of ``h_k``."""

    def __init__(self, num_vars: int):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        self.num_vars = num_vars
        self._h: dict[int, MultiPoly] = {}
        self._schur: dict[Partition, MultiPoly] = {}
        self._lock = threading.Lock()

    def complete_homogeneous(self, k: int) -> MultiPoly:
        """Sum of all degree-``k`` monomials; zero for negative ``k``."""
        n = self.num_vars
        if k < 0:
            return MultiPoly.zero(n)
        cached = self._h.get(k)
        if cached is not None:
            return cached
        terms = {}
        for combo in combinations_with_replacement(range(n), k):
            exp = [0] * n
            for i in combo:
                exp[i] += 1
            terms[tuple(exp)] = 1
        value = MultiPoly(n, terms)
        with self._lock:
            self._h.setdefault(k, value)
        return value

    def schur(self, lam) -> MultiPoly:
        """Jacobi-Trudi: ``det(h_{lam_i - i + j})`` over ``l(lam) x l(lam)``."""
        lam = Partition(lam)
        cached = self._schur.get(lam)
        if cached is not None:
            return cached
        if len(lam) > self.num_vars:
            value = MultiPoly.zero(self.num_vars)
        else:
            value = self.jacobi_trudi(list(range(len(lam))), lam)
        with self._lock:
            self._schur.setdefault(lam, value)
        return value

    def jacobi_trudi(self, row_order: list[int], lam) -> MultiPoly:
        """Determinant of the Jacobi-Trudi matrix with its rows taken in ``row_order``.

        Row ``r`` of the matrix is ``h_{lam_r - r + j}``; permuting the rows
        multiplies the determinant by the sign of the permutation.
        """
        lam = Partition(lam)
        n = len(row_order)
        entry = lambda r, c: self.complete_homogeneous(lam[r] - r + c)

        @lru_cache(maxsize=None)
        def minor(depth: int, cols: frozenset) -> MultiPoly:
            # Laplace expansion along row ``depth`` over the remaining columns.
            if depth == n:
                return MultiPoly.constant(self.num_vars)
            acc = MultiPoly.zero(self.num_vars)
            sorted_cols = sorted(cols)
            for pos, c in enumerate(sorted_cols):
                h = entry(row_order[depth], c)
                if not h:
                    continue
                term = poly_mul(h, minor(depth + 1, cols - {c}))
                acc = acc - term if pos % 2 else acc + term
            return acc

        return minor(0, frozenset(range(n)))

    def schur_by_branching(self, lam) -> MultiPoly:
        return schur_by_branching(Partition(lam), self.num_vars)


@lru_cache(maxsize=None)
def schur_by_branching(lam: Partition, num_vars: int) -> MultiPoly:
    """``s_lam(x_1..x_N) = sum_{nu below lam} s_nu(x_1..x_{N-1}) x_N^{|lam|-|nu|}``."""
    lam = Partition(lam)
    if num_vars == 0:
        return MultiPoly.constant(0, 1 if not lam else 0)
    if len(lam) > num_vars:
        return MultiPoly.zero(num_vars)
    acc = MultiPoly.zero(num_vars)
    for nu in enumerate_interlacing_below(lam):
        inner = schur_by_branching(nu, num_vars - 1)
        if not inner:
            continue
        step = MultiPoly.variable(num_vars, num_vars - 1, lam.weight - nu.weight)
        acc = acc + poly_mul(inner.embed(num_vars), step)
    return acc


def complete_homogeneous(ctx: SchurContext, k: int) -> MultiPoly:
    return ctx.complete_homogeneous(k)


def schur(ctx: SchurContext, lam) -> MultiPoly:
    return ctx.schur(lam)
