"""Identity checks: each computes both sides of an identity by separate routes.

Every verifier returns a :class:`Report`.  Comparisons are exact; a failing
report carries the graded-lex smallest mismatch as a witness.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .fock import (
    basis_from_composition,
    inner_product,
    inner_product_shuffle_oracle,
    pair,
    vacuum_product_state,
)
from .hpp import chain_weight_series, enumerate_plane_partitions, hpp_weight_series
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions_in_box,
    partitions_up_to,
)
from .poly import (
    MultiPoly,
    QSeries,
    expand_factor_product,
    first_mismatch_poly,
    first_mismatch_series,
    poly_mul,
    poly_product,
)
from .schur import SchurContext, schur_by_branching


@dataclass
class Report:
    identity_name: str
    parameters: dict
    holds: bool
    lhs: Any
    rhs: Any
    first_mismatch: dict | None = None
    elapsed: float = 0.0
    text_lhs: str = field(default="", repr=False)
    text_rhs: str = field(default="", repr=False)

    def to_json(self) -> dict:
        return {
            "identity_name": self.identity_name,
            "parameters": self.parameters,
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def verdict(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "HOLDS" if self.holds else "FAILS"
        line = f"{self.identity_name} [{params}]: {status} ({self.elapsed * 1000:.1f} ms)"
        if self.first_mismatch is not None:
            line += f"; first mismatch {self.first_mismatch}"
        return line


def compare_polys(name: str, params: dict, lhs: MultiPoly, rhs: MultiPoly, started: float, names=None) -> Report:
    mismatch = first_mismatch_poly(lhs, rhs)
    witness = None
    if mismatch is not None:
        exp, a, b = mismatch
        witness = {"monomial": list(exp), "lhs_coef": str(a), "rhs_coef": str(b)}
    return Report(
        name, params, mismatch is None, lhs.to_json(), rhs.to_json(), witness,
        time.perf_counter() - started, lhs.format(names), rhs.format(names),
    )


def compare_series(name: str, params: dict, lhs: QSeries, rhs: QSeries, started: float) -> Report:
    mismatch = first_mismatch_series(lhs, rhs)
    if lhs.order != rhs.order and mismatch is None:
        n = min(lhs.order, rhs.order) + 1
        mismatch = (n, lhs.coeffs[n] if n <= lhs.order else None, rhs.coeffs[n] if n <= rhs.order else None)
    witness = None
    if mismatch is not None:
        deg, a, b = mismatch
        witness = {"degree": deg, "lhs_coef": str(a), "rhs_coef": str(b)}
    return Report(
        name, params, mismatch is None, lhs.to_json(), rhs.to_json(), witness,
        time.perf_counter() - started, str(lhs), str(rhs),
    )


def compare_tables(name: str, params: dict, lhs: dict, rhs: dict, started: float) -> Report:
    """Compare two case-indexed tables of values, entries rendered with ``str``."""
    keys = sorted(set(lhs) | set(rhs), key=repr)
    witness = None
    for key in keys:
        if lhs.get(key) != rhs.get(key):
            witness = {"case": str(key), "lhs": str(lhs.get(key)), "rhs": str(rhs.get(key))}
            break
    dump = lambda t: {str(k): str(t[k]) for k in keys if k in t}
    return Report(
        name, params, witness is None, dump(lhs), dump(rhs), witness,
        time.perf_counter() - started, f"{len(lhs)} cases", f"{len(rhs)} cases",
    )


def _map(fn: Callable, items: Sequence, threads: int = 1) -> list:
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def variable_names(K: int, N: int) -> list[str]:
    return [f"x{i + 1}" for i in range(K)] + [f"y{j + 1}" for j in range(N)]


def _one_minus_xy(arity: int, i: int, j: int) -> MultiPoly:
    exp = [0] * arity
    exp[i] = exp[j] = 1
    return MultiPoly(arity, {(0,) * arity: 1, tuple(exp): -1})


# -- polynomial identities ---------------------------------------------------

def dual_cauchy_product(K: int, N: int) -> MultiPoly:
    """``prod_{i<=K, j<=N} (1 - x_i y_j)`` with x at slots ``0..K-1`` and y after."""
    arity = K + N
    return poly_product((_one_minus_xy(arity, i, K + j) for i in range(K) for j in range(N)), arity)


def _dual_cauchy_term(args) -> MultiPoly:
    K, N, mu = args
    arity = K + N
    sx = SchurContext(K).schur(mu).embed(arity, 0)
    sy = SchurContext(N).schur(conjugate(mu)).embed(arity, K)
    return poly_mul(sx, sy).scale(-1 if mu.weight % 2 else 1)


def dual_cauchy_schur_sum(K: int, N: int, threads: int = 1) -> MultiPoly:
    box = enumerate_partitions_in_box(K, N)
    acc = MultiPoly.zero(K + N)
    for term in _map(_dual_cauchy_term, [(K, N, mu) for mu in box], threads):
        acc = acc + term
    return acc


def verify_dual_cauchy(K: int, N: int, threads: int = 1) -> Report:
    started = time.perf_counter()
    lhs = dual_cauchy_product(K, N)
    rhs = dual_cauchy_schur_sum(K, N, threads)
    params = {"K": K, "N": N, "box": f"[{K},{N}]", "partitions": len(enumerate_partitions_in_box(K, N))}
    return compare_polys("dual-cauchy", params, lhs, rhs, started, variable_names(K, N))


def cauchy_product_truncated(K: int, N: int, d: int, signed: bool = False) -> MultiPoly:
    """``prod 1/(1 - x_i y_j)`` (or ``prod (1 - x_i y_j)`` when signed) through x-degree ``d``."""
    arity = K + N
    cap = 2 * d
    if signed:
        return dual_cauchy_product(K, N).truncate(cap)
    factors = []
    for i in range(K):
        for j in range(N):
            terms = {}
            for m in range(d + 1):
                exp = [0] * arity
                exp[i] = exp[K + j] = m
                terms[tuple(exp)] = 1
            factors.append(MultiPoly(arity, terms))
    return poly_product(factors, arity, cap)


def cauchy_schur_sum_truncated(K: int, N: int, d: int, signed: bool = False) -> MultiPoly:
    arity = K + N
    cx, cy = SchurContext(K), SchurContext(N)
    acc = MultiPoly.zero(arity)
    if signed:
        for mu in partitions_up_to(d):
            term = poly_mul(cx.schur(mu).embed(arity, 0), cy.schur(conjugate(mu)).embed(arity, K))
            acc = acc + term.scale(-1 if mu.weight % 2 else 1)
    else:
        for lam in partitions_up_to(d, max_length=min(K, N)):
            acc = acc + poly_mul(cx.schur(lam).embed(arity, 0), cy.schur(lam).embed(arity, K))
    return acc


def verify_cauchy_truncated(K: int, N: int, d: int, signed: bool = False) -> Report:
    started = time.perf_counter()
    lhs = cauchy_product_truncated(K, N, d, signed)
    rhs = cauchy_schur_sum_truncated(K, N, d, signed)
    params = {"K": K, "N": N, "x_degree": d, "total_degree_cap": 2 * d, "mode": "signed" if signed else "classical"}
    name = "cauchy-signed" if signed else "cauchy"
    return compare_polys(name, params, lhs, rhs, started, variable_names(K, N))


def normal_ordered_correlation(K: int, N: int) -> MultiPoly:
    """Move every annihilating half-vertex operator to the right of every creating one.

    The word ``phi-(x_1)...phi-(x_K) phi+(y_1)...phi+(y_N)`` is bubble-sorted;
    each swap of ``phi-(x_i) phi+(y_j)`` costs a factor ``1 - x_i y_j``.  Once
    sorted, the vacuum absorbs the operators and only the factors remain.
    """
    arity = K + N
    word = [("-", i) for i in range(K)] + [("+", K + j) for j in range(N)]
    scalar = MultiPoly.constant(arity)
    swapped = True
    while swapped:
        swapped = False
        for p in range(len(word) - 1):
            (a, i), (b, j) = word[p], word[p + 1]
            if a == "-" and b == "+":
                scalar = poly_mul(scalar, _one_minus_xy(arity, i, j))
                word[p], word[p + 1] = word[p + 1], word[p]
                swapped = True
    return scalar


def correlation_by_fock(K: int, N: int) -> MultiPoly:
    """Contract the x-side product state against the y-side one."""
    arity, cap = K + N, K * N
    bra = vacuum_product_state(K, cap, arity=arity, offset=0)
    ket = vacuum_product_state(N, cap, arity=arity, offset=K)
    for mu in bra.amplitudes:
        if len(mu) > K or mu.part(0) > N:
            if conjugate(mu) in ket.amplitudes:
                raise AssertionError(f"{mu} lies outside the box but pairs nontrivially")
    return pair(bra, ket)


def verify_correlation(K: int, N: int) -> Report:
    started = time.perf_counter()
    lhs = correlation_by_fock(K, N)
    rhs = normal_ordered_correlation(K, N)
    params = {"K": K, "N": N, "degree_cap": K * N}
    return compare_polys("correlation", params, lhs, rhs, started, variable_names(K, N))


# -- q-series identities -----------------------------------------------------

def q_box_product(K: int, N: int, order: int | None = None) -> QSeries:
    """``prod_{i<=K, j<=N} (1 - q^{i+j})``; by default through its full degree."""
    if order is None:
        order = q_box_degree(K, N)
    return expand_factor_product([(i + j, 1) for i in range(1, K + 1) for j in range(1, N + 1)], order)


def q_box_degree(K: int, N: int) -> int:
    return sum(i + j for i in range(1, K + 1) for j in range(1, N + 1))


def _q_box_term(args) -> QSeries:
    K, N, lam, order = args
    g = chain_weight_series(lam, N, order) * chain_weight_series(conjugate(lam), K, order)
    return -g if lam.weight % 2 else g


def q_box_chain_sum(K: int, N: int, order: int, threads: int = 1) -> QSeries:
    """``sum_{lam in [N,K]} (-1)^{|lam|} G_N(lam) G_K(lam')`` over N- and K-step chains."""
    acc = QSeries(order)
    box = enumerate_partitions_in_box(N, K)
    for term in _map(_q_box_term, [(K, N, lam, order) for lam in box], threads):
        acc = acc + term
    return acc


def verify_q_box(K: int, N: int, threads: int = 1) -> Report:
    started = time.perf_counter()
    full = q_box_degree(K, N)
    # every chain term has degree <= (K+N)|lam| <= (K+N)KN, so this order sees
    # all of the chain sum and checks that its high terms cancel
    order = max(full, (K + N) * K * N)
    lhs = q_box_product(K, N, order)
    if lhs != q_box_product(N, K, order):
        raise AssertionError("box product is not symmetric under K <-> N")
    rhs = q_box_chain_sum(K, N, order, threads)
    params = {"K": K, "N": N, "box": f"[{N},{K}]", "full_degree": full, "order": order, "lhs_symmetric": True}
    return compare_series("q-box", params, lhs, rhs, started)


def limit_product(d: int) -> QSeries:
    return expand_factor_product([(i, i - 1) for i in range(1, d + 1)], d)


def _limit_term(args) -> QSeries:
    lam, d = args
    g = hpp_weight_series(lam, d) * hpp_weight_series(conjugate(lam), d)
    return -g if lam.weight % 2 else g


def limit_hpp_sum(d: int, threads: int = 1) -> QSeries:
    """``sum_lam (-1)^{|lam|} G(lam) G(lam')`` over all half plane partitions, through ``q^d``."""
    acc = QSeries(d)
    # any half plane partition on lam weighs at least |lam|
    lams = partitions_up_to(d // 2)
    for term in _map(_limit_term, [(lam, d) for lam in lams], threads):
        acc = acc + term
    return acc


def verify_limit_series(d: int, threads: int = 1) -> Report:
    started = time.perf_counter()
    lhs = limit_hpp_sum(d, threads)
    rhs = limit_product(d)
    params = {"order": d, "lambda_cutoff": f"2|lam| <= {d}"}
    return compare_series("limit", params, lhs, rhs, started)


def macmahon_product(d: int) -> QSeries:
    return expand_factor_product([(i, -i) for i in range(1, d + 1)], d)


def verify_macmahon(d: int) -> Report:
    started = time.perf_counter()
    lhs = QSeries(d, enumerate_plane_partitions(d))
    rhs = macmahon_product(d)
    return compare_series("macmahon", {"order": d}, lhs, rhs, started)


# -- Fock-space invariants ---------------------------------------------------

def check_inner_product_oracle(max_weight: int) -> Report:
    started = time.perf_counter()
    parts = partitions_up_to(max_weight)
    closed, oracle = {}, {}
    for lam in parts:
        for mu in parts:
            closed[(str(lam), str(mu))] = inner_product(lam, mu)
            oracle[(str(lam), str(mu))] = inner_product_shuffle_oracle(lam, mu)
    params = {"max_weight": max_weight, "pairs": len(parts) ** 2}
    return compare_tables("inner-product-oracle", params, closed, oracle, started)


def anticommutation_cases(max_index: int, max_tail: int) -> Iterable[tuple[int, int, Partition]]:
    """``(a, b, c)`` with ``0 <= a <= max_index``, ``1 <= b <= max_index``, ``|c| <= max_tail``."""
    for c in partitions_up_to(max_tail):
        for a in range(max_index + 1):
            for b in range(1, max_index + 1):
                yield a, b, c


def check_anticommutation(max_index: int, max_tail: int) -> Report:
    """``phi_{-a} phi_{-b} = -phi_{-b+1} phi_{-a-1}`` on top of ``|c>``."""
    started = time.perf_counter()
    left, right = {}, {}
    for a, b, c in anticommutation_cases(max_index, max_tail):
        key = (a, b, str(c))
        left[key] = basis_from_composition((a, b) + tuple(c))
        right[key] = -basis_from_composition((b - 1, a + 1) + tuple(c))
    params = {"max_index": max_index, "max_tail_weight": max_tail, "cases": len(left)}
    return compare_tables("anticommutation", params, left, right, started)


def check_product_state_coefficients(max_vars: int, cap: int, oracle: str = "jacobi-trudi") -> Report:
    """Amplitudes of ``phi+(x_1)...phi+(x_N)|0>`` against Schur polynomials."""
    started = time.perf_counter()
    amps, expected = {}, {}
    for n in range(max_vars + 1):
        state = vacuum_product_state(n, cap)
        ctx = SchurContext(n)
        for mu in partitions_up_to(cap):
            key = (n, str(mu))
            amps[key] = state[mu]
            if oracle == "branching":
                expected[key] = schur_by_branching(mu, n)
            else:
                expected[key] = ctx.schur(mu)
    params = {"max_vars": max_vars, "cap": cap, "oracle": oracle}
    return compare_tables(f"product-state-{oracle}", params, amps, expected, started)


def verify_fock(max_weight: int) -> list[Report]:
    return [
        check_inner_product_oracle(max_weight),
        check_anticommutation(max_weight, max_weight),
        check_product_state_coefficients(3, max_weight, "jacobi-trudi"),
        check_product_state_coefficients(3, max_weight, "branching"),
    ]


__all__ = [
    "Report",
    "verify_cauchy_truncated",
    "verify_correlation",
    "verify_dual_cauchy",
    "verify_fock",
    "verify_limit_series",
    "verify_macmahon",
    "verify_q_box",
]
