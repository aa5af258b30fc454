"""Partition-indexed Fock space and the half-vertex operator action.

States are finite sums ``sum_lam a_lam |lam>`` with polynomial amplitudes.
The dual side is never built separately: a bra ``sum_mu b_mu <mu|`` is stored
as a :class:`FockState` too and paired through :func:`inner_product`.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .partitions import (
    CapError,
    Partition,
    conjugate,
    enumerate_interlacing_above,
    graded_lex_key,
    permutation_sign,
    straighten,
)
from .poly import MultiPoly, poly_mul


class FockState:
    __slots__ = ("arity", "weight_cap", "amplitudes")

    def __init__(self, arity: int, weight_cap: int, amplitudes: Mapping[Partition, MultiPoly] | None = None):
        self.arity = arity
        self.weight_cap = weight_cap
        clean = {}
        for lam, amp in (amplitudes or {}).items():
            lam = Partition(lam)
            if amp.arity != arity:
                raise ValueError(f"amplitude arity {amp.arity} != state arity {arity}")
            if lam.weight > weight_cap:
                raise CapError(f"|{lam}| = {lam.weight} exceeds weight_cap {weight_cap}")
            if amp:
                clean[lam] = amp
        self.amplitudes = clean

    @classmethod
    def vacuum(cls, arity: int = 0) -> "FockState":
        return cls(arity, 0, {Partition(): MultiPoly.constant(arity)})

    @classmethod
    def zero(cls, arity: int = 0, weight_cap: int = 0) -> "FockState":
        return cls(arity, weight_cap)

    def __getitem__(self, lam) -> MultiPoly:
        return self.amplitudes.get(Partition(lam), MultiPoly.zero(self.arity))

    def __iter__(self):
        return iter(sorted(self.amplitudes, key=graded_lex_key))

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __bool__(self) -> bool:
        return bool(self.amplitudes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockState):
            return NotImplemented
        return self.arity == other.arity and self.amplitudes == other.amplitudes

    def __add__(self, other: "FockState") -> "FockState":
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        out = dict(self.amplitudes)
        for lam, amp in other.amplitudes.items():
            out[lam] = out[lam] + amp if lam in out else amp
        return FockState(self.arity, max(self.weight_cap, other.weight_cap), out)

    def __neg__(self) -> "FockState":
        return FockState(self.arity, self.weight_cap, {k: -v for k, v in self.amplitudes.items()})

    def to_json(self) -> list[dict]:
        return [{"partition": str(lam), "amplitude": self.amplitudes[lam].to_json()} for lam in self]

    @classmethod
    def from_json(cls, data: list[dict], arity: int, weight_cap: int) -> "FockState":
        return cls(
            arity,
            weight_cap,
            {Partition.parse(d["partition"]): MultiPoly.from_json(d["amplitude"], arity) for d in data},
        )

    def __repr__(self) -> str:
        body = " + ".join(f"({self.amplitudes[lam]})|{lam}>" for lam in self)
        return f"FockState({body or '0'})"


def basis_from_composition(comp: Sequence[int], arity: int = 0) -> FockState:
    """The state ``phi_{-c_1} ... phi_{-c_l} |0>``, straightened into the basis."""
    if any(c < 0 for c in comp):
        raise ValueError(f"creation indices must be nonnegative: {tuple(comp)}")
    result = straighten(comp)
    weight = sum(comp)
    if result is None:
        return FockState.zero(arity, weight)
    sign, lam = result
    return FockState(arity, weight, {lam: MultiPoly.constant(arity, sign)})


def inner_product(lam, mu) -> int:
    """``<lam|mu> = (-1)^{|lam|}`` if ``mu`` is the conjugate of ``lam``, else 0."""
    lam, mu = Partition(lam), Partition(mu)
    if conjugate(lam) != mu:
        return 0
    return -1 if lam.weight % 2 else 1


def inner_product_shuffle_oracle(lam, mu) -> int:
    """The pairing computed from the residue shuffle instead of the closed form.

    With ``l = l(lam)`` and ``k = l(mu)`` the permutation sigma of
    ``{1..l+k}`` is read off as

        sigma(k+i) = k+i - lam_i   (i = 1..l)
        sigma(j)   = mu_{k+1-j} + j (j = 1..k)

    and the pairing is its sign, or 0 if sigma is not a bijection.
    """
    lam, mu = Partition(lam), Partition(mu)
    l, k = len(lam), len(mu)
    sigma = [mu[k - j] + j for j in range(1, k + 1)]
    sigma += [k + i - lam[i - 1] for i in range(1, l + 1)]
    if sorted(sigma) != list(range(1, l + k + 1)):
        return 0
    return permutation_sign(sigma)


def pair(bra: FockState, ket: FockState) -> MultiPoly:
    """Contract ``sum b_mu <mu|`` against ``sum a_lam |lam>``."""
    if bra.arity != ket.arity:
        raise ValueError("arity mismatch")
    acc = MultiPoly.zero(ket.arity)
    for mu, b in bra.amplitudes.items():
        lam = conjugate(mu)
        a = ket.amplitudes.get(lam)
        if a is None:
            continue
        acc = acc + poly_mul(b, a).scale(inner_product(mu, lam))
    return acc


def apply_half_vertex(state: FockState, var_index: int, degree_cap: int) -> FockState:
    """``|lam> -> sum_{mu above lam, |mu| <= cap} x^{|mu|-|lam|} |mu>``, extended linearly."""
    if degree_cap < state.weight_cap:
        raise CapError(f"degree_cap {degree_cap} below state weight_cap {state.weight_cap}")
    if not 0 <= var_index < state.arity:
        raise ValueError(f"variable index {var_index} outside arity {state.arity}")
    out: dict[Partition, MultiPoly] = {}
    for lam, amp in state.amplitudes.items():
        for mu in enumerate_interlacing_above(lam, degree_cap):
            step = MultiPoly.variable(state.arity, var_index, mu.weight - lam.weight)
            term = poly_mul(amp, step)
            out[mu] = out[mu] + term if mu in out else term
    return FockState(state.arity, degree_cap, out)


def vacuum_product_state(num_vars: int, degree_cap: int, *, arity: int | None = None, offset: int = 0) -> FockState:
    """``phi+(x_1) ... phi+(x_N) |0>`` truncated to partitions of weight <= cap.

    Variables live at slots ``offset .. offset+N-1`` of an ``arity``-variable
    ring.  The operator for ``x_N`` acts first.
    """
    if arity is None:
        arity = offset + num_vars
    state = FockState.vacuum(arity)
    for i in reversed(range(num_vars)):
        state = apply_half_vertex(state, offset + i, degree_cap)
    if num_vars == 0:
        state = FockState(arity, degree_cap, state.amplitudes)
    return state
