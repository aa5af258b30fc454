"""Sparse multivariate integer polynomials and truncated q-series.

Both types are treated as immutable values.  Coefficients are Python ints, so
arithmetic is exact at any size.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def _graded_lex(exp: Exponent) -> tuple:
    return (sum(exp), exp)


class MultiPoly:
    """Polynomial in a fixed number of variables, stored as ``{exponent: coef}``."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponent, int] | None = None):
        self.arity = arity
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != arity:
                raise ValueError(f"exponent {exp} does not have arity {arity}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, arity: int, value: int = 1) -> "MultiPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def monomial(cls, arity: int, exponents: Sequence[int], coef: int = 1) -> "MultiPoly":
        return cls(arity, {tuple(exponents): coef})

    @classmethod
    def variable(cls, arity: int, index: int, power: int = 1) -> "MultiPoly":
        exp = [0] * arity
        exp[index] = power
        return cls(arity, {tuple(exp): 1})

    def _check(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == MultiPoly.constant(self.arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.arity, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return self.scale(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def scale(self, k: int) -> "MultiPoly":
        return MultiPoly(self.arity, {e: k * c for e, c in self.terms.items()})

    def coefficient(self, exponents: Sequence[int]) -> int:
        return coefficient_of(self, exponents)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def truncate(self, cap: int) -> "MultiPoly":
        return MultiPoly(self.arity, {e: c for e, c in self.terms.items() if sum(e) <= cap})

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def embed(self, arity: int, offset: int = 0) -> "MultiPoly":
        """Place these variables at slots ``offset..offset+self.arity-1`` of a wider ring."""
        if offset < 0 or offset + self.arity > arity:
            raise ValueError("embedding does not fit")
        pad_left, pad_right = (0,) * offset, (0,) * (arity - offset - self.arity)
        return MultiPoly(arity, {pad_left + e + pad_right: c for e, c in self.terms.items()})

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename variable ``i`` to ``perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.arity
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return MultiPoly(self.arity, out)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda t: _graded_lex(t[0]))

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], arity: int | None = None) -> "MultiPoly":
        if arity is None:
            if not data:
                raise ValueError("arity required for an empty polynomial")
            arity = len(data[0]["exp"])
        return cls(arity, {tuple(t["exp"]): int(t["coef"]) for t in data})

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.arity)]
        if not self.terms:
            return "0"
        pieces = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exp) if k
            )
            if not mono:
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = mono
            else:
                body = f"{abs(coef)}*{mono}"
            pieces.append(("-" if coef < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {self.format()!r})"


def poly_mul(a: MultiPoly, b: MultiPoly, total_degree_cap: int | None = None) -> MultiPoly:
    """Exact product, dropping terms of total degree above the cap if one is given."""
    a._check(b)
    out: dict[Exponent, int] = {}
    if total_degree_cap is None:
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
    else:
        b_items = [(eb, cb, sum(eb)) for eb, cb in b.terms.items()]
        for ea, ca in a.terms.items():
            room = total_degree_cap - sum(ea)
            if room < 0:
                continue
            for eb, cb, db in b_items:
                if db <= room:
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = out.get(e, 0) + ca * cb
    return MultiPoly(a.arity, out)


def poly_product(factors: Iterable[MultiPoly], arity: int, total_degree_cap: int | None = None) -> MultiPoly:
    acc = MultiPoly.constant(arity)
    for f in factors:
        acc = poly_mul(acc, f, total_degree_cap)
    return acc


def coefficient_of(p: MultiPoly, exponents: Sequence[int]) -> int:
    exponents = tuple(exponents)
    if len(exponents) != p.arity:
        raise ValueError(f"exponent {exponents} does not have arity {p.arity}")
    return p.terms.get(exponents, 0)


def first_mismatch_poly(a: MultiPoly, b: MultiPoly) -> tuple[Exponent, int, int] | None:
    """Graded-lex smallest monomial whose coefficients differ, or ``None``."""
    a._check(b)
    diff = [e for e in set(a.terms) | set(b.terms) if a.terms.get(e, 0) != b.terms.get(e, 0)]
    if not diff:
        return None
    e = min(diff, key=_graded_lex)
    return e, a.terms.get(e, 0), b.terms.get(e, 0)


class QSeries:
    """Power series in ``q`` known through ``q**order`` inclusive."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = [int(c) for c in coeffs[: order + 1]]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, [1])

    @classmethod
    def monomial(cls, order: int, degree: int, coef: int = 1) -> "QSeries":
        if degree > order:
            return cls(order)
        return cls(order, [0] * degree + [coef])

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> "QSeries":
        return QSeries(min(order, self.order), self.coeffs)

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, [-c for c in self.coeffs])

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries(n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, int):
            return QSeries(self.order, [other * c for c in self.coeffs])
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return QSeries(n, out)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        return cls(data["order"], [int(c) for c in data["coeffs"]])

    def format(self, display_cap: int | None = None) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if display_cap is not None and n > display_cap:
                break
            if c == 0:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            text = "0"
        else:
            text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            text += "".join(f" {s} {b}" for s, b in terms[1:])
        cut = self.order if display_cap is None else min(display_cap, self.order)
        more = " + ..." if cut < self.order else ""
        return f"{text}{more} + O(q^{self.order + 1})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"QSeries({self.order}, {list(self.coeffs)})"


def first_mismatch_series(a: QSeries, b: QSeries) -> tuple[int, int, int] | None:
    n = min(a.order, b.order)
    for i in range(n + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return i, a.coeffs[i], b.coeffs[i]
    return None


def expand_factor_product(factors: Iterable[tuple[int, int]], order: int) -> QSeries:
    """Expand ``prod (1 - q**e)**m`` through ``q**order``.

    Negative multiplicities use the geometric series for ``1/(1 - q**e)``.
    Factors with ``e > order`` are exactly 1 at this precision and are skipped.
    """
    coeffs = [1] + [0] * order
    for e, m in factors:
        if e <= 0:
            raise ValueError(f"factor exponent must be positive, got {e}")
        if e > order or m == 0:
            continue
        for _ in range(abs(m)):
            if m > 0:
                # multiply by (1 - q^e), high degrees first so reads see old values
                for n in range(order, e - 1, -1):
                    coeffs[n] -= coeffs[n - e]
            else:
                # divide by (1 - q^e): running sum with stride e
                for n in range(e, order + 1):
                    coeffs[n] += coeffs[n - e]
    return QSeries(order, coeffs)


def series_to_poly(s: QSeries) -> MultiPoly:
    return MultiPoly(1, {(n,): c for n, c in enumerate(s.coeffs)})
