"""Hilbert functions and Hilbert-Poincare series of monomial quotients."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .groebner import MonomialIdeal, minimalize_monomials
from .polyring import graded_basis, mono_coprime

# integer polynomials in t are coefficient lists, index = power of t


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _div_one_minus_t(a):
    """Exact division by (1 - t); caller guarantees a(1) == 0."""
    # a = (1 - t) q  =>  q_k = a_0 + ... + a_k
    q, acc = [], 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return _trim(q)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^dim with numerator(1) != 0 (unless the ring is zero)."""

    numerator: tuple
    dim: int

    def value_at_one(self) -> int:
        return sum(self.numerator)

    def degree(self) -> int:
        return len(self.numerator) - 1

    def coefficient(self, d: int) -> int:
        """Coefficient of t^d in the power series expansion."""
        if d < 0:
            return 0
        if self.dim == 0:
            return self.numerator[d] if d < len(self.numerator) else 0
        # 1/(1-t)^k = sum C(j+k-1, k-1) t^j
        k = self.dim
        return sum(c * comb(d - i + k - 1, k - 1) for i, c in enumerate(self.numerator) if i <= d)

    def __str__(self):
        num = " + ".join(f"{c}*t^{i}" for i, c in enumerate(self.numerator) if c) or "0"
        return f"({num}) / (1-t)^{self.dim}"


def hilbert_function(M: MonomialIdeal, d: int) -> int:
    """dim_K (S/M)_d by counting standard monomials."""
    if d < 0:
        return 0
    gens = M.mingens
    count = 0
    for m in graded_basis(d, M.nvars):
        if not any(all(a <= b for a, b in zip(g, m)) for g in gens):
            count += 1
    return count


def _numerator(gens: tuple, nvars: int) -> list:
    """K(t) with HS(S/M) = K(t) / (1-t)^nvars."""
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return []
    nontrivial = [g for g in gens if sum(g) > 1]
    # base cases: all generators pairwise coprime
    if len(nontrivial) <= 1 or all(mono_coprime(a, b) for i, a in enumerate(gens)
                                   for b in gens[i + 1:]):
        out = [1]
        for g in gens:
            out = _pmul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    # pivot: the variable occurring in most non-linear generators, lowest index on ties
    counts = [sum(1 for g in nontrivial if g[i]) for i in range(nvars)]
    v = max(range(nvars), key=lambda i: (counts[i], -i))
    x = tuple(int(i == v) for i in range(nvars))
    plus = minimalize_monomials([g for g in gens if not g[v]] + [x])
    colon = minimalize_monomials([tuple(max(a - b, 0) for a, b in zip(g, x)) for g in gens])
    return _padd(_numerator(plus, nvars), _pmul([0, 1], _numerator(colon, nvars)))


def hilbert_series(M: MonomialIdeal) -> HilbertSeries:
    num = _numerator(M.mingens, M.nvars)
    dim = M.nvars
    if not num:
        return HilbertSeries((), 0)
    while dim > 0 and sum(num) == 0:
        num = _div_one_minus_t(num)
        dim -= 1
    return HilbertSeries(tuple(num), dim)


def krull_dimension(M: MonomialIdeal) -> int:
    return hilbert_series(M).dim


def quotient_dimension(I, seed=None, **gin_options) -> int:
    """Krull dimension of S/I, read off the series of rgin(I); -1 marks S/I = 0."""
    from .gin import rgin

    cert = rgin(I, seed, **gin_options)
    if cert.result.is_unit():
        return -1
    return hilbert_series(cert.result).dim


def stable_numerator(I, seed=None, **gin_options):
    """(F, deg F, F(1)) for a one-dimensional quotient: HS(S/I^sat) = F/(1-t)."""
    from .gin import gin_saturate, regularity, rgin

    cert = rgin(I, seed, **gin_options)
    if cert.result.is_unit():
        raise ValueError("unit ideal: the quotient is zero")
    sat = gin_saturate(cert.result)
    hs = hilbert_series(sat)
    if hs.dim != 1:
        raise ValueError(f"quotient has dimension {hs.dim}, expected 1")
    deg_f = hs.degree()
    if deg_f != regularity(sat) - 1 and not sat.is_zero():
        raise AssertionError(f"deg F = {deg_f} but reg(I^sat) - 1 = {regularity(sat) - 1}")
    return hs.numerator, deg_f, hs.value_at_one()
