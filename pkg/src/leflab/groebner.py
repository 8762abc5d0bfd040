"""Homogeneous Buchberger engine, ideals, monomial ideals, colon and saturation.

The engine works on graded free modules S(-s_0) + ... + S(-s_{r-1}); an ideal
is the rank-one case.  Elements are dicts ``{(pos, monomial): int}`` kept
primitive, so all arithmetic stays in (big) integers.  Because every input is
homogeneous, S-pairs are processed degree by degree, and reducing a degree-D
element is a single descending sweep over the finitely many degree-D terms.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Sequence

import gmpy2

from .polyring import (
    QQ,
    LinearChange,
    Polynomial,
    apply_change,
    degrevlex_key,
    format_monomial,
    graded_basis,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    unit_vector,
)

mpz = gmpy2.mpz


# --- term orders ----------------------------------------------------------------


def top_key(shifts):
    """Term-over-position order induced by degrevlex; lower positions win ties."""

    def key(term):
        pos, m = term
        return (sum(m) + shifts[pos], degrevlex_key(m), -pos)

    return key


def elimination_key(shifts, block: int):
    """Positions < block dominate every position >= block; TOP inside blocks."""

    def key(term):
        pos, m = term
        return (pos < block, sum(m) + shifts[pos], degrevlex_key(m), -pos)

    return key


# --- integer polynomial helpers --------------------------------------------------


def _primitive(p: dict) -> dict:
    g = mpz(0)
    for c in p.values():
        g = gmpy2.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        p = {t: c // g for t, c in p.items()}
    return p


def to_integer_terms(poly: Polynomial, pos: int = 0) -> dict:
    den = mpz(1)
    for c in poly.terms.values():
        den = gmpy2.lcm(den, c.denominator)
    return _primitive({(pos, m): mpz(c * den) for m, c in poly.terms.items()})


class ModuleEngine:
    """Buchberger's algorithm for homogeneous submodules of a graded free module.

    ``shifts[i]`` is the degree of the i-th basis vector.  ``key`` is a term
    order given as a sort key on ``(pos, monomial)``.
    """

    def __init__(self, nvars: int, shifts: Sequence[int], key: Callable | None = None,
                 coprime_criterion: bool | None = None):
        self.nvars = nvars
        self.shifts = tuple(shifts)
        self.rank = len(self.shifts)
        self.key = key or top_key(self.shifts)
        # Buchberger's first criterion only holds in rank one
        self.coprime_criterion = self.rank == 1 if coprime_criterion is None else coprime_criterion
        self.elements: list[dict] = []
        self.lead: list[tuple] = []  # leading term per element
        self.degree: list[int] = []
        self.by_pos: dict[int, list[int]] = {}
        self.pairs: list = []
        self._terms_cache: dict[int, tuple] = {}
        self._reducer_cache: dict = {}

    # term bookkeeping
    def terms_desc(self, d: int) -> tuple:
        """All terms of module degree d, largest first."""
        out = self._terms_cache.get(d)
        if out is None:
            lst = []
            for pos, s in enumerate(self.shifts):
                lst.extend((pos, m) for m in graded_basis(d - s, self.nvars))
            lst.sort(key=self.key, reverse=True)
            out = self._terms_cache[d] = tuple(lst)
        return out

    def term_degree(self, term) -> int:
        return sum(term[1]) + self.shifts[term[0]]

    def leading_term(self, p: dict):
        return max(p, key=self.key)

    def element_degree(self, p: dict) -> int:
        degs = {self.term_degree(t) for t in p}
        if len(degs) != 1:
            raise ValueError("module element is not homogeneous")
        return degs.pop()

    def find_reducer(self, term):
        hit = self._reducer_cache.get(term)
        if hit is not None:
            return hit
        pos, m = term
        for idx in self.by_pos.get(pos, ()):
            lm = self.lead[idx][1]
            if all(a <= b for a, b in zip(lm, m)):
                hit = (idx, tuple(b - a for a, b in zip(lm, m)))
                self._reducer_cache[term] = hit
                return hit
        return None

    # reduction
    def reduce(self, p: dict, d: int | None = None, full: bool = True, track: bool = False):
        """Reduce ``p`` against the current elements.

        Returns the reduced dict; with ``track`` also the rational factor c such
        that the result equals c * (true remainder).
        """
        if not p:
            return (p, QQ(1)) if track else p
        if d is None:
            d = self.element_degree(p)
        scale = QQ(1)
        steps = 0
        p = dict(p)
        for t in self.terms_desc(d):
            c = p.get(t)
            if not c:
                continue
            hit = self.find_reducer(t)
            if hit is None:
                if not full:
                    break
                continue
            idx, u = hit
            g = self.elements[idx]
            gl = g[self.lead[idx]]
            h = gmpy2.gcd(c, gl)
            a, b = gl // h, c // h
            if a != 1:
                if a == -1:
                    p = {k: -v for k, v in p.items()}
                else:
                    p = {k: v * a for k, v in p.items()}
                scale *= a
            if any(u):
                for (pos, m), v in g.items():
                    k = (pos, tuple(x + y for x, y in zip(m, u)))
                    nv = p.get(k, 0) - b * v
                    if nv:
                        p[k] = nv
                    else:
                        del p[k]
            else:
                for k, v in g.items():
                    nv = p.get(k, 0) - b * v
                    if nv:
                        p[k] = nv
                    else:
                        del p[k]
            steps += 1
            if steps % 8 == 0 and p:
                cont = mpz(0)
                for v in p.values():
                    cont = gmpy2.gcd(cont, v)
                    if cont == 1:
                        break
                if cont > 1:
                    p = {k: v // cont for k, v in p.items()}
                    scale /= cont
        if p:
            cont = mpz(0)
            for v in p.values():
                cont = gmpy2.gcd(cont, v)
                if cont == 1:
                    break
            if cont > 1:
                p = {k: v // cont for k, v in p.items()}
                scale /= cont
        return (p, scale) if track else p

    # basis growth
    def _add(self, p: dict, d: int) -> int:
        lt = self.leading_term(p)
        if p[lt] < 0:
            p = {k: -v for k, v in p.items()}
        idx = len(self.elements)
        self.elements.append(p)
        self.lead.append(lt)
        self.degree.append(d)
        self.by_pos.setdefault(lt[0], []).append(idx)
        return idx

    def _spoly(self, i, j, lcm_term):
        gi, gj = self.elements[i], self.elements[j]
        li, lj = self.lead[i], self.lead[j]
        ui = mono_div(lcm_term[1], li[1])
        uj = mono_div(lcm_term[1], lj[1])
        ci, cj = gi[li], gj[lj]
        h = gmpy2.gcd(ci, cj)
        a, b = cj // h, ci // h
        out: dict = {}
        for (pos, m), v in gi.items():
            k = (pos, mono_mul(m, ui))
            out[k] = out.get(k, 0) + a * v
        for (pos, m), v in gj.items():
            k = (pos, mono_mul(m, uj))
            nv = out.get(k, 0) - b * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return {k: v for k, v in out.items() if v}

    def _update(self, h: int) -> None:
        """Gebauer-Moeller pair update after adding element h."""
        pos, mh = self.lead[h]
        cands = [(g, mono_lcm(self.lead[g][1], mh)) for g in self.by_pos.get(pos, ()) if g != h]
        kept = []
        for idx, (g, lcm) in enumerate(cands):
            coprime = self.coprime_criterion and mono_coprime(self.lead[g][1], mh)
            if not coprime:
                if any(mono_divides(l2, lcm) for _, l2 in cands[idx + 1:]):
                    continue
                if any(mono_divides(l2, lcm) for _, l2, _ in kept):
                    continue
            kept.append((g, lcm, coprime))
        survivors = []
        for (a, b, (ppos, lcm)) in self.pairs:
            if ppos == pos and mono_divides(mh, lcm):
                if (mono_lcm(self.lead[a][1], mh) != lcm
                        and mono_lcm(self.lead[b][1], mh) != lcm):
                    continue
            survivors.append((a, b, (ppos, lcm)))
        survivors.extend((g, h, (pos, lcm)) for g, lcm, coprime in kept if not coprime)
        self.pairs = survivors

    def insert(self, p: dict, d: int | None = None) -> int | None:
        """Reduce ``p`` and add it when nonzero; returns the new index or None."""
        if d is None:
            d = self.element_degree(p)
        p = self.reduce(p, d, full=True)
        if not p:
            return None
        h = self._add(p, d)
        self._update(h)
        return h

    def _pair_degree(self, pr):
        return self.term_degree(pr[2])

    def complete_through(self, max_degree: int | None = None) -> None:
        """Process every pending S-pair of degree <= max_degree (all if None)."""
        while self.pairs:
            d = min(self._pair_degree(pr) for pr in self.pairs)
            if max_degree is not None and d > max_degree:
                return
            self._process_degree(d)

    def _process_degree(self, d, generators=()):
        todo, rest = [], []
        for pr in self.pairs:
            (todo if self._pair_degree(pr) == d else rest).append(pr)
        self.pairs = rest
        todo.sort(key=lambda pr: self.key(pr[2]))
        for p in generators:
            self.insert(p, d)
        for i, j, lcm_term in todo:
            p = self._spoly(i, j, lcm_term)
            if p:
                self.insert(p, d)

    def run(self, generators: Iterable[dict], max_degree: int | None = None) -> "ModuleEngine":
        """Compute a Groebner basis of the submodule spanned by ``generators``."""
        pending: dict[int, list] = {}
        for p in generators:
            p = {k: mpz(v) for k, v in p.items() if v}
            if p:
                pending.setdefault(self.element_degree(p), []).append(p)
        while pending or self.pairs:
            d = min(list(pending) + [self._pair_degree(pr) for pr in self.pairs])
            if max_degree is not None and d > max_degree:
                break
            self._process_degree(d, pending.pop(d, []))
        return self

    def interreduce(self) -> list[dict]:
        """Reduced basis: minimal leading terms, fully reduced tails."""
        order = sorted(range(len(self.elements)), key=lambda i: self.key(self.lead[i]))
        keep = []
        for i in order:
            pos, m = self.lead[i]
            if any(self.lead[j][0] == pos and mono_divides(self.lead[j][1], m)
                   for j in keep):
                continue
            keep.append(i)
        basis = ModuleEngine(self.nvars, self.shifts, self.key, self.coprime_criterion)
        for i in keep:
            basis._add(self.elements[i], self.degree[i])
        out = []
        for idx in range(len(basis.elements)):
            p = basis.elements[idx]
            lt = basis.lead[idx]
            others = ModuleEngine(self.nvars, self.shifts, self.key)
            for j in range(len(basis.elements)):
                if j != idx:
                    others._add(basis.elements[j], basis.degree[j])
            tail = {k: v for k, v in p.items() if k != lt}
            red = others.reduce({lt: p[lt]} | tail, basis.degree[idx], full=True)
            out.append(red)
        return out


def from_basis(nvars, shifts, elements, key=None) -> ModuleEngine:
    eng = ModuleEngine(nvars, shifts, key)
    for p in elements:
        eng._add(dict(p), eng.element_degree(p))
    return eng


# --- monomial ideals ---------------------------------------------------------------


def minimalize_monomials(gens: Iterable) -> tuple:
    gens = sorted(set(tuple(g) for g in gens), key=sum)
    kept: list = []
    for g in gens:
        if not any(mono_divides(k, g) for k in kept):
            kept.append(g)
    kept.sort(key=degrevlex_key, reverse=True)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal held by its minimal generators (degrevlex descending)."""

    __slots__ = ("nvars", "mingens", "_hash")

    def __init__(self, gens: Iterable, nvars: int | None = None):
        gens = [tuple(g) for g in gens]
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for the zero ideal")
            nvars = len(gens[0])
        if any(len(g) != nvars for g in gens):
            raise ValueError("generator length mismatch")
        self.nvars = nvars
        self.mingens = minimalize_monomials(gens)
        self._hash = None

    @classmethod
    def unit(cls, nvars):
        return cls([(0,) * nvars], nvars)

    @classmethod
    def power_of_maximal(cls, k, nvars):
        return cls(graded_basis(k, nvars), nvars)

    def is_unit(self):
        return any(not any(g) for g in self.mingens)

    def is_zero(self):
        return not self.mingens

    def contains(self, m) -> bool:
        m = tuple(m)
        return any(all(a <= b for a, b in zip(g, m)) for g in self.mingens)

    __contains__ = contains

    def degrees(self):
        return sorted(sum(g) for g in self.mingens)

    def by_degree(self):
        """Minimal generators by ascending degree, degrevlex-descending within one."""
        return sorted(self.mingens, key=lambda g: (sum(g), [-e for e in degrevlex_key(g)[1:]]))

    def __add__(self, other: "MonomialIdeal"):
        return MonomialIdeal(self.mingens + other.mingens, self.nvars)

    def colon_monomial(self, u) -> "MonomialIdeal":
        return MonomialIdeal([tuple(max(a - b, 0) for a, b in zip(g, u)) for g in self.mingens],
                             self.nvars)

    def standard_monomials(self, d: int) -> list:
        return [m for m in graded_basis(d, self.nvars) if not self.contains(m)]

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.nvars == other.nvars
                and self.mingens == other.mingens)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.mingens))
        return self._hash

    def __iter__(self):
        return iter(self.mingens)

    def __len__(self):
        return len(self.mingens)

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        return "<" + ", ".join(format_monomial(g) for g in self.mingens) + ">"

    def to_polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(g, self.nvars) for g in self.mingens]


# --- ideals -----------------------------------------------------------------------------


class GroebnerBasis:
    """Reduced, monic degrevlex Groebner basis of a homogeneous ideal."""

    def __init__(self, elements: Sequence[Polynomial], nvars: int, _engine_elements=None):
        self.nvars = nvars
        self.elements = tuple(sorted((f.monic() for f in elements), key=lambda f: degrevlex_key(f.leading_monomial()),
                                     reverse=True))
        ints = _engine_elements if _engine_elements is not None else [
            to_integer_terms(f) for f in self.elements]
        self._engine = from_basis(nvars, (0,), ints)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return [f.leading_monomial() for f in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        by_deg: dict = {}
        for m, c in f.terms.items():
            by_deg.setdefault(sum(m), {})[m] = c
        out = {}
        for d, part in by_deg.items():
            poly = Polynomial(self.nvars, part, _trusted=True)
            den = mpz(1)
            for c in part.values():
                den = gmpy2.lcm(den, c.denominator)
            ints = {(0, m): mpz(c * den) for m, c in part.items()}
            red, scale = self._engine.reduce(ints, d, full=True, track=True)
            factor = scale * den
            for (_, m), v in red.items():
                out[m] = QQ(v) / factor
        return Polynomial(self.nvars, out, _trusted=True)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.nvars == other.nvars
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)


class Ideal:
    """Homogeneous ideal of QQ[x0..xn]; the Groebner basis is computed once."""

    def __init__(self, generators: Iterable[Polynomial], nvars: int | None = None):
        gens = [g for g in generators if not g.is_zero()]
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for the zero ideal")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator variable count mismatch")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self.nvars = nvars
        self.generators = tuple(gens)
        self._gb = None

    @classmethod
    def from_monomial_ideal(cls, M: MonomialIdeal):
        return cls(M.to_polynomials(), M.nvars)

    @classmethod
    def unit(cls, nvars):
        return cls([Polynomial.constant(1, nvars)], nvars)

    def groebner_basis(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def is_unit(self) -> bool:
        return any(not any(f.leading_monomial()) for f in self.groebner_basis())

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, f: Polynomial) -> bool:
        return self.groebner_basis().normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def leading_term_ideal(self) -> MonomialIdeal:
        return leading_term_ideal(self.groebner_basis())

    def apply_change(self, g: LinearChange) -> "Ideal":
        return Ideal([apply_change(f, g) for f in self.generators], self.nvars)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators, self.nvars)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.nvars == other.nvars
                and self.groebner_basis() == other.groebner_basis())

    def __hash__(self):
        return hash(self.groebner_basis())

    def __repr__(self):
        return "Ideal<" + ", ".join(str(g) for g in self.generators) + ">"

    def degrees(self):
        return sorted(g.degree() for g in self.generators)


def buchberger(I: Ideal) -> GroebnerBasis:
    """Reduced degrevlex Groebner basis (normal strategy, Gebauer-Moeller criteria)."""
    eng = ModuleEngine(I.nvars, (0,))
    eng.run(to_integer_terms(f) for f in I.generators)
    reduced = eng.interreduce()
    polys = [Polynomial(I.nvars, {m: QQ(v) for (_, m), v in p.items()}, _trusted=True).monic()
             for p in reduced]
    return GroebnerBasis(polys, I.nvars, _engine_elements=reduced)


def leading_monomials_only(I: Ideal) -> MonomialIdeal:
    """LT(I) without tail-reducing the basis (cheaper when only LT is wanted)."""
    if I._gb is not None:
        return I.leading_term_ideal()
    eng = ModuleEngine(I.nvars, (0,))
    eng.run(to_integer_terms(f) for f in I.generators)
    return MonomialIdeal([lt[1] for lt in eng.lead], I.nvars)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def leading_term_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.leading_monomials(), G.nvars)


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """I : f.  The last variable uses the degrevlex shortcut; otherwise syzygies."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("colon by a non-homogeneous polynomial")
    n = I.nvars
    if len(f.terms) == 1 and f.leading_monomial() == unit_vector(n - 1, n):
        return _colon_last_variable(I)
    from .syzygy import syzygies

    if I.is_zero():
        return Ideal([], n)
    cols = list(I.generators) + [f]
    syz = syzygies(cols, [g.degree() for g in cols])
    return Ideal([s.components[-1] for s in syz if not s.components[-1].is_zero()], n)


def ideal_quotient_by_syzygies(I: Ideal, f: Polynomial) -> Ideal:
    """General colon route, exposed so the last-variable shortcut can be checked."""
    from .syzygy import syzygies

    n = I.nvars
    if I.is_zero():
        return Ideal([], n)
    cols = list(I.generators) + [f]
    syz = syzygies(cols, [g.degree() for g in cols])
    return Ideal([s.components[-1] for s in syz if not s.components[-1].is_zero()], n)


def _colon_last_variable(I: Ideal) -> Ideal:
    n = I.nvars
    out = []
    for g in I.groebner_basis():
        if all(m[n - 1] >= 1 for m in g.terms):
            g = Polynomial(n, {m[:-1] + (m[-1] - 1,): c for m, c in g.terms.items()},
                           _trusted=True)
        out.append(g)
    return Ideal(out, n)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^infinity by iterated colon until the Groebner basis stabilizes."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    current = I
    while True:
        nxt = ideal_quotient(current, f)
        if nxt.groebner_basis() == current.groebner_basis():
            return nxt
        current = nxt


def irrelevant_saturation(I: Ideal, g: LinearChange) -> Ideal:
    """g^-1( g(I) : x_n^infinity ); equals I : m^infinity when g is generic."""
    n = I.nvars
    moved = I.apply_change(g)
    sat = saturate(moved, Polynomial.variable(n - 1, n))
    return Ideal([apply_change(h, g.inverse()) for h in sat.groebner_basis()], n)
