"""Syzygies, minimal generators and presentations of graded submodules of S^r.

Syzygies of v_1..v_k in S^r come from a Groebner basis of the rows
(v_i | e_i) in S^r + S^k under an order in which the first r positions
dominate: the basis elements vanishing on S^r generate the syzygy module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import gmpy2

from .groebner import ModuleEngine, elimination_key, top_key
from .polyring import QQ, Polynomial


@dataclass(frozen=True)
class FreeModuleElement:
    """Homogeneous element of S(-d_0) + ... + S(-d_{r-1})."""

    components: tuple
    column_degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "column_degrees", tuple(self.column_degrees))
        if len(self.components) != len(self.column_degrees):
            raise ValueError("components and column degrees differ in length")
        degs = {c.degree() + d for c, d in zip(self.components, self.column_degrees)
                if not c.is_zero()}
        if len(degs) > 1 or any(not c.is_homogeneous() for c in self.components):
            raise ValueError("module element is not homogeneous")

    @property
    def nvars(self):
        return self.components[0].nvars

    @property
    def rank(self):
        return len(self.components)

    @property
    def degree(self) -> int | None:
        for c, d in zip(self.components, self.column_degrees):
            if not c.is_zero():
                return c.degree() + d
        return None

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return FreeModuleElement([a + b for a, b in zip(self.components, other.components)],
                                 self.column_degrees)

    def __mul__(self, f):
        return FreeModuleElement([c * f for c in self.components], self.column_degrees)

    __rmul__ = __mul__

    def dot(self, columns: Sequence[Polynomial]) -> Polynomial:
        total = Polynomial.zero(self.nvars)
        for g, f in zip(self.components, columns):
            total = total + g * f
        return total

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass
class GradedPresentation:
    """Minimal generators of a graded module and their minimal relations."""

    generator_degrees: list
    relation_degrees: list
    generators: list = field(default_factory=list)
    relations: list = field(default_factory=list)


def _to_terms(v: FreeModuleElement, offset: int = 0) -> dict:
    den = gmpy2.mpz(1)
    for c in v.components:
        for x in c.terms.values():
            den = gmpy2.lcm(den, x.denominator)
    out = {}
    for i, c in enumerate(v.components):
        for m, x in c.terms.items():
            out[(offset + i, m)] = gmpy2.mpz(x * den)
    return out


def _from_terms(p: dict, nvars: int, shifts, lo: int, hi: int) -> FreeModuleElement:
    comps = [dict() for _ in range(hi - lo)]
    for (pos, m), v in p.items():
        if lo <= pos < hi:
            comps[pos - lo][m] = QQ(v)
    return FreeModuleElement([Polynomial(nvars, c) for c in comps], shifts[lo:hi])


def _as_vectors(columns, degrees=None):
    vecs = []
    for i, col in enumerate(columns):
        if isinstance(col, Polynomial):
            d = degrees[i] if degrees is not None else col.degree()
            if col.is_zero():
                raise ValueError(f"column {i} is zero")
            if not col.is_homogeneous() or col.degree() != d:
                raise ValueError(f"column {i} is not homogeneous of degree {d}")
            vecs.append(FreeModuleElement([col], [0]))
        else:
            if col.is_zero():
                raise ValueError(f"column {i} is zero")
            vecs.append(col)
    return vecs


def syzygies(columns, degrees=None) -> list[FreeModuleElement]:
    """Generators of {(g_i) : sum g_i * columns[i] = 0}.

    ``columns`` are homogeneous polynomials or module elements of one ambient
    free module; the i-th syzygy coordinate lives in S(-deg columns[i]).
    """
    vecs = _as_vectors(columns, degrees)
    if not vecs:
        return []
    nvars = vecs[0].nvars
    r = vecs[0].rank
    ambient = vecs[0].column_degrees
    col_degs = [v.degree for v in vecs]
    if degrees is not None:
        col_degs = list(degrees)
    shifts = tuple(ambient) + tuple(col_degs)
    eng = ModuleEngine(nvars, shifts, elimination_key(shifts, r))
    gens = []
    for i, v in enumerate(vecs):
        p = _to_terms(v)
        p[(r + i, (0,) * nvars)] = gmpy2.mpz(1) * _scale_of(v)
        gens.append(p)
    eng.run(gens)
    out = []
    for p, lt in zip(eng.elements, eng.lead):
        if lt[0] >= r:
            out.append(_from_terms(p, nvars, shifts, r, r + len(vecs)))
    return out


def _scale_of(v: FreeModuleElement):
    den = gmpy2.mpz(1)
    for c in v.components:
        for x in c.terms.values():
            den = gmpy2.lcm(den, x.denominator)
    return den


def minimal_generators(gens: Sequence[FreeModuleElement]) -> list[FreeModuleElement]:
    """Greedy minimal subset, ascending degree: keep g iff g is not in the span
    of the generators kept so far."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    nvars = gens[0].nvars
    shifts = gens[0].column_degrees
    eng = ModuleEngine(nvars, shifts, top_key(shifts))
    kept = []
    for g in sorted(gens, key=lambda g: g.degree):
        d = g.degree
        eng.complete_through(d)
        if eng.insert(_to_terms(g), d) is not None:
            kept.append(g)
    return kept


def minimalize(gens: Sequence[FreeModuleElement]) -> GradedPresentation:
    """Minimal generators with their degrees (relations left empty)."""
    kept = minimal_generators(gens)
    return GradedPresentation(sorted(g.degree for g in kept), [], kept, [])


def presentation(gens: Sequence[FreeModuleElement]) -> GradedPresentation:
    """Minimal generators and a minimal generating set of their relations."""
    kept = minimal_generators(gens)
    if not kept:
        return GradedPresentation([], [], [], [])
    rels = minimal_generators(syzygies(kept))
    return GradedPresentation(sorted(g.degree for g in kept), sorted(r.degree for r in rels),
                              kept, rels)


def in_submodule(v: FreeModuleElement, gens: Sequence[FreeModuleElement]) -> bool:
    if v.is_zero():
        return True
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    eng = ModuleEngine(v.nvars, v.column_degrees, top_key(v.column_degrees))
    eng.run([_to_terms(g) for g in gens], max_degree=v.degree)
    return not eng.reduce(_to_terms(v), v.degree)


def min_syzygy_degree(f0: Polynomial, f1: Polynomial, f2: Polynomial,
                      check_dimension: bool = True) -> int:
    """m(I): the least module degree of a nonzero syzygy of (f0, f1, f2)."""
    forms = [f0, f1, f2]
    if any(f.nvars != 3 for f in forms):
        raise ValueError("expected three forms in three variables")
    if check_dimension:
        from .groebner import Ideal
        from .hilbert import hilbert_series

        dim = hilbert_series(Ideal(forms, 3).leading_term_ideal()).dim
        if dim != 1:
            raise ValueError(f"quotient has dimension {dim}, expected 1")
    pres = minimalize(syzygies(forms))
    return min(pres.generator_degrees)
