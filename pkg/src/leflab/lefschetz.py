"""Weak and strong Lefschetz properties of graded quotients S/I.

Default route: S/I has the WLP (SLP) iff S/(rgin(I) + m^(r+1)), r = reg(I), has
it with Lefschetz element x_n, and for a monomial quotient the rank of
multiplication by x_n^s is a count of standard monomials.  The oracle route
does honest linear algebra on the graded pieces of S/(I + m^(r+1)) with a
random linear form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg
from .gin import (
    DEFAULT_SEED,
    gin_saturate,
    is_saturated,
    regularity,
    rgin,
    saturation,
)
from .groebner import Ideal, MonomialIdeal
from .hilbert import hilbert_function, hilbert_series, stable_numerator
from .polyring import QQ, Polynomial, format_monomial, graded_basis
from .syzygy import min_syzygy_degree

WLP = "WLP"
SLP = "SLP"
FAST = "gin-fast-path"
ORACLE = "linear-algebra-oracle"
ELL_BOUND = 1000


class LefschetzInconsistency(AssertionError):
    """The gin route and the linear-algebra route disagree."""


class TheoremViolation(AssertionError):
    """A proven implication failed on a computed example (a bug, not a theorem)."""


class DimensionError(ValueError):
    pass


@dataclass
class RankRecord:
    i: int
    s: int
    dim_source: int
    dim_target: int
    rank: int
    full_rank: bool
    witness: str | None = None
    witness_kind: str | None = None  # "kernel" or "cokernel"


@dataclass
class LefschetzReport:
    property: str
    holds: bool
    failures: list
    route: str
    reg: int
    artinian_truncation_degree: int
    notes: list = field(default_factory=list)
    oracle_holds: bool | None = None

    @property
    def failure_pairs(self):
        return [(f.i, f.s) for f in self.failures]


# --- monomial fast path ------------------------------------------------------------


def mult_rank_monomial(M: MonomialIdeal, i: int, s: int) -> RankRecord:
    """Rank of x_n^s : (S/M)_i -> (S/M)_{i+s}."""
    if s < 1:
        raise ValueError("power s must be >= 1")
    n = M.nvars
    src = M.standard_monomials(i) if i >= 0 else []
    tgt = M.standard_monomials(i + s)
    tgt_set = set(tgt)
    kernel = []
    for m in src:
        mm = m[:-1] + (m[-1] + s,)
        if mm not in tgt_set:
            kernel.append(m)
    rank = len(src) - len(kernel)
    full = rank == min(len(src), len(tgt))
    rec = RankRecord(i, s, len(src), len(tgt), rank, full)
    if not full:
        if len(src) <= len(tgt):
            rec.witness, rec.witness_kind = format_monomial(kernel[0]), "kernel"
        else:
            image = {m[:-1] + (m[-1] + s,) for m in src} & tgt_set
            coker = next(m for m in tgt if m not in image)
            rec.witness, rec.witness_kind = format_monomial(coker), "cokernel"
    return rec


def kernel_monomials(M: MonomialIdeal, i: int, s: int) -> list:
    return [m for m in M.standard_monomials(i) if M.contains(m[:-1] + (m[-1] + s,))]


def artinian_truncation(I: Ideal, seed=None, **gin_options) -> MonomialIdeal:
    """rgin(I) + m^(r+1) with r = reg(rgin(I))."""
    M = rgin(I, seed, **gin_options).result
    if M.is_unit():
        return M
    r = regularity(M)
    return M + MonomialIdeal.power_of_maximal(r + 1, M.nvars)


def _pairs(prop: str, r: int):
    if prop == WLP:
        return [(i, 1) for i in range(r + 1)]
    return [(i, s) for s in range(1, r + 2) for i in range(0, r + 2 - s)]


# --- linear algebra oracle ----------------------------------------------------------


class GradedQuotient:
    """Graded pieces of S/I with normal forms against the reduced Groebner basis."""

    def __init__(self, I: Ideal, top: int | None = None):
        self.ideal = I
        self.nvars = I.nvars
        self.top = top  # pieces above ``top`` are zero (Artinian truncation)
        gb = I.groebner_basis()
        self.gb = list(gb)
        self.lt = MonomialIdeal(gb.leading_monomials(), I.nvars) if len(gb) else \
            MonomialIdeal([], I.nvars)
        self._basis: dict = {}
        self._index: dict = {}
        self._nf: dict = {}

    def basis(self, d: int) -> list:
        if d not in self._basis:
            if d < 0 or (self.top is not None and d > self.top):
                b = []
            else:
                b = self.lt.standard_monomials(d)
            self._basis[d] = b
            self._index[d] = {m: k for k, m in enumerate(b)}
        return self._basis[d]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def _table(self, d: int) -> dict:
        """Normal form of every degree-d monomial as {standard monomial: coeff}."""
        if d in self._nf:
            return self._nf[d]
        table = {}
        if not (d < 0 or (self.top is not None and d > self.top)):
            std = set(self.basis(d))
            for m in reversed(graded_basis(d, self.nvars)):
                if m in std:
                    table[m] = {m: QQ(1)}
                    continue
                g = next(g for g in self.gb
                         if all(a <= b for a, b in zip(g.leading_monomial(), m)))
                lm = g.leading_monomial()
                u = tuple(b - a for a, b in zip(lm, m))
                acc: dict = {}
                for t, c in g.terms.items():
                    if t == lm:
                        continue
                    tt = tuple(a + b for a, b in zip(t, u))
                    for k, v in table[tt].items():
                        acc[k] = acc.get(k, 0) - c * v
                table[m] = {k: v for k, v in acc.items() if v}
        self._nf[d] = table
        return table

    def vector(self, f: Polynomial, d: int) -> list:
        """Coordinates of the class of the degree-d form f."""
        self.basis(d)
        idx = self._index[d]
        table = self._table(d)
        v = [QQ(0)] * len(self.basis(d))
        if not table:
            return v
        for m, c in f.terms.items():
            for k, x in table[m].items():
                v[idx[k]] += c * x
        return v

    def mult_matrix(self, ell: Polynomial, i: int) -> list:
        """Rows: images of the basis of degree i under multiplication by ell."""
        d = ell.degree()
        return [self.vector(ell.mul_monomial(m), i + d) for m in self.basis(i)]


def random_linear_form(nvars: int, rng: random.Random, bound: int = ELL_BOUND) -> Polynomial:
    coeffs = []
    for _ in range(nvars):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        coeffs.append(c)
    return Polynomial.linear_form(coeffs)


def _oracle_records(Q: GradedQuotient, ell: Polynomial, pairs) -> list:
    powers = {1: ell}
    out = []
    for i, s in pairs:
        if s not in powers:
            powers[s] = powers[max(powers)] * ell ** (s - max(powers))
        rows = Q.mult_matrix(powers[s], i)
        src, tgt = Q.dim(i), Q.dim(i + s)
        r = linalg.rank(rows) if rows and tgt else 0
        rec = RankRecord(i, s, src, tgt, r, r == min(src, tgt))
        if not rec.full_rank:
            if src <= tgt:
                vec = linalg.left_nullspace(rows)[0]
                terms = {m: c for m, c in zip(Q.basis(i), vec) if c}
                rec.witness = str(Polynomial(Q.nvars, terms))
                rec.witness_kind = "kernel"
            else:
                rec.witness_kind = "cokernel"
        out.append(rec)
    return out


def oracle_verdict(I: Ideal, prop: str, seed=None, draws: int = 2, **gin_options):
    """(holds, failures) from random linear forms on S/(I + m^(r+1))."""
    seed = DEFAULT_SEED if seed is None else seed
    M = rgin(I, seed, **gin_options).result
    r = regularity(M)
    Q = GradedQuotient(I, top=r)
    pairs = _pairs(prop, r)
    rng = random.Random(repr((seed, "ell", prop)))
    common = None
    for _ in range(draws):
        ell = random_linear_form(I.nvars, rng)
        recs = [rec for rec in _oracle_records(Q, ell, pairs) if not rec.full_rank]
        if not recs:
            return True, []
        keys = {(rec.i, rec.s) for rec in recs}
        common = recs if common is None else [c for c in common if (c.i, c.s) in keys]
    return False, common


def _trivial_report(prop, I):
    if I.is_zero():
        return LefschetzReport(prop, True, [], FAST, 0, 0,
                               ["zero ideal: x_n^s is injective on the polynomial ring"])
    if I.is_unit():
        return LefschetzReport(prop, True, [], FAST, 0, 0, ["unit ideal: S/I is zero"])
    return None


def _decide(I: Ideal, prop: str, seed=None, route: str = FAST, cross_validate: bool = False,
            **gin_options) -> LefschetzReport:
    seed = DEFAULT_SEED if seed is None else seed
    trivial = _trivial_report(prop, I)
    if trivial is not None:
        return trivial
    M = rgin(I, seed, **gin_options).result
    r = regularity(M)
    T = M + MonomialIdeal.power_of_maximal(r + 1, M.nvars)
    if route == ORACLE:
        holds, failures = oracle_verdict(I, prop, seed, **gin_options)
        return LefschetzReport(prop, holds, failures, ORACLE, r, r + 1, oracle_holds=holds)
    failures = [rec for rec in (mult_rank_monomial(T, i, s) for i, s in _pairs(prop, r))
                if not rec.full_rank]
    report = LefschetzReport(prop, not failures, failures, FAST, r, r + 1)
    if cross_validate:
        holds, _ = oracle_verdict(I, prop, seed, **gin_options)
        report.oracle_holds = holds
        if holds != report.holds:
            raise LefschetzInconsistency(
                f"{prop}: gin route says {report.holds}, linear algebra says {holds} for {I}")
    return report


def has_wlp(I: Ideal, seed=None, route: str = FAST, cross_validate: bool = False,
            **gin_options) -> LefschetzReport:
    return _decide(I, WLP, seed, route, cross_validate, **gin_options)


def has_slp(I: Ideal, seed=None, route: str = FAST, cross_validate: bool = False,
            **gin_options) -> LefschetzReport:
    return _decide(I, SLP, seed, route, cross_validate, **gin_options)


# --- dimension >= 2 ----------------------------------------------------------------


@dataclass
class QuotientClassification:
    dim: int
    saturated: bool
    slp: bool
    wlp: bool
    applicable: bool
    equivalences_consistent: bool | None
    saturated_direct: bool | None = None


def classify_quotient(I: Ideal, seed=None, cross_validate: bool = False, direct: bool = False,
                      **gin_options) -> QuotientClassification:
    """Saturatedness, SLP and WLP computed separately; for dim >= 2 they must agree."""
    from .hilbert import quotient_dimension

    dim = quotient_dimension(I, seed, **gin_options)
    sat = is_saturated(I, seed, **gin_options)
    slp = has_slp(I, seed, cross_validate=cross_validate, **gin_options).holds
    wlp = has_wlp(I, seed, cross_validate=cross_validate, **gin_options).holds
    sat_direct = None
    if direct:
        sat_direct = saturation(I, seed, **gin_options) == I
        if sat_direct != sat:
            raise TheoremViolation(f"gin saturation test {sat} vs direct {sat_direct} for {I}")
    applicable = dim >= 2 and I.nvars >= 3
    consistent = (sat == slp == wlp) if applicable else None
    if applicable and not consistent:
        raise TheoremViolation(f"dim {dim}: saturated={sat}, SLP={slp}, WLP={wlp} for {I}")
    return QuotientClassification(dim, sat, slp, wlp, applicable, consistent, sat_direct)


# --- I^sat / I ------------------------------------------------------------------------


@dataclass
class SatRankRecord:
    i: int
    dim_source: int
    dim_target: int
    rank: int

    @property
    def injective(self):
        return self.rank == self.dim_source

    @property
    def surjective(self):
        return self.rank == self.dim_target


class SaturationQuotient:
    """The finite-length module I^sat/I inside S/I, degree by degree."""

    def __init__(self, I: Ideal, seed=None, ell: Polynomial | None = None, **gin_options):
        seed = DEFAULT_SEED if seed is None else seed
        self.ideal = I
        self.sat = saturation(I, seed, **gin_options)
        self.Q = GradedQuotient(I)
        rng = random.Random(repr((seed, "ell", "sat")))
        self.ell = ell if ell is not None else random_linear_form(I.nvars, rng)
        self._pieces: dict = {}

    def piece(self, d: int) -> list:
        """Echelon basis of (I^sat)_d modulo I_d, as coordinate rows of (S/I)_d."""
        if d not in self._pieces:
            rows = []
            if self.Q.dim(d):
                for h in self.sat.generators:
                    e = d - h.degree()
                    if e < 0:
                        continue
                    for u in graded_basis(e, self.ideal.nvars):
                        rows.append(self.Q.vector(h.mul_monomial(u), d))
            self._pieces[d] = linalg.row_echelon(rows)[0] if rows else []
        return self._pieces[d]

    def rank(self, i: int) -> SatRankRecord:
        src = self.piece(i)
        tgt = self.piece(i + 1)
        if not src:
            return SatRankRecord(i, 0, len(tgt), 0)
        mult = self.Q.mult_matrix(self.ell, i)
        nt = self.Q.dim(i + 1)
        images = []
        for row in src:
            v = [QQ(0)] * nt
            for c, mrow in zip(row, mult):
                if c:
                    for k, x in enumerate(mrow):
                        if x:
                            v[k] += c * x
            images.append(v)
        return SatRankRecord(i, len(src), len(tgt), linalg.rank(images))


def sat_quotient_rank(I: Ideal, i: int, seed=None, **gin_options) -> SatRankRecord:
    return SaturationQuotient(I, seed, **gin_options).rank(i)


# --- dimension one almost complete intersections --------------------------------------


@dataclass
class AciReport:
    degrees: tuple
    m: int
    deg_f: int
    f_at_one: int
    numerator: tuple
    stability: str
    saturated: bool
    sat_ranks: list
    injective_range: tuple  # claimed: i <= degF - 1
    surjective_from: int  # claimed: i >= degF
    thresholds_verified: bool
    wlp: bool
    wlp_failures: list = field(default_factory=list)
    unstable_sharp_failure: int | None = None
    injective_failures: list = field(default_factory=list)
    surjective_failures: list = field(default_factory=list)
    proposition_bounds_verified: bool = True
    identity_holds: bool = True  # deg F == d0+d1+d2-m-2


def proposition_bounds(degrees, m):
    """(last injective i, first surjective i) guaranteed by the stability split."""
    total = sum(degrees)
    if 2 * m < total:
        return total - m - 2, m - 2
    if total % 2 == 0:
        return (total - 2) // 2 - 1, (total - 6) // 2 + 1
    return (total - 3) // 2 - 1, (total - 5) // 2 + 1


def aci_analyze(f0: Polynomial, f1: Polynomial, f2: Polynomial, seed=None,
                cross_validate: bool = False, strict_identity: bool = False,
                **gin_options) -> AciReport:
    """Numerical invariants and Lefschetz behaviour of (f0, f1, f2) in K[x,y,z].

    The WLP is a hard check.  The identity deg F = d0+d1+d2-m-2 and the
    multiplication thresholds on I^sat/I are measured and reported; they fail
    on some inputs (e.g. three forms through a single reduced point), so they
    only raise with ``strict_identity``.
    """
    forms = [f0, f1, f2]
    if any(f.nvars != 3 for f in forms):
        raise DimensionError("expected three forms in three variables")
    if any(f.is_zero() or not f.is_homogeneous() for f in forms):
        raise DimensionError("forms must be nonzero and homogeneous")
    I = Ideal(forms, 3)
    M = rgin(I, seed, **gin_options).result
    dim = hilbert_series(M).dim if not M.is_unit() else -1
    if dim != 1:
        raise DimensionError(f"S/I has dimension {dim}, expected 1")
    degs = tuple(f.degree() for f in forms)
    total = sum(degs)
    m = min_syzygy_degree(f0, f1, f2, check_dimension=False)
    numerator, deg_f, f1_val = stable_numerator(I, seed, **gin_options)
    identity = deg_f == total - m - 2
    if strict_identity and not identity:
        raise TheoremViolation(f"deg F = {deg_f} but d0+d1+d2-m-2 = {total - m - 2}")
    stability = "unstable" if 2 * m < total else "stable-or-semistable"
    saturated = is_saturated(I, seed, **gin_options)
    reg = regularity(M)
    ranks = []
    if not saturated:
        sq = SaturationQuotient(I, seed, **gin_options)
        ranks = [sq.rank(i) for i in range(0, reg + 2)]
    inj_bad = [r.i for r in ranks if r.i <= deg_f - 1 and not r.injective]
    sur_bad = [r.i for r in ranks if r.i >= deg_f and not r.surjective]
    last_inj, first_sur = proposition_bounds(degs, m)
    prop_ok = all(r.injective for r in ranks if r.i <= last_inj) and \
        all(r.surjective for r in ranks if r.i >= first_sur)
    sharp = None
    if stability == "unstable" and ranks:
        bad = [r.i for r in ranks if not r.injective]
        sharp = min(bad) if bad else None
    wlp = has_wlp(I, seed, cross_validate=cross_validate, **gin_options)
    if not wlp.holds:
        raise TheoremViolation(f"dimension one almost complete intersection without WLP: {I}")
    return AciReport(degs, m, deg_f, f1_val, tuple(numerator), stability, saturated, ranks,
                     (0, deg_f - 1), deg_f, not inj_bad and not sur_bad, wlp.holds,
                     wlp.failures, sharp, inj_bad, sur_bad, prop_ok, identity)
