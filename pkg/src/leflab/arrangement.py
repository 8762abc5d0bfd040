"""Central hyperplane arrangements: Jacobian ideal, freeness, plus-one generation,
and the Lefschetz behaviour of the Jacobian algebra S/J(A)."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from . import linalg
from .gin import DEFAULT_SEED, regularity, rgin
from .groebner import Ideal, MonomialIdeal
from .lefschetz import TheoremViolation, has_slp, has_wlp
from .polyring import QQ, ParseError, Polynomial, parse_polynomial, partial_derivative, product
from .syzygy import FreeModuleElement, minimal_generators, syzygies


class ArrangementError(ParseError):
    pass


@dataclass(frozen=True)
class Arrangement:
    forms: tuple
    nvars: int
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        if not self.forms:
            raise ValueError("an arrangement needs at least one hyperplane")
        for f in self.forms:
            if f.nvars != self.nvars or f.is_zero() or f.homogeneous_degree() != 1:
                raise ValueError(f"{f} is not a nonzero linear form in {self.nvars} variables")
        for i, j in _proportional_pairs(self.forms):
            raise ValueError(f"hyperplanes {i + 1} and {j + 1} coincide")

    @property
    def d(self):
        return len(self.forms)

    def coefficient_matrix(self):
        rows = []
        for f in self.forms:
            rows.append([f.coefficient(tuple(int(k == i) for k in range(self.nvars)))
                         for i in range(self.nvars)])
        return rows

    def defining_polynomial(self) -> Polynomial:
        return product(self.forms, self.nvars)

    def rank(self) -> int:
        return linalg.rank(self.coefficient_matrix())

    def to_text(self) -> str:
        lines = [str(self.nvars)]
        for row in self.coefficient_matrix():
            lines.append(" ".join(str(c) for c in row))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return "".join(f"({f})" for f in self.forms)


def _normalized(row):
    lead = next(c for c in row if c)
    return tuple(c / lead for c in row)


def _proportional_pairs(forms):
    seen = {}
    for idx, f in enumerate(forms):
        n = f.nvars
        row = [f.coefficient(tuple(int(k == i) for k in range(n))) for i in range(n)]
        key = _normalized(row)
        if key in seen:
            yield seen[key], idx
        else:
            seen[key] = idx


def from_rows(rows, name=None) -> Arrangement:
    n = len(rows[0])
    return Arrangement([Polynomial.linear_form(r) for r in rows], n, name)


def parse_arrangement(text: str, name: str | None = None) -> Arrangement:
    """First line: number of variables.  Each further line: n+1 coefficients
    (or a linear form such as ``x - 2*z``).  ``#`` starts a comment."""
    nvars = None
    forms = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if nvars is None:
            try:
                nvars = int(body)
            except ValueError:
                raise ArrangementError("first line must be the number of variables", lineno, 1)
            if nvars < 1:
                raise ArrangementError("number of variables must be positive", lineno, 1)
            continue
        tokens = body.split()
        try:
            coeffs = [QQ(t) for t in tokens]
        except ValueError:
            coeffs = None
        if coeffs is not None:
            if len(coeffs) != nvars:
                raise ArrangementError(f"expected {nvars} coefficients, got {len(coeffs)}",
                                       lineno, 1)
            f = Polynomial.linear_form(coeffs)
        else:
            f = parse_polynomial(body, nvars, line=lineno)
        if f.is_zero():
            raise ArrangementError("zero form does not define a hyperplane", lineno, 1)
        if f.homogeneous_degree() != 1:
            raise ArrangementError(f"not a linear form: {f}", lineno, 1)
        forms.append(f)
        lines.append(lineno)
    if nvars is None or not forms:
        raise ArrangementError("empty arrangement", 1, 1)
    for i, j in _proportional_pairs(forms):
        raise ArrangementError(
            f"duplicate hyperplane: lines {lines[i]} and {lines[j]} are proportional",
            lines[j], 1)
    return Arrangement(forms, nvars, name)


def is_essential(A: Arrangement) -> bool:
    return A.rank() == A.nvars


def jacobian_ideal(A: Arrangement, include_q: bool = False) -> Ideal:
    """<dQ/dx_0, ..., dQ/dx_n>; Q is redundant by the Euler relation."""
    Q = A.defining_polynomial()
    gens = [partial_derivative(Q, i) for i in range(A.nvars)]
    if include_q:
        gens.append(Q)
    return Ideal(gens, A.nvars)


# --- gin shape -------------------------------------------------------------------------


@dataclass
class GinShape:
    free: bool
    lambdas: list
    shape_ok: bool
    rgin: MonomialIdeal


def staircase_lambdas(M: MonomialIdeal, d: int):
    """The lambda list when M = <x0^(d-1), x0^(d-2) x1^l1, ..., x1^l_(d-1)> with
    gaps 1 or 2, else None."""
    n = M.nvars
    if len(M.mingens) != d or any(any(g[2:]) for g in M.mingens):
        return None
    by_x0 = {g[0]: g[1] for g in M.mingens}
    if sorted(by_x0) != list(range(d)):
        return None
    lam = [by_x0[d - 1 - k] for k in range(d)]
    if lam[0] != 0:
        return None
    lam = lam[1:]
    if lam and lam[0] < 1:
        return None
    if any(b - a not in (1, 2) for a, b in zip(lam, lam[1:])):
        return None
    return lam


def gin_shape_ok(M: MonomialIdeal, d: int) -> bool:
    """rgin(J(A)) is S, or contains x0^(d-1) and a power of x1 among its minimal
    generators and no generator supported on x2..xn alone."""
    if M.is_unit():
        return True
    n = M.nvars
    x0 = tuple([d - 1] + [0] * (n - 1))
    has_x0 = x0 in M.mingens
    has_x1 = any(g[0] == 0 and g[1] > 0 and not any(g[2:]) for g in M.mingens)
    tail_only = any(g[0] == 0 and g[1] == 0 for g in M.mingens)
    return has_x0 and has_x1 and not tail_only


def gin_shape_freeness(A: Arrangement, seed=None, **gin_options) -> GinShape:
    M = rgin(jacobian_ideal(A), seed, **gin_options).result
    ok = gin_shape_ok(M, A.d)
    if M.is_unit():
        return GinShape(True, [], ok, M)
    lam = staircase_lambdas(M, A.d)
    return GinShape(lam is not None, lam or [], ok, M)


# --- logarithmic derivations --------------------------------------------------------------


@dataclass
class DerivationPresentation:
    generator_pdegrees: list
    relation_degrees: list
    generators: list = field(default_factory=list)  # coefficient vectors (f_0..f_n)

    @property
    def is_free(self):
        return not self.relation_degrees


def derivation_presentation(A: Arrangement) -> DerivationPresentation:
    """Minimal generators of D(A) and the degrees of their minimal relations.

    D(A) is the projection of Syz(dQ/dx_0, ..., dQ/dx_n, -Q) onto the first n+1
    coordinates; a degree-k syzygy is a derivation of polynomial degree k-(d-1).
    """
    Q = A.defining_polynomial()
    n1 = A.nvars
    cols = [partial_derivative(Q, i) for i in range(n1)] + [-Q]
    degs = [A.d - 1] * n1 + [A.d]
    gens = minimal_generators(syzygies(cols, degs))
    shift = A.d - 1
    rels = minimal_generators(syzygies(gens)) if gens else []
    vectors = [tuple(g.components[:n1]) for g in sorted(gens, key=lambda g: g.degree)]
    return DerivationPresentation(sorted(g.degree - shift for g in gens),
                                  sorted(r.degree - shift for r in rels), vectors)


def exponents(A: Arrangement):
    pres = derivation_presentation(A)
    return pres.generator_pdegrees if pres.is_free else None


@dataclass
class PlusOne:
    plus_one: bool
    po_exp: list | None = None
    level: int | None = None
    consistent: bool | None = None


def plus_one_from_presentation(pres: DerivationPresentation, nvars: int,
                               rank: int | None = None) -> PlusOne:
    """n+2 generators and a single relation; POexp drops one generator of the
    level degree a, where the relation sits in degree a+1."""
    gens = list(pres.generator_pdegrees)
    if len(gens) != nvars + 1 or len(pres.relation_degrees) != 1:
        return PlusOne(False)
    a = pres.relation_degrees[0] - 1
    if a not in gens:
        return PlusOne(False)
    po = list(gens)
    po.remove(a)
    consistent = None
    if rank is not None:
        # (0,...,0,1,a_k,...): the zeros count the dimension of the center
        consistent = sum(1 for e in po if e == 0) == nvars - rank
    return PlusOne(True, sorted(po), a, consistent)


def is_plus_one_generated(A: Arrangement, presentation: DerivationPresentation | None = None
                          ) -> PlusOne:
    pres = presentation or derivation_presentation(A)
    return plus_one_from_presentation(pres, A.nvars, A.rank())


# --- conjecture on p0 ---------------------------------------------------------------------


@dataclass
class ConjectureVerdict:
    p0: int | None
    min_degree_x2: int | None  # generators divisible by x2
    min_degree_tail: int | None  # generators involving any of x2..xn
    offending_generator: tuple | None
    holds: bool


def conjecture_from_gin(M: MonomialIdeal) -> ConjectureVerdict:
    pows = [g[1] for g in M.mingens if g[1] and not g[0] and not any(g[2:])]
    p0 = min(pows) if pows else None
    x2 = [g for g in M.mingens if M.nvars > 2 and g[2]]
    tail = [g for g in M.mingens if any(g[2:])]
    offending = None
    if tail and p0 is not None:
        worst = min(tail, key=sum)
        if sum(worst) < p0:
            offending = worst
    return ConjectureVerdict(p0, min((sum(g) for g in x2), default=None),
                             min((sum(g) for g in tail), default=None), offending,
                             offending is None)


def check_conjecture(A: Arrangement, seed=None, **gin_options) -> ConjectureVerdict:
    M = rgin(jacobian_ideal(A), seed, **gin_options).result
    verdict = conjecture_from_gin(M)
    if A.nvars == 3 and not verdict.holds and is_essential(A):
        raise TheoremViolation(f"p0 bound fails in three variables for {A}")
    return verdict


# --- full analysis ---------------------------------------------------------------------------


@dataclass
class ArrangementReport:
    name: str | None
    forms: list
    nvars: int
    d: int
    central: bool
    essential: bool
    rank: int
    free: bool
    exponents: list | None
    derivation_pdegrees: list
    relation_degrees: list
    plus_one: bool
    po_exp: list | None
    level: int | None
    gin_generators: list
    gin_free: bool
    lambdas: list
    gin_shape_ok: bool
    p0: int | None
    conjecture_holds: bool
    conjecture_offender: str | None
    wlp: bool
    slp: bool
    wlp_failures: list
    slp_failures: list
    wlp_failure_degree: int | None
    reg: int
    checks: dict

    def to_dict(self):
        return asdict(self)


def _fmt(g):
    from .polyring import format_monomial

    return format_monomial(g)


def analyze(A: Arrangement, seed=None, cross_validate: bool = False,
            strict: bool = True, **gin_options) -> ArrangementReport:
    """Everything the arrangement module knows about A, with every applicable
    theorem checked on the result (TheoremViolation when ``strict``)."""
    seed = DEFAULT_SEED if seed is None else seed
    J = jacobian_ideal(A)
    M = rgin(J, seed, **gin_options).result
    shape = gin_shape_freeness(A, seed, **gin_options)
    pres = derivation_presentation(A)
    po = is_plus_one_generated(A, pres)
    conj = conjecture_from_gin(M)
    wlp = has_wlp(J, seed, cross_validate=cross_validate, **gin_options)
    slp = has_slp(J, seed, cross_validate=cross_validate, **gin_options)
    essential = is_essential(A)
    rank = A.rank()
    free = pres.is_free
    n = A.nvars - 1
    # failure "in degree k" refers to the target piece of ×ℓ : (S/J)_{k-1} -> (S/J)_k
    fail_deg = min((f.i + 1 for f in wlp.failures), default=None)
    checks = {
        "K2_implies_SLP": slp.holds if A.nvars == 2 else None,
        "K3_essential_implies_WLP": wlp.holds if (A.nvars == 3 and essential) else None,
        "free_implies_SLP": slp.holds if free else None,
        "plus_one_implies_SLP": slp.holds if (po.plus_one and n >= 3) else None,
        "wlp_failure_degree_at_least_d":
            (fail_deg >= A.d) if (essential and fail_deg is not None) else None,
        "gin_shape_agrees_with_D(A)": shape.free == free,
        "gin_shape_proposition": shape.shape_ok,
        "free_excludes_plus_one": (not po.plus_one) if free else None,
        "free_exponents_sum_to_d": (sum(pres.generator_pdegrees) == A.d) if free else None,
        "plus_one_rank_count": po.consistent if po.plus_one else None,
        "conjecture_in_K3": conj.holds if A.nvars == 3 else None,
    }
    report = ArrangementReport(
        A.name, [str(f) for f in A.forms], A.nvars, A.d, True, essential, rank, free,
        pres.generator_pdegrees if free else None, pres.generator_pdegrees,
        pres.relation_degrees, po.plus_one, po.po_exp, po.level,
        [_fmt(g) for g in M.by_degree()], shape.free, shape.lambdas, shape.shape_ok,
        conj.p0, conj.holds, _fmt(conj.offending_generator) if conj.offending_generator else None,
        wlp.holds, slp.holds, [(f.i, f.s) for f in wlp.failures],
        [(f.i, f.s) for f in slp.failures], fail_deg, regularity(M), checks)
    violated = [k for k, v in checks.items() if v is False]
    if violated and strict:
        raise TheoremViolation(f"{A}: violated {', '.join(violated)}")
    return report


# --- random corpora -------------------------------------------------------------------------


def derived_seed(seed: int, index: int) -> int:
    return random.Random(f"{seed}:{index}").getrandbits(64)


def random_arrangement(nvars: int, d: int, rng: random.Random, entry_bound: int = 3,
                       essential: bool = True, max_tries: int = 1000) -> Arrangement:
    for _ in range(max_tries):
        rows, keys = [], set()
        while len(rows) < d:
            row = [rng.randint(-entry_bound, entry_bound) for _ in range(nvars)]
            if not any(row):
                continue
            key = _normalized([QQ(c) for c in row])
            if key in keys:
                continue
            keys.add(key)
            rows.append(row)
        A = from_rows(rows)
        if not essential or is_essential(A):
            return A
    raise ValueError(f"could not draw an essential arrangement with d={d} in {nvars} variables")


def pencil_arrangement(d: int, k: int, rng: random.Random, entry_bound: int = 4) -> Arrangement:
    """k lines through [0:0:1] plus d - k random lines in the plane.

    A point of high multiplicity makes the derivation bundle unstable, which
    random arrangements almost never produce.
    """
    if not 2 <= k < d:
        raise ValueError("need 2 <= k < d")
    rows, keys = [], set()

    def push(row):
        if not any(row):
            return
        key = _normalized([QQ(c) for c in row])
        if key not in keys:
            keys.add(key)
            rows.append(row)

    while len(rows) < k:
        push([rng.randint(-entry_bound, entry_bound), rng.randint(-entry_bound, entry_bound), 0])
    while len(rows) < d:
        row = [rng.randint(-3, 3) for _ in range(2)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        push(row)
    return from_rows(rows, name=f"pencil-{d}-{k}")


def random_corpus(count: int, nvars: int, max_d: int, seed: int, min_d: int | None = None,
                  essential: bool = True) -> list:
    """Deterministic list of arrangements; the i-th depends only on (seed, i)."""
    lo = min_d if min_d is not None else max(3, nvars if essential else 1)
    out = []
    for i in range(count):
        rng = random.Random(derived_seed(seed, i))
        d = rng.randint(lo, max_d)
        A = random_arrangement(nvars, d, rng, essential=essential)
        out.append(Arrangement(A.forms, nvars, f"random-{seed}-{i}"))
    return out
