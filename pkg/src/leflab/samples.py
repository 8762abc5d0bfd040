"""Seeded random ideals for the property suites and the experiment scripts."""

from __future__ import annotations

import random
from . import linalg
from .groebner import Ideal
from .hilbert import quotient_dimension
from .polyring import QQ, LinearChange, Polynomial, apply_change, graded_basis


def random_form(rng: random.Random, nvars: int, degree: int, bound: int = 5,
                nterms: int | None = None) -> Polynomial:
    """Random nonzero form; ``nterms`` caps the support (dense when None)."""
    basis = list(graded_basis(degree, nvars))
    support = basis if nterms is None or nterms >= len(basis) else rng.sample(basis, nterms)
    while True:
        terms = {m: QQ(rng.randint(-bound, bound)) for m in support}
        f = Polynomial(nvars, {m: c for m, c in terms.items() if c})
        if not f.is_zero():
            return f


def random_linear_forms(rng: random.Random, nvars: int, k: int, bound: int = 5):
    return [random_form(rng, nvars, 1, bound) for _ in range(k)]


def truncation(I: Ideal, k: int) -> Ideal:
    """I_{>=k}: same saturation, not saturated once k exceeds the generator degrees."""
    gens = []
    for f in I.generators:
        e = k - f.degree()
        if e <= 0:
            gens.append(f)
        else:
            gens.extend(f.mul_monomial(m) for m in graded_basis(e, I.nvars))
    return Ideal(gens, I.nvars)


def times_maximal(I: Ideal) -> Ideal:
    n = I.nvars
    return Ideal([f * Polynomial.variable(i, n) for f in I.generators for i in range(n)], n)


def product_ideal(I: Ideal, J: Ideal) -> Ideal:
    return Ideal([f * g for f in I.generators for g in J.generators], I.nvars)


def _generic(rng, I: Ideal, bound=3) -> Ideal:
    n = I.nvars
    while True:
        try:
            g = LinearChange([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
            break
        except ValueError:
            continue
    return Ideal([apply_change(f, g) for f in I.generators], n)


def high_dimension_ideal(rng: random.Random, nvars: int = 4):
    """A (label, ideal) with dim S/I >= 2; roughly half are built non-saturated."""
    n = nvars
    kind = rng.choice(["ci1", "ci2", "skew-lines", "plane-and-line", "linear"])
    if kind == "ci1":
        base = Ideal([random_form(rng, n, rng.randint(1, 3), nterms=6)], n)
    elif kind == "ci2":
        base = Ideal([random_form(rng, n, rng.randint(1, 2), nterms=6),
                      random_form(rng, n, rng.randint(1, 2), nterms=6)], n)
    elif kind == "skew-lines":
        l = random_linear_forms(rng, n, 4, 3)
        base = Ideal([l[0] * l[2], l[0] * l[3], l[1] * l[2], l[1] * l[3]], n)
    elif kind == "plane-and-line":
        l = random_linear_forms(rng, n, 3, 3)
        base = Ideal([l[0] * l[1], l[0] * l[2]], n)
    else:
        base = Ideal(random_linear_forms(rng, n, rng.randint(1, n - 2), 3), n)
    twist = rng.choice(["none", "none", "truncate", "times-m"])
    if twist == "truncate":
        top = max(f.degree() for f in base.generators)
        return f"{kind}/trunc{top + 1}", truncation(base, top + 1)
    if twist == "times-m":
        return f"{kind}/m", times_maximal(base)
    return kind, base


def equivalence_corpus(seed: int, count: int = 30, nvars: int = 4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        label, I = high_dimension_ideal(rng, nvars)
        if quotient_dimension(I, seed) >= 2:
            out.append((label, I))
    return out


# --- dimension one almost complete intersections ------------------------------------------


def forms_through_points(rng: random.Random, points, degree: int, bound: int = 5):
    """Random form of the given degree vanishing at every point, or None."""
    basis = list(graded_basis(degree, 3))
    rows = [[QQ(Polynomial.monomial(m, 3).evaluate(p)) for m in basis] for p in points]
    kernel = linalg.nullspace(rows, len(basis)) if rows else [
        [QQ(int(i == j)) for j in range(len(basis))] for i in range(len(basis))]
    if not kernel:
        return None
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in kernel]
        vec = [sum((c * v[j] for c, v in zip(coeffs, kernel)), QQ(0)) for j in range(len(basis))]
        f = Polynomial(3, {m: c for m, c in zip(basis, vec) if c})
        if not f.is_zero():
            return f.content_normalized()


def aci_triple(rng: random.Random, max_degree: int = 4):
    """(f0, f1, f2) in K[x,y,z] through a few shared points, with dim S/I = 1."""
    while True:
        degs = sorted(rng.randint(2, max_degree) for _ in range(3))
        capacity = (degs[0] + 1) * (degs[0] + 2) // 2 - 1
        k = rng.randint(1, max(1, min(capacity, 6)))
        points = generic_points(rng, k)
        forms = [forms_through_points(rng, points, d) for d in degs]
        if any(f is None for f in forms):
            continue
        I = Ideal(forms, 3)
        if quotient_dimension(I) == 1 and len(set(forms)) == 3:
            return tuple(forms)


def aci_corpus(seed: int, count: int = 20, max_degree: int = 4):
    rng = random.Random(seed)
    return [aci_triple(rng, max_degree) for _ in range(count)]


# --- small ideals for gin properties ---------------------------------------------------------


def small_ideal(rng: random.Random, nvars: int | None = None) -> Ideal:
    n = nvars or rng.choice([2, 3, 4])
    k = rng.randint(1, n + 1)
    gens = [random_form(rng, n, rng.randint(1, 3 if n < 4 else 2), nterms=rng.randint(1, 5))
            for _ in range(k)]
    I = Ideal(gens, n)
    if rng.random() < 0.3 and not I.is_unit():
        I = times_maximal(I)
    return I


def property_corpus(seed: int, count: int = 30, max_vars: int = 3):
    rng = random.Random(seed)
    return [small_ideal(rng, rng.randint(2, max_vars)) for _ in range(count)]


def generic_points(rng: random.Random, k: int, bound: int = 3):
    """k distinct projective points with integer coordinates."""
    seen = set()
    pts = []
    while len(pts) < k:
        p = tuple(rng.randint(-bound, bound) for _ in range(3))
        if not any(p):
            continue
        g = next(c for c in p if c)
        key = tuple(QQ(c, g) for c in p)
        if key not in seen:
            seen.add(key)
            pts.append(p)
    return pts
