"""Rank tables of x ell^s on S/I for the two monomial ideals
<x^2, xy, y^2, xz^2> and <x^3, x^2y, xy^3, y^4, xy^2z>, computed by plain
graded linear algebra with ell = z and with a dense random form."""

import argparse
import random

from leflab import linalg
from leflab.groebner import Ideal
from leflab.lefschetz import random_linear_form
from leflab.polyring import QQ, Polynomial, graded_basis, parse_polynomials

IDEALS = ["x^2, x*y, y^2, x*z^2", "x^3, x^2*y, x*y^3, y^4, x*y^2*z"]


def rows(I, d):
    out = []
    for g in I.generators:
        e = d - g.degree()
        if e >= 0:
            out += [[QQ(g.mul_monomial(u).coefficient(m)) for m in graded_basis(d, 3)]
                    for u in graded_basis(e, 3)]
    return out


def rank_or_zero(r):
    return linalg.rank(r) if r else 0


def hf(I, d):
    return len(graded_basis(d, 3)) - rank_or_zero(rows(I, d))


def mult_rank(I, ell, i, s):
    power = ell ** s
    target = rows(I, i + s)
    images = [[QQ(power.mul_monomial(u).coefficient(m)) for m in graded_basis(i + s, 3)]
              for u in graded_basis(i, 3)]
    return rank_or_zero(target + images) - rank_or_zero(target)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--top", type=int, default=6)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    ell_z = Polynomial.variable(2, 3)
    ell_r = random_linear_form(3, random.Random(args.seed))
    for text in IDEALS:
        polys, _ = parse_polynomials(text, 3)
        I = Ideal(polys, 3)
        h = [hf(I, d) for d in range(args.top + args.top + 1)]
        print(f"I = <{text}>  HF {h[:args.top + 4]}")
        for name, ell in (("z", ell_z), ("random", ell_r)):
            bad = [(i, s) for i in range(args.top + 1) for s in range(1, args.top + 1)
                   if mult_rank(I, ell, i, s) != min(h[i], h[i + s])]
            print(f"  ell = {name}: non-maximal (i, s) pairs: {bad or 'none'}")


if __name__ == "__main__":
    main()
