"""Full picture for Q = xz(x-z)(x-y)(y-z)(y-2z)(y-3z)(y-4z).

Prints rgin(J(A)), the Hilbert function around the failing pair, the SLP
failure with its kernel witness, the derivation module and the dimension one
ACI numbers for the three partials.
"""

import argparse

from leflab.arrangement import analyze, jacobian_ideal, parse_arrangement
from leflab.gin import DEFAULT_SEED, rgin
from leflab.hilbert import hilbert_function
from leflab.lefschetz import aci_analyze, has_slp, kernel_monomials
from leflab.polyring import format_monomial

ROWS = """3
x
z
x - z
x - y
y - z
y - 2*z
y - 3*z
y - 4*z
"""


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    args = ap.parse_args()

    A = parse_arrangement(ROWS, name="eight-lines")
    J = jacobian_ideal(A)
    M = rgin(J, args.seed).result
    print("rgin(J(A)):")
    for g in M.by_degree():
        print(f"  deg {sum(g):>2}  {format_monomial(g)}")
    print("HF(S/rgin):", [hilbert_function(M, d) for d in range(14)])

    slp = has_slp(J, args.seed, cross_validate=True)
    for rec in slp.failures:
        print(f"SLP failure (i={rec.i}, s={rec.s}): rank {rec.rank} of "
              f"{rec.dim_source}->{rec.dim_target}, witness {rec.witness}")
    print("kernel of x2^3 on degree 8:",
          ", ".join(format_monomial(m) for m in kernel_monomials(M, 8, 3)))

    rep = analyze(A, args.seed)
    print(f"D(A) generators {rep.derivation_pdegrees}, relations {rep.relation_degrees}")
    print(f"plus-one: {rep.plus_one}, POexp {rep.po_exp}, level {rep.level}")
    print(f"p0 = {rep.p0}, conjecture {'holds' if rep.conjecture_holds else 'fails'}")

    aci = aci_analyze(*J.generators, seed=args.seed)
    print(f"m(I) = {aci.m}, deg F = {aci.deg_f}, F(1) = {aci.f_at_one}, {aci.stability}")
    print(f"first non-injective degree on I^sat/I: {aci.unstable_sharp_failure}")


if __name__ == "__main__":
    main()
