"""Dimension one almost complete intersections in K[x,y,z].

For a seeded corpus of three forms through shared points, compares deg F with
d0+d1+d2-m-2 and tabulates the rank of x ell on I^sat/I degree by degree.
The explicit triple below has a single reduced point as zero locus: deg F = 0
while the minimal syzygy is the Koszul one in degree 4.
"""

import argparse

from leflab.gin import DEFAULT_SEED
from leflab.lefschetz import aci_analyze
from leflab.polyring import parse_polynomials
from leflab.samples import aci_corpus

SINGLE_POINT = "x*z + y^2, y*z + x^2, x*z^2 + y^3"


def show(label, rep):
    rhs = sum(rep.degrees) - rep.m - 2
    dims = " ".join(f"{r.dim_source}>{r.rank}" for r in rep.sat_ranks if r.dim_source or r.rank)
    print(f"{label:>8} {str(rep.degrees):>10} m={rep.m:<2} degF={rep.deg_f:<2} rhs={rhs:<2} "
          f"{'=' if rep.deg_f == rhs else '!'} surj-fail={rep.surjective_failures} "
          f"[{dims}]")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    args = ap.parse_args()

    forms, _ = parse_polynomials(SINGLE_POINT, 3)
    show("single", aci_analyze(*forms, seed=args.seed))
    same, surj = 0, 0
    for k, triple in enumerate(aci_corpus(args.seed, args.count)):
        rep = aci_analyze(*triple, seed=args.seed)
        show(str(k), rep)
        same += rep.identity_holds
        surj += not rep.surjective_failures
    print(f"identity holds on {same}/{args.count}; surjective from deg F on {surj}/{args.count}")


if __name__ == "__main__":
    main()
