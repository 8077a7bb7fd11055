"""Sugawara central charges of ad: g -> so(dim g) and of g -> sl(dim g) across simple algebras."""

import argparse
import time
from dataclasses import dataclass

from blockcount.embeddings import adjoint_embedding, adjoint_into_sl, is_conformal
from blockcount.rootdata import dual_coxeter, lie_algebra


@dataclass(frozen=True)
class SweepConfig:
    algebras: tuple[str, ...] = ("A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("algebras", nargs="*", help="descriptors such as A2 or so7 (default: the standard sweep)")
    args = ap.parse_args()
    cfg = SweepConfig(tuple(args.algebras)) if args.algebras else SweepConfig()
    t0 = time.perf_counter()
    print(f"{'g':>4} {'target':>7} {'index':>6} {'h^vee':>6} {'c(g, d)':>9} {'c(so, 1)':>9} {'ad':>5} {'via sl':>7}")
    for name in cfg.algebras:
        g = lie_algebra(name)
        e = adjoint_embedding(g)
        ad = is_conformal(e)
        sl = is_conformal(adjoint_into_sl(g))
        print(
            f"{g.name:>4} {e.target.name:>7} {str(ad.index):>6} {dual_coxeter(g):>6} "
            f"{str(ad.lhs):>9} {str(ad.rhs):>9} {str(ad.conformal):>5} {str(sl.conformal):>7}"
        )
    print(f"# {len(cfg.algebras)} algebras in {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
