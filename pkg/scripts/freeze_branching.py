"""Recompute the adjoint branching tables and write them as golden files.

Usage: python scripts/freeze_branching.py [--depth N] [--out tests/golden]

A table is written only when the decomposition closes (zero residual at every
degree) and the Weyl-Kac and Freudenthal routes give identical components.
"""

import argparse
import json
from pathlib import Path

from blockcount.affinechar import branch_decompose
from blockcount.rootdata import lie_algebra


def table(name: str, depth: int) -> dict:
    results = [branch_decompose(lie_algebra(name), depth, method=m) for m in ("weyl_kac", "freudenthal")]
    a, b = results
    if a.components != b.components or a.residual != b.residual:
        raise SystemExit(f"{name}: character routes disagree")
    if not a.exact:
        raise SystemExit(f"{name}: residual {a.residual} is not zero")
    return {
        "algebra": name,
        "source_level": a.source_level,
        "target": a.target.name,
        "depth": depth,
        "components": [
            {"weight": list(c.weight), "degree": c.degree, "conformal_weight": str(c.conformal_weight), "multiplicity": c.multiplicity}
            for c in a.components
        ],
        "residual": list(a.residual),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "tests" / "golden")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in ("A2", "B2", "G2"):
        doc = table(name, args.depth)
        path = args.out / f"branching_{name.lower()}.json"
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(f"{path}: {[(c['weight'], c['degree'], c['multiplicity']) for c in doc['components']]}")


if __name__ == "__main__":
    main()
