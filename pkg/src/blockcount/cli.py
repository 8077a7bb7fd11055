"""Command-line front end.

Exit codes: 0 success, 1 selftest failure, 2 unparsable input, 3 domain error
(alcove violation, cap exceeded, unsupported algebra), 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence, TextIO

from .config import CrossCheckError, DomainError

SCHEMA = "1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse's exit code 2, but never print usage twice
        self.print_usage(sys.stderr)
        raise _ParseError(f"{self.prog}: error: {message}")


class _ParseError(Exception):
    pass


def _algebra(text: str):
    from .rootdata import lie_algebra

    try:
        return lie_algebra(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(f"bad algebra descriptor {text!r}: {exc}") from None


def _weight(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()[]")
    try:
        return tuple(int(t) for t in body.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}: expected comma-separated integers like 1,0") from None


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {_key(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):  # numpy scalars
        return _jsonable(x.item())
    return str(x)


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(map(str, k))
    return str(k)


def _text(x: Any) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple) and all(isinstance(v, int) for v in x):
        return "(" + ", ".join(map(str, x)) + ")"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{_text(k)}: {_text(v)}" for k, v in x.items()) + "}"
    return str(x)


# ---------------------------------------------------------------------------
# subcommands: each returns (result, exact, provenance)


def cmd_alcove(a):
    from .rootdata import alcove

    return [w.weight for w in alcove(a.algebra, a.level)], True, "alcove enumeration"


def cmd_index(a):
    from .embeddings import adjoint_embedding, adjoint_into_sl, dynkin_index_embedding, dynkin_index_irrep

    if a.weight is not None:
        return dynkin_index_irrep(a.algebra, a.weight), True, "Casimir formula"
    e = adjoint_embedding(a.algebra) if a.into == "so" else adjoint_into_sl(a.algebra)
    return dynkin_index_embedding(e), True, "defining-rep branching"


def cmd_conformal(a):
    from .embeddings import adjoint_embedding, adjoint_into_sl, is_conformal

    e = adjoint_embedding(a.algebra) if a.embedding == "ad" else adjoint_into_sl(a.algebra)
    c = is_conformal(e)
    result = {
        "conformal": c.conformal,
        "witness": f"{c.lhs} {'=' if c.conformal else '!='} {c.rhs}",
        "source_charge": c.lhs,
        "target_charge": c.rhs,
        "index": c.index,
        "target": e.target.name,
    }
    return result, True, "Sugawara central charges"


def cmd_charge(a):
    from .embeddings import central_charge, conformal_weight

    result = {"central_charge": central_charge(a.algebra, a.level)}
    if a.weight is not None:
        result["conformal_weight"] = conformal_weight(a.algebra, a.level, a.weight)
    return result, True, "Sugawara construction"


def cmd_fuse(a):
    from .fusion import fuse

    return dict(sorted(fuse(a.algebra, a.level, a.lam, a.mu).items())), True, "Kac-Walton"


def cmd_verlinde(a):
    from .fusion import VerlindeProblem, verlinde_dim, verlinde_dim_exact

    p = VerlindeProblem(a.algebra, a.level, a.genus, tuple(a.insert))
    if a.method == "s-matrix":
        return verlinde_dim(p), False, "Kac-Peterson S-matrix"
    if a.method == "exact":
        return verlinde_dim_exact(p), True, "factorization and fusion"
    x, y = verlinde_dim(p), verlinde_dim_exact(p)
    if x != y:
        raise CrossCheckError(f"S-matrix route gives {x}, exact route gives {y}")
    return y, True, "S-matrix and fusion cross-check"


def cmd_center(a):
    from .center import act, center_group, group_structure

    elems = center_group(a.algebra)
    result: dict[str, Any] = {
        "order": len(elems),
        "structure": group_structure(a.algebra),
        "automorphisms": [list(s.automorphism) for s in elems],
    }
    if a.level is not None:
        if a.weight is not None:
            result["orbit"] = [act(s, a.weight, a.level) for s in elems]
        else:
            from .rootdata import alcove

            result["action"] = [{_key(w.weight): act(s, w.weight, a.level) for w in alcove(a.algebra, a.level)} for s in elems]
    return result, True, "affine diagram automorphisms"


def cmd_character(a):
    from .affinechar import graded_character

    c = graded_character(a.algebra, a.level, a.weight, a.depth, a.method)
    result = {
        "dimensions": c.dimensions(),
        "decomposition": [c.decomposition(d) for d in range(c.depth + 1)],
    }
    return result, True, a.method.replace("_", "-")


def cmd_branch(a):
    from .affinechar import branch_decompose

    r = branch_decompose(a.algebra, a.depth, a.target_weight, a.method)
    result = {
        "source_level": r.source_level,
        "target": r.target.name,
        "target_weight": r.target_weight,
        "components": [
            {"weight": c.weight, "degree": c.degree, "conformal_weight": c.conformal_weight, "multiplicity": c.multiplicity}
            for c in r.components
        ],
        "residual": list(r.residual),
    }
    return result, True, "greedy peel of restricted characters"


def cmd_theta(a):
    from .fusion import VerlindeProblem, verlinde_dim_exact
    from .rootdata import lie_algebra
    from .thetachar import is_free_and_transitive, parity_counts

    even, odd = parity_counts(a.genus)
    result = {"even": even, "odd": odd, "total": even + odd}
    if a.genus <= 4:
        result["b3_level1_verlinde"] = verlinde_dim_exact(VerlindeProblem(lie_algebra("B3"), 1, a.genus))
    if a.genus <= 3:
        result["torsor"] = is_free_and_transitive(a.genus)
    return result, True, "exhaustive enumeration over F_2"


def cmd_casimir(a):
    from .liematrix import casimir_tensor, identity, killing_form, structure_constants

    sc = structure_constants(a.algebra)
    gamma = casimir_tensor(sc)
    result = {
        "basis": list(sc.labels),
        "killing": killing_form(sc),
        "casimir": [list(r) for r in gamma.matrix],
        "contraction_is_identity": gamma.contraction() == identity(sc.dim),
        "invariant": gamma.is_invariant(),
    }
    return result, True, "Chevalley basis"


def cmd_selftest(a):
    from .acceptance import run_all

    results = run_all()
    return [r.line() for r in results], True, "acceptance suite"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="blockcount", description="Exact representation-theory queries for affine Lie algebras.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(func=fn)
        s.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        return s

    s = add("alcove", cmd_alcove, "integrable weights at a level")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--level", type=int, required=True)

    s = add("index", cmd_index, "Dynkin index of ad (or of an irreducible representation)")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--into", choices=("so", "sl"), default="so")
    s.add_argument("--weight", type=_weight)

    s = add("conformal-check", cmd_conformal, "conformality of g -> so(g) or g -> sl(g)")
    s.add_argument("embedding", choices=("ad", "sl"))
    s.add_argument("algebra", type=_algebra)

    s = add("charge", cmd_charge, "central charge and conformal weight")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--weight", type=_weight)

    s = add("fuse", cmd_fuse, "level-l fusion product")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("lam", type=_weight)
    s.add_argument("mu", type=_weight)
    s.add_argument("--level", type=int, required=True)

    s = add("verlinde", cmd_verlinde, "dimension of conformal blocks")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--insert", type=_weight, action="append", default=[])
    s.add_argument("--method", choices=("both", "s-matrix", "exact"), default="both")

    s = add("center", cmd_center, "center as affine diagram automorphisms")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--level", type=int)
    s.add_argument("--weight", type=_weight)

    s = add("character", cmd_character, "truncated graded character")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--weight", type=_weight, required=True)
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--method", choices=("weyl_kac", "freudenthal"), default="weyl_kac")

    s = add("branch", cmd_branch, "branching of so(dim g) level 1 into g at level h^vee")
    s.add_argument("algebra", type=_algebra)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--target-weight", type=_weight)
    s.add_argument("--method", choices=("weyl_kac", "freudenthal"), default="weyl_kac")

    s = add("theta", cmd_theta, "even and odd theta characteristics")
    s.add_argument("--genus", type=int, required=True)

    s = add("casimir", cmd_casimir, "Killing form and Casimir tensor")
    s.add_argument("algebra", type=_algebra)

    add("selftest", cmd_selftest, "run the acceptance suite")
    return p


def _query(args: argparse.Namespace) -> dict:
    skip = {"func", "json"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip or v is None:
            continue
        out[k] = v.name if hasattr(v, "family") else v
    return out


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ParseError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        result, exact, provenance = args.func(args)
    except DomainError as exc:
        print(f"blockcount: domain error: {exc}", file=err)
        return 3
    except CrossCheckError as exc:
        print(f"blockcount: cross-check failed: {exc}", file=err)
        return 4
    code = 0
    if args.command == "selftest":
        code = 0 if all(line.startswith("PASS") for line in result) else 1
    if args.json:
        doc = {
            "schema": SCHEMA,
            "query": _jsonable(_query(args)),
            "result": _jsonable(result),
            "exact": exact,
            "provenance": provenance,
        }
        print(json.dumps(doc, sort_keys=True), file=out)
    elif args.command == "selftest":
        print("\n".join(result), file=out)
    elif isinstance(result, dict):
        for k, v in result.items():
            print(f"{k}: {_text(v)}", file=out)
    elif isinstance(result, list):
        for v in result:
            print(_text(v), file=out)
    else:
        print(_text(result), file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
