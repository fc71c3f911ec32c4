"""Command-line interface: ``frobhom <command> ...``.

Exit status: 0 on success, 1 when a mathematical check fails (the witness is
printed), 2 on malformed input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import FinAlgebra, Functional
from .checks import DEFAULT_SEED, verify_all
from .errors import FrobError, InputError, MathError
from .frobenius import (
    PhiEvaluator,
    fn_polynomial,
    operator_identities,
    phi_cycle_sum,
    phi_polarized,
)
from .groups import (
    CharacterTable,
    FiniteGroup,
    group_determinant,
    isomorphic,
    k_character,
    kchars_from_json,
    kchars_to_json,
    mansfield_reconstruct,
    phi_group_determinant,
    recover_group_data,
    verify_factorization,
)
from .multisym import embedding_dimension, express, syzygy_generator_check
from .partitions import amalgamated_unions, verify_lemma10
from .poly import PolySyntaxError, parse
from .scalars import format_scalar
from .symprod import decompose_json


class _Failure(Exception):
    """A check ran and returned false; carries the payload to print."""

    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}") from None


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _indices(text: str) -> list:
    try:
        return [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated basis indices, got {text!r}") from None


# commands ---------------------------------------------------------------------

def cmd_phi(args):
    alg = FinAlgebra.from_json(_load_json(args.algebra), args.cyclotomic)
    f = Functional.from_json(_load_json(args.functional), args.cyclotomic)
    ev = PhiEvaluator(alg, f)
    idx = _indices(args.tuple)
    if any(not 0 <= i < alg.dim for i in idx) or not idx:
        raise InputError(f"basis indices must lie in 1..{alg.dim}")
    vecs = [alg.e(i) for i in idx]
    values = {"recursive": ev.phi(vecs)}
    if ev.tracial:
        values["cycle_sum"] = phi_cycle_sum(ev, vecs)
        values["polarized"] = phi_polarized(ev, vecs)
    out = {"k": len(idx), "tuple": [i + 1 for i in idx],
           "values": {k: format_scalar(v) for k, v in values.items()}}
    if len(set(values.values())) != 1:
        raise _Failure({"error": "routes disagree", **out})
    return out, format_scalar(values["recursive"])


def cmd_fn(args):
    if args.n < 0:
        raise InputError("--n must be >= 0")
    F = fn_polynomial(args.n)
    return {"n": args.n, "poly": str(F)}, str(F)


def cmd_ops_check(args):
    if args.n_max < 1:
        raise InputError("--n-max must be >= 1")
    rep = operator_identities(args.n_max)
    if not rep["pass"]:
        raise _Failure(rep)
    return rep, f"operator identities hold for n <= {args.n_max}"


def cmd_lemma10(args):
    ok = verify_lemma10(args.nx, args.ny)
    out = {"check": "lemma10", "nx": args.nx, "ny": args.ny,
           "unions": len(amalgamated_unions(args.nx, args.ny)), "pass": ok}
    if not ok:
        raise _Failure(out)
    return out, f"identity holds for nx={args.nx}, ny={args.ny} ({out['unions']} unions)"


def cmd_decompose(args):
    out = decompose_json(_load_json(args.input))
    text = " ".join(f"{k}^{v}" if v > 1 else k for k, v in out["multiset"].items())
    return out, "{" + text + "}"


def _group(path):
    return FiniteGroup.from_json(_load_json(path))


def cmd_group_validate(args):
    G = _group(args.input)
    return {"valid": True, "order": G.n}, f"valid group of order {G.n}"


def cmd_group_det(args):
    G = _group(args.input)
    D = phi_group_determinant(G, raw=args.raw) if args.route == "phi" else group_determinant(G)
    return {"order": G.n, "route": args.route, "raw": args.raw, "det": str(D)}, str(D)


def cmd_group_kchar(args):
    G = _group(args.input)
    normalized = not args.raw
    if args.bundle:
        ks = [k_character(G, k, normalized) for k in (1, 2, 3)]
        out = kchars_to_json(*ks)
        return out, json.dumps(out)
    if args.k is None:
        raise InputError("--k is required unless --bundle is given")
    kc = k_character(G, args.k, normalized)
    out = kc.to_json()
    lines = [f"({','.join(str(i + 1) for i in idx)}) {format_scalar(v)}"
             for idx, v in sorted(kc.values.items())]
    return out, "\n".join(lines)


def cmd_group_factorize(args):
    G = _group(args.input)
    table = CharacterTable.from_json(_load_json(args.chartable))
    ok = verify_factorization(G, table)
    out = {"check": "factorization", "order": G.n, "pass": ok}
    if not ok:
        raise _Failure(out)
    return out, "product of character factors equals the group determinant"


def cmd_group_reconstruct(args):
    k1, k2, k3 = kchars_from_json(_load_json(args.from_kchars))
    data = recover_group_data(k1, k2, k3)
    groups = mansfield_reconstruct(data.pair_sets)
    out = {"identity": data.identity + 1,
           "inverses": [i + 1 for i in data.inverses],
           "tables": [G.to_json()["table"] for G in groups]}
    text = []
    for n, G in enumerate(groups, start=1):
        text.append(f"table {n}:")
        text.extend(" ".join(str(x + 1) for x in row) for row in G.table)
    return out, "\n".join(text)


def cmd_group_isomorphic(args):
    G, H = _group(args.a), _group(args.b)
    ok = isomorphic(G, H)
    out = {"isomorphic": ok}
    if not ok:
        raise _Failure(out)
    return out, "isomorphic"


def cmd_multisym_express(args):
    try:
        p = parse(_read_text(args.poly))
    except PolySyntaxError as exc:
        raise InputError(str(exc)) from None
    q = express(p, args.n, args.m)
    return {"n": args.n, "m": args.m, "poly": str(q)}, str(q)


def _omegas(text: str):
    try:
        return [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise InputError(f"omegas must look like '1,0;0,1;1,1', got {text!r}") from None


def cmd_multisym_syzygy(args):
    omegas = _omegas(args.omegas)
    ok = syzygy_generator_check(omegas, args.n, args.m)
    out = {"check": "syzygy", "n": args.n, "m": args.m,
           "omegas": [list(w) for w in omegas], "pass": ok}
    if not ok:
        raise _Failure(out)
    return out, "image vanishes"


def cmd_multisym_dim(args):
    d = embedding_dimension(args.n, args.m)
    return {"n": args.n, "m": args.m, "dimension": d}, str(d)


def cmd_verify_all(args):
    report = verify_all(args.scale, args.seed)
    out = report.to_json(args.timings)
    if not report.passed:
        raise _Failure(out)
    return out, report.to_text(args.timings)


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobhom", description="Exact computations with Frobenius n-homomorphisms.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized checks (default %(default)s)")
    # the global flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="Phi_k on a tuple of basis elements")
    p.add_argument("--algebra", required=True, help="algebra JSON file")
    p.add_argument("--functional", required=True, help="functional JSON file")
    p.add_argument("--tuple", required=True, help="1-based basis indices, e.g. 1,2,2")
    p.add_argument("--cyclotomic", type=int, default=None,
                   help="read 'w' in scalars as a primitive N-th root of unity")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("fn", parents=[common], help="print the polynomial F_n in s1..sn")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_fn)

    p = sub.add_parser("ops-check", parents=[common], help="verify the differential identities for F_n")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_ops_check)

    p = sub.add_parser("lemma10", help="amalgamated-union identity for chi")
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, required=True)
    p.set_defaults(func=cmd_lemma10)

    p = sub.add_parser("decompose", parents=[common], help="point multiset of an n-homomorphism on a finite space")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_decompose)

    g = sub.add_parser("group", parents=[common], help="finite group tools").add_subparsers(
        dest="group_command", required=True)
    p = g.add_parser("validate", parents=[common])
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_group_validate)
    p = g.add_parser("det", parents=[common])
    p.add_argument("--input", required=True)
    p.add_argument("--route", choices=("table", "phi"), default="table")
    p.add_argument("--raw", action="store_true", help="with --route phi: omit the 1/n! factor")
    p.set_defaults(func=cmd_group_det)
    p = g.add_parser("kchar", parents=[common])
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, choices=(1, 2, 3))
    p.add_argument("--raw", action="store_true", help="use chi instead of chi/n")
    p.add_argument("--bundle", action="store_true",
                   help="emit Phi_1, Phi_2, Phi_3 in the reconstruct input format")
    p.set_defaults(func=cmd_group_kchar)
    p = g.add_parser("factorize", parents=[common])
    p.add_argument("--input", required=True)
    p.add_argument("--chartable", required=True)
    p.set_defaults(func=cmd_group_factorize)
    p = g.add_parser("reconstruct", parents=[common])
    p.add_argument("--from-kchars", required=True)
    p.set_defaults(func=cmd_group_reconstruct)
    p = g.add_parser("isomorphic", parents=[common])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_group_isomorphic)

    ms = sub.add_parser("multisym", parents=[common], help="multi-symmetric polynomials").add_subparsers(
        dest="multisym_command", required=True)
    p = ms.add_parser("express", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--poly", required=True, help="file holding a polynomial in x<j>_<k>")
    p.set_defaults(func=cmd_multisym_express)
    p = ms.add_parser("syzygy", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--omegas", required=True, help="n+1 multi-indices, e.g. '1,0;0,1;1,1'")
    p.set_defaults(func=cmd_multisym_syzygy)
    p = ms.add_parser("dim", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_multisym_dim)

    p = sub.add_parser("verify-all", parents=[common], help="run every check and print a report")
    p.add_argument("--scale", choices=("small", "full"), default="small")
    p.add_argument("--timings", action="store_true", help="include elapsed times")
    p.set_defaults(func=cmd_verify_all)
    return parser


def _emit(fmt: str, payload, text: str | None, stream=None):
    stream = stream or sys.stdout
    if fmt == "json" or text is None:
        print(json.dumps(payload, indent=2, sort_keys=False), file=stream)
    else:
        print(text, file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = args.func(args)
    except _Failure as fail:
        _emit("json", fail.payload, None)
        return 1
    except InputError as exc:
        _emit("json", {"error": type(exc).__name__, "message": str(exc),
                       "witness": exc.witness}, None, sys.stderr)
        return 2
    except MathError as exc:
        _emit("json", {"error": type(exc).__name__, "message": str(exc),
                       "witness": exc.witness}, None)
        return 1
    except FrobError as exc:  # pragma: no cover - every error is one of the two above
        _emit("json", {"error": type(exc).__name__, "message": str(exc)}, None, sys.stderr)
        return 2
    _emit(args.format, payload, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
