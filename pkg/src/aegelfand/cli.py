"""Command-line front end.

Every verb prints one JSON document on stdout::

    {"schema": 1, "verb": ..., "inputs_echo": {...}, "result": ...}

with an ``error`` object instead of a result on failure.  Exit status is 0
for any computed answer (false and "not found" included), 2 for parse and
usage errors, 3 for violated preconditions, and 1 when a suite has failing
properties.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import aefun, certify, finitetop, gelfand, localization, poring
from .errors import (
    AegelfandError,
    BudgetExceeded,
    MixedRings,
    ParseError,
    PreconditionFailed,
    UnsupportedInstance,
)
from .exact import parse_interval, parse_point, parse_poly, parse_ratfun
from .exact.roots import Infinity

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _q(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _ring(name: str):
    try:
        return poring.get_instance(name)
    except (KeyError, ValueError) as e:
        raise UsageError(f"unknown ring {name!r}") from e


def _elem(R, text: str):
    return R.parse(text)


def _split_fraction(R, text: str):
    """``p ; q`` or an inline quotient; returns the two ring elements."""
    if ";" in text and not text.strip().startswith("piecewise"):
        p, q = text.split(";", 1)
        return R.parse(p), R.parse(q)
    if isinstance(R, (poring.PolyRing, poring.GermRing)):
        f = parse_ratfun(text)
        return R.elem(f.num), R.elem(f.den)
    return R.parse(text), R.one()


def _pair_json(a: localization.LocPair) -> dict:
    return {"num": str(a.num), "den": str(a.den), "text": str(a)}


# ---------------------------------------------------------------------------
# verbs


def cmd_order(args):
    R = _ring(args.ring)
    return poring.leq(R, _elem(R, args.lhs), _elem(R, args.rhs))


def cmd_loc(args):
    R = _ring(args.ring)
    a = localization.make_loc(R, *_split_fraction(R, args.frac))
    if args.op == "show":
        out = _pair_json(a)
        out["in_cone"] = localization.loc_in_cone(a)
        return out
    if args.other is None:
        raise UsageError(f"--op {args.op} needs --other")
    b = localization.make_loc(R, *_split_fraction(R, args.other))
    if args.op == "add":
        return _pair_json(a + b)
    if args.op == "mul":
        return _pair_json(a * b)
    if args.op == "leq":
        return localization.loc_leq(a, b)
    return localization.loc_eq(a, b)


def cmd_ddagger(args):
    R = _ring(args.ring)
    r = _elem(R, args.elem)
    h = _elem(R, args.witness) if args.witness is not None else None
    v = poring.ddagger_decide(R, poring.DdaggerQuery(r, h, args.kbudget))
    out = {"verdict": v.name}
    if isinstance(v, poring.InConeClosure):
        out["witness"] = str(v.witness)
    if isinstance(v, poring.Unknown):
        out["reason"] = v.reason
    if h is not None:
        fail = poring.ddagger_probe(R, r, h, args.kbudget)
        out["probe"] = {"k_budget": args.kbudget, "first_failure": fail}
    return out


def cmd_bound(args):
    R = _ring(args.ring)
    a = localization.make_loc(R, *_split_fraction(R, args.frac))
    if isinstance(R, poring.GermRing):
        return {"verdict": "Bounded", "n": localization.germ_bound(a), "least": False}
    v = localization.bdd_member(a)
    if isinstance(v, localization.Bounded):
        return {"verdict": "Bounded", "n": v.n, "least": True}
    return {"verdict": "Unbounded"}


def _eval_key(text: str) -> str:
    return "value_at_" + text.strip()


def cmd_gelfand(args):
    R = _ring(args.ring)
    r = _elem(R, args.elem)
    s = _elem(R, args.s) if args.s is not None else None
    t = gelfand.gelfand_transform(r, s)
    out = {"transform": str(t)}
    for e in args.eval or ():
        pt = parse_point(e)
        if not isinstance(pt, (Fraction, Infinity)):
            raise UsageError(f"--eval takes rationals or inf, not {e!r}")
        if isinstance(pt, Infinity):
            pt = "inf"
        v = t.value_at(pt)
        out[_eval_key(e)] = "undefined" if v is None else _q(v)
    exc = aefun.max_domain(t)
    out["max_domain_excludes"] = [aefun._point_json(p) for p in exc.points] + (["inf"] if exc.infinity else [])
    return out


def cmd_certify(args):
    p = parse_poly(args.poly)
    iv = parse_interval(args.interval)
    res = certify.find_certificate(p, iv, args.dmax)
    if isinstance(res, certify.HandelmanCertificate):
        out = res.to_json()
        out["status"] = "Certificate"
        out["verified"] = certify.verify_certificate(p, res)
        return out
    if isinstance(res, certify.NotPositive):
        return {
            "status": "NotPositive",
            "witness": _q(res.witness),
            "value": _q(res.value),
            "region": [aefun._point_json(x) for x in res.region],
        }
    return {"status": "NotFoundUpTo", "dmax": res.d_max}


def cmd_identities(args):
    params = {k: v for k, v in (("k", args.k), ("l", args.l), ("n", args.n)) if v is not None}
    need = poring.IDENTITIES.get(args.name, (None, None))[0]
    if need in ("k", "l") and need not in params:
        raise UsageError(f"identity {args.name} needs --{need}")
    res = poring.verify_identity(args.name, **params)
    return res.name, {"lhs": str(res.lhs), "rhs": str(res.rhs)} if isinstance(res, poring.Verified) else {
        "diff": str(res.diff)
    }


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{what} is not valid JSON: {e}") from None


def _space(args) -> finitetop.FiniteSpace:
    if args.space is None:
        raise UsageError("--space is required")
    try:
        return finitetop.FiniteSpace.from_json(_load_json(args.space, "--space"))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"bad space description: {e}") from None


def _family(X, text, default):
    if text is None:
        return default
    return finitetop.DomainFamily(X, _load_json(text, "family"))


def _pool(text: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad value pool {text!r}") from None


def cmd_finitetop(args):
    pool = _pool(args.pool)
    if args.check == "exhaustive":
        holds = families = 0
        failures = []
        for n in range(1, args.max_points + 1):
            for X in finitetop.topologies(n):
                for D in finitetop.admissible_families(X):
                    families += 1
                    r = finitetop.strong_loc_bruteforce(D, pool)
                    if isinstance(r, finitetop.Holds):
                        holds += 1
                    else:
                        failures.append({"space": X.to_json(), "family": D.to_json()})
                if not finitetop.max_rep_uniqueness_check(X, pool):
                    failures.append({"space": X.to_json(), "max_representative": False})
        return {"families": families, "holds": holds, "failures": failures}
    X = _space(args)
    if args.check == "opens":
        ops = finitetop.opens(X)
        return {
            "opens": [sorted(map(str, A)) for A in ops],
            "dense": [sorted(map(str, A)) for A in ops if finitetop.is_dense(X, A)],
        }
    if args.check == "components":
        A = _load_json(args.set, "--set") if args.set is not None else list(X.points)
        return [sorted(map(str, c)) for c in finitetop.components(X, A)]
    D = _family(X, args.family, finitetop.dense_open_family(X))
    if args.check == "strong_loc":
        r = finitetop.strong_loc_bruteforce(D, pool)
        if isinstance(r, finitetop.Holds):
            return {"verdict": "Holds", "pairs_checked": r.pairs_checked, "trivial_ring": r.trivial_ring}
        return {"verdict": "Counterexample", "f": str(r.f), "g": str(r.g)}
    if args.check == "max_rep":
        return finitetop.max_rep_uniqueness_check(X, pool)
    # embedding of --subfamily into the family
    if args.subfamily is None:
        raise UsageError("--check embedding needs --subfamily")
    Dp = finitetop.DomainFamily(X, _load_json(args.subfamily, "--subfamily"))
    return finitetop.inclusion_embedding_check(Dp, D, pool=pool)


def cmd_lattice(args):
    R = poring.AE
    a, b = _elem(R, args.lhs).payload, _elem(R, args.rhs).payload
    if args.op == "sup":
        return str(aefun.sup(a, b))
    if args.op == "inf":
        return str(aefun.inf(a, b))
    if args.op == "leq":
        return aefun.ae_leq(a, b)
    if args.third is None:
        raise UsageError("--op fring needs --third")
    return aefun.f_ring_condition_check(a, b, _elem(R, args.third).payload)


def cmd_suite(args):
    from .suite import run_suite

    try:
        rep = run_suite(args.name, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return rep.to_json(), (EXIT_OK if rep.ok else EXIT_FAIL)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="aegelfand", description="Exact computations with partially ordered rings.")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("order", help="decide lhs <= rhs in a ring")
    p.add_argument("--ring", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("loc", help="fractions with localizable denominators")
    p.add_argument("--ring", required=True)
    p.add_argument("--frac", required=True, help='"p ; q" or "(p)/(q)"')
    p.add_argument("--other")
    p.add_argument("--op", choices=("show", "add", "mul", "leq", "eq"), default="show")
    p.set_defaults(func=cmd_loc)

    p = sub.add_parser("ddagger", help="membership in the closure of the positive cone")
    p.add_argument("--ring", required=True)
    p.add_argument("--elem", required=True)
    p.add_argument("--witness")
    p.add_argument("--kbudget", type=int, default=1000)
    p.set_defaults(func=cmd_ddagger)

    p = sub.add_parser("bound", help="least integer bound of a fraction")
    p.add_argument("--ring", required=True)
    p.add_argument("--frac", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("gelfand", help="transform of an element and its values")
    p.add_argument("--ring", required=True)
    p.add_argument("--elem", required=True)
    p.add_argument("--s", help="dominating denominator (default 2 + 2 r^2)")
    p.add_argument("--eval", action="append")
    p.set_defaults(func=cmd_gelfand)

    p = sub.add_parser("certify", help="positivity certificate on an interval")
    p.add_argument("--poly", required=True)
    p.add_argument("--interval", required=True)
    p.add_argument("--dmax", type=int, default=64)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("identities", help="symbolic verification of a proof identity")
    p.add_argument("--name", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("finitetop", help="finite-space oracle")
    p.add_argument("--space", help="JSON {points, min_open}")
    p.add_argument("--family", help="JSON list of point lists (default: dense opens)")
    p.add_argument("--subfamily")
    p.add_argument("--set", help="JSON point list for --check components")
    p.add_argument("--pool", default="-2,-1,0,1,2")
    p.add_argument(
        "--check",
        choices=("opens", "components", "strong_loc", "max_rep", "embedding", "exhaustive"),
        default="opens",
    )
    p.add_argument("--max-points", type=int, default=4, dest="max_points")
    p.set_defaults(func=cmd_finitetop)

    p = sub.add_parser("lattice", help="lattice operations on a.e. classes")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--third")
    p.add_argument("--op", choices=("sup", "inf", "leq", "fring"), default="sup")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("suite", help="seeded property suites")
    p.add_argument("--name", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)
    return ap


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "verb")}


_FLAGS = {"--help"}


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Join ``--opt -x^2`` into ``--opt=-x^2``; options here are all long-form."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok.startswith("--")
            and "=" not in tok
            and tok not in _FLAGS
            and nxt is not None
            and nxt.startswith("-")
            and not nxt.startswith("--")
            and nxt != "-h"
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None) -> tuple[dict, int]:
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    doc = {"schema": SCHEMA, "verb": argv[0] if argv and not argv[0].startswith("-") else None, "inputs_echo": {}}
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        doc["error"] = {"type": "UsageError", "message": str(e)}
        return doc, EXIT_USAGE
    doc["verb"], doc["inputs_echo"] = args.verb, _echo(args)
    code = EXIT_OK
    try:
        res = args.func(args)
        if args.verb == "identities":
            res, detail = res
            doc["detail"] = detail
        elif args.verb == "suite":
            res, code = res
        doc["result"] = res
    except PreconditionFailed as e:
        doc["error"] = {"type": type(e).__name__, "message": str(e)}
        code = EXIT_PRECONDITION
    except (UsageError, ParseError, MixedRings, UnsupportedInstance, BudgetExceeded, AegelfandError, ZeroDivisionError) as e:
        doc["error"] = {"type": type(e).__name__, "message": str(e)}
        code = EXIT_USAGE
    except (KeyError, ValueError) as e:
        doc["error"] = {"type": type(e).__name__, "message": str(e)}
        code = EXIT_USAGE
    return doc, code


def main(argv=None) -> int:
    doc, code = run(argv)
    sys.stdout.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")
    if "error" in doc:
        print(f"error: {doc['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
