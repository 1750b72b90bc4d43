"""Command-line frontend: ``hahnkit <command> ...``.

Descriptors are given as a path to a JSON file, inline JSON, or
``corpus:<name>`` for a built-in entry.  Elements and series use the text
syntax of :mod:`hahnkit.hahn.text`; an operand that names an existing file
is read from it.

Exit codes: 0 success, 1 property or corpus failure, 2 parse error,
3 semantic error, 4 arithmetic requested on a symbolic field.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import axioms
from .arith import rational_str
from .corpus import get as corpus_get
from .corpus import run_corpus
from .errors import DomainError, HahnkitError, NotApplicable, ParseError, SymbolicFieldError
from .hahn import field as HF
from .hahn.field import FieldDescriptor
from .hahn.series import Series, TruncatedSeries
from .hahn.text import format_element, format_series, parse_element, parse_series
from .oag import predicates as P
from .oag.definable import subgroup_from_hull_point
from .oag.element import Element
from .oag.group import (
    GroupDescriptor,
    canonical_cut,
    enumerate_cuts,
    g_cmp,
    g_divide,
    parse_cut,
    quotient,
    subgroup,
)
from .valuation.algebraic import RealAlgebraicCut
from .valuation.construction import (
    MonomialCut,
    ResidueCut,
    cut_ideal_member,
    cut_ring_falsify,
    cut_ring_member,
    square_leading_test,
    target_cut,
    validate_point,
)
from .valuation.valuations import classify_field

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAPABILITY = 0, 1, 2, 3, 4


# ---------------------------------------------------------------------------
# operand loading


def _read(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _load_json(arg: str):
    text = _read(arg)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None


def load_group(arg: str) -> GroupDescriptor:
    if arg.startswith("corpus:"):
        d = corpus_get(arg[len("corpus:"):])
        return d if isinstance(d, GroupDescriptor) else d.group
    data = _load_json(arg)
    if isinstance(data, dict) and "group" in data and "kind" not in data:
        return FieldDescriptor.from_json(data).group
    return GroupDescriptor.from_json(data)


def load_field(arg: str) -> FieldDescriptor:
    if arg.startswith("corpus:"):
        d = corpus_get(arg[len("corpus:"):])
        if isinstance(d, GroupDescriptor):
            return FieldDescriptor.rational(d)
        return d
    data = _load_json(arg)
    if isinstance(data, dict) and "kind" in data:
        return FieldDescriptor.rational(GroupDescriptor.from_json(data))
    return FieldDescriptor.from_json(data)


def _element(text: str, G: GroupDescriptor):
    return parse_element(_read(text), G)


def _series(text: str, F: FieldDescriptor) -> Series:
    return parse_series(_read(text), F.group)


def parse_polynomial(text: str, F: FieldDescriptor) -> list:
    """``z^2 - (4+t)`` into coefficient series, constant term first.

    Terms are split at top-level + and -; a term is either a series or
    ``[coeff] z[^k]`` where the coefficient is a rational, a bare series
    term, or a parenthesized series.
    """
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty polynomial", 0)
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(src):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and src[i - 1] != "^":
            terms.append((start, src[start:i]))
            start = i
    terms.append((start, src[start:]))
    coeffs = {}
    for at, term in terms:
        sign = 1
        body = term
        if body[:1] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        k = 0
        if "z" in body:
            head, _, tail = body.partition("z")
            if tail:
                if not tail.startswith("^") or not tail[1:].isdigit():
                    raise ParseError(f"bad power of z in {term!r}", at)
                k = int(tail[1:])
            else:
                k = 1
            head = head.rstrip("*")
            if head.startswith("(") and head.endswith(")"):
                head = head[1:-1]
            body = head or "1"
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        c = parse_series(body, F.group) * sign
        coeffs[k] = coeffs.get(k, Series()) + c
    out = [coeffs.get(k, Series()) for k in range(max(coeffs) + 1)]
    return out


# ---------------------------------------------------------------------------
# output


def _emit(args, payload, text: str):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False, default=_json_default))
    else:
        print(text)


def _json_default(obj):
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _trunc_text(y: TruncatedSeries, G: GroupDescriptor) -> str:
    body = format_series(y.body, G)
    if y.bound is None:
        return body
    return f"{body} + O(t^{format_element(y.bound, G, paren=True)})"


def _default_n(G: GroupDescriptor, g0) -> int:
    for n in range(1, 10_000):
        if G.contains(g0 * n):
            return n
    raise DomainError("no N <= 10000 puts N * g0 in G; pass --n")


# ---------------------------------------------------------------------------
# group commands


def cmd_group_predicates(args):
    G = load_group(args.group)
    primes = _primes(args.primes)
    facts = {
        "densely_ordered": P.is_densely_ordered(G),
        "discretely_ordered": P.is_discretely_ordered(G),
        "regular": P.is_regular(G),
        "dense_in_hull": P.is_dense_in_hull(G),
        "divisible": P.is_divisible(G),
        "hull_immediate": P.hull_immediate(G),
        "strongly_nip": P.is_strongly_nip(G),
        "has_limit_point_in_hull": P.has_limit_point_in_hull(G),
        "closed_in_hull": P.closed_in_hull_certificate(G).status,
        "p_divisible": {str(p): P.is_p_divisible(G, p) for p in primes},
        "max_p_divisible": {str(p): str(canonical_cut(G, P.maximal_p_divisible_convex_subgroup(G, p)))
                            for p in primes},
        "max_divisible": str(canonical_cut(G, P.maximal_divisible_convex_subgroup(G))),
    }
    lines = [f"group: {G}"] + [f"{k}: {v}" for k, v in facts.items()]
    _emit(args, facts, "\n".join(lines))


def _primes(text):
    if not text:
        return [2, 3, 5, 7]
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise ParseError(f"bad prime list {text!r}") from None


def cmd_group_element(args):
    G = load_group(args.group)
    a = _element(args.a, G)
    G.check(a)
    b = None
    if args.op in ("add", "cmp"):
        if args.b is None:
            raise DomainError(f"--op {args.op} needs two elements")
        b = _element(args.b, G)
        G.check(b)
    if args.op == "add":
        r = a + b
        _emit(args, {"result": r.to_json()}, format_element(r, G))
    elif args.op == "neg":
        r = -a
        _emit(args, {"result": r.to_json()}, format_element(r, G))
    elif args.op == "cmp":
        r = g_cmp(G, a, b)
        _emit(args, {"result": r}, r)
    elif args.op == "natval":
        r = a.nat_val
        _emit(args, {"result": r}, str(r))
    else:
        if args.n is None:
            raise DomainError("--op divide needs --n")
        r = g_divide(G, a, args.n)
        _emit(args, {"result": r.to_json() if r is not None else None},
              format_element(r, G) if r is not None else f"not divisible by {args.n} in G")


def cmd_group_subgroup(args):
    G = load_group(args.group)
    primes = _primes(args.primes)
    out = {
        "cuts": [str(c) for c in enumerate_cuts(G, args.horizon)],
        "max_divisible": str(canonical_cut(G, P.maximal_divisible_convex_subgroup(G))),
        "max_p_divisible": {str(p): str(canonical_cut(G, P.maximal_p_divisible_convex_subgroup(G, p)))
                            for p in primes},
    }
    lines = [f"group: {G}", "cuts: " + ", ".join(out["cuts"]),
             f"max divisible: {out['max_divisible']}"]
    lines += [f"max {p}-divisible: {c}" for p, c in out["max_p_divisible"].items()]
    if args.cut:
        cut = canonical_cut(G, parse_cut(args.cut))
        H, Q = subgroup(G, cut), quotient(G, cut)
        out.update({"cut": str(cut), "subgroup": H.to_json(), "quotient": Q.to_json()})
        lines += [f"cut: {cut}", f"subgroup: {H}", f"quotient: {Q}"]
    _emit(args, out, "\n".join(lines))


def cmd_group_definable(args):
    G = load_group(args.group)
    g0 = _element(args.g0, G)
    n = args.n if args.n is not None else _default_n(G, g0)
    d = subgroup_from_hull_point(G, g0, n, samples=args.samples, seed=args.seed)
    payload = d.to_json()
    payload["subgroup"] = subgroup(G, d.cut).to_json()
    _emit(args, payload, f"cut {d.cut}; subgroup {subgroup(G, d.cut)}")


# ---------------------------------------------------------------------------
# hahn commands


def cmd_hahn_eval(args):
    F = load_field(args.field)
    F.require_arithmetic()
    x = _series(args.x, F)
    F.check(x)
    if args.op in ("add", "mul"):
        if args.y is None:
            raise DomainError(f"--op {args.op} needs two series")
        y = _series(args.y, F)
        r = HF.s_add(F, x, y) if args.op == "add" else HF.s_mul(F, x, y)
        _emit(args, {"result": r.to_json()}, format_series(r, F.group))
    elif args.op == "neg":
        r = HF.s_neg(F, x)
        _emit(args, {"result": r.to_json()}, format_series(r, F.group))
    elif args.op == "sign":
        s = HF.sign(F, x)
        _emit(args, {"result": s}, str(s))
    else:
        v = HF.vmin(F, x)
        _emit(args, {"result": v.to_json()}, format_element(v, F.group))


def _bound(text, F):
    return None if text is None else _element(text, F.group)


def cmd_hahn_invert(args):
    F = load_field(args.field)
    x = _series(args.x, F)
    y = HF.s_inv(F, x, _bound(args.bound, F))
    _emit(args, y.to_json(), _trunc_text(y, F.group))


def cmd_hahn_root(args):
    F = load_field(args.field)
    x = _series(args.x, F)
    y = HF.hensel_root(F, x, args.p, _bound(args.bound, F))
    _emit(args, y.to_json(), format_series(y.body, F.group))


def cmd_hahn_square_test(args):
    F = load_field(args.field)
    x = _series(args.x, F)
    r = square_leading_test(F, x)
    payload = {"holds": r.holds, "witness": r.witness.to_json() if r.witness else None}
    text = f"holds = {str(r.holds).lower()}"
    if r.witness is not None:
        text += f"; y = {format_series(r.witness.body, F.group)}"
    _emit(args, payload, text)


def _cut_point(args, F):
    if (args.g0 is None) == (args.sqrt is None):
        raise DomainError("give exactly one of --g0 and --sqrt")
    if args.sqrt is not None:
        return ResidueCut(RealAlgebraicCut(args.sqrt))
    g0 = _element(args.g0, F.group)
    n = args.n if args.n is not None else _default_n(F.group, g0)
    return MonomialCut(g0, n)


def cmd_hahn_cut_ring(args):
    F = load_field(args.field)
    point = _cut_point(args, F)
    case = validate_point(F, point, args.case)
    x = _series(args.x, F)
    member = cut_ring_member(F, point, x, args.case)
    payload = {"case": case, "cut": str(target_cut(F, point)), "member": member}
    text = [f"case {case}; ring of the coarsening {target_cut(F, point)}", f"member = {str(member).lower()}"]
    if isinstance(point, ResidueCut):
        ideal = cut_ideal_member(F, point, x)
        payload["ideal_member"] = ideal
        text.append(f"ideal member = {str(ideal).lower()}")
    if not member:
        w = cut_ring_falsify(F, point, x, samples=args.samples, seed=args.seed)
        if w is not None:
            payload["witness"] = {k: (format_series(v, F.group) if isinstance(v, Series) else rational_str(v))
                                  for k, v in w.items()}
            text.append("witness: " + ", ".join(f"{k} = {v}" for k, v in payload["witness"].items()))
        else:
            payload["witness"] = None
            text.append("witness: none found at this budget")
    _emit(args, payload, "\n".join(text))


def cmd_density(args):
    F = load_field(args.field)
    coeffs = parse_polynomial(args.poly, F)
    a, b, eps = _series(args.a, F), _series(args.b, F), _series(args.eps, F)
    r = axioms.check_density_axiom(F, coeffs, a, b, eps, _bound(args.bound, F), budget=args.budget)
    payload = {"z": r.z.to_json() if r.z is not None else None, "steps": r.steps, "note": r.note}
    text = f"z = {format_series(r.z, F.group)} after {r.steps} steps" if r.z is not None else \
        f"no witness at budget {args.budget}"
    _emit(args, payload, text)


# ---------------------------------------------------------------------------
# classify, corpus, check


def cmd_classify(args):
    F = load_field(args.field)
    primes = _primes(args.primes) if args.primes else None
    rep = classify_field(F, primes=primes, horizon=args.horizon)
    _emit(args, rep.to_json(), rep.to_text())


def cmd_corpus(args):
    rep = run_corpus(args.source)
    _emit(args, rep.to_json(), rep.to_text())
    if not rep.ok:
        return EXIT_FAIL
    return EXIT_OK


def cmd_check_regularity(args):
    G = load_group(args.group)
    rep = axioms.sample_regularity(G, args.nmax, args.samples, args.seed)
    payload = rep.to_json()
    payload["is_regular"] = P.is_regular(G)
    payload["agrees"] = rep.all_hold == payload["is_regular"]
    lines = [f"group: {G}", f"all_hold: {rep.all_hold}", f"is_regular: {payload['is_regular']}",
             f"counterexamples: {len(rep.counterexamples)}"]
    for c in rep.counterexamples:
        a, b = Element.from_json(c["a"]), Element.from_json(c["b"])
        lines.append(f"  n={c['n']}: [{format_element(a, G)}, {format_element(b, G)}] has n points but no n*c")
    _emit(args, payload, "\n".join(lines))
    if rep.note:
        print(rep.note, file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_check_limit_zero(args):
    G = load_group(args.group)
    g = _element(args.g, G)
    h = axioms.limit_point_zero_sample(G, g, args.seed, args.budget)
    _emit(args, {"h": h.to_json() if h is not None else None},
          format_element(h, G) if h is not None else f"no h with 0 < h < g at budget {args.budget}")


def cmd_check_probe(args):
    F = load_field(args.field)
    base = _series(args.base, F)
    n = axioms.root_support_probe(F, base, args.p, args.N)
    _emit(args, {"terms": n}, str(n))


# ---------------------------------------------------------------------------
# parser


def _shield(argv):
    """Keep operands such as ``-t^2`` from being read as options."""
    out = []
    for tok in argv:
        if tok.startswith("-") and not tok.startswith("--") and tok not in ("-p", "-h"):
            out.append(" " + tok)
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get("OAG_SEED", "0"))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=default_seed)
    seeded.add_argument("--samples", type=int, default=500)

    parser = argparse.ArgumentParser(prog="hahnkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="ordered abelian group descriptors").add_subparsers(dest="sub", required=True)
    p = group.add_parser("predicates", parents=[common])
    p.add_argument("group")
    p.add_argument("--primes")
    p.set_defaults(func=cmd_group_predicates)
    p = group.add_parser("element", parents=[common])
    p.add_argument("group")
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.add_argument("--op", choices=("add", "neg", "cmp", "natval", "divide"), required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_group_element)
    p = group.add_parser("subgroup", parents=[common])
    p.add_argument("group")
    p.add_argument("--cut")
    p.add_argument("--primes")
    p.add_argument("--horizon", type=int, default=4)
    p.set_defaults(func=cmd_group_subgroup)
    p = group.add_parser("definable", parents=[common, seeded], help="definable convex subgroup from a hull point")
    p.add_argument("group")
    p.add_argument("--g0", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_group_definable)

    hahn = sub.add_parser("hahn", help="Hahn series arithmetic").add_subparsers(dest="sub", required=True)
    p = hahn.add_parser("eval", parents=[common])
    p.add_argument("--op", choices=("add", "mul", "neg", "sign", "vmin"), required=True)
    p.add_argument("x")
    p.add_argument("rest", nargs="+", metavar="[y] field")
    p.set_defaults(func=cmd_hahn_eval)
    p = hahn.add_parser("invert", parents=[common])
    p.add_argument("x")
    p.add_argument("field")
    p.add_argument("--bound")
    p.set_defaults(func=cmd_hahn_invert)
    p = hahn.add_parser("root", parents=[common])
    p.add_argument("x")
    p.add_argument("field")
    p.add_argument("-p", type=int, default=2)
    p.add_argument("--bound")
    p.set_defaults(func=cmd_hahn_root)
    p = hahn.add_parser("square-test", parents=[common], help="x = 0 or x is a square up to higher terms")
    p.add_argument("x")
    p.add_argument("field")
    p.set_defaults(func=cmd_hahn_square_test)
    p = hahn.add_parser("cut-ring", parents=[common, seeded], help="valuation ring defined from a cut")
    p.add_argument("field")
    p.add_argument("--x", required=True)
    p.add_argument("--g0")
    p.add_argument("--n", type=int)
    p.add_argument("--sqrt")
    p.add_argument("--case", type=int, choices=(1, 2, 3))
    p.set_defaults(func=cmd_hahn_cut_ring)
    _density_args(hahn.add_parser("density-axiom", parents=[common]))

    p = sub.add_parser("classify", parents=[common], help="definability report for a field")
    p.add_argument("field")
    p.add_argument("--primes")
    p.add_argument("--horizon", type=int, default=4)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("corpus", parents=[common], help="check the built-in catalog")
    p.add_argument("--source", choices=("literature", "derived", "trivial"),
                   help="only check expectations of this kind")
    p.set_defaults(func=cmd_corpus)

    check = sub.add_parser("check", help="axiom-scheme checks").add_subparsers(dest="sub", required=True)
    p = check.add_parser("regularity", parents=[common, seeded])
    p.add_argument("group")
    p.add_argument("--nmax", type=int, default=7)
    p.set_defaults(func=cmd_check_regularity)
    p = check.add_parser("density", parents=[common])
    _density_args(p)
    p = check.add_parser("limit-zero", parents=[common])
    p.add_argument("group")
    p.add_argument("--g", required=True)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--budget", type=int, default=500)
    p.set_defaults(func=cmd_check_limit_zero)
    p = check.add_parser("probe", parents=[common])
    p.add_argument("field")
    p.add_argument("--base", required=True)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("--N", type=int, default=10)
    p.set_defaults(func=cmd_check_probe)
    return parser


def _density_args(p):
    p.add_argument("field")
    p.add_argument("--poly", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--bound")
    p.add_argument("--budget", type=int, default=64)
    p.set_defaults(func=cmd_density)


def _fix_eval_operands(args):
    if getattr(args, "func", None) is cmd_hahn_eval:
        rest = args.rest
        if len(rest) > 2:
            raise ParseError("eval takes at most two series and a field")
        args.field = rest[-1]
        args.y = rest[0] if len(rest) == 2 else None


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_shield(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _fix_eval_operands(args)
        code = args.func(args)
        return EXIT_OK if code is None else code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SymbolicFieldError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except NotApplicable as exc:
        print(f"{exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, HahnkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
