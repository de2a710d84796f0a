"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 mathematical precondition
violated, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .apolarity import (
    ArtinAlgebra,
    DualGenerator,
    annihilating_scheme_probe,
    colon_dual,
    quotient_by_linear_hf,
)
from .errors import ArtinlefError, ParseError, PreconditionError
from .fields import FieldSpec
from .lefschetz import (
    generic_verdict,
    hessian_det_at,
    is_cone,
    jordan_type,
    quotient_basis,
    verdict_at,
)
from .polyring import LinearForm, Polynomial, monomial_basis, parse_linear_form, parse_polynomial
from .sequences import (
    conjugate_partition,
    enumerate_gorenstein_sequences,
    invariants,
    is_codim3_gorenstein_sequence,
    is_O_sequence,
    is_SI_sequence,
    theorem_coverage,
)
from .suite import run_suite

SCHEMA_VERSION = "1"


class UsageError(ArtinlefError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


class Report:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.result: dict = {}
        self.warnings: list[str] = []
        self.lines: list[str] = []
        self.exit_code = 0

    def line(self, text: str = ""):
        self.lines.append(text)

    def to_json(self) -> str:
        doc = {"input": dict(self.inputs, command=self.command), "result": self.result,
               "warnings": self.warnings, "version": SCHEMA_VERSION}
        return json.dumps(_jsonable(doc), indent=2)

    def to_text(self) -> str:
        out = list(self.lines)
        out.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(out)


# ---------------------------------------------------------------- inputs

def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.char, max_prime=args.max_prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _algebra(args) -> ArtinAlgebra:
    field = _field(args)
    if args.dual is not None:
        F = parse_polynomial(args.dual, args.vars, field)
        if F.is_zero():
            raise PreconditionError("dual generator reduces to zero in this characteristic")
        return ArtinAlgebra.from_dual(DualGenerator(F))
    gens = [parse_polynomial(g, args.vars, field) for g in _split(args.ideal)]
    for g, text in zip(gens, _split(args.ideal)):
        if len(g) != 1:
            raise ParseError(f"ideal generator {text!r} is not a monomial")
    return ArtinAlgebra.from_monomial_ideal(gens, field, args.vars)


def _split(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    if not all(parts):
        raise ParseError(f"empty entry in list {text!r}")
    return parts


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    try:
        return tuple(int(p) for p in _split(text))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _algebra_inputs(args) -> dict:
    return {"char": args.char, "vars": args.vars, "dual": args.dual, "ideal": args.ideal}


def _char0_caveat(rep: Report, A, tag):
    if tag and tag.startswith("SL-char0") and A.field.characteristic:
        rep.warnings.append(f"coverage tag {tag} is a characteristic-zero statement; "
                            f"it says nothing about {A.field!r}")


def _tag(T):
    try:
        if is_codim3_gorenstein_sequence(T):
            return theorem_coverage(T)
    except ArtinlefError:
        pass
    return None


# ---------------------------------------------------------------- commands

def cmd_hf(args, rep: Report):
    A = _algebra(args)
    inv = invariants(A.hilbert, A.nvars)
    tag = _tag(A.hilbert)
    rep.result = {"hilbert": list(A.hilbert), "dim": A.dim, "invariants": inv.as_dict(),
                  "gorenstein": A.is_gorenstein, "coverage": tag}
    _char0_caveat(rep, A, tag)
    rep.line(f"algebra: {A.describe()} over {A.field!r}")
    rep.line(f"T = {A.hilbert}   dim = {A.dim}")
    rep.line("invariants: " + ", ".join(f"{k}={v}" for k, v in inv.as_dict().items()))
    rep.line(f"coverage: {tag}")


def _ell(args, A):
    if args.ell is None or args.ell == "generic":
        return None
    return parse_linear_form(args.ell, A.nvars, A.field)


def _verdict_lines(rep: Report, v, T):
    j = len(T) - 1
    rep.line(f"witness: {v.witness}   mode: {v.mode}   trials: {v.trials_used}   decisive: {v.decisive}")
    for e in v.strong_ranks:
        rep.line(f"  l^{e.k}: A_{e.i} -> A_{j - e.i}   rank {e.rank} / {e.expected}"
                 + ("" if e.full else "   NOT FULL"))
    for e in v.weak_ranks:
        rep.line(f"  l: A_{e.i} -> A_{e.i + 1}   rank {e.rank} / {e.expected}"
                 + ("" if e.full else "   NOT FULL"))
    rep.line(f"wl={v.wl}  sl={v.sl}  almost_sl={v.almost_sl}")
    for n in v.notes:
        rep.line(f"note: {n}")


def cmd_lefschetz(args, rep: Report):
    A = _algebra(args)
    ell = _ell(args, A)
    v = generic_verdict(A, args.trials, args.seed) if ell is None else verdict_at(A, ell)
    jt = jordan_type(A, v.witness)
    conj = conjugate_partition(A.hilbert)
    tag = _tag(A.hilbert)
    rep.inputs.update(ell=args.ell or "generic", trials=args.trials, seed=args.seed)
    rep.result = {"hilbert": list(A.hilbert), "verdict": v.as_dict(), "jordan_type": list(jt),
                  "conjugate": list(conj), "coverage": tag}
    if A.field.characteristic and v.mode == "generic" and A.mode == "dual" and not v.decisive:
        rep.warnings.append("finite field: generic properties are only sampled over F_p")
    _char0_caveat(rep, A, tag)
    rep.line(f"algebra: {A.describe()} over {A.field!r}")
    rep.line(f"T = {A.hilbert}")
    _verdict_lines(rep, v, A.hilbert)
    rep.line(f"jordan type: {jt}   conjugate of T: {conj}")
    rep.line(f"coverage: {tag}")


def cmd_jordan(args, rep: Report):
    A = _algebra(args)
    ell = _ell(args, A)
    if ell is None:
        ell = generic_verdict(A, args.trials, args.seed).witness
    jt = jordan_type(A, ell)
    rep.inputs.update(ell=args.ell or "generic")
    rep.result = {"hilbert": list(A.hilbert), "ell": str(ell), "jordan_type": list(jt),
                  "conjugate": list(conjugate_partition(A.hilbert))}
    rep.line(f"T = {A.hilbert}")
    rep.line(f"jordan type of {ell}: {jt}")


def cmd_hessian(args, rep: Report):
    field = _field(args)
    F = DualGenerator(parse_polynomial(args.dual, args.vars, field))
    j = F.socle_degree
    degrees = [args.degree] if args.degree is not None else list(range(j // 2 + 1))
    points = [_ints(p) for p in (args.point or ["1," * (args.vars - 1) + "1"])]
    rep.inputs.update(dual=args.dual, char=args.char, vars=args.vars, degrees=degrees,
                      points=[list(p) for p in points], basis=args.basis)
    T = ArtinAlgebra.from_dual(F).hilbert
    values = []
    rep.line(f"F = {F}   T = {T}   cone: {is_cone(F)}")
    for i in degrees:
        basis = quotient_basis(F, i) if args.basis == "quotient" else None
        size = len(basis) if basis is not None else len(monomial_basis(i, F.nvars))
        if size > T[i]:
            rep.warnings.append(f"degree {i}: basis of R_{i} has {size} > T_{i} = {T[i]} elements, "
                                "so the determinant vanishes identically")
        for pt in points:
            d = hessian_det_at(F, i, pt, basis)
            values.append({"i": i, "point": list(pt), "det": d})
            rep.line(f"det Hess^{i}(F)({', '.join(map(str, pt))}) = {d}")
    rep.result = {"hilbert": list(T), "cone": is_cone(F), "determinants": values}


def cmd_colon(args, rep: Report):
    field = _field(args)
    F = DualGenerator(parse_polynomial(args.dual, args.vars, field))
    A = ArtinAlgebra.from_dual(F)
    steps = []
    rep.line(f"F = {F}   T(A) = {A.hilbert}")
    current, current_alg = F, A
    for text in args.omega:
        omega = parse_polynomial(text, args.vars, field)
        G = colon_dual(omega, current)
        B = ArtinAlgebra.from_dual(G)
        step = {"omega": text, "dual": G.form.to_str(dual=True), "hilbert": list(B.hilbert)}
        rep.line(f"omega = {omega}: G = {G}   T = {B.hilbert}")
        if omega.degree == 1:
            v = LinearForm(field, tuple(omega.coefficient(m) for m in monomial_basis(1, args.vars)))
            C = quotient_by_linear_hf(current_alg, v)
            Ta = current_alg.hilbert
            ok = all(Ta[i] == (B.hilbert[i - 1] if 0 < i <= len(B.hilbert) else 0)
                     + (C[i] if i < len(C) else 0) for i in range(len(Ta)))
            step.update(quotient_hf=list(C), exact_sequence_ok=ok)
            rep.line(f"   T(A/(omega)) = {C}   T(A)_i = T(B)_(i-1) + T(C)_i: {ok}")
        steps.append(step)
        current, current_alg = G, B
    rep.inputs.update(omega=list(args.omega))
    rep.result = {"hilbert": list(A.hilbert), "steps": steps}


def cmd_probe(args, rep: Report):
    field = _field(args)
    F = DualGenerator(parse_polynomial(args.dual, args.vars, field))
    probe = annihilating_scheme_probe(F)
    rep.result = probe.as_dict()
    rep.line(f"F = {F}   T = {probe.hilbert}   s = {probe.s}   tau = {probe.tau}")
    for d, gens in probe.generators.items():
        rep.line(f"J generators in degree {d}: {', '.join(gens)}")
    rep.line(f"HF(R/J) up to degree {probe.saturation_bound}: {probe.quotient_hf}   stable: {probe.hf_stable}")
    status = (f"degreewise-saturated up to degree {probe.saturation_bound}"
              if probe.degreewise_saturated else "not degreewise-saturated")
    rep.line(f"J is {status}")
    lo, hi = probe.middle_zone
    rep.line(f"J_t = Ann(F)_t for {lo} <= t <= {hi}: {probe.agrees_with_ann}")


def cmd_sequences(args, rep: Report):
    if args.action == "enumerate":
        seqs = enumerate_gorenstein_sequences(args.max_sperner, args.max_socle)
        rep.inputs.update(max_sperner=args.max_sperner, max_socle=args.max_socle)
        rep.result = {"count": len(seqs), "sequences": [list(s) for s in seqs],
                      "coverage": [theorem_coverage(s) for s in seqs]}
        for s in seqs:
            rep.line(f"{s}  {theorem_coverage(s)}")
        rep.line(f"{len(seqs)} sequences")
        return
    if args.seq is None:
        raise UsageError(f"sequences {args.action} needs --seq")
    T = _ints(args.seq)
    rep.inputs.update(seq=list(T))
    if args.action == "check":
        res = {"O_sequence": is_O_sequence(T), "SI_sequence": is_SI_sequence(T),
               "gorenstein_codim3": is_codim3_gorenstein_sequence(T),
               "conjugate": list(conjugate_partition(T))}
        if T and T[0] == 1 and all(t > 0 for t in T):
            res["invariants"] = invariants(T).as_dict()
        rep.result = res
        for k, v in res.items():
            rep.line(f"{k}: {v}")
    else:
        if not is_codim3_gorenstein_sequence(T):
            raise PreconditionError(f"{T} is not a codimension three Gorenstein sequence")
        tag = theorem_coverage(T)
        rep.result = {"coverage": tag}
        rep.line(f"{T}: {tag}")


def cmd_paper_examples(args, rep: Report):
    items = run_suite()
    rep.result = {"items": [it.as_dict() for it in items], "all_passed": all(it.passed for it in items)}
    for it in items:
        rep.line(f"{'PASS' if it.passed else 'FAIL'}  {it.name}: {it.detail}")
    if not all(it.passed for it in items):
        rep.exit_code = 4


def _random_form(field, nvars, j, rng, density):
    terms = {m: rng.randint(1, 20) for m in monomial_basis(j, nvars) if rng.random() < density}
    return Polynomial(field, nvars, terms)


def cmd_conjecture_search(args, rep: Report):
    """Look for AG algebras over F_p (p > j) where l^{j-2}: A_1 -> A_{j-1} never has full rank."""
    field = _field(args)
    j = args.socle
    if j < 2:
        raise UsageError("--socle must be at least 2")
    if not field.characteristic or field.characteristic <= j:
        raise PreconditionError("conjecture search needs a prime characteristic p > socle degree")
    rng = random.Random(args.seed)
    checked, hits = 0, []
    for _ in range(args.samples):
        F = _random_form(field, args.vars, j, rng, args.density)
        if F.is_zero():
            continue
        G = DualGenerator(F)
        if is_cone(G):
            continue
        A = ArtinAlgebra.from_dual(G)
        checked += 1
        v = generic_verdict(A, args.trials, rng.randrange(2 ** 31))
        if len(v.strong_ranks) > 1 and not v.strong_ranks[1].full:
            hits.append({"dual": F.to_str(dual=True), "hilbert": list(A.hilbert),
                         "rank": v.strong_ranks[1].rank})
    rep.inputs.update(char=args.char, vars=args.vars, socle=j, samples=args.samples, seed=args.seed,
                      density=args.density, trials=args.trials)
    rep.result = {"checked": checked, "candidates": hits}
    rep.line(f"checked {checked} non-cone forms of degree {j} over {field!r}")
    rep.line(f"forms with no full-rank witness for l^{j - 2}: A_1 -> A_{j - 1}: {len(hits)}")
    for h in hits:
        rep.line(f"  {h['dual']}   T={tuple(h['hilbert'])}")
    if hits:
        rep.warnings.append("candidates are not counterexamples: only F_p-rational forms were tried")


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="artinlef", description="Lefschetz properties of Artinian Gorenstein algebras")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--char", type=int, default=0, help="characteristic (0 means QQ)")
        p.add_argument("--max-prime", type=int, default=10_000, help="largest accepted characteristic")
        p.add_argument("--vars", type=int, default=3, help="number of variables (1-4)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    def algebra(p):
        common(p)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--dual", help="Macaulay dual generator, e.g. 'X^4+Y^2*Z^2'")
        g.add_argument("--ideal", help="monomial generators, e.g. 'x^3,y^3,z^2'")

    def dual_only(p):
        common(p)
        p.add_argument("--dual", required=True, help="Macaulay dual generator")

    def sampling(p):
        p.add_argument("--ell", help="linear form, e.g. 'x+y+z', or 'generic' (default)")
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("hf", help="Hilbert function and invariants")
    algebra(p)
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("lefschetz", help="weak / strong / almost strong Lefschetz verdict")
    algebra(p)
    sampling(p)
    p.set_defaults(func=cmd_lefschetz)

    p = sub.add_parser("jordan", help="Jordan type of multiplication by a linear form")
    algebra(p)
    sampling(p)
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("hessian", help="higher Hessian determinants at points")
    dual_only(p)
    p.add_argument("--degree", type=int, help="Hessian order i (default: all 0..j/2)")
    p.add_argument("--point", action="append", help="evaluation point 'a,b,c' (repeatable)")
    p.add_argument("--basis", choices=("full", "quotient"), default="full",
                   help="monomials of R_i, or a monomial basis of A_i")
    p.set_defaults(func=cmd_hessian)

    p = sub.add_parser("colon", help="dual generators of successive colon ideals")
    dual_only(p)
    p.add_argument("--omega", action="append", required=True, help="form to colon by (repeatable, chained)")
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("scheme-probe", help="tight annihilating scheme probe")
    dual_only(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("sequences", help="Gorenstein sequence checks, enumeration, classification")
    p.add_argument("action", choices=("check", "enumerate", "classify"))
    p.add_argument("--seq", help="comma-separated sequence")
    p.add_argument("--max-sperner", type=int, default=6)
    p.add_argument("--max-socle", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("paper-examples", help="reproduce the fixed example suite")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_paper_examples)

    p = sub.add_parser("conjecture-search", help="search for failures of l^(j-2): A_1 -> A_(j-1) over F_p")
    common(p)
    p.add_argument("--socle", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_conjecture_search)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    inputs = {}
    rep = Report(args.command, inputs)
    if hasattr(args, "dual") or hasattr(args, "ideal"):
        inputs.update(_algebra_inputs(argparse.Namespace(
            char=getattr(args, "char", 0), vars=getattr(args, "vars", 3),
            dual=getattr(args, "dual", None), ideal=getattr(args, "ideal", None))))
    try:
        args.func(args, rep)
    except ArtinlefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(rep.to_json() if args.format == "json" else rep.to_text())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
