"""Command-line interface: construction, verification, factorization, and
deterministic report emission.

Exit codes: 0 pass, 1 semantic failure, 2 parse failure, 3 resource budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import poly
from .coalgebra import (
    build_coalgebra,
    bmodule_on_tensor_square,
    verify_bmodule_coalgebra,
    verify_comodule,
)
from .formats import (
    MatrixRepData,
    ParseError,
    ValidationError,
    parse_algebra,
    parse_module,
    parse_morphism,
    render_report,
)
from .lie import (
    LieAlgebra,
    LieModule,
    Report,
    validate_lie_algebra,
    validate_lie_module,
)
from .modgb import ModuleVector
from .pbw import render_pbw
from .poly import DEFAULT_PAIR_BUDGET, DEGREVLEX, LEX, ResourceBudgetError
from .representations import validate_arep
from .universal_algebra import (
    build_universal_algebra,
    monomial_basis_up_to_degree,
)
from .universal_modules import (
    build_universal_amodule,
    build_universal_lie_hmodule,
    direct_sum_check,
    factorize_lie,
    factorize_through_universal,
    gamma,
    gamma_lie,
)

EXIT_PASS = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _order(name: str):
    return LEX if name == "lex" else DEGREVLEX


def _default_budget() -> int:
    env = os.environ.get("UNIVALG_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"UNIVALG_BUDGET must be an integer, got {env!r}")
    return DEFAULT_PAIR_BUDGET


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_module_vector(v: ModuleVector) -> str:
    if v.is_zero():
        return "0"
    parts = [
        f"({poly.render(q)})*e{p + 1}" for p, q in sorted(v.components.items())
    ]
    return " + ".join(parts)


def _load_lie_module(path: str, algebra: LieAlgebra) -> LieModule:
    obj = parse_module(path, algebra)
    if not isinstance(obj, LieModule):
        raise ValidationError(f"{path}: expected a kind-lie module file")
    return obj


def _load_rep_data(path: str) -> MatrixRepData:
    obj = parse_module(path)
    if not isinstance(obj, MatrixRepData):
        raise ValidationError(f"{path}: expected a kind assoc-matrix module file")
    return obj


def golden_sl2_polynomials(ring) -> list:
    """The nine-polynomial reference basis for the 3-dimensional case with
    [e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2 (h = g); used by --golden."""
    if ring.nvars != 9:
        raise ValidationError("--golden requires 3-dimensional h = g")

    def x(i, j):
        return ring.var((i - 1) * 3 + (j - 1))

    two = Fraction(2)
    return [
        x(1, 3) - (x(1, 2) * x(3, 1)).scale(two) + (x(1, 1) * x(3, 2)).scale(two),
        x(1, 1) - x(1, 1) * x(3, 3) + x(1, 3) * x(3, 1),
        x(1, 2) - x(1, 3) * x(3, 2) + x(1, 2) * x(3, 3),
        x(2, 3) - (x(2, 1) * x(3, 2)).scale(two) + (x(2, 2) * x(3, 1)).scale(two),
        x(2, 1) - x(2, 3) * x(3, 1) + x(2, 1) * x(3, 3),
        x(2, 2) - x(2, 2) * x(3, 3) + x(2, 3) * x(3, 2),
        x(3, 3) - x(1, 1) * x(2, 2) + x(1, 2) * x(2, 1),
        x(3, 1).scale(two) - x(2, 1) * x(1, 3) + x(1, 1) * x(2, 3),
        x(3, 2).scale(two) - x(1, 2) * x(2, 3) + x(1, 3) * x(2, 2),
    ]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_univalg(args) -> int:
    h = parse_algebra(args.h_file)
    g = parse_algebra(args.g_file)
    A = build_universal_algebra(h, g, order=_order(args.order), budget=args.budget)
    lines = [f"universal-algebra h={h.name} g={g.name}"]
    lines.append("variables " + " ".join(A.ring.names))
    for label, gen in zip(A.labels, A.jgens):
        lines.append(f"generator {label[0]},{label[1]},{label[2]}: {poly.render(gen)}")
    for gpoly in A.gb.generators:
        lines.append(f"groebner: {poly.render(gpoly)}")
    if args.degree_probe is not None:
        for d in range(args.degree_probe + 1):
            count = len(monomial_basis_up_to_degree(A, d))
            lines.append(f"standard-monomials degree<={d}: {count}")
    status = 0
    if args.golden:
        nine = golden_sl2_polynomials(A.ring)
        same = poly.ideal_equal(A.jgens, nine, A.ring, budget=args.budget)
        lines.append(f"golden-ideal-match {'pass' if same else 'fail'}")
        if not same:
            status = EXIT_SEMANTIC
    _emit("\n".join(lines) + "\n", args.out)
    return status


def cmd_univmod(args) -> int:
    h = parse_algebra(args.h_file)
    g = parse_algebra(args.g_file)
    A = build_universal_algebra(h, g, order=_order(args.order), budget=args.budget)
    U = _load_lie_module(args.u_file, h)
    Z = _load_lie_module(args.z_file, g)
    um = build_universal_amodule(A, U, Z, budget=args.budget)
    lines = [f"universal-amodule U={U.name} Z={Z.name} rank={um.rank}"]
    for s in range(1, U.dim + 1):
        for r in range(1, Z.dim + 1):
            lines.append(f"generator y[{s},{r}] at position {um.pos(s, r) + 1}")
    for label, gen in zip(um.rel_labels, um.relgens):
        lines.append(
            f"relation {label[0]},{label[1]},{label[2]}: {_render_module_vector(gen)}"
        )
    for gvec in um.mgb.generators:
        lines.append(f"module-groebner: {_render_module_vector(gvec)}")
    lines.append(render_report("module-relations", um.check_relations()).rstrip())
    lines.append(
        render_report("structure-map-equivariance", um.check_rho_equivariance()).rstrip()
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_univliemod(args) -> int:
    h = parse_algebra(args.h_file)
    g = parse_algebra(args.g_file)
    A = build_universal_algebra(h, g, order=_order(args.order), budget=args.budget)
    V = _load_rep_data(args.v_file).to_rep(A)
    rep = validate_arep(V)
    if not rep.ok:
        raise ValidationError(f"{args.v_file}: not an A-module:\n{rep}")
    W = _load_lie_module(args.w_file, g)
    vm = build_universal_lie_hmodule(A, V, W)
    lines = [f"universal-lie-module V={V.name} W={W.name} rank={vm.rank}"]
    for r in range(1, W.dim + 1):
        for s in range(1, V.dim + 1):
            lines.append(f"generator y[{r},{s}] at position {vm.pos(r, s) + 1}")
    for label, gen in zip(vm.rel_labels, vm.relgens):
        comps = " + ".join(
            f"({render_pbw(e)})*e{p + 1}" for p, e in sorted(gen.components.items())
        ) or "0"
        lines.append(f"relation {label[0]},{label[1]},{label[2]}: {comps}")
    for r, pairs in sorted(vm.tau_images().items()):
        tau = " + ".join(f"y(pos {p + 1})(x)v{s}" for p, s in pairs)
        lines.append(f"tau w{r}: {tau}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_factorize(args) -> int:
    h = parse_algebra(args.h_file)
    g = parse_algebra(args.g_file)
    A = build_universal_algebra(h, g, order=_order(args.order), budget=args.budget)
    f = parse_morphism(args.f_file)
    lines = []
    if args.kind == "amod":
        U = _load_lie_module(args.first, h)
        Z = _load_lie_module(args.second, g)
        X = _load_rep_data(args.target).to_rep(A)
        rep = validate_arep(X)
        if not rep.ok:
            raise ValidationError(f"{args.target}: not an A-module:\n{rep}")
        um = build_universal_amodule(A, U, Z, budget=args.budget)
        result = factorize_through_universal(um, X, f)
        round_trip = gamma(um, X, result.images).mat() == f.mat()
    else:
        V = _load_rep_data(args.first).to_rep(A)
        rep = validate_arep(V)
        if not rep.ok:
            raise ValidationError(f"{args.first}: not an A-module:\n{rep}")
        W = _load_lie_module(args.second, g)
        Y = _load_lie_module(args.target, h)
        vm = build_universal_lie_hmodule(A, V, W)
        result = factorize_lie(vm, Y, f)
        round_trip = gamma_lie(vm, Y, result.images).mat() == f.mat()
    for key in sorted(result.images):
        vec = " ".join(str(x) for x in result.images[key])
        lines.append(f"image y[{key[0]},{key[1]}]: {vec}")
    for label in sorted(result.witnesses):
        vec = " ".join(str(x) for x in result.witnesses[label])
        lines.append(
            f"witness {label[0]},{label[1]},{label[2]}: {vec or 'empty'}"
        )
    lines.append(f"diagram-commutes {'pass' if result.commutes else 'fail'}")
    lines.append(f"unique {'pass' if result.unique else 'fail'}")
    lines.append(f"round-trip {'pass' if round_trip else 'fail'}")
    ok = result.ok and round_trip
    lines.append(f"status {'pass' if ok else 'fail'}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS if ok else EXIT_SEMANTIC


def _check_lie(args) -> tuple[str, Report]:
    # Parse without validation so corrupted fixtures produce a report.
    from .formats import parse_algebra_text

    with open(args.files[0]) as fh:
        text = fh.read()
    try:
        L = parse_algebra_text(text, args.files[0])
        return "lie-axioms", validate_lie_algebra(L)
    except ValidationError:
        # Re-parse leniently to report the violations themselves.
        from .lie import LieAlgebra as LA

        entries: dict = {}
        dim = None
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line.startswith("dim"):
                dim = int(line.split()[1])
            elif line.startswith("bracket"):
                head, _, tail = line.partition(":")
                _, i, j = head.split()
                for part in tail.split():
                    s, c = part.split(":", 1)
                    entries.setdefault((int(i), int(j)), {})[int(s)] = Fraction(c)
        L = LA.from_brackets(dim, entries)
        return "lie-axioms", validate_lie_algebra(L)


def cmd_check(args) -> int:
    budget = args.budget
    reports: list[tuple[str, Report]] = []
    if args.kind == "lie":
        reports.append(_check_lie(args))
    elif args.kind == "module":
        L = parse_algebra(args.files[0])
        M = _load_lie_module(args.files[1], L)
        reports.append(("lie-module-axioms", validate_lie_module(M)))
    elif args.kind == "rep":
        h = parse_algebra(args.files[0])
        g = parse_algebra(args.files[1])
        A = build_universal_algebra(h, g, budget=budget)
        X = _load_rep_data(args.files[2]).to_rep(A)
        reports.append(("rep-relations", validate_arep(X)))
    elif args.kind == "bialgebra":
        from .universal_algebra import BialgebraStructure

        h = parse_algebra(args.files[0])
        A = build_universal_algebra(h, h, budget=budget)
        B = BialgebraStructure(A)
        reports.append(("bialgebra-laws", B.verify()))
    elif args.kind == "coalgebra":
        h = parse_algebra(args.files[0])
        A = build_universal_algebra(h, h, budget=budget)
        U = _load_lie_module(args.files[1], h)
        um = build_universal_amodule(A, U, U, budget=budget)
        C = build_coalgebra(um)
        reports.append(("coalgebra-laws", C.verify()))
        reports.append(("bmodule-coalgebra", verify_bmodule_coalgebra(um, C)))
        reports.append(("tensor-square-action", bmodule_on_tensor_square(um, C.bial)))
    elif args.kind == "comodule":
        h = parse_algebra(args.files[0])
        A = build_universal_algebra(h, h, budget=budget)
        U = _load_lie_module(args.files[1], h)
        um = build_universal_amodule(A, U, U, budget=budget)
        C = build_coalgebra(um)
        cert = verify_comodule(um, C)
        from .lie import Violation

        bad = tuple(
            Violation("comodule-axiom", (r + 1,), "fails")
            for r, (a, b) in enumerate(zip(cert.coassoc_witnesses,
                                           cert.counit_witnesses))
            if not (a and b)
        )
        reports.append(("comodule-axioms", Report(bad)))
    elif args.kind == "adjunction":
        h = parse_algebra(args.files[0])
        g = parse_algebra(args.files[1])
        A = build_universal_algebra(h, g, budget=budget)
        U = _load_lie_module(args.files[2], h)
        Z = _load_lie_module(args.files[3], g)
        X = _load_rep_data(args.files[4]).to_rep(A)
        f = parse_morphism(args.files[5])
        um = build_universal_amodule(A, U, Z, budget=budget)
        result = factorize_through_universal(um, X, f)
        ok = result.ok and gamma(um, X, result.images).mat() == f.mat()
        from .lie import Violation

        bad = () if ok else (Violation("adjunction-round-trip", (), "fails"),)
        reports.append(("adjunction-round-trip", Report(bad)))
    elif args.kind == "direct-sum":
        h = parse_algebra(args.files[0])
        g = parse_algebra(args.files[1])
        A = build_universal_algebra(h, g, budget=budget)
        U = _load_lie_module(args.files[2], h)
        W1 = _load_lie_module(args.files[3], g)
        W2 = _load_lie_module(args.files[4], g)
        cert = direct_sum_check(A, U, W1, W2, budget=budget)
        from .lie import Violation

        bad = []
        if not cert.forward_ok:
            bad.append(Violation("direct-sum-forward", (), "relations not preserved"))
        if not cert.backward_ok:
            bad.append(Violation("direct-sum-backward", (), "relations not preserved"))
        if not cert.round_trip_ok:
            bad.append(Violation("direct-sum-round-trip", (), "not identity"))
        reports.append(("direct-sum", Report(tuple(bad))))
    else:
        raise ValidationError(f"unknown check kind {args.kind!r}")
    text = "".join(render_report(title, rep) for title, rep in reports)
    _emit(text, args.out)
    return EXIT_PASS if all(rep.ok for _, rep in reports) else EXIT_SEMANTIC


def cmd_coalgebra(args) -> int:
    h = parse_algebra(args.h_file)
    A = build_universal_algebra(h, h, order=_order(args.order), budget=args.budget)
    U = _load_lie_module(args.u_file, h)
    um = build_universal_amodule(A, U, U, budget=args.budget)
    C = build_coalgebra(um)
    m = U.dim
    lines = [f"coalgebra-on-universal-module U={U.name} rank={um.rank}"]
    for l in range(1, m + 1):
        for t in range(1, m + 1):
            pairs = " + ".join(
                f"y(pos {um.pos(l, s) + 1})(x)y(pos {um.pos(s, t) + 1})"
                for s in range(1, m + 1)
            )
            lines.append(f"delta y[{l},{t}]: {pairs}")
            lines.append(f"epsilon y[{l},{t}]: {1 if l == t else 0}")
    lines.append(render_report("coalgebra-laws", C.verify()).rstrip())
    cert = verify_comodule(um, C)
    lines.append(f"check comodule-axioms\nstatus {'pass' if cert.ok else 'fail'}")
    lines.append(
        render_report("bmodule-coalgebra", verify_bmodule_coalgebra(um, C)).rstrip()
    )
    lines.append(
        render_report("tensor-square-action",
                      bmodule_on_tensor_square(um, C.bial)).rstrip()
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=["degrevlex", "lex"], default="degrevlex")
    p.add_argument("--budget", type=int, default=None,
                   help="S-pair budget (default from UNIVALG_BUDGET or 100000)")
    p.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="univalg",
        description="Exact universal algebras and universal modules over Q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("univalg", help="construct A(h,g)")
    p.add_argument("h_file")
    p.add_argument("g_file")
    p.add_argument("--degree-probe", type=int, default=None)
    p.add_argument("--golden", action="store_true",
                   help="assert the ideal matches the 3-dim reference basis")
    _add_common(p)
    p.set_defaults(func=cmd_univalg)

    p = sub.add_parser("univmod", help="construct the universal A-module U(U,Z)")
    p.add_argument("h_file")
    p.add_argument("g_file")
    p.add_argument("u_file")
    p.add_argument("z_file")
    _add_common(p)
    p.set_defaults(func=cmd_univmod)

    p = sub.add_parser("univliemod",
                       help="construct the universal Lie h-module V(V,W)")
    p.add_argument("h_file")
    p.add_argument("g_file")
    p.add_argument("v_file")
    p.add_argument("w_file")
    _add_common(p)
    p.set_defaults(func=cmd_univliemod)

    p = sub.add_parser("factorize", help="factor a morphism through a universal object")
    p.add_argument("kind", choices=["amod", "liemod"])
    p.add_argument("h_file")
    p.add_argument("g_file")
    p.add_argument("first", help="U module file (amod) or V rep file (liemod)")
    p.add_argument("second", help="Z module file (amod) or W module file (liemod)")
    p.add_argument("target", help="target rep file (amod) or Lie module file (liemod)")
    p.add_argument("f_file", help="morphism file")
    _add_common(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("kind", choices=[
        "lie", "module", "rep", "bialgebra", "coalgebra", "comodule",
        "adjunction", "direct-sum",
    ])
    p.add_argument("files", nargs="+")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("coalgebra", help="coalgebra structure on U(U)")
    p.add_argument("h_file")
    p.add_argument("u_file")
    _add_common(p)
    p.set_defaults(func=cmd_coalgebra)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.budget is None:
            args.budget = _default_budget()
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
