"""Command line entry point.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import sys

from . import associahedron as K
from .ainf import check_ainf, check_cinf
from .graded import Tensor, render_key
from .hopf import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_LENGTH,
    PsiExtension,
    RhoExtension,
    check_bialgebra,
    check_eq9,
    check_primitive_ainf,
    check_primitive_ainf_on_lie,
    check_rho_preserves_primitives,
    generator_lie_basis,
    primitive_dimensions,
    primitives,
)
from .linf import (
    check_ell2_vanishes,
    check_linf,
    check_linf_bialgebra,
    compare,
    ell3_rank_invariant,
    ell3_ranks,
    symmetrize,
    theorem_pl,
)
from .report import Report
from .structures import BUILTINS, StructureError, load, serialize

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _info(check: str, params: dict, lines: list[str]) -> Report:
    rep = Report(check, params)
    for line in lines:
        rep.note(line)
    return rep


def _caps(args) -> dict:
    return {"degree_cap": args.max_degree, "length_cap": args.max_length}


def primitives_report(C, degree_cap: int, length_cap: int) -> Report:
    prims = primitives(C, degree_cap)
    rep = Report("primitives", {"structure": C.name, "max_degree": degree_cap, "max_length": length_cap})
    with rep.timed():
        rep.note("PC: " + (", ".join(str(p) for p in prims) or "0"))
        if C.expected_primitive and len(prims) != len(C.space.reduced):
            rep.fail("expected_primitive", f"only {len(prims)} of {len(C.space.reduced)} generators primitive")
        dims = primitive_dimensions(C, degree_cap, length_cap)
        rep.note(f"dim P(T) per degree: {dims}")
    return rep


def extension_report(C, degree_cap: int, length_cap: int) -> Report:
    rep = check_rho_preserves_primitives(C, (2, 3, 4), degree_cap, length_cap + 1)
    psi = check_rho_preserves_primitives(C, (4, 5), degree_cap, length_cap + 1, mode="psi")
    if psi.passed:
        rep.note("psi-extension: no witness at this truncation")
    else:
        rep.note(f"psi-extension leaves the primitives: {psi.witnesses[0]}")
    return rep


def invariant_report(C, degree_cap: int, length_cap: int) -> Report:
    ranks = ell3_ranks(theorem_pl(C, degree_cap, length_cap), degree_cap)
    return _info("invariant", {"structure": C.name, "op": "ell3", "max_degree": degree_cap},
                 [f"rank l3 per degree: { {d: r for d, r in ranks.items() if r} }"])


def run_pipeline(C, degree_cap: int = DEFAULT_MAX_DEGREE, length_cap: int = DEFAULT_MAX_LENGTH) -> list[Report]:
    """Every check in logical order on one structure."""
    L = theorem_pl(C, degree_cap, length_cap)
    return [
        check_ainf(C, C.basis),
        check_cinf(C),
        primitives_report(C, degree_cap, length_cap),
        check_primitive_ainf(C, degree_cap, length_cap),
        extension_report(C, min(degree_cap, 10), length_cap),
        check_bialgebra(C, (2, 3, 4), degree_cap, length_cap),
        check_eq9(C, degree_cap, length_cap),
        check_ell2_vanishes(L),
        check_linf(L, degree_cap=degree_cap, max_n=4),
        check_linf_bialgebra(L, (2, 3, 4), min(degree_cap, 9)),
        invariant_report(C, degree_cap, length_cap),
    ]


# ---------------------------------------------------------------------------
# commands

def _structure(args):
    return load(args.structure)


def cmd_validate(args):
    C = _structure(args)
    lines = [f"{len(C.space.reduced)} generators: " + ", ".join(repr(g) for g in C.space.reduced),
             f"cooperation arities: {sorted(C.tables) or 'none'}"]
    if args.dump:
        lines.append(serialize(C).rstrip())
    return [_info("validate", {"structure": C.name}, lines)]


def cmd_check_ainf(args):
    C = _structure(args)
    return [check_ainf(C, C.basis, args.max_degree, args.max_n)]


def cmd_check_cinf(args):
    return [check_cinf(_structure(args))]


def cmd_primitives(args):
    return [primitives_report(_structure(args), **_caps(args))]


def cmd_lie_basis(args):
    C = _structure(args)
    basis = generator_lie_basis(C, args.max_degree, args.max_length)
    lines = [f"dimensions: {basis.dimensions()}"]
    lines += [f"{d}: {n}" for n, d in zip(basis.names, basis.degrees)]
    return [_info("lie-basis", {"structure": C.name, **_caps(args)}, lines)]


def _word(C, text: str) -> tuple:
    try:
        names = text.replace(",", " ").split()
        return tuple(C.space.by_name(n) for n in names)
    except KeyError as exc:
        raise InputError(f"unknown generator {exc.args[0]!r} in word {text!r}") from None


def cmd_extend(args):
    C = _structure(args)
    S = PsiExtension(C) if args.mode == "psi" else RhoExtension(C)
    w = _word(C, args.word)
    img = S.coop(args.arity)(w)
    return [_info("extend", {"structure": C.name, "mode": args.mode, "arity": args.arity},
                  [f"{args.mode}_{args.arity}({render_key((w,))}) = {img}"])]


def cmd_check_primitive(args):
    C = _structure(args)
    if args.on == "lie":
        return [check_primitive_ainf_on_lie(C, **_caps(args))]
    return [check_primitive_ainf(C, **_caps(args))]


def cmd_check_bialgebra(args):
    C = _structure(args)
    return [check_bialgebra(C, args.arities, **_caps(args))]


def cmd_symmetrize(args):
    C = _structure(args)
    S = symmetrize(C)
    lines = []
    for g in C.space.reduced:
        for r in range(2, C.max_arity + 1):
            img = S.ell(r, Tensor.word(g))
            if img:
                lines.append(f"l^{r}({g}) = {img}")
    return [_info("symmetrize", {"structure": C.name}, lines or ["all l^r vanish on generators"])]


def cmd_check_linf(args):
    C = _structure(args)
    if args.on == "coalgebra":
        return [check_linf(symmetrize(C), C.space.reduced, args.max_degree, args.max_n)]
    L = theorem_pl(C, **_caps(args))
    return [check_ell2_vanishes(L), check_linf(L, degree_cap=args.max_degree, max_n=args.max_n)]


def cmd_check_lbialgebra(args):
    C = _structure(args)
    L = theorem_pl(C, **_caps(args))
    return [check_linf_bialgebra(L, args.arities, args.max_degree)]


def cmd_invariant(args):
    C = _structure(args)
    L = theorem_pl(C, **_caps(args))
    if args.degree is None:
        return [invariant_report(C, **_caps(args))]
    rank = ell3_rank_invariant(L, args.degree)
    return [_info("invariant", {"structure": C.name, "op": args.op, "degree": args.degree},
                  [f"rank l3 in degree {args.degree}: {rank}"])]


def cmd_diagonal(args):
    if args.golden and args.write:
        K.write_golden(args.golden, range(2, args.arity + 1) if args.arity else range(2, 7))
        return [_info("diagonal", {"golden": args.golden}, ["written"])]
    if args.golden:
        rep = Report("diagonal-golden", {"golden": args.golden})
        try:
            diffs = K.compare_golden(args.golden)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read golden file {args.golden}: {exc}") from None
        for d in diffs:
            rep.fail("golden", d)
        return [rep]
    if args.cell:
        try:
            t = K.parse(args.cell)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    elif args.arity:
        if args.arity < 2:
            raise InputError("arity must be at least 2")
        t = K.corolla(args.arity)
    else:
        raise InputError("diagonal needs --arity, --cell or --golden")
    lines = [f"{'+' if v > 0 else '-'}{abs(v) if abs(v) != 1 else ''} {K.render(a)} ⊗ {K.render(b)}"
             for (a, b), v in sorted(K.diagonal(t).items(), key=lambda kv: (K.dimension(kv[0][0]), K.render(kv[0][0]), K.render(kv[0][1])))]
    return [_info("diagonal", {"cell": K.render(t)}, lines)]


def cmd_example(args):
    if args.name not in BUILTINS:
        raise InputError(f"unknown example {args.name!r}; have {', '.join(BUILTINS)}")
    return run_pipeline(load(args.name), **_caps(args))


def cmd_compare(args):
    A, B = load(args.a), load(args.b)
    return [compare(A, B, min(args.max_degree, 10), args.max_length)]


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    common.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    common.add_argument("--format", choices=("text", "machine-readable"), default="text")
    common.add_argument("--golden", metavar="PATH")

    p = argparse.ArgumentParser(prog="hocoalg", description="A-infinity / L-infinity coalgebra checks")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, structure=True, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        if structure:
            sp.add_argument("structure", help="structure file or built-in name")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate)
    sp.add_argument("--dump", action="store_true", help="print the normalized structure")
    sp = add("check-ainf", cmd_check_ainf)
    sp.add_argument("--max-n", type=int)
    add("check-cinf", cmd_check_cinf)
    add("primitives", cmd_primitives)
    add("lie-basis", cmd_lie_basis)
    sp = add("extend", cmd_extend)
    sp.add_argument("--mode", choices=("psi", "rho"), default="psi")
    sp.add_argument("--arity", type=int, required=True)
    sp.add_argument("--word", required=True, help="generator ids separated by spaces")
    sp = add("check-primitive", cmd_check_primitive)
    sp.add_argument("--on", choices=("words", "lie"), default="words")
    sp = add("check-bialgebra", cmd_check_bialgebra)
    sp.add_argument("--arities", type=int, nargs="+", default=[2, 3, 4])
    add("symmetrize", cmd_symmetrize)
    sp = add("check-linf", cmd_check_linf)
    sp.add_argument("--on", choices=("lie", "coalgebra"), default="lie")
    sp.add_argument("--max-n", type=int, default=4)
    sp = add("check-lbialgebra", cmd_check_lbialgebra)
    sp.add_argument("--arities", type=int, nargs="+", default=[2, 3, 4])
    sp = add("invariant", cmd_invariant)
    sp.add_argument("--op", choices=("ell3",), default="ell3")
    sp.add_argument("--degree", type=int)
    sp = add("diagonal", cmd_diagonal, structure=False)
    sp.add_argument("--arity", type=int)
    sp.add_argument("--cell", help="tree such as '((**)**)'")
    sp.add_argument("--write", action="store_true", help="write the golden file instead of comparing")
    sp = add("example", cmd_example, structure=False)
    sp.add_argument("name")
    sp = add("compare", cmd_compare, structure=False)
    sp.add_argument("a")
    sp.add_argument("b")
    return p


def emit(reports: list[Report], fmt: str, out=None) -> None:
    out = out or sys.stdout
    for rep in reports:
        if fmt == "machine-readable":
            print(rep.to_json(), file=out)
        else:
            print(rep, file=out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        reports = args.func(args)
    except (StructureError, InputError, K.DiagonalSignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    emit(reports, args.format)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
