"""Command-line surface.

Exit codes: 0 on success (PASS or VACUOUS outcomes included), 1 on any
FAIL or validation failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .classify import classify_m
from .dot import emit_dot
from .errors import InvalidStructure, LatModError
from .generators import gen_frame, gen_zn
from .lattice import is_2abs_l, is_2abs_primary_l, is_primary_l, is_prime_l, is_principal_l
from .latspec import doc_from_bundle, emit_latspec, load_instance, parse_latspec
from .module import validate_module
from .lattice import validate_mul
from .search import SearchGoal, parse_goal, search
from .verify import render_table, render_tsv, verify, verify_all


def _read_doc(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_latspec(fh.read())


def _load(path: str):
    return load_instance(_read_doc(path), label=path)


def _cmd_check(args) -> int:
    from .errors import NotAnExpansion
    from .expansion import from_table_l, from_table_m
    from .lattice import MulLattice, build_lattice, mul_table_from_facts
    from .module import LatticeModule, action_table_from_facts, self_module

    doc = _read_doc(args.file)
    ok = True
    lat = build_lattice(doc.lattice_elements, doc.lattice_leq)
    ml = MulLattice(lat, mul_table_from_facts(lat, doc.lattice_mul))
    report = validate_mul(ml)
    print(f"lattice: {report.render()}")
    ok &= report.ok
    if doc.has_module:
        car = build_lattice(doc.module_elements, doc.module_leq)
        mod = LatticeModule(ml, car, action_table_from_facts(ml, car, doc.module_act))
    else:
        mod = self_module(ml)
    report = validate_module(mod)
    print(f"module: {report.render()}")
    ok &= report.ok
    for e in doc.expansions:
        try:
            if e.target == "module":
                from_table_m(mod, dict(e.entries), label=e.name)
            else:
                from_table_l(ml, dict(e.entries), label=e.name)
            print(f"expansion {e.name}: ok")
        except NotAnExpansion as exc:
            print(f"expansion {e.name}: FAIL {exc}")
            ok = False
    return 0 if ok else 1


def _render_flags(pairs) -> str:
    return " ".join(f"{key}={str(value).lower()}" for key, value in pairs)


def _cmd_classify(args) -> int:
    bundle = _load(args.file)
    side = args.side or "m"
    if side == "m":
        names = bundle.carrier.names
        if args.element:
            names = (args.element,)
        for name in names:
            c = classify_m(bundle.module, name)
            flags = [
                ("proper", c.proper),
                ("maximal", c.maximal),
                ("prime", c.prime),
                ("p_prime", c.p_prime),
                ("primary", c.primary),
                ("p_primary", c.p_primary),
                ("semiprime", c.semiprime),
                ("semiprimary", c.semiprimary),
                ("radical_element", c.radical_element),
                ("meet_prime", c.meet_prime),
                ("two_absorbing", c.two_absorbing),
                ("two_absorbing_primary", c.two_absorbing_primary),
            ]
            print(
                f"{name}: {_render_flags(flags)} "
                f"colon_im={c.colon_im} sqrt_colon_im={c.sqrt_colon_im}"
            )
    else:
        ml = bundle.scalars
        names = ml.names if not args.element else (args.element,)
        for name in names:
            mp, jp = is_principal_l(ml, name)
            flags = [
                ("prime", is_prime_l(ml, name)),
                ("primary", is_primary_l(ml, name)),
                ("two_absorbing", is_2abs_l(ml, name)),
                ("two_absorbing_primary", is_2abs_primary_l(ml, name)),
                ("meet_principal", mp),
                ("join_principal", jp),
            ]
            print(f"{name}: {_render_flags(flags)}")
    return 0


def _cmd_verify(args) -> int:
    bundle = _load(args.file)
    if args.theorem:
        reports = [verify(bundle, args.theorem)]
    else:
        reports = verify_all(bundle)
    print(render_tsv(reports) if args.format == "tsv" else render_table(reports))
    return 1 if any(r.outcome == "FAIL" for r in reports) else 0


def _cmd_gen(args) -> int:
    if args.kind == "zn":
        bundle = gen_zn(args.n)
    else:
        bundle = gen_frame(args.shape)
    sys.stdout.write(emit_latspec(doc_from_bundle(bundle)))
    return 0


def _cmd_search(args) -> int:
    goal, theorem = parse_goal(args.goal)
    hits = search(SearchGoal(goal=goal, family=args.family, bound=args.max, theorem=theorem))
    for label, witness in hits:
        print(f"{label}\t{witness}")
    return 0


def _cmd_dot(args) -> int:
    bundle = _load(args.file)
    which = "lattice" if (args.side or "l") == "l" else "module"
    sys.stdout.write(emit_dot(bundle, which))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latmod",
        description="Finite multiplicative lattices, lattice modules, and a theorem verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate the axioms of a LATSPEC file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="classify elements of a LATSPEC instance")
    p.add_argument("file")
    p.add_argument("--element", help="classify only this element")
    p.add_argument("--side", choices=("l", "m"), help="scalar lattice or module side")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the theorem registry on an instance")
    p.add_argument("file")
    p.add_argument("--theorem", help="verify a single registry id", choices=None)
    p.add_argument("--format", choices=("table", "tsv"), default="table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a generated instance as LATSPEC")
    gensub = p.add_subparsers(dest="kind", required=True)
    pz = gensub.add_parser("zn", help="ideal lattice of Z_n over itself")
    pz.add_argument("--n", type=int, required=True)
    pz.set_defaults(func=_cmd_gen)
    pf = gensub.add_parser("frame", help="chain(k) or boolean(k) with meet multiplication")
    pf.add_argument("--shape", required=True)
    pf.set_defaults(func=_cmd_gen)

    p = sub.add_parser("search", help="search generated families for witnesses")
    p.add_argument("--goal", required=True)
    p.add_argument("--family", required=True, choices=("zn", "frame-boolean", "frame-chain"))
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("dot", help="emit the Hasse diagram as DOT")
    p.add_argument("file")
    p.add_argument("--side", choices=("l", "m"))
    p.set_defaults(func=_cmd_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidStructure as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(exc.report.render(), file=sys.stderr)
        return 1
    except (LatModError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
