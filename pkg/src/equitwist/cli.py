"""Command-line front end.

Exit codes: 0 success, 1 property failure in a verify run, 2 configuration
error, 3 closure/domain error (a computation the declared rules do not
determine).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .config import OUTPUT_FORMATS, ConfigError, RunConfig, load_config
from .cover import CoverClosureError, lift_descend_bookkeeping, twist_label
from .graded import GradedDims
from .lattice import (
    HypothesisError,
    mu_injectivity_check,
    p_twist_class_action,
    reflection_isometry,
)
from .linalg import identity
from .objects import HomRuleError, LinBoxObject, equivariant_hom, is_pn_object
from .symgroup import (
    BRUTE_FORCE_MAX_N,
    brute_force_tensor_isotypic,
    cohomology_table,
    linearization_count,
)
from .twists import RuleClosureError, TwistCalculus
from .verify import FAIL, run_suite

CLOSURE_ERRORS = (HomRuleError, RuleClosureError, CoverClosureError, HypothesisError, KeyError)


@dataclass
class Table:
    title: str
    columns: tuple
    rows: list
    notes: tuple = field(default_factory=tuple)

    def to_json(self):
        return {
            "title": self.title,
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
            "notes": list(self.notes),
        }


def render(tables, fmt, command):
    if fmt == "json":
        return json.dumps({"command": command, "tables": [t.to_json() for t in tables]}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for t in tables:
            writer.writerow(["table", t.title])
            writer.writerow(t.columns)
            for row in t.rows:
                writer.writerow(row)
            for note in t.notes:
                writer.writerow(["note", note])
            writer.writerow([])
        return buf.getvalue().rstrip("\n")
    lines = []
    for t in tables:
        lines.append(t.title)
        widths = [
            max(len(str(t.columns[i])), *(len(str(r[i])) for r in t.rows)) if t.rows else len(str(t.columns[i]))
            for i in range(len(t.columns))
        ]
        lines.append("  " + "  ".join(str(c).ljust(w) for c, w in zip(t.columns, widths)))
        for row in t.rows:
            lines.append("  " + "  ".join(str(x).ljust(w) for x, w in zip(row, widths)))
        for note in t.notes:
            lines.append(f"  note: {note}")
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def _dims_rows(dims):
    return [[d, v] for d, v in dims.items()]


def _sign(text):
    return 1 if text == "+" else -1


def _resolve_n(args, config):
    n = getattr(args, "n_pos", None)
    if n is None:
        n = args.n
    if n is None:
        n = config.n_range[0]
    if n < 1:
        raise ConfigError("n", "box power must be >= 1")
    return n


def cmd_homs(args, config):
    gen = config.generator(args.generator)
    n = _resolve_n(args, config)
    a = LinBoxObject(gen, n, 0, _sign(args.sign_a))
    b = LinBoxObject(gen, n, 0, _sign(args.sign_b))
    dims = equivariant_hom(a, b, koszul=config.koszul)
    notes = ["method: cycle index over cycle types (exact rational arithmetic)"]
    if n <= BRUTE_FORCE_MAX_N and not config.koszul:
        character = "trivial" if a.sign == b.sign else "sign"
        brute = brute_force_tensor_isotypic(gen.endo, n, character)
        verdict = "agrees" if brute == dims else f"DISAGREES: projector gives {brute}"
        notes.append(f"brute-force projector cross-check: {verdict}")
    if n == 2 and a.sign != b.sign and dims == GradedDims({2: 1}):
        notes.append(
            "documented deviation: a one-dimensional degree-2 Hom survives between "
            "the two linearizations at n = 2, against the stated orthogonality"
        )
    title = f"graded Hom dims: Hom*({a.label()}, {b.label()})"
    rows = _dims_rows(dims) or [["-", 0]]
    return 0, [Table(title, ("degree", "dim"), rows, tuple(notes))]


def cmd_pn_check(args, config):
    gen = config.generator(args.generator)
    n = _resolve_n(args, config)
    obj = LinBoxObject(gen, n, 0, _sign(args.sign))
    report = is_pn_object(obj, koszul=config.koszul)
    rows = [
        ["passed", report.passed],
        ["endo dims match", report.hom_ok],
        ["invariant ring check", report.ring_ok],
        ["nilpotency order", report.nilpotency_order],
    ]
    notes = ()
    if report.reason:
        notes = (report.reason,)
    return 0, [Table(f"projective-space object check: {obj.label()}", ("check", "value"), rows, notes)]


def cmd_twist_table(args, config):
    gen = config.generator(args.generator)
    n = _resolve_n(args, config)
    calc = TwistCalculus(config.generators, config.companions)
    table = calc.value_table(gen.name, n)
    plus = LinBoxObject(gen, n, 0, 1)
    minus = LinBoxObject(gen, n, 0, -1)
    rows = [[text, f"[{sp}]", f"[{sm}]"] for text, sp, sm in table.rows]
    notes = (table.note,) if table.note else ()
    return 0, [Table(
        f"twist values on the two linearizations, n={n}",
        ("functor", plus.label(), minus.label()),
        rows, notes,
    )]


def cmd_k_action(args, config):
    lat = config.lattice
    if args.twist_class:
        e = lat.vector(*(int(x) for x in args.twist_class.split(",")))
    else:
        e = lat.v0
    refl = reflection_isometry(lat, e)
    squared = refl.compose(refl)
    rows = [[*row] for row in refl.matrix]
    t1 = Table(f"reflection matrix of the twist along {list(e.coords)}",
               tuple(f"c{j}" for j in range(lat.rank)), rows)
    checks = [
        ["preserves the pairing", True],  # enforced by construction
        ["squares to the identity", list(map(list, squared.matrix)) == identity(lat.rank)],
        ["degree-2 twist acts trivially", p_twist_class_action(lat, e, lat.point) == lat.point],
    ]
    t2 = Table("K-class action checks", ("check", "value"), checks)
    return 0, [t1, t2]


def cmd_mu_inject(args, config):
    lat = config.lattice
    if args.a0:
        a0 = lat.vector(*(int(x) for x in args.a0.split(",")))
    else:
        a0 = lat.v0
    n = args.n if args.n is not None else config.n_range[0]
    report = mu_injectivity_check(lat, a0, n, samples=args.samples)
    rows = [
        ["e = chi(a0)", report.e],
        ["n", report.n],
        ["kernel dimension", report.kernel_dim],
        ["kernel inside the a0 line", report.kernel_in_line],
        ["scaling law mu(lambda a0) = lambda e n a0 != 0", report.scaling_law_ok],
        ["injective", report.injective],
    ]
    notes = (report.detail,) if report.detail else ()
    code = 0
    if report.excluded_hypothesis:
        code = 3
    elif not report.injective:
        code = 1
    return code, [Table(f"mu-map injectivity for a0 = {list(a0.coords)}", ("field", "value"), rows, notes)]


def cmd_cover(args, config):
    ctx = config.cover.context()
    tables = []
    invariant = [name for name in ctx.generator_names() if ctx.generator(name).tau_invariant]
    if not invariant:
        raise CoverClosureError("no tau-invariant cover generator declared")
    e_name = invariant[0]
    push_e = ctx.pushforward_of_generator(e_name)
    hom_rows = []
    self_hom = ctx.hom_on_quotient(push_e, push_e)
    hom_rows.append([f"Hom*(push({e_name}), push({e_name}))", str(self_hom)])
    for comp in ctx.companions_of(e_name):
        hom = ctx.hom_on_quotient(push_e, ctx.pushforward_of_generator(comp))
        hom_rows.append([f"Hom*(push({e_name}), push({comp}))", str(hom)])
    for name in ctx.generator_names():
        g = ctx.generator(name)
        if not g.tau_invariant and g.endo is not None:
            push = ctx.pushforward_of_generator(name)
            try:
                hom = ctx.hom_on_quotient(push, push)
            except CoverClosureError:
                continue
            hom_rows.append([f"Hom*(push({name}), push({name}))", str(hom)])
    tables.append(Table("quotient-side graded Homs", ("pair", "dims"), hom_rows))

    pair = ctx.descend(twist_label(e_name))
    m0, m1 = pair.members
    value_rows = [["member", m0.text(), m1.text()]]
    v_e0 = ctx.apply_descended(m0, push_e).result
    v_e1 = ctx.apply_descended(m1, push_e).result
    value_rows.append([f"push({e_name})", v_e0.label(), v_e1.label()])
    for comp in ctx.companions_of(e_name):
        push_f = ctx.pushforward_of_generator(comp)
        value_rows.append([
            f"push({comp})",
            ctx.apply_descended(m0, push_f).result.label(),
            ctx.apply_descended(m1, push_f).result.label(),
        ])
    tables.append(Table("descended twist values", ("object", "value under first", "value under second"), value_rows[1:],
                        (f"descent pair: {m0.text()} and {m1.text()} (differ by the canonical twist)",)))

    book = lift_descend_bookkeeping(2)
    book_rows = [[elem, ", ".join(sorted(coset))] for elem, coset in book.lift_cosets]
    tables.append(Table("lift cosets (each descended functor has exactly 2 preimages)",
                        ("downstairs", "lifts"), book_rows, book.summary))
    return 0, tables


def cmd_verify(args, config):
    try:
        results = run_suite(args.suite, config)
    except KeyError as exc:
        raise ConfigError("suite", str(exc)) from None
    rows = [[r.status, r.name, r.detail] for r in results]
    failed = sum(1 for r in results if r.status == FAIL)
    notes = (f"{len(results)} properties: {len(results) - failed} ok, {failed} failed",)
    code = 1 if failed else 0
    return code, [Table(f"verify {args.suite}", ("status", "property", "detail"), rows, notes)]


def cmd_report(args, config):
    tables = []
    gen = config.generators[0]
    lo, hi = config.n_range
    calc = TwistCalculus(config.generators, config.companions)
    hom_rows = []
    for n in range(lo, hi + 1):
        plus = LinBoxObject(gen, n, 0, 1)
        minus = LinBoxObject(gen, n, 0, -1)
        hom_rows.append([n, str(equivariant_hom(plus, plus, koszul=config.koszul)),
                         str(equivariant_hom(plus, minus, koszul=config.koszul))])
    tables.append(Table(
        f"equivariant endo/cross Hom dims for {gen.name}",
        ("n", "equal signs", "opposite signs"),
        hom_rows,
        ("the n=2 opposite-sign entry {2: 1} is the documented deviation",),
    ))
    for n in range(lo, min(hi, 4) + 1):
        table = calc.value_table(gen.name, n)
        rows = [[text, f"[{sp}]", f"[{sm}]"] for text, sp, sm in table.rows]
        notes = (table.note,) if table.note else ()
        tables.append(Table(f"twist value table, n={n}", ("functor", "on +", "on -"), rows, notes))
    coh_rows = []
    for n in range(1, 13):
        c = cohomology_table("cyclic", n)
        s = cohomology_table("symmetric", n)
        coh_rows.append([n, c.h1_name, c.h2_name, s.h1_name, s.h2_name,
                         linearization_count(s, True)])
    tables.append(Table(
        "group cohomology and linearization counts",
        ("n", "H1 cyclic", "H2 cyclic", "H1 symmetric", "H2 symmetric", "linearizations (vanishing class)"),
        coh_rows,
    ))
    code, ktables = cmd_k_action(argparse.Namespace(twist_class=None), config)
    tables.extend(ktables)
    code, ctables = cmd_cover(argparse.Namespace(), config)
    tables.extend(ctables)
    return 0, tables


def _add_global_options(parser, suppress=False):
    # the same options are registered on the main parser and on every
    # subcommand (with SUPPRESS defaults, so the sub-level copy never clobbers
    # a value parsed before the subcommand)
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--config", help="path to a JSON or TOML run configuration", **kw)
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="output format (overrides config)", **kw)
    parser.add_argument("--n", type=int, help="box power for commands that take one", **kw)
    parser.add_argument(
        "--koszul-signs", choices=("off", "experimental"),
        help="experimental signed swap convention for odd gradings (overrides config)", **kw,
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="equitwist",
        description="Exact calculator for equivariant graded Homs of linearized box "
                    "powers, twist value tables, K-lattice actions, and double-cover "
                    "bookkeeping.",
    )
    parser.set_defaults(config=None, format=None, n=None, koszul_signs=None)
    _add_global_options(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homs", help="graded Hom dims between two linearized box powers")
    p.add_argument("generator")
    p.add_argument("n_pos", type=int, metavar="n")
    p.add_argument("sign_a", choices=("+", "-"))
    p.add_argument("sign_b", choices=("+", "-"))
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_homs)

    p = sub.add_parser("pn-check", help="projective-space-object check for a box power")
    p.add_argument("generator")
    p.add_argument("n_pos", nargs="?", type=int, default=None, metavar="n")
    p.add_argument("--sign", choices=("+", "-"), default="+")
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_pn_check)

    p = sub.add_parser("twist-table", help="shift table of the four twist functors")
    p.add_argument("generator")
    p.add_argument("n_pos", nargs="?", type=int, default=None, metavar="n")
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_twist_table)

    p = sub.add_parser("k-action", help="K-class action of the twist along a spherical class")
    p.add_argument("--twist-class", help="comma-separated coordinates, default the structure-sheaf class")
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_k_action)

    p = sub.add_parser("mu-inject", help="exact injectivity certificate for the mu endomorphism")
    p.add_argument("--a0", help="comma-separated coordinates, default the structure-sheaf class")
    p.add_argument("--samples", type=int, default=25)
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_mu_inject)

    p = sub.add_parser("cover", help="double-cover calculus: Homs, descended values, 2:1 counts")
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_cover)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite")
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="all computed tables for the configured range")
    _add_global_options(p, suppress=True)
    p.set_defaults(fn=cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config) if args.config else RunConfig.default()
        if args.format:
            config.output_format = args.format
        if args.koszul_signs:
            config.koszul_signs = args.koszul_signs
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        code, tables = args.fn(args, config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CLOSURE_ERRORS as exc:
        message = exc.args[0] if exc.args else exc
        print(f"closure error: {message}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    print(render(tables, config.output_format, args.command))
    return code


if __name__ == "__main__":
    sys.exit(main())
