#!/usr/bin/env python3
"""Regenerate every computed table at desk scale and print them.

Usage: python scripts/make_tables.py [--n-max 6] [--config path.json]
"""

import argparse
import sys

from equitwist import (
    LinBoxObject,
    RunConfig,
    TwistCalculus,
    cohomology_table,
    equivariant_euler,
    equivariant_hom,
    lift_descend_bookkeeping,
    linearization_count,
    load_config,
    mu_injectivity_check,
    reflection_isometry,
    twist_label,
)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--config", default=None)
    args = parser.parse_args(argv)

    config = load_config(args.config) if args.config else RunConfig.default()
    gen = config.generators[0]
    calc = TwistCalculus(config.generators, config.companions)

    print("== equivariant endomorphism dims of the two linearizations ==")
    for n in range(2, args.n_max + 1):
        plus = LinBoxObject(gen, n)
        minus = LinBoxObject(gen, n, 0, -1)
        print(f"  n={n}:  Hom*(+,+) = {equivariant_hom(plus, plus)}   "
              f"Hom*(+,-) = {equivariant_hom(plus, minus)}   "
              f"chi(+,+) = {equivariant_euler(plus, plus)}")

    print("\n== twist value tables (shift on +, shift on -) ==")
    for n in range(1, args.n_max + 1):
        table = calc.value_table(gen.name, n)
        cells = "   ".join(f"{text}: ({sp}, {sm})" for text, sp, sm in table.rows)
        print(f"  n={n}:  {cells}")
        if table.note:
            print(f"        note: {table.note}")

    print("\n== K-lattice ==")
    lat = config.lattice
    refl = reflection_isometry(lat, lat.v0)
    print(f"  reflection matrix along {list(lat.v0.coords)}: {refl.matrix}")
    for n in range(2, args.n_max + 1):
        rep = mu_injectivity_check(lat, lat.v0, n)
        print(f"  mu-map n={n}: e={rep.e}, kernel dim {rep.kernel_dim}, injective={rep.injective}")

    print("\n== double cover ==")
    ctx = config.cover.context()
    invariant = [x for x in ctx.generator_names() if ctx.generator(x).tau_invariant]
    e_name = invariant[0]
    pe = ctx.pushforward_of_generator(e_name)
    print(f"  Hom*(push({e_name}), push({e_name})) = {ctx.hom_on_quotient(pe, pe)}")
    for comp in ctx.companions_of(e_name):
        pf = ctx.pushforward_of_generator(comp)
        print(f"  Hom*(push({e_name}), push({comp})) = {ctx.hom_on_quotient(pe, pf)}")
    member = ctx.descend(twist_label(e_name)).members[0]
    print(f"  descended twist: push({e_name}) -> {ctx.apply_descended(member, pe).result.label()}")
    book = lift_descend_bookkeeping(2)
    for line in book.summary:
        print(f"  {line}")

    print("\n== group cohomology / linearization counts ==")
    for n in range(2, 13):
        sym = cohomology_table("symmetric", n)
        cyc = cohomology_table("cyclic", n)
        print(f"  n={n}: H1(S_n)={sym.h1_name}, H2(S_n)={sym.h2_name}, "
              f"H1(Z/n)={cyc.h1_name}, H2(Z/n)={cyc.h2_name}, "
              f"linearizations(S_n)={linearization_count(sym, True)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
