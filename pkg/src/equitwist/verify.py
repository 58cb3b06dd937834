"""Named invariant suites with per-property pass/fail/deviation results.

These back the `verify` CLI command and the acceptance tests.  A DEVIATION is
a computed value that contradicts a stated orthogonality claim in a single
documented spot (the degree-2 Hom between the two linearizations of a square)
and is reported as its own status: neither a silent pass nor a failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cover import lift_descend_bookkeeping, twist_label
from .graded import GradedDims
from .lattice import (
    HypothesisError,
    mu_injectivity_check,
    mu_map,
    p_twist_class_action,
    reflection_isometry,
)
from .linalg import identity
from .objects import LinBoxObject, are_isomorphic, equivariant_hom, is_pn_object
from .subset_algebra import SubsetAlgebra, invariant_subalgebra
from .symgroup import (
    brute_force_isotypic,
    cohomology_table,
    isotypic_dims,
    linearization_count,
)
from .twists import BigPTwist, InducedPTwist, InducedTwist, PTwist, SphericalTwist, TwistCalculus, word

PASS = "PASS"
FAIL = "FAIL"
DEVIATION = "DEVIATION"


@dataclass(frozen=True)
class PropertyResult:
    name: str
    status: str
    detail: str = ""

    def __bool__(self):
        return self.status != FAIL


def _result(name, ok, detail=""):
    return PropertyResult(name, PASS if ok else FAIL, detail)


def _pn_dims(n):
    return GradedDims({2 * k: 1 for k in range(n + 1)})


def _calculus(config):
    return TwistCalculus(config.generators, config.companions)


def _main_generator(config):
    return config.generators[0]


def suite_pn_objects(config):
    results = []
    gen = _main_generator(config)
    for n in range(2, 9):
        obj = LinBoxObject(gen, n)
        hom = equivariant_hom(obj, obj, koszul=config.koszul)
        results.append(_result(
            f"endo dims of {obj.label()} are one per even degree 0..{2 * n}",
            hom == _pn_dims(n),
            f"computed {hom}",
        ))
    for n in range(2, 7):
        for sign in (1, -1):
            report = is_pn_object(LinBoxObject(gen, n, 0, sign), koszul=config.koszul)
            results.append(_result(
                f"projective-space object check for {LinBoxObject(gen, n, 0, sign).label()}",
                bool(report),
                f"hom_ok={report.hom_ok} ring_ok={report.ring_ok}",
            ))
    return results


def suite_oracle_isotypic(config):
    results = []
    series = GradedDims({0: 1, 2: 1})
    for n in range(1, 7):
        algebra = SubsetAlgebra(n)
        for character in ("trivial", "sign"):
            fast = isotypic_dims(series, n, character)
            brute = brute_force_isotypic(algebra, character)
            results.append(_result(
                f"cycle index vs projector, n={n}, {character}",
                fast == brute,
                f"cycle-index {fast}, projector {brute}",
            ))
        piece = invariant_subalgebra(algebra, "trivial")
        results.append(_result(
            f"invariant subalgebra dims vs cycle index, n={n}",
            piece.dims == isotypic_dims(series, n, "trivial"),
            f"subalgebra {piece.dims}",
        ))
    return results


def suite_non_isomorphism(config):
    results = []
    gen = _main_generator(config)
    for n in range(2, 9):
        plus = LinBoxObject(gen, n, 0, 1)
        minus = LinBoxObject(gen, n, 0, -1)
        hom0 = equivariant_hom(plus, minus, koszul=config.koszul).dim(0)
        results.append(_result(
            f"degree-0 Hom between the two linearizations vanishes, n={n}",
            hom0 == 0 and not are_isomorphic(plus, minus),
            f"Hom^0 = {hom0}",
        ))
    return results


def suite_corollary_orthogonality(config):
    results = []
    gen = _main_generator(config)
    for n in range(2, 9):
        plus = LinBoxObject(gen, n, 0, 1)
        minus = LinBoxObject(gen, n, 0, -1)
        hom = equivariant_hom(plus, minus, koszul=config.koszul)
        name = f"Hom*({plus.label()}, {minus.label()}) = 0"
        if n >= 3:
            results.append(_result(name, hom.is_zero(), f"computed {hom}"))
        elif hom == GradedDims({2: 1}):
            results.append(PropertyResult(
                name, DEVIATION,
                "computed {2: 1}: one degree-2 Hom survives at n = 2, against the "
                "stated orthogonality; recorded as a documented deviation",
            ))
        else:
            results.append(_result(name, False, f"unexpected value {hom}"))
    return results


def suite_value_table(config):
    results = []
    gen = _main_generator(config)
    calc = _calculus(config)
    for n in range(1, 9):
        table = calc.value_table(gen.name, n)
        shifts = tuple((row[1], row[2]) for row in table.rows)
        expected = ((-2 * n, 0), (0, -2 * n), (-n, -n), (-n, -n))
        results.append(_result(
            f"twist value table, n={n}",
            shifts == expected,
            f"rows {shifts}" + (f" ({table.note})" if table.note else ""),
        ))
    return results


def suite_exoticness(config):
    results = []
    gen = _main_generator(config)
    calc = _calculus(config)
    companions = calc.companions_of(gen.name)
    if not companions:
        return [_result("declared orthogonal companion exists", False, "none declared")]
    for n in range(2, 9):
        for letter in (
            InducedTwist(gen.name, n, 1),
            InducedTwist(gen.name, n, -1),
            BigPTwist(gen.name, 1, n),
            BigPTwist(gen.name, -1, n),
        ):
            report = calc.exoticness_witness(word(letter))
            detail = ""
            if report.found:
                (a, ka), (b, kb) = report.pair
                detail = f"{a.label()} -> [{ka}], {b.label()} -> [{kb}]"
            results.append(_result(
                f"differential-shift witness for {letter.text()}",
                report.found,
                detail or report.message,
            ))
    # the double-cover side: the descended twist shifts the pushforward of its
    # object by -1 and fixes the declared orthogonals
    ctx = config.cover.context()
    gens = [g for g in (ctx.generator(name) for name in ctx.generator_names()) if g.tau_invariant]
    if not gens:
        return results + [_result("tau-invariant cover generator exists", False, "none declared")]
    cgen = gens[0]
    pair = ctx.descend(twist_label(cgen.name))
    member = pair.members[0]
    push_e = ctx.pushforward_of_generator(cgen.name)
    shift_e = ctx.apply_descended(member, push_e).result.summands[0].shift
    ok_split = shift_e == -1
    details = [f"push({cgen.name}) -> [{shift_e}]"]
    for comp_name in ctx.companions_of(cgen.name):
        push_f = ctx.pushforward_of_generator(comp_name)
        shift_f = ctx.apply_descended(member, push_f).result.summands[0].shift
        ok_split = ok_split and shift_f == 0
        details.append(f"push({comp_name}) -> [{shift_f}]")
    results.append(_result(
        "descended twist shifts the twisted pushforward by -1 and fixes orthogonals",
        ok_split, ", ".join(details),
    ))
    return results


def suite_mu_injectivity(config):
    results = []
    lat = config.lattice
    ok_mu = True
    for n in range(2, 9):
        report = mu_injectivity_check(lat, lat.v0, n)
        ok_mu = ok_mu and report.injective and report.kernel_dim == 0
    results.append(_result("mu endomorphism injective for the structure-sheaf class, n=2..8", ok_mu))
    rng = random.Random(7)
    count = 0
    ok_random = True
    while count < 100:
        a0 = lat.vector(*(rng.randint(-9, 9) for _ in range(lat.rank)))
        if lat.euler(a0) == 0:
            continue
        count += 1
        report = mu_injectivity_check(lat, a0, rng.randint(2, 8), samples=3)
        ok_random = ok_random and report.injective
    results.append(_result("mu endomorphism injective for 100 random classes with e != 0", ok_random))
    zero_e = lat.vector(1, 0, -1) if lat.rank == 3 else None
    if zero_e is not None and lat.euler(zero_e) == 0:
        excluded = mu_injectivity_check(lat, zero_e, 2)
        raised = False
        try:
            mu_map(lat, lat.point, zero_e, 2)
        except HypothesisError:
            raised = True
        results.append(_result(
            "e = 0 triggers the excluded-hypothesis path",
            excluded.excluded_hypothesis and raised,
        ))
    return results


def suite_k_lattice(config):
    results = []
    lat = config.lattice
    e = lat.v0
    refl = reflection_isometry(lat, e)
    squared = refl.compose(refl)
    results.append(_result(
        "spherical reflection squares to the identity matrix",
        list(map(list, squared.matrix)) == identity(lat.rank),
        f"matrix {squared.matrix}",
    ))
    vs = [lat.point, lat.vector(0, 1, 0) if lat.rank == 3 else lat.point, e]
    results.append(_result(
        "projective-space twists act trivially on classes",
        all(p_twist_class_action(lat, e, v) == v for v in vs),
    ))
    results.extend(suite_mu_injectivity(config))
    return results


def suite_relations(config):
    results = []
    gen = _main_generator(config)
    calc = _calculus(config)
    surface_objects = calc.closure_objects(gen.name, 1)
    report = calc.check_relation(word(SphericalTwist(gen.name)) ** 2, word(PTwist(gen.name)), surface_objects)
    results.append(_result(
        "squared twist equals the degree-2 twist on the surface closure",
        report.agree, f"checked {report.checked} objects",
    ))
    lo, hi = config.n_range
    for n in range(max(2, lo), hi + 1):
        testset = calc.closure_objects(gen.name, n)
        for sign in (1, -1):
            rel = calc.check_relation(
                word(InducedTwist(gen.name, n, sign)) ** 2,
                word(InducedPTwist(gen.name, n, sign)),
                testset,
            )
            results.append(_result(
                f"squared induced twist equals the induced degree-2 twist, n={n}, sign={'+' if sign == 1 else '-'}",
                rel.agree, f"checked {rel.checked} objects",
            ))
    lat = config.lattice
    refl = reflection_isometry(lat, lat.v0)
    squared = refl.compose(refl)
    ok_k = list(map(list, squared.matrix)) == identity(lat.rank)
    ok_k = ok_k and all(
        p_twist_class_action(lat, lat.v0, v) == v for v in (lat.point, lat.v0)
    )
    results.append(_result("the relation holds on K-classes: reflection squared is the identity", ok_k))
    return results


def suite_cover(config):
    results = []
    ctx = config.cover.context()
    invariant_gens = [name for name in ctx.generator_names() if ctx.generator(name).tau_invariant]
    if not invariant_gens:
        return [_result("tau-invariant cover generator exists", False, "none declared")]
    e_name = invariant_gens[0]
    push_e = ctx.pushforward_of_generator(e_name)
    for comp in ctx.companions_of(e_name):
        hom = ctx.hom_on_quotient(push_e, ctx.pushforward_of_generator(comp))
        results.append(_result(
            f"Hom*(push({e_name}), push({comp})) = 0",
            hom.is_zero(), f"computed {hom}",
        ))
    pair = ctx.descend(twist_label(e_name))
    m0, m1 = pair.members
    results.append(_result(
        "descended pair differs exactly by the canonical twist",
        m0.base == m1.base and m0.omega == 0 and m1.omega == 1,
        f"members {m0.text()}, {m1.text()}",
    ))
    v0 = ctx.apply_descended(m0, push_e).result.summands[0].shift
    split_ok = v0 == -1
    detail = [f"push({e_name}) -> [{v0}]"]
    for comp in ctx.companions_of(e_name):
        vf = ctx.apply_descended(m0, ctx.pushforward_of_generator(comp)).result.summands[0].shift
        split_ok = split_ok and vf == 0
        detail.append(f"push({comp}) -> [{vf}]")
    results.append(_result("descended twist value split (-1 vs 0)", split_ok, ", ".join(detail)))
    book = lift_descend_bookkeeping(2)
    results.append(_result(
        "lift/descend bookkeeping is 2:1 at order 2",
        book.ok and set(book.lift_fibre_sizes) == {2} and set(book.descend_fibre_sizes) == {2},
    ))
    return results


def suite_cohomology_tables(config):
    results = []
    ok_cyclic = all(
        (t := cohomology_table("cyclic", n)).h1_order == n and t.h2_order == 1
        for n in range(1, 13)
    )
    results.append(_result("cyclic-group cohomology rows, n=1..12", ok_cyclic))
    ok_sym = True
    for n in range(2, 13):
        t = cohomology_table("symmetric", n)
        ok_sym = ok_sym and t.h1_order == 2 and t.h2_order == (1 if n <= 3 else 2)
    results.append(_result("symmetric-group cohomology rows, n=2..12", ok_sym))
    ok_count = all(
        linearization_count(cohomology_table("symmetric", n), True) == 2 for n in range(2, 13)
    ) and linearization_count(cohomology_table("symmetric", 5), False) == 0
    results.append(_result(
        "a simple invariant object with vanishing class has exactly two linearizations",
        ok_count,
    ))
    return results


SUITES = {
    "pn-objects": suite_pn_objects,
    "oracle-isotypic": suite_oracle_isotypic,
    "non-isomorphism": suite_non_isomorphism,
    "corollary-orthogonality": suite_corollary_orthogonality,
    "value-table": suite_value_table,
    "exoticness": suite_exoticness,
    "mu-injectivity": suite_mu_injectivity,
    "k-lattice": suite_k_lattice,
    "relations": suite_relations,
    "cover": suite_cover,
    "cohomology-tables": suite_cohomology_tables,
}


def run_suite(name, config):
    if name == "all":
        out = []
        for suite_name, fn in SUITES.items():
            for res in fn(config):
                out.append(PropertyResult(f"[{suite_name}] {res.name}", res.status, res.detail))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join([*SUITES, 'all'])}")
    return SUITES[name](config)
