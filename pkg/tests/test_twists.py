"""The twist rewrite calculus: rules, relations, witnesses, parsing."""

import pytest
from hypothesis import given, strategies as st

from equitwist.graded import GradedDims
from equitwist.objects import FormalGenerator, LinBoxObject, OrthogonalCompanion
from equitwist.twists import (
    BigPTwist,
    FunctorWord,
    IDENTITY_WORD,
    InducedPTwist,
    InducedTwist,
    Inverse,
    PTwist,
    RuleClosureError,
    Shift,
    SphericalTwist,
    TwistCalculus,
    parse_word,
    word,
)

SPHERE = GradedDims({0: 1, 2: 1})
E = FormalGenerator("E", SPHERE)
F = OrthogonalCompanion("F", "E")


@pytest.fixture
def calc():
    return TwistCalculus([E], [F])


def eobj(n=1, shift=0, sign=1):
    return LinBoxObject(E, n, shift, sign)


def fobj(n=1, shift=0, sign=1):
    return LinBoxObject(F, n, shift, sign)


class TestApply:
    def test_spherical_twist_values(self, calc):
        assert calc.apply(word(SphericalTwist("E")), eobj()) == eobj(shift=-1)
        assert calc.apply(word(SphericalTwist("E")), fobj()) == fobj()

    def test_p_twist_values(self, calc):
        assert calc.apply(word(PTwist("E")), eobj()) == eobj(shift=-2)
        assert calc.apply(word(PTwist("E")), fobj()) == fobj()

    def test_big_twist_on_its_object(self, calc):
        for n in range(1, 9):
            assert calc.apply(word(BigPTwist("E", 1, n)), eobj(n)) == eobj(n, -2 * n)

    def test_big_twist_fixes_the_other_tag(self, calc):
        for n in range(2, 9):
            assert calc.apply(word(BigPTwist("E", 1, n)), eobj(n, sign=-1)) == eobj(n, sign=-1)
            assert calc.apply(word(BigPTwist("E", -1, n)), eobj(n)) == eobj(n)

    def test_big_twist_along_an_object(self, calc):
        letter = BigPTwist.along(eobj(3, sign=-1))
        assert letter == BigPTwist("E", -1, 3)

    def test_induced_twist_values(self, calc):
        for n in (2, 5):
            for kernel_sign in (1, -1):
                letter = InducedTwist("E", n, kernel_sign)
                assert calc.apply(word(letter), eobj(n)) == eobj(n, -n)
                assert calc.apply(word(letter), eobj(n, sign=-1)) == eobj(n, -n, -1)
                assert calc.apply(word(letter), fobj(n)) == fobj(n)

    def test_induced_twist_squared(self, calc):
        w = word(InducedTwist("E", 4, 1)) ** 2
        assert calc.apply(w, eobj(4)) == eobj(4, -8)

    def test_shift_letters(self, calc):
        assert calc.apply(word(Shift(3)), fobj()) == fobj(shift=3)
        assert calc.apply(word(Shift(2), Shift(-2)), eobj()) == eobj()

    def test_left_to_right_order(self, calc):
        w = word(SphericalTwist("E"), Shift(5))
        assert calc.apply(w, eobj()) == eobj(shift=4)

    def test_closure_errors(self, calc):
        with pytest.raises(RuleClosureError):
            calc.apply(word(SphericalTwist("E")), eobj(2))  # wrong category
        with pytest.raises(RuleClosureError):
            calc.apply(word(InducedTwist("E", 3, 1)), eobj(2))  # power mismatch
        with pytest.raises(RuleClosureError):
            calc.apply(word(SphericalTwist("X")), eobj())  # unknown generator
        stranger = FormalGenerator("G", SPHERE)
        with pytest.raises(RuleClosureError):
            calc.apply(word(SphericalTwist("E")), LinBoxObject(stranger, 1))

    def test_non_spherical_generator_rejected(self):
        dull = FormalGenerator("D", GradedDims({0: 1}))
        calc = TwistCalculus([dull])
        with pytest.raises(RuleClosureError):
            calc.apply(word(SphericalTwist("D")), LinBoxObject(dull, 1))

    def test_p_twist_needs_surface(self):
        threefold = FormalGenerator("Y", GradedDims({0: 1, 3: 1}), dim_d=3)
        calc = TwistCalculus([threefold])
        # the twist itself is fine (shift 1 - d = -2), its square-letter is not
        assert calc.apply(word(SphericalTwist("Y")), LinBoxObject(threefold, 1)).shift == -2
        with pytest.raises(RuleClosureError):
            calc.apply(word(PTwist("Y")), LinBoxObject(threefold, 1))


class TestInvertibility:
    def test_every_letter_inverts(self, calc):
        letters_objects = [
            (SphericalTwist("E"), eobj()),
            (PTwist("E"), eobj()),
            (InducedTwist("E", 3, 1), eobj(3, sign=-1)),
            (InducedPTwist("E", 3, -1), eobj(3)),
            (BigPTwist("E", 1, 2), eobj(2)),
            (Shift(4), fobj()),
        ]
        for letter, target in letters_objects:
            w = word(letter)
            assert calc.apply(w, calc.apply(w.inverse(), target)) == target
            assert calc.apply(w.inverse(), calc.apply(w, target)) == target

    def test_word_inverse_reverses(self, calc):
        w = word(InducedTwist("E", 2, 1), Shift(3))
        assert calc.apply(w * w.inverse(), eobj(2)) == eobj(2)

    def test_negative_power_parses(self, calc):
        w = parse_word("T[E]^-2")
        assert w.letters == (Inverse(SphericalTwist("E")), Inverse(SphericalTwist("E")))
        assert calc.apply(w, eobj()) == eobj(shift=2)


class TestCheckRelation:
    def test_twist_squared_is_p_twist(self, calc):
        report = calc.check_relation(
            word(SphericalTwist("E")) ** 2, word(PTwist("E")), [eobj(), fobj()]
        )
        assert report.agree and report.checked == 2

    def test_identity_vs_zero_shift(self, calc):
        report = calc.check_relation(IDENTITY_WORD, word(Shift(0)), [eobj(), fobj(), eobj(3)])
        assert report.agree

    def test_mismatch_reported(self, calc):
        report = calc.check_relation(
            word(InducedTwist("E", 2, 1)), word(BigPTwist("E", 1, 2)), [eobj(2)]
        )
        assert not report.agree
        obj, lhs_out, rhs_out = report.mismatch
        assert obj == eobj(2)
        assert lhs_out.shift == -2 and rhs_out.shift == -4

    def test_induced_twist_squared_equals_induced_p(self, calc):
        # value-level homomorphism property of induction
        for n in range(1, 9):
            for sign in (1, -1):
                testset = calc.closure_objects("E", n)
                report = calc.check_relation(
                    word(InducedTwist("E", n, sign)) ** 2,
                    word(InducedPTwist("E", n, sign)),
                    testset,
                )
                assert report.agree, (n, sign)


class TestExoticnessWitness:
    def test_induced_twist_has_witness(self, calc):
        report = calc.exoticness_witness(word(InducedTwist("E", 2, 1)))
        assert report.found
        (a, ka), (b, kb) = report.pair
        assert (a, ka) == (eobj(2), -2)
        assert (b, kb) == (LinBoxObject(F, 2), 0)

    def test_uniform_shift_has_no_witness(self, calc):
        report = calc.exoticness_witness(word(Shift(3)), testset=[eobj(), fobj()])
        assert not report.found
        assert "no witness" in report.message

    def test_big_twist_witness_uses_the_two_linearizations(self, calc):
        for n in range(3, 9):
            report = calc.exoticness_witness(word(BigPTwist("E", 1, n)))
            assert report.found
            (a, ka), (b, kb) = report.pair
            assert (a, ka) == (eobj(n), -2 * n)
            assert (b, kb) == (eobj(n, sign=-1), 0)

    def test_all_four_functors_for_each_power(self, calc):
        for n in range(2, 9):
            for letter in (
                InducedTwist("E", n, 1),
                InducedTwist("E", n, -1),
                BigPTwist("E", 1, n),
                BigPTwist("E", -1, n),
            ):
                assert calc.exoticness_witness(word(letter)).found, (n, letter)

    def test_composite_of_opposite_induced_twists(self, calc):
        # the composite shifts everything E-side by -2n and fixes companions
        w = word(InducedTwist("E", 3, 1), InducedTwist("E", 3, -1))
        report = calc.exoticness_witness(w)
        assert report.found

    def test_n1_identified_labels_are_not_a_witness(self, calc):
        report = calc.exoticness_witness(
            word(BigPTwist("E", 1, 1)), testset=[eobj(1), eobj(1, sign=-1)]
        )
        # the only differing pair is the identified label pair, so no witness
        assert not report.found


class TestKernelsDistinct:
    def test_opposite_signs_distinct(self, calc):
        for n in (2, 3, 8):
            assert calc.kernels_distinct(InducedTwist("E", n, 1), InducedTwist("E", n, -1))

    def test_same_letter_not_distinct(self, calc):
        assert not calc.kernels_distinct(InducedTwist("E", 4, 1), InducedTwist("E", 4, 1))

    def test_n1_collapse(self, calc):
        assert not calc.kernels_distinct(InducedPTwist("E", 1, 1), InducedPTwist("E", 1, -1))
        assert not calc.kernels_distinct(InducedTwist("E", 1, 1), InducedTwist("E", 1, -1))

    def test_rejects_non_induced(self, calc):
        with pytest.raises(ValueError):
            calc.kernels_distinct(SphericalTwist("E"), SphericalTwist("E"))
        with pytest.raises(ValueError):
            calc.kernels_distinct(InducedTwist("E", 2, 1), InducedPTwist("E", 2, 1))


class TestValueTable:
    def test_n2_rows(self, calc):
        table = calc.value_table("E", 2)
        assert [(r[1], r[2]) for r in table.rows] == [(-4, 0), (0, -4), (-2, -2), (-2, -2)]
        assert table.note is None

    def test_n5_rows(self, calc):
        table = calc.value_table("E", 5)
        assert [(r[1], r[2]) for r in table.rows] == [(-10, 0), (0, -10), (-5, -5), (-5, -5)]

    def test_n1_degenerate_note(self, calc):
        table = calc.value_table("E", 1)
        assert [(r[1], r[2]) for r in table.rows] == [(-2, 0), (0, -2), (-1, -1), (-1, -1)]
        assert table.note is not None

    def test_table_matches_apply_for_all_n(self, calc):
        for n in range(1, 9):
            table = calc.value_table("E", n)
            functors = (
                BigPTwist("E", 1, n), BigPTwist("E", -1, n),
                InducedTwist("E", n, 1), InducedTwist("E", n, -1),
            )
            for f, row in zip(functors, table.rows):
                assert calc.apply(word(f), eobj(n)).shift == row[1]
                assert calc.apply(word(f), eobj(n, sign=-1)).shift == row[2]


class TestParsing:
    @pytest.mark.parametrize("text,letters", [
        ("T[E]^2", (SphericalTwist("E"), SphericalTwist("E"))),
        ("Tind[E,3,+]", (InducedTwist("E", 3, 1),)),
        ("Pind[E,2,-]", (InducedPTwist("E", 2, -1),)),
        ("Pbig[E,+,3]", (BigPTwist("E", 1, 3),)),
        ("S(2)", (Shift(2),)),
        ("S(-4)", (Shift(-4),)),
        ("Id", ()),
        ("T[E].S(1)", (SphericalTwist("E"), Shift(1))),
        ("P[E]*Tind[E,2,+]", (PTwist("E"), InducedTwist("E", 2, 1))),
    ])
    def test_parse(self, text, letters):
        assert parse_word(text).letters == letters

    def test_round_trip_through_text_and_json(self):
        for text in ("T[E]^2", "Tind[E,3,+].Pbig[E,-,3]", "Id", "S(2).S(2)"):
            w = parse_word(text)
            assert parse_word(w.text()) == w
            assert FunctorWord.from_json(w.to_json()) == w

    def test_parse_error(self):
        with pytest.raises(ValueError):
            parse_word("Q[E]")

    def test_composition_is_concatenation(self):
        w = parse_word("T[E]") * parse_word("S(1)")
        assert w == parse_word("T[E].S(1)")

    def test_shift_letters_commute(self, calc):
        a = parse_word("S(2).T[E]")
        b = parse_word("T[E].S(2)")
        for target in (eobj(), fobj()):
            assert calc.apply(a, target) == calc.apply(b, target)

    letters = st.one_of(
        st.just(SphericalTwist("E")),
        st.just(PTwist("E")),
        st.builds(InducedTwist, st.just("E"), st.integers(1, 9), st.sampled_from([1, -1])),
        st.builds(InducedPTwist, st.just("E"), st.integers(1, 9), st.sampled_from([1, -1])),
        st.builds(BigPTwist, st.just("E"), st.sampled_from([1, -1]), st.integers(1, 9)),
        st.builds(Shift, st.integers(-9, 9)),
    )

    @given(st.lists(letters, max_size=6))
    def test_arbitrary_words_round_trip(self, letters):
        w = word(*letters)
        assert parse_word(w.text()) == w
        assert FunctorWord.from_json(w.to_json()) == w
