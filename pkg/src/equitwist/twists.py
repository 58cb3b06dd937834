"""Formal twist-functor words acting on box objects by rewrite rules.

The letters are the twist along a spherical surface generator, its
projective-space-twist square, the two induced versions on box powers, the
big twist along a linearized box power itself, and plain shifts.  Every rule
is diagonal: a letter sends each closure object to itself up to shift.
Objects outside the declared closure raise `RuleClosureError` instead of
guessing.

Linearization sign tags are compared literally here, including n = 1 where
the two tags name the same object; object-level identification lives in
`objects.are_isomorphic`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .objects import (
    FormalGenerator,
    GradedDims,
    LinBoxObject,
    OrthogonalCompanion,
    are_isomorphic,
    is_spherical,
)


class RuleClosureError(Exception):
    """A functor value undetermined by the declared rewrite rules."""


def _sign_char(sign):
    return "+" if sign == 1 else "-"


def _parse_sign(text):
    if text == "+":
        return 1
    if text == "-":
        return -1
    raise ValueError(f"expected '+' or '-', got {text!r}")


@dataclass(frozen=True)
class SphericalTwist:
    gen: str

    def text(self):
        return f"T[{self.gen}]"


@dataclass(frozen=True)
class PTwist:
    """The square of the spherical twist, as a letter of its own."""

    gen: str

    def text(self):
        return f"P[{self.gen}]"


@dataclass(frozen=True)
class InducedTwist:
    """The spherical twist induced to the n-th power, tagged by the kernel linearization."""

    gen: str
    n: int
    sign: int

    def text(self):
        return f"Tind[{self.gen},{self.n},{_sign_char(self.sign)}]"


@dataclass(frozen=True)
class InducedPTwist:
    gen: str
    n: int
    sign: int

    def text(self):
        return f"Pind[{self.gen},{self.n},{_sign_char(self.sign)}]"


@dataclass(frozen=True)
class BigPTwist:
    """The twist along the linearized box power gen^{sign[n]} itself."""

    gen: str
    sign: int
    n: int

    def text(self):
        return f"Pbig[{self.gen},{_sign_char(self.sign)},{self.n}]"

    @classmethod
    def along(cls, obj):
        return cls(obj.gen.name, obj.sign, obj.n)


@dataclass(frozen=True)
class Shift:
    k: int

    def text(self):
        return f"S({self.k})"


@dataclass(frozen=True)
class Inverse:
    """Formal inverse of a letter: same applicability, negated shift."""

    letter: object

    def text(self):
        return f"{self.letter.text()}^-1"


LETTER_TYPES = (SphericalTwist, PTwist, InducedTwist, InducedPTwist, BigPTwist, Shift, Inverse)


@dataclass(frozen=True)
class FunctorWord:
    """A composable sequence of letters, applied left to right."""

    letters: tuple = ()

    def __post_init__(self):
        for letter in self.letters:
            if not isinstance(letter, LETTER_TYPES):
                raise TypeError(f"not a letter: {letter!r}")

    def __mul__(self, other):
        return FunctorWord(self.letters + other.letters)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("word power must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        return FunctorWord(self.letters * k)

    def inverse(self):
        out = []
        for letter in reversed(self.letters):
            out.append(letter.letter if isinstance(letter, Inverse) else Inverse(letter))
        return FunctorWord(tuple(out))

    def is_identity(self):
        return not self.letters

    def text(self):
        if not self.letters:
            return "Id"
        parts = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            run = j - i
            parts.append(self.letters[i].text() + (f"^{run}" if run > 1 else ""))
            i = j
        return ".".join(parts)

    def to_json(self):
        return {"word": self.text()}

    @classmethod
    def from_json(cls, data):
        return parse_word(data["word"])

    def __str__(self):
        return self.text()


def word(*letters):
    return FunctorWord(tuple(letters))


IDENTITY_WORD = FunctorWord(())

_ATOM_RE = re.compile(
    r"""
    (?P<T>T\[(?P<t_gen>\w+)\])
  | (?P<P>P\[(?P<p_gen>\w+)\])
  | (?P<Tind>Tind\[(?P<ti_gen>\w+),(?P<ti_n>\d+),(?P<ti_sign>[+-])\])
  | (?P<Pind>Pind\[(?P<pi_gen>\w+),(?P<pi_n>\d+),(?P<pi_sign>[+-])\])
  | (?P<Pbig>Pbig\[(?P<pb_gen>\w+),(?P<pb_sign>[+-]),(?P<pb_n>\d+)\])
  | (?P<S>S\((?P<s_k>-?\d+)\))
  | (?P<Id>Id)
    """,
    re.VERBOSE,
)


def parse_word(text):
    """Parse the compact syntax, e.g. 'T[E]^2', 'Tind[E,3,+].S(2)', 'Pbig[E,+,3]'."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] in ".* \t":
            pos += 1
            continue
        m = _ATOM_RE.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse functor word at position {pos}: {text[pos:]!r}")
        pos = m.end()
        if m.group("T"):
            letter = SphericalTwist(m.group("t_gen"))
        elif m.group("P"):
            letter = PTwist(m.group("p_gen"))
        elif m.group("Tind"):
            letter = InducedTwist(m.group("ti_gen"), int(m.group("ti_n")), _parse_sign(m.group("ti_sign")))
        elif m.group("Pind"):
            letter = InducedPTwist(m.group("pi_gen"), int(m.group("pi_n")), _parse_sign(m.group("pi_sign")))
        elif m.group("Pbig"):
            letter = BigPTwist(m.group("pb_gen"), _parse_sign(m.group("pb_sign")), int(m.group("pb_n")))
        elif m.group("S"):
            letter = Shift(int(m.group("s_k")))
        else:
            letter = None  # Id contributes no letters
        exponent = 1
        em = re.match(r"\^(-?\d+)", text[pos:])
        if em:
            exponent = int(em.group(1))
            pos += em.end()
        if letter is None:
            continue
        if exponent < 0:
            out.extend([Inverse(letter)] * (-exponent))
        else:
            out.extend([letter] * exponent)
    return FunctorWord(tuple(out))


@dataclass(frozen=True)
class RelationReport:
    agree: bool
    checked: int
    mismatch: tuple | None = None  # (object, lhs_result, rhs_result)

    def __bool__(self):
        return self.agree


@dataclass(frozen=True)
class WitnessReport:
    """A differential-shift certificate: two objects shifted by different amounts.

    Such a pair rules out the form (shift) o (automorphism) o (line bundle
    twist), since those move every object by one common shift.
    """

    found: bool
    pair: tuple | None = None  # ((objA, kA), (objB, kB))
    shifts: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.found


@dataclass(frozen=True)
class ValueTable:
    """Shift table of the four twist functors on the two linearizations."""

    gen: str
    n: int
    rows: tuple  # (functor_text, shift_on_plus, shift_on_minus)
    note: str | None = None


class TwistCalculus:
    """Rewrite rules over a fixed set of generators and orthogonal companions."""

    def __init__(self, generators, companions=()):
        self._gens = {}
        self._comps = {}
        for g in generators:
            if not isinstance(g, FormalGenerator):
                raise TypeError(f"expected FormalGenerator, got {g!r}")
            self._gens[g.name] = g
        for c in companions:
            if not isinstance(c, OrthogonalCompanion):
                raise TypeError(f"expected OrthogonalCompanion, got {c!r}")
            if c.orthogonal_to not in self._gens:
                raise ValueError(f"companion {c.name!r} references unknown generator {c.orthogonal_to!r}")
            self._comps[c.name] = c

    def generator(self, name):
        if name not in self._gens:
            raise RuleClosureError(f"unknown generator {name!r}")
        return self._gens[name]

    def companions_of(self, gen_name):
        return [c for c in self._comps.values() if c.orthogonal_to == gen_name]

    def lookup(self, name):
        if name in self._gens:
            return self._gens[name]
        if name in self._comps:
            return self._comps[name]
        raise RuleClosureError(f"unknown object name {name!r}")

    def object(self, name, n=1, shift=0, sign=1):
        return LinBoxObject(self.lookup(name), n, shift, sign)

    # -- letter application -------------------------------------------------

    def _surface_twist_target(self, letter, obj, gen, delta):
        if obj.n != 1:
            raise RuleClosureError(
                f"{letter.text()} acts on the surface category; {obj.label()} has power {obj.n}"
            )
        if obj.gen == gen:
            return obj.shifted(delta)
        if isinstance(obj.gen, OrthogonalCompanion) and obj.gen.orthogonal_to == gen.name:
            return obj
        raise RuleClosureError(f"{letter.text()} on {obj.label()} is undetermined by the rules")

    def _induced_target(self, letter, obj, gen, m, delta):
        if obj.n != m:
            raise RuleClosureError(
                f"{letter.text()} acts on box power {m}; {obj.label()} has power {obj.n}"
            )
        if obj.gen == gen:
            return obj.shifted(delta)
        if isinstance(obj.gen, OrthogonalCompanion) and obj.gen.orthogonal_to == gen.name:
            return obj
        raise RuleClosureError(f"{letter.text()} on {obj.label()} is undetermined by the rules")

    def apply_letter(self, letter, obj):
        if isinstance(letter, Shift):
            return obj.shifted(letter.k)
        if isinstance(letter, Inverse):
            inner = self.apply_letter(letter.letter, obj)
            return obj.shifted(obj.shift - inner.shift)
        if isinstance(letter, SphericalTwist):
            gen = self.generator(letter.gen)
            if not is_spherical(gen):
                raise RuleClosureError(f"{letter.text()} requires a spherical generator")
            return self._surface_twist_target(letter, obj, gen, 1 - gen.dim_d)
        if isinstance(letter, PTwist):
            gen = self.generator(letter.gen)
            if not (is_spherical(gen) and gen.dim_d == 2):
                raise RuleClosureError(f"{letter.text()} requires a spherical surface generator")
            return self._surface_twist_target(letter, obj, gen, -2)
        if isinstance(letter, InducedTwist):
            gen = self.generator(letter.gen)
            if not (is_spherical(gen) and gen.dim_d == 2):
                raise RuleClosureError(f"{letter.text()} requires a spherical surface generator")
            return self._induced_target(letter, obj, gen, letter.n, -letter.n)
        if isinstance(letter, InducedPTwist):
            gen = self.generator(letter.gen)
            if not (is_spherical(gen) and gen.dim_d == 2):
                raise RuleClosureError(f"{letter.text()} requires a spherical surface generator")
            return self._induced_target(letter, obj, gen, letter.n, -2 * letter.n)
        if isinstance(letter, BigPTwist):
            gen = self.generator(letter.gen)
            if not (is_spherical(gen) and gen.dim_d == 2):
                raise RuleClosureError(f"{letter.text()} requires a spherical surface generator")
            if obj.n != letter.n:
                raise RuleClosureError(
                    f"{letter.text()} acts on box power {letter.n}; {obj.label()} has power {obj.n}"
                )
            if obj.gen == gen:
                # same linearization tag: full twist shift; opposite tag: fixed
                return obj.shifted(-2 * letter.n) if obj.sign == letter.sign else obj
            if isinstance(obj.gen, OrthogonalCompanion) and obj.gen.orthogonal_to == gen.name:
                return obj
            raise RuleClosureError(f"{letter.text()} on {obj.label()} is undetermined by the rules")
        raise TypeError(f"not a letter: {letter!r}")

    def apply(self, w, obj):
        for letter in w.letters:
            obj = self.apply_letter(letter, obj)
        return obj

    # -- derived checks ------------------------------------------------------

    def check_relation(self, lhs, rhs, testset):
        """Do two words agree (object and shift) on every test object?"""
        checked = 0
        for obj in testset:
            a = self.apply(lhs, obj)
            b = self.apply(rhs, obj)
            checked += 1
            if a != b:
                return RelationReport(False, checked, (obj, a, b))
        return RelationReport(True, checked)

    def closure_objects(self, gen_name, n):
        """Canonical test objects for a generator at one box power."""
        gen = self.generator(gen_name)
        out = []
        signs = (1,) if n == 1 else (1, -1)
        for s in signs:
            out.append(LinBoxObject(gen, n, 0, s))
        for comp in self.companions_of(gen_name):
            for s in signs:
                out.append(LinBoxObject(comp, n, 0, s))
        return out

    def _default_testset(self, w):
        powers = {}
        for letter in w.letters:
            inner = letter.letter if isinstance(letter, Inverse) else letter
            if isinstance(inner, (SphericalTwist, PTwist)):
                powers[(inner.gen, 1)] = True
            elif isinstance(inner, (InducedTwist, InducedPTwist, BigPTwist)):
                powers[(inner.gen, inner.n)] = True
        out = []
        for gen_name, n in powers:
            out.extend(self.closure_objects(gen_name, n))
        return out

    def exoticness_witness(self, w, testset=None):
        """Search the closure for two objects the word shifts by different amounts.

        Pairs of labels denoting the same object (the n = 1 sign collapse) are
        never used as a witness.
        """
        objects = list(testset) if testset is not None else self._default_testset(w)
        results = []
        for obj in objects:
            image = self.apply(w, obj)
            assert image.gen == obj.gen and image.n == obj.n and image.sign == obj.sign
            results.append((obj, image.shift - obj.shift))
        for i, (a, ka) in enumerate(results):
            for b, kb in results[i + 1:]:
                if ka == kb:
                    continue
                identified = (
                    a.gen == b.gen and a.n == b.n and a.shift == b.shift and a.n == 1
                )
                if identified:
                    continue
                return WitnessReport(True, ((a, ka), (b, kb)), tuple(results))
        return WitnessReport(False, None, tuple(results), "no witness found in closure")

    def kernels_distinct(self, a, b):
        """Are two induced letters' kernels non-isomorphic as linearized objects?

        The kernels are box powers of one simple object; only simplicity
        enters, so a degree-0-only stand-in carries exactly that hypothesis.
        """
        if type(a) is not type(b) or not isinstance(a, (InducedTwist, InducedPTwist)):
            raise ValueError("kernel comparison expects two induced letters of the same kind")
        if a.gen != b.gen or a.n != b.n:
            raise ValueError("kernel comparison expects the same generator and power")
        self.generator(a.gen)
        stand_in = FormalGenerator(f"{a.gen}.kernel", GradedDims({0: 1}), dim_d=4)
        ka = LinBoxObject(stand_in, a.n, 0, a.sign)
        kb = LinBoxObject(stand_in, b.n, 0, b.sign)
        return not are_isomorphic(ka, kb)

    def value_table(self, gen_name, n):
        """The 4 x 2 shift table of the twist functors on the two linearizations."""
        gen = self.generator(gen_name)
        functors = (
            BigPTwist(gen.name, 1, n),
            BigPTwist(gen.name, -1, n),
            InducedTwist(gen.name, n, 1),
            InducedTwist(gen.name, n, -1),
        )
        plus = LinBoxObject(gen, n, 0, 1)
        minus = LinBoxObject(gen, n, 0, -1)
        rows = []
        for f in functors:
            rows.append((f.text(), self.apply_letter(f, plus).shift, self.apply_letter(f, minus).shift))
        note = None
        if n == 1:
            note = (
                "degenerate: the two linearization labels name the same object "
                f"({gen.name}^+[1] = {gen.name}^-[1]), so the columns coincide at object level"
            )
        return ValueTable(gen.name, n, tuple(rows), note)
