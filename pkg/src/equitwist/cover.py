"""Formal calculus for an order-two etale double cover.

Objects upstairs carry a deck-involution power (tau, with tau^2 = id) per
summand; pushing forward to the quotient forgets tau (pi_* tau_* = pi_*) and
pulling back a pushforward doubles: pi^* pi_* = id + tau_*.  Downstairs, the
canonical-bundle twist M_omega has order two and is invisible on pushforward
images.  Functors are labels with rewrite rules; descending an equivariant
label yields a pair differing exactly by M_omega, and lifting collapses the
M_omega ambiguity onto the tau ambiguity, 2:1 each way (k:1 for order k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import GradedDims, graded_sum, shift


class CoverClosureError(Exception):
    """A cover computation outside the declared rule closure."""


@dataclass(frozen=True)
class CoverGenerator:
    """A named object on the cover with optional endo data and a tau-invariance tag."""

    name: str
    endo: GradedDims | None = None
    tau_invariant: bool = False


@dataclass(frozen=True)
class CoverSummand:
    gen: str
    tau: int = 0
    shift: int = 0

    def __post_init__(self):
        if self.tau not in (0, 1):
            raise ValueError("tau power must be 0 or 1")

    def label(self):
        base = f"tau({self.gen})" if self.tau else self.gen
        return f"{base}[{self.shift}]" if self.shift else base


@dataclass(frozen=True)
class CoverObject:
    """A formal direct sum of (generator, tau power, shift) summands."""

    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(
            self.summands, key=lambda s: (s.gen, s.tau, s.shift)
        )))

    @classmethod
    def of(cls, *summands):
        out = []
        for s in summands:
            if isinstance(s, CoverSummand):
                out.append(s)
            else:
                gen, tau, sh = (tuple(s) + (0, 0))[:3]
                out.append(CoverSummand(gen, tau, sh))
        return cls(tuple(out))

    def direct_sum(self, other):
        return CoverObject(self.summands + other.summands)

    def tau_pushforward(self):
        return CoverObject(tuple(
            CoverSummand(s.gen, 1 - s.tau, s.shift) for s in self.summands
        ))

    def label(self):
        return " + ".join(s.label() for s in self.summands) if self.summands else "0"


@dataclass(frozen=True)
class QSummand:
    """One summand of a quotient object.

    kind 'push' is the pushforward of a cover generator (tau already
    forgotten); kind 'plain' is an abstract downstairs object with an
    omega-twist power.
    """

    kind: str
    name: str
    omega: int = 0
    shift: int = 0

    def __post_init__(self):
        if self.kind not in ("push", "plain"):
            raise ValueError("summand kind must be 'push' or 'plain'")
        if self.omega not in (0, 1):
            raise ValueError("omega power must be 0 or 1")
        if self.kind == "push" and self.omega != 0:
            raise ValueError("omega twists are absorbed on pushforward summands")

    def label(self):
        if self.kind == "push":
            base = f"push({self.name})"
        else:
            base = f"{self.name}@omega" if self.omega else self.name
        return f"{base}[{self.shift}]" if self.shift else base


@dataclass(frozen=True)
class QuotientObject:
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(
            self.summands, key=lambda s: (s.kind, s.name, s.omega, s.shift)
        )))

    def label(self):
        return " + ".join(s.label() for s in self.summands) if self.summands else "0"

    def is_pushforward(self):
        return all(s.kind == "push" for s in self.summands)


@dataclass(frozen=True)
class EquivariantLabel:
    """A functor label upstairs: the identity or the twist along a named generator."""

    kind: str
    gen: str | None = None

    def __post_init__(self):
        if self.kind not in ("id", "twist"):
            raise ValueError("label kind must be 'id' or 'twist'")

    def text(self):
        return "Id" if self.kind == "id" else f"T[{self.gen}]"


def twist_label(gen_name):
    return EquivariantLabel("twist", gen_name)


IDENTITY_LABEL = EquivariantLabel("id")


@dataclass(frozen=True)
class DescendedFunctor:
    base: EquivariantLabel
    omega: int = 0

    def text(self):
        base = self.base.text()
        return f"{base}.M_omega" if self.omega else base


@dataclass(frozen=True)
class DescentPair:
    """The two descents of one equivariant functor; they differ by M_omega."""

    base: EquivariantLabel
    members: tuple

    def __post_init__(self):
        first, second = self.members
        assert second == DescendedFunctor(first.base, 1 - first.omega)


@dataclass(frozen=True)
class DescendedValue:
    result: QuotientObject
    ambiguous: tuple = ()
    notes: tuple = ()


class CoverContext:
    """Declared generators, orthogonalities, and quotient-side companions."""

    def __init__(self, generators, orthogonal=(), tau_orthogonal=(), quotient_orthogonal=()):
        self._gens = {}
        for g in generators:
            if not isinstance(g, CoverGenerator):
                raise TypeError(f"expected CoverGenerator, got {g!r}")
            self._gens[g.name] = g
        for src, tgt in orthogonal:
            if src not in self._gens or tgt not in self._gens:
                raise ValueError(f"orthogonality ({src!r}, {tgt!r}) names an unknown generator")
        self._orthogonal = frozenset(tuple(p) for p in orthogonal)
        for name in tau_orthogonal:
            if name not in self._gens:
                raise ValueError(f"tau-orthogonality names an unknown generator {name!r}")
        self._tau_orthogonal = frozenset(tau_orthogonal)
        self._quotient_orthogonal = frozenset(quotient_orthogonal)

    def generator(self, name):
        if name not in self._gens:
            raise CoverClosureError(f"unknown cover generator {name!r}")
        return self._gens[name]

    def generator_names(self):
        return sorted(self._gens)

    def companions_of(self, gen_name):
        return sorted(tgt for src, tgt in self._orthogonal if src == gen_name)

    # -- cover-side rules ----------------------------------------------------

    def normalize(self, obj):
        """Apply tau^2 = id and drop tau on tau-invariant generators."""
        out = []
        for s in obj.summands:
            tau = s.tau % 2
            if self.generator(s.gen).tau_invariant:
                tau = 0
            out.append(CoverSummand(s.gen, tau, s.shift))
        return CoverObject(tuple(out))

    def pullback_pushforward(self, obj):
        """pi^* pi_* applied to a cover object: the object plus its tau-translate."""
        obj = self.normalize(obj)
        return self.normalize(obj.direct_sum(obj.tau_pushforward()))

    def _hom_summands(self, a, b):
        """Graded Homs between two normalized cover summands, by the declared rules."""
        src, tgt = self.generator(a.gen), self.generator(b.gen)
        # move tau to the target; a tau-invariant end absorbs it
        t = (b.tau - a.tau) % 2
        if t and (src.tau_invariant or tgt.tau_invariant):
            t = 0
        delta = b.shift - a.shift
        if a.gen == b.gen:
            if t == 0:
                if src.endo is None:
                    raise CoverClosureError(
                        f"no endomorphism data declared for {a.gen!r}"
                    )
                return shift(src.endo, delta)
            if a.gen in self._tau_orthogonal:
                return GradedDims.zero()
            raise CoverClosureError(
                f"Hom({a.label()}, {b.label()}) needs a declared tau-orthogonality"
            )
        if (a.gen, b.gen) in self._orthogonal and t == 0:
            return GradedDims.zero()
        raise CoverClosureError(
            f"Hom({a.label()}, {b.label()}) is outside the declared closure"
        )

    def hom_cover(self, A, B):
        A, B = self.normalize(A), self.normalize(B)
        pieces = [self._hom_summands(a, b) for a in A.summands for b in B.summands]
        return graded_sum(*pieces)

    # -- quotient-side rules ---------------------------------------------------

    def pushforward(self, obj):
        """pi_* of a cover object; tau powers are forgotten."""
        obj = self.normalize(obj)
        return QuotientObject(tuple(
            QSummand("push", s.gen, 0, s.shift) for s in obj.summands
        ))

    def pushforward_of_generator(self, name, shift_by=0):
        return self.pushforward(CoverObject.of((name, 0, shift_by)))

    def plain_pair(self, name, shift_by=0):
        """The quotient object C + C tensor omega for an abstract companion C."""
        if name not in self._quotient_orthogonal:
            raise CoverClosureError(
                f"{name!r} is not declared orthogonal to the pushforward generator"
            )
        return QuotientObject((
            QSummand("plain", name, 0, shift_by),
            QSummand("plain", name, 1, shift_by),
        ))

    def hom_on_quotient(self, A, B):
        """Hom(pi_* A~, pi_* B~) computed by adjunction as Hom(A~ + tau A~, B~)."""
        if not (isinstance(A, QuotientObject) and isinstance(B, QuotientObject)):
            raise TypeError("expected quotient objects")
        if not (A.is_pushforward() and B.is_pushforward()):
            raise CoverClosureError("quotient Homs are declared for pushforward images only")
        cover_a = CoverObject(tuple(CoverSummand(s.name, 0, s.shift) for s in A.summands))
        cover_b = CoverObject(tuple(CoverSummand(s.name, 0, s.shift) for s in B.summands))
        return self.hom_cover(self.pullback_pushforward(cover_a), cover_b)

    # -- descend / lift ---------------------------------------------------------

    def descend(self, label):
        """Descend an equivariant functor label; yields the M_omega-twisted pair.

        The twist label is certified equivariant by tau-invariance of its
        generator (conjugating the twist by the deck pushforward reproduces
        the twist along the translated object).
        """
        if not isinstance(label, EquivariantLabel):
            raise TypeError("expected an EquivariantLabel")
        if label.kind == "twist":
            gen = self.generator(label.gen)
            if not gen.tau_invariant:
                raise CoverClosureError(
                    f"twist along {label.gen!r} is not certified equivariant: "
                    "the object is not tau-invariant"
                )
        return DescentPair(label, (DescendedFunctor(label, 0), DescendedFunctor(label, 1)))

    def _apply_omega(self, qobj):
        # invisible on pushforward summands, toggles the tag on plain ones
        return QuotientObject(tuple(
            s if s.kind == "push" else QSummand("plain", s.name, 1 - s.omega, s.shift)
            for s in qobj.summands
        ))

    def apply_descended(self, member, qobj):
        """Value of a descended functor on a quotient object.

        Pushforwards of the twisted generator shift by -1, pushforwards of its
        declared orthogonals are fixed, and plain pairs C + C omega are fixed
        as a sum with the per-summand ambiguity (C or C omega) reported.
        """
        if not isinstance(member, DescendedFunctor):
            raise TypeError("expected a DescendedFunctor")
        if member.base.kind == "id":
            result = qobj
            for _ in range(member.omega):
                result = self._apply_omega(result)
            return DescendedValue(result)

        gen_name = member.base.gen
        out = []
        ambiguous = []
        notes = []
        plain_names = {}
        for s in qobj.summands:
            if s.kind == "plain":
                plain_names.setdefault((s.name, s.shift), []).append(s.omega)
        for key, omegas in plain_names.items():
            name, _ = key
            if sorted(omegas) != [0, 1]:
                raise CoverClosureError(
                    f"plain summand {name!r} must come as the pair C + C omega"
                )
            if name not in self._quotient_orthogonal:
                raise CoverClosureError(
                    f"plain summand {name!r} is not declared orthogonal to the pushforward image"
                )
        for s in qobj.summands:
            if s.kind == "push":
                if s.name == gen_name:
                    out.append(QSummand("push", s.name, 0, s.shift - 1))
                elif (gen_name, s.name) in self._orthogonal:
                    out.append(s)
                else:
                    raise CoverClosureError(
                        f"value on push({s.name}) is undetermined: not the twisted "
                        "generator and no declared orthogonality"
                    )
            else:
                out.append(s)
                if s.omega == 0:
                    ambiguous.append(s.name)
                    notes.append(
                        f"per-summand value on {s.name!r} is {s.name} or {s.name} tensor omega; "
                        "only the sum is pinned down"
                    )
        result = QuotientObject(tuple(out))
        for _ in range(member.omega):
            result = self._apply_omega(result)
        return DescendedValue(result, tuple(ambiguous), tuple(notes))

    def boxed_shift(self, member, qobj, n):
        """Total shift of the n-fold box power under the factor-wise functor.

        Defined when every summand of the base value is a uniform shift of the
        input; the box power then shifts by n times that amount.
        """
        value = self.apply_descended(member, qobj)
        shifts = set()
        for before, after in zip(qobj.summands, value.result.summands):
            if (before.kind, before.name) != (after.kind, after.name):
                raise CoverClosureError("box-power shift undefined: summands were permuted")
            shifts.add(after.shift - before.shift)
        if len(shifts) != 1:
            raise CoverClosureError("box-power shift undefined: non-uniform summand shifts")
        return n * shifts.pop()


# ---------------------------------------------------------------------------
# Group bookkeeping for descend/lift across a degree-k canonical cover.


@dataclass(frozen=True)
class BookkeepingReport:
    """Verified counts for the descend/lift homomorphisms at order k.

    Downstairs functors lift to a tau-coset upstairs, k downstairs elements
    per coset (the canonical-twist subgroup collapses); upstairs equivariant
    functors descend to an omega-coset downstairs, again k per coset.
    """

    order: int
    lift_cosets: tuple        # ((down_element, frozenset_of_up_elements), ...)
    descend_cosets: tuple     # ((up_element, frozenset_of_down_elements), ...)
    lift_fibre_sizes: tuple
    descend_fibre_sizes: tuple
    ok: bool
    summary: tuple

    def lifts_of(self, down_element):
        for elem, coset in self.lift_cosets:
            if elem == down_element:
                return coset
        raise KeyError(down_element)


def lift_descend_bookkeeping(n_order):
    """Enumerate the formal two-family model and verify the k:1 counts."""
    if not isinstance(n_order, int) or n_order < 1:
        raise ValueError("cover order must be a positive integer")
    k = n_order
    bases = ("Id", "Phi")

    def down_name(base, i):
        if i == 0:
            return base
        suffix = f"M_omega^{i}" if i > 1 else "M_omega"
        return suffix if base == "Id" else f"{base}.{suffix}"

    def up_name(base, j):
        tilde = "Id" if base == "Id" else "Phi~"
        if j == 0:
            return tilde
        suffix = f"tau^{j}" if j > 1 else "tau"
        return suffix if tilde == "Id" else f"{tilde}.{suffix}"

    lift_cosets = []
    for base in bases:
        coset = frozenset(up_name(base, j) for j in range(k))
        for i in range(k):
            lift_cosets.append((down_name(base, i), coset))
    descend_cosets = []
    for base in bases:
        coset = frozenset(down_name(base, i) for i in range(k))
        for j in range(k):
            descend_cosets.append((up_name(base, j), coset))

    # fibre sizes: how many downstairs elements share one lift coset
    by_coset = {}
    for elem, coset in lift_cosets:
        by_coset.setdefault(coset, set()).add(elem)
    lift_fibres = tuple(sorted(len(v) for v in by_coset.values()))
    by_coset_down = {}
    for elem, coset in descend_cosets:
        by_coset_down.setdefault(coset, set()).add(elem)
    descend_fibres = tuple(sorted(len(v) for v in by_coset_down.values()))

    ok = all(s == k for s in lift_fibres) and all(s == k for s in descend_fibres)
    summary = (
        f"lift: downstairs -> equivariant-upstairs / <tau>, {k}:1 "
        f"(the <M_omega> subgroup collapses onto one coset)",
        f"descend: equivariant-upstairs -> downstairs / <M_omega>, losing exactly "
        f"the <tau> ambiguity ({k} preimages each)",
    )
    return BookkeepingReport(
        order=k,
        lift_cosets=tuple(lift_cosets),
        descend_cosets=tuple(descend_cosets),
        lift_fibre_sizes=lift_fibres,
        descend_fibre_sizes=descend_fibres,
        ok=ok,
        summary=summary,
    )
