"""Formal linearized box-product objects and their equivariant graded Homs.

A `FormalGenerator` stands for a simple object on a surface together with its
full graded endomorphism algebra.  `LinBoxObject(gen, n, shift, sign)` is the
n-fold exterior box power with one of its two index-permutation
linearizations: sign +1 is the canonical chain of pullback isomorphisms, sign
-1 twists every odd permutation by -1.  Graded Homs between two such objects
are the isotypic pieces of the tensor-power endomorphism algebra: the trivial
character when the two signs agree, the sign character when they differ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import GradedDims, shift
from .subset_algebra import SubsetAlgebra, invariant_subalgebra
from .symgroup import isotypic_dims


class HomRuleError(Exception):
    """A graded Hom that the declared rules do not determine."""


@dataclass(frozen=True)
class FormalGenerator:
    """A simple object with known graded endomorphism algebra.

    `endo` records dim Ext^d(E, E); simplicity (a one-dimensional degree-0
    piece) and vanishing negative self-extensions are enforced.  `cy_flag`
    asserts E tensored with the canonical bundle is again E.
    """

    name: str
    endo: GradedDims
    dim_d: int = 2
    cy_flag: bool = True

    def __post_init__(self):
        if self.endo.dim(0) != 1:
            raise ValueError(f"generator {self.name!r} is not simple: endo^0 = {self.endo.dim(0)}")
        if not self.endo.is_zero() and self.endo.min_degree() < 0:
            raise ValueError(f"generator {self.name!r} has negative self-extensions")
        if self.dim_d < 1:
            raise ValueError("ambient dimension must be positive")


@dataclass(frozen=True)
class OrthogonalCompanion:
    """A named object declared right-orthogonal to a generator.

    The declaration means every graded Hom from the generator to this object
    vanishes; it is used only through that rule.  `endo` may optionally record
    the companion's own endomorphism algebra.
    """

    name: str
    orthogonal_to: str
    endo: GradedDims | None = None

    def __post_init__(self):
        if self.endo is not None and self.endo.dim(0) != 1:
            raise ValueError(f"companion {self.name!r} is not simple")


def is_spherical(gen):
    """True when the generator's endo algebra is k in degree 0 plus k in the top degree."""
    if not isinstance(gen, FormalGenerator):
        return False
    return gen.cy_flag and gen.endo == GradedDims({0: 1, gen.dim_d: 1})


@dataclass(frozen=True)
class LinBoxObject:
    """gen^{sign[n]}[shift]: a linearized box power with a homological shift."""

    gen: object
    n: int
    shift: int = 0
    sign: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("box power must be a positive integer")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not isinstance(self.shift, int):
            raise TypeError("shift must be an integer")

    def shifted(self, k):
        return LinBoxObject(self.gen, self.n, self.shift + k, self.sign)

    def label(self):
        s = "+" if self.sign == 1 else "-"
        text = f"{self.gen.name}^{s}[{self.n}]"
        if self.shift:
            text += f"[{self.shift}]"
        return text

    def to_json(self):
        return {"gen": self.gen.name, "n": self.n, "shift": self.shift, "sign": self.sign}

    @classmethod
    def from_json(cls, data, generators):
        gen = generators[data["gen"]]
        return cls(gen, int(data["n"]), int(data["shift"]), int(data["sign"]))


def equivariant_hom(A, B, koszul=False):
    """Graded dimensions of the equivariant Hom space between two box objects.

    Requires the same generator and the same power, or a declared
    orthogonality; anything else raises HomRuleError.  The two linearization
    signs select the character: equal signs take invariants, opposite signs
    the sign-isotypic piece.  Shifts translate degrees afterwards.
    """
    if A.n != B.n:
        raise HomRuleError(
            f"Hom between box powers {A.n} and {B.n} is not covered by any declared rule"
        )
    if A.gen == B.gen:
        endo = A.gen.endo
        if endo is None:
            raise HomRuleError(
                f"no endomorphism data declared for {A.gen.name!r}; Hom is undetermined"
            )
        character = "trivial" if A.sign * B.sign == 1 else "sign"
        hom = isotypic_dims(endo, A.n, character, koszul=koszul)
        return shift(hom, B.shift - A.shift)
    if isinstance(B.gen, OrthogonalCompanion) and B.gen.orthogonal_to == getattr(A.gen, "name", None):
        return GradedDims.zero()
    raise HomRuleError(
        f"Hom({A.label()}, {B.label()}) is undetermined: different generators "
        "without a declared orthogonality"
    )


def are_isomorphic(A, B):
    """Equality test for linearized box objects over one generator and power.

    For n >= 2 the two linearizations are genuinely different; when the
    answer is 'no' purely because of the sign, the vanishing of degree-0 Homs
    is verified mechanically rather than assumed.  For n = 1 the sign carries
    no information and both labels denote the same object.
    """
    if A.gen != B.gen or A.n != B.n:
        raise ValueError("isomorphism test expects the same generator and power")
    same = A.shift == B.shift and (A.sign == B.sign or A.n == 1)
    if not same and A.shift == B.shift and getattr(A.gen, "endo", None) is not None:
        witness = equivariant_hom(A, B)
        assert witness.dim(0) == 0, "opposite linearizations admitted a degree-0 Hom"
    return same


@dataclass(frozen=True)
class PnObjectReport:
    """Outcome of the projective-space-object test for a linearized box power."""

    passed: bool
    n: int
    hom_ok: bool
    ring_ok: bool
    hom_dims: GradedDims | None
    expected_dims: GradedDims | None
    ring_generator_degree: int | None
    nilpotency_order: int | None
    reason: str | None = None

    def __bool__(self):
        return self.passed


def is_pn_object(A, koszul=False):
    """Check that A has the graded endomorphism algebra of a projective space.

    Two checks: (a) the equivariant endo dims are one in each even degree
    0..2n, (b) the invariant subalgebra of the square-zero model is generated
    by a single degree-2 element h with h^k != 0 for k <= n and h^(n+1) = 0.
    A non-spherical generator fails the precondition and is reported, not
    raised.
    """
    gen = A.gen
    if not (isinstance(gen, FormalGenerator) and is_spherical(gen) and gen.dim_d == 2):
        return PnObjectReport(
            passed=False, n=A.n, hom_ok=False, ring_ok=False,
            hom_dims=None, expected_dims=None,
            ring_generator_degree=None, nilpotency_order=None,
            reason="generator is not a spherical surface object",
        )
    n = A.n
    expected = GradedDims({2 * k: 1 for k in range(n + 1)})
    hom = equivariant_hom(A, A, koszul=koszul)
    hom_ok = hom == expected

    piece = invariant_subalgebra(SubsetAlgebra(n), "trivial")
    ring_ok = (
        piece.dims == expected
        and piece.generator is not None
        and piece.nilpotency_order == n + 1
    )
    return PnObjectReport(
        passed=hom_ok and ring_ok, n=n, hom_ok=hom_ok, ring_ok=ring_ok,
        hom_dims=hom, expected_dims=expected,
        ring_generator_degree=2, nilpotency_order=piece.nilpotency_order,
    )
