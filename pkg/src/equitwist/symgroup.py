"""Symmetric-group machinery: permutations, cycle types, graded isotypic dimensions.

Two independent routes compute the same isotypic dimensions:

* `isotypic_dims` iterates over cycle types (integer partitions), so it scales
  to n = 12 without ever touching n! permutations;
* `brute_force_isotypic` / `brute_force_tensor_isotypic` build the explicit
  averaging projector from all n! permutations and take its exact rank.

Only the trivial and the sign character are implemented; nothing in the
package needs any other irreducible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .graded import GradedDims, HilbertSeries
from .linalg import rank

CHARACTERS = ("trivial", "sign")

#: permutation-enumeration oracles stop here; the cycle-type route goes to 12
BRUTE_FORCE_MAX_N = 8


def _check_character(character):
    if character not in CHARACTERS:
        raise ValueError(f"unknown character {character!r}; expected one of {CHARACTERS}")


def partitions(n):
    """Integer partitions of n as descending tuples, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("partitions of a negative integer")
    if n == 0:
        yield ()
        return

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths of a permutation, stored sorted descending."""

    parts: tuple

    def __post_init__(self):
        if not all(isinstance(p, int) and p > 0 for p in self.parts):
            raise ValueError("parts must be positive integers")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be sorted descending")

    @property
    def n(self):
        return sum(self.parts)

    def multiplicities(self):
        mult = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def class_size(self):
        """Number of permutations with this cycle type: n! / prod(l^m_l * m_l!)."""
        denom = 1
        for length, m in self.multiplicities().items():
            denom *= length**m * math.factorial(m)
        size, rem = divmod(math.factorial(self.n), denom)
        assert rem == 0
        return size

    def sign(self):
        return (-1) ** (self.n - len(self.parts))

    def character_value(self, character):
        _check_character(character)
        return 1 if character == "trivial" else self.sign()

    @classmethod
    def all_of(cls, n):
        return [cls(p) for p in partitions(n)]

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(p) for p in data))


class Permutation:
    """A bijection of {0, ..., n-1}; composition is (s * t)(i) = s(t(i))."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.n)))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def cycles(self):
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return CycleType(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    def sign(self):
        return self.cycle_type().sign()

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, i, j):
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(images)

    @classmethod
    def all_of(cls, n):
        return (cls(p) for p in itertools.permutations(range(n)))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)!r})"


def _cycle_factor(dims, ell, koszul):
    """Graded trace of an ell-cycle acting on the ell-th tensor power of `dims`.

    Diagonal basis tensors of an ell-cycle are the constant ones, contributing
    t^(d*ell) each; with the experimental signed swap convention an odd-degree
    constant tensor additionally picks up (-1)^(d*(ell-1)).
    """
    data = {}
    for d, v in dims.entries.items():
        c = v
        if koszul and (d % 2) and (ell % 2 == 0):
            c = -v
        data[d * ell] = data.get(d * ell, 0) + c
    return HilbertSeries(data)


def isotypic_dims(v, n, character, koszul=False):
    """Graded multiplicity of `character` in the n-th tensor power of `v`.

    Computed as the averaged cycle-index sum over cycle types:
    (1/n!) * sum_lambda class_size(lambda) * chi(lambda) * prod_l trace_l.
    The result must come out as nonnegative integers; this is asserted, not
    assumed.
    """
    _check_character(character)
    if not isinstance(n, int) or n < 1:
        raise ValueError("tensor power n must be a positive integer")
    if not koszul and not v.has_even_support():
        raise ValueError(
            "odd degrees in the input; the unsigned permutation action is only "
            "defined for even gradings (enable the experimental koszul mode to "
            "compute the signed variant)"
        )
    total = HilbertSeries.zero()
    for ct in CycleType.all_of(n):
        weight = ct.class_size() * ct.character_value(character)
        factor = HilbertSeries.one()
        for ell in ct.parts:
            factor = factor * _cycle_factor(v, ell, koszul)
        total = total + factor * weight
    scaled = HilbertSeries(
        {d: Fraction(c, math.factorial(n)) for d, c in total.coefficients.items()}
    )
    return GradedDims.from_hilbert(scaled)


def _projector_dims(basis_by_degree, n, character, image_map):
    """Rank (per degree) of the explicit averaging projector.

    `image_map(sigma)` returns a callable sending a basis element to its image
    under sigma.  The projector P = (1/n!) sum chi(sigma) M_sigma is
    idempotent, so its rank equals its trace; both are computed (rank by exact
    elimination) and compared.
    """
    _check_character(character)
    order = math.factorial(n)
    mats = {}
    indexes = {}
    for degree, basis in basis_by_degree.items():
        indexes[degree] = {b: i for i, b in enumerate(basis)}
        mats[degree] = [[0] * len(basis) for _ in basis]
    for sigma in Permutation.all_of(n):
        chi = 1 if character == "trivial" else sigma.sign()
        img = image_map(sigma)
        for degree, basis in basis_by_degree.items():
            index = indexes[degree]
            mat = mats[degree]
            for b in basis:
                mat[index[img(b)]][index[b]] += chi
    dims = {}
    for degree, mat in mats.items():
        r = rank(mat)
        trace = Fraction(sum(mat[i][i] for i in range(len(mat))), order)
        assert trace == r, f"projector trace {trace} != rank {r} in degree {degree}"
        if r:
            dims[degree] = r
    return GradedDims(dims)


def brute_force_isotypic(algebra, character):
    """Isotypic dimensions of a subset algebra via the explicit n!-term projector.

    Independent oracle for `isotypic_dims` on the series (1 + t^2)^n; capped at
    n <= BRUTE_FORCE_MAX_N because it enumerates all permutations.
    """
    n = algebra.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute-force projector capped at n <= {BRUTE_FORCE_MAX_N}, got {n}")
    basis_by_degree = {2 * k: algebra.masks_of_size(k) for k in range(n + 1)}

    def image_map(sigma):
        # image table over all masks, one DP step per mask
        bit_image = [1 << sigma(i) for i in range(n)]
        table = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            table[m] = table[m ^ low] | bit_image[low.bit_length() - 1]
        return table.__getitem__

    return _projector_dims(basis_by_degree, n, character, image_map)


def brute_force_tensor_isotypic(v, n, character):
    """Isotypic dimensions of v^(tensor n) via the explicit projector on monomial tensors.

    Works for any even-degree `v`; the basis is all n-tuples of graded basis
    labels and sigma permutes tuple positions.  Capped like the subset oracle.
    """
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute-force projector capped at n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if not v.has_even_support():
        raise ValueError("tensor projector oracle expects an even grading")
    labels = [(d, i) for d, dim in v.items() for i in range(dim)]
    if len(labels) ** n > 300_000:
        raise ValueError("tensor basis too large for the brute-force oracle")
    basis_by_degree = {}
    for tup in itertools.product(labels, repeat=n):
        degree = sum(d for d, _ in tup)
        basis_by_degree.setdefault(degree, []).append(tup)

    def image_map(sigma):
        images = sigma.images

        def img(tup):
            out = [None] * len(tup)
            for i, x in enumerate(tup):
                out[images[i]] = x
            return tuple(out)

        return img

    return _projector_dims(basis_by_degree, n, character, image_map)


# ---------------------------------------------------------------------------
# Group cohomology lookup tables (hardcoded known values, not a computation).


def _group_name(order):
    return "0" if order == 1 else f"Z/{order}"


@dataclass(frozen=True)
class GroupCohomologyTable:
    """Orders of H^1(G; k*) and H^2(G; k*) for the two group families used here.

    H^2 is the obstruction group for linearizing a simple invariant object;
    when the obstruction vanishes, the linearizations form a torsor over
    H^1(G; k*) = Hom(G, k*).
    """

    group_kind: str
    group_param: int
    h1_order: int
    h2_order: int

    @property
    def h1_name(self):
        return _group_name(self.h1_order)

    @property
    def h2_name(self):
        return _group_name(self.h2_order)

    def describe(self):
        g = f"{'Z/' if self.group_kind == 'cyclic' else 'S_'}{self.group_param}"
        return f"H^1({g}) = {self.h1_name}, H^2({g}) = {self.h2_name}"


def cohomology_table(kind, n):
    if not isinstance(n, int) or n < 1:
        raise ValueError("group parameter must be a positive integer")
    if kind == "cyclic":
        return GroupCohomologyTable("cyclic", n, h1_order=n, h2_order=1)
    if kind == "symmetric":
        if n == 1:
            # S_1 is the trivial group; the displayed values start at n = 2
            return GroupCohomologyTable("symmetric", 1, h1_order=1, h2_order=1)
        return GroupCohomologyTable(
            "symmetric", n, h1_order=2, h2_order=1 if n <= 3 else 2
        )
    raise ValueError(f"unknown group kind {kind!r}; expected 'cyclic' or 'symmetric'")


def linearization_count(table, obstruction_vanishes):
    """Number of linearizations of a simple invariant object: |H^1| or 0."""
    return table.h1_order if obstruction_vanishes else 0
