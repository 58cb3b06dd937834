"""The square-zero monomial algebra with one degree-2 generator per index.

Basis elements h_S are indexed by subsets S of {0, ..., n-1} (stored as
bitmasks), deg h_S = 2|S|, and h_S * h_T = h_{S union T} when S and T are
disjoint, 0 otherwise.  The symmetric group permutes indices, acting by
algebra automorphisms.  Elements are plain dicts mask -> coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graded import GradedDims, HilbertSeries
from .linalg import nullspace
from .symgroup import Permutation, _check_character

#: subset enumeration is 2^n; desk scale only
MAX_SUBSET_N = 12


class SubsetAlgebra:
    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"algebra needs a positive number of generators, got {n!r}")
        if n > MAX_SUBSET_N:
            raise ValueError(f"n = {n} exceeds the configured cap {MAX_SUBSET_N}")
        self.n = n
        self.dimension = 1 << n
        self.top_mask = (1 << n) - 1

    def basis(self):
        return range(self.dimension)

    def masks_of_size(self, k):
        return [m for m in self.basis() if m.bit_count() == k]

    def degree(self, mask):
        return 2 * mask.bit_count()

    def one(self):
        return {0: 1}

    def generator(self, i):
        if not 0 <= i < self.n:
            raise ValueError(f"generator index {i} out of range")
        return {1 << i: 1}

    def h(self):
        """The sum of all degree-2 generators."""
        return {1 << i: 1 for i in range(self.n)}

    def multiply(self, a, b):
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                if m1 & m2:
                    continue
                m = m1 | m2
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return out

    def power(self, elem, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative integer")
        out = self.one()
        for _ in range(k):
            out = self.multiply(out, elem)
        return out

    def permute_mask(self, sigma, mask):
        out = 0
        i = 0
        while mask >> i:
            if (mask >> i) & 1:
                out |= 1 << sigma(i)
            i += 1
        return out

    def act(self, sigma, elem):
        out = {}
        for m, c in elem.items():
            out[self.permute_mask(sigma, m)] = c
        return out

    def hilbert(self):
        return (HilbertSeries({0: 1, 2: 1})) ** self.n

    def graded_dims(self):
        return GradedDims.from_hilbert(self.hilbert())

    def transposition_generators(self):
        return [Permutation.transposition(self.n, i, i + 1) for i in range(self.n - 1)]


def element_eq(a, b):
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


def is_zero_element(a):
    return all(c == 0 for c in a.values())


@dataclass
class IsotypicSubspace:
    """Isotypic piece of a subset algebra under the index-permutation action.

    For the trivial character the piece is a subalgebra with a single degree-2
    generator h (the sum of all h_i), whose verified presentation data is
    carried along: h^k != 0 up to the top degree and h^(nilpotency_order) = 0.
    """

    character: str
    algebra_n: int
    dims: GradedDims
    basis: tuple = field(repr=False)
    generator: dict | None = None
    nilpotency_order: int | None = None


def _orbit_of_mask(algebra, mask, generators):
    seen = {mask}
    frontier = [mask]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                im = algebra.permute_mask(g, m)
                if im not in seen:
                    seen.add(im)
                    nxt.append(im)
        frontier = nxt
    return seen


def _sign_isotypic_basis(algebra, k, generators):
    """Vectors in the degree-2k block with s*v = -v for every adjacent transposition."""
    masks = algebra.masks_of_size(k)
    if not generators:
        # the trivial group: both characters give the whole block
        return [{m: 1} for m in masks]
    index = {m: i for i, m in enumerate(masks)}
    rows = []
    for g in generators:
        # rows of (M_g + I)
        block = [[0] * len(masks) for _ in masks]
        for m in masks:
            block[index[algebra.permute_mask(g, m)]][index[m]] += 1
            block[index[m]][index[m]] += 1
        rows.extend(block)
    basis = []
    for vec in nullspace(rows):
        elem = {m: vec[index[m]] for m in masks if vec[index[m]] != 0}
        basis.append(elem)
    return basis


def invariant_subalgebra(algebra, character):
    """Isotypic subspace of the subset algebra, with verified presentation data.

    Trivial character: checks that the fixed space is spanned by the orbit
    sums b_k = sum over |S| = k of h_S (one per even degree 0..2n), that
    h = h_0 + ... + h_{n-1} generates it with h^k = k! * b_k != 0 for k <= n,
    and that h^(n+1) = 0.

    Sign character: the exact solution space of s*v = -v over the adjacent
    transpositions, degree by degree.
    """
    _check_character(character)
    n = algebra.n
    generators = algebra.transposition_generators()

    if character == "sign":
        basis = []
        dims = {}
        for k in range(n + 1):
            block = _sign_isotypic_basis(algebra, k, generators)
            for elem in block:
                for g in generators:
                    image = algebra.act(g, elem)
                    negated = {m: -c for m, c in elem.items()}
                    assert element_eq(image, negated)
            if block:
                dims[2 * k] = len(block)
            basis.extend(block)
        return IsotypicSubspace("sign", n, GradedDims(dims), tuple(basis))

    # trivial character
    basis = []
    for k in range(n + 1):
        masks = algebra.masks_of_size(k)
        # the permutation action is transitive on each size class
        orbit = _orbit_of_mask(algebra, masks[0], generators) if generators else {masks[0]}
        assert orbit == set(masks), f"size-{k} masks split into several orbits"
        orbit_sum = {m: 1 for m in masks}
        for g in generators:
            assert element_eq(algebra.act(g, orbit_sum), orbit_sum)
        basis.append(orbit_sum)

    h = algebra.h()
    hk = algebra.one()
    for k in range(n + 1):
        expected = {m: math.factorial(k) for m in algebra.masks_of_size(k)}
        assert element_eq(hk, expected), f"h^{k} is not {k}! times the orbit sum"
        assert not is_zero_element(hk)
        hk = algebra.multiply(hk, h)
    assert is_zero_element(hk), "h^(n+1) should vanish"

    dims = GradedDims({2 * k: 1 for k in range(n + 1)})
    return IsotypicSubspace("trivial", n, dims, tuple(basis), generator=h, nilpotency_order=n + 1)
