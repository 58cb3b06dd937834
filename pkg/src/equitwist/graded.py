"""Exact graded dimension vectors and Laurent-polynomial Hilbert series.

Everything here is integer/rational arithmetic; there is deliberately no
floating point anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction


def _as_exact(c):
    """Normalize a coefficient to int when possible, keeping Fractions exact."""
    if isinstance(c, bool):
        raise TypeError("boolean is not a valid coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class HilbertSeries:
    """A Laurent polynomial in one variable t with exact coefficients.

    Coefficients may be negative (virtual characters show up in isotypic
    computations); zero coefficients are never stored.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        data = {}
        for d, c in items:
            if not isinstance(d, int):
                raise TypeError(f"exponent must be an integer, got {d!r}")
            c = _as_exact(c)
            if c:
                data[d] = data.get(d, 0) + c
        object.__setattr__(self, "_coeffs", {d: c for d, c in data.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("HilbertSeries is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    def coefficient(self, d):
        return self._coeffs.get(d, 0)

    @property
    def coefficients(self):
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    def support(self):
        return sorted(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        data = dict(self._coeffs)
        for d, c in other._coeffs.items():
            data[d] = data.get(d, 0) + c
        return HilbertSeries(data)

    def __neg__(self):
        return HilbertSeries({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HilbertSeries({d: c * other for d, c in self._coeffs.items()})
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        data = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                d = d1 + d2
                data[d] = data.get(d, 0) + c1 * c2
        return HilbertSeries(data)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = HilbertSeries.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute_power(self, ell):
        """The substitution t -> t^ell, a ring homomorphism for ell >= 1."""
        if not isinstance(ell, int) or ell < 1:
            raise ValueError("substitution power must be a positive integer")
        return HilbertSeries({d * ell: c for d, c in self._coeffs.items()})

    def __repr__(self):
        return f"HilbertSeries({dict(self.items())!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self.items():
            if d == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t^{d}")
            else:
                parts.append(f"{c}*t^{d}")
        return " + ".join(parts)


class GradedDims:
    """Finitely supported map from integer degree to a positive dimension.

    Zero entries are never stored, so equality is support-wise equality.
    The associated Hilbert series is sum(dim_d * t^d).
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        items = entries.items() if hasattr(entries, "items") else entries
        data = {}
        for d, v in items:
            if not isinstance(d, int):
                raise TypeError(f"degree must be an integer, got {d!r}")
            if isinstance(v, Fraction) and v.denominator == 1:
                v = int(v)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"dimension must be an integer, got {v!r}")
            if v < 0:
                raise ValueError(f"dimension at degree {d} is negative: {v}")
            if v:
                data[d] = data.get(d, 0) + v
        object.__setattr__(self, "_entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("GradedDims is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def point(cls, degree=0, dim=1):
        return cls({degree: dim})

    def dim(self, d):
        return self._entries.get(d, 0)

    @property
    def entries(self):
        return dict(self._entries)

    def items(self):
        return sorted(self._entries.items())

    def degrees(self):
        return sorted(self._entries)

    def total(self):
        return sum(self._entries.values())

    def is_zero(self):
        return not self._entries

    def has_even_support(self):
        return all(d % 2 == 0 for d in self._entries)

    def min_degree(self):
        if not self._entries:
            raise ValueError("zero graded vector has no minimal degree")
        return min(self._entries)

    def max_degree(self):
        if not self._entries:
            raise ValueError("zero graded vector has no maximal degree")
        return max(self._entries)

    def hilbert(self):
        return HilbertSeries(self._entries)

    @classmethod
    def from_hilbert(cls, series):
        """Read a series back as dimensions; rejects negative or fractional coefficients."""
        for d, c in series.items():
            if isinstance(c, Fraction) and c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c} at degree {d}")
            if c < 0:
                raise ValueError(f"negative coefficient {c} at degree {d}")
        return cls(series.coefficients)

    def to_json(self):
        return {str(d): v for d, v in self.items()}

    @classmethod
    def from_json(cls, data):
        return cls({int(d): v for d, v in data.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"GradedDims({dict(self.items())!r})"

    def __str__(self):
        if not self._entries:
            return "{}"
        return "{" + ", ".join(f"{d}: {v}" for d, v in self.items()) + "}"


def kunneth_product(a, b):
    """Tensor product of graded pieces: convolution of the dimension vectors."""
    return GradedDims.from_hilbert(a.hilbert() * b.hilbert())


def tensor_power(a, n):
    if not isinstance(n, int) or n < 0:
        raise ValueError("tensor power must be a nonnegative integer")
    out = GradedDims.point()
    for _ in range(n):
        out = kunneth_product(out, a)
    return out


def shift(a, k):
    """Graded-Hom shift: entries move to degree d - k, so Hom^*(A, B[k]) = shift(Hom^*(A, B), k)."""
    if not isinstance(k, int):
        raise TypeError("shift must be an integer")
    return GradedDims({d - k: v for d, v in a.entries.items()})


def graded_sum(*parts):
    """Direct sum of graded pieces (degree-wise addition of dimensions)."""
    data = {}
    for p in parts:
        for d, v in p.entries.items():
            data[d] = data.get(d, 0) + v
    return GradedDims(data)
