"""Dense truncated Taylor series and their coefficient algebra.

Everything else in the package works on these objects: a series is a plain
polynomial ``c_0 + c_1 z + ... + c_N z**N`` stored as a dense coefficient
tuple.  Truncating an infinite Taylor expansion down to one of these is the
caller's modelling decision; the arithmetic here is exact polynomial
arithmetic up to the requested truncation degree.

Two coefficient modes exist.  The default is double-precision complex.  If
every coefficient passed in is an ``int``, a ``Fraction``, or a
``RationalComplex``, the series is kept in exact rational-complex form
instead, which makes the coefficient-level operator identities testable
with zero tolerance.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np

__all__ = [
    "RationalComplex",
    "TaylorSeries",
    "add",
    "subtract",
    "scale",
    "multiply",
    "derivative",
    "evaluate",
    "zero",
    "monomial",
    "to_dict",
    "from_dict",
    "dumps",
    "loads",
    "save_series",
    "load_series",
]


def _as_rational(value):
    """Coerce to RationalComplex, or None when the value is inexact."""
    if isinstance(value, RationalComplex):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalComplex(value)
    return None


class RationalComplex:
    """Complex scalar with exact ``Fraction`` real and imaginary parts.

    Arithmetic with RationalComplex, int, or Fraction operands stays exact;
    mixing with float or complex degrades to complex, the same promotion
    rule Fraction itself follows.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return math.hypot(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return RationalComplex(self.re, -self.im)

    def __eq__(self, other):
        o = _as_rational(other)
        if o is not None:
            return self.re == o.re and self.im == o.im
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __add__(self, other):
        o = _as_rational(other)
        if o is None:
            return complex(self) + other
        return RationalComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return RationalComplex(-self.re, -self.im)

    def __sub__(self, other):
        o = _as_rational(other)
        if o is None:
            return complex(self) - other
        return RationalComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_rational(other)
        if o is None:
            return complex(self) * other
        return RationalComplex(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_rational(other)
        if o is None:
            return complex(self) / other
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero")
        return RationalComplex(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __rtruediv__(self, other):
        o = _as_rational(other)
        if o is None:
            return other / complex(self)
        return o / self

    def __repr__(self):
        return f"RationalComplex({self.re!r}, {self.im!r})"


class TaylorSeries:
    """A polynomial ``c_0 + c_1 z + ... + c_N z**N``, immutable, densely stored.

    ``order`` is N and ``len(coeffs) == order + 1`` always; the canonical
    zero series is the single coefficient ``[0]``.  Equality is polynomial
    equality: trailing zero coefficients are ignored.
    """

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs):
        items = list(coeffs)
        if not items:
            raise ValueError("a series needs at least the degree-0 coefficient")
        exact = all(isinstance(c, (RationalComplex, int, Fraction)) for c in items)
        if exact:
            self.coeffs = tuple(
                c if isinstance(c, RationalComplex) else RationalComplex(c)
                for c in items
            )
        else:
            self.coeffs = tuple(complex(c) for c in items)
        self.exact = exact

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TaylorSeries):
            return NotImplemented
        top = max(self.order, other.order)
        for k in range(top + 1):
            a = self.coeffs[k] if k <= self.order else 0
            b = other.coeffs[k] if k <= other.order else 0
            if not a == b:
                return False
        return True

    def __add__(self, other):
        if isinstance(other, TaylorSeries):
            return add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TaylorSeries):
            return subtract(self, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            return multiply(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __neg__(self):
        return scale(self, -1)

    def __repr__(self):
        return f"TaylorSeries({list(self.coeffs)!r})"


def zero(exact=False):
    """The canonical zero series in the requested coefficient mode."""
    return TaylorSeries([RationalComplex(0)]) if exact else TaylorSeries([0j])


def monomial(degree, coeff=1):
    """The series ``coeff * z**degree``; coefficient mode follows ``coeff``."""
    if degree < 0 or degree != int(degree):
        raise ValueError(f"degree must be a non-negative integer, got {degree}")
    return TaylorSeries([0] * int(degree) + [coeff]) if _is_exact_scalar(coeff) \
        else TaylorSeries([0j] * int(degree) + [complex(coeff)])


def _is_exact_scalar(c):
    return isinstance(c, (RationalComplex, int, Fraction))


def _aligned(f, g):
    """Coefficient lists of f and g in a common mode, padded to equal length."""
    exact = f.exact and g.exact
    top = max(f.order, g.order)
    pad = RationalComplex(0) if exact else 0j

    def widen(s):
        cs = s.coeffs if s.exact == exact else tuple(complex(c) for c in s.coeffs)
        return list(cs) + [pad] * (top - s.order)

    return widen(f), widen(g)


def add(f, g):
    """Coefficient-wise sum; output order is max(order(f), order(g))."""
    fa, ga = _aligned(f, g)
    return TaylorSeries([a + b for a, b in zip(fa, ga)])


def subtract(f, g):
    """Coefficient-wise difference; output order is max(order(f), order(g))."""
    fa, ga = _aligned(f, g)
    return TaylorSeries([a - b for a, b in zip(fa, ga)])


def scale(f, factor):
    """Multiply every coefficient by a scalar."""
    return TaylorSeries([c * factor for c in f.coeffs])


def multiply(f, g, out_order=None):
    """Cauchy product truncated at ``out_order`` (default: full product order).

    With the default the product is exact for polynomials; a smaller
    ``out_order`` truncates, a larger one zero-pads.  Exact mode convolves
    with rational arithmetic, float mode goes through ``np.convolve``.
    """
    if out_order is None:
        out_order = f.order + g.order
    if out_order < 0 or out_order != int(out_order):
        raise ValueError(f"out_order must be a non-negative integer, got {out_order}")
    out_order = int(out_order)
    if f.exact and g.exact:
        out = [RationalComplex(0)] * (out_order + 1)
        for i, a in enumerate(f.coeffs):
            if not a:
                continue
            for j in range(min(g.order, out_order - i) + 1):
                out[i + j] = out[i + j] + a * g.coeffs[j]
        return TaylorSeries(out)
    fa = np.asarray([complex(c) for c in f.coeffs], dtype=complex)
    ga = np.asarray([complex(c) for c in g.coeffs], dtype=complex)
    conv = np.convolve(fa, ga)[: out_order + 1]
    out = np.zeros(out_order + 1, dtype=complex)
    out[: conv.size] = conv
    return TaylorSeries(out)


def derivative(f, m=1):
    """The m-th formal derivative; degree drops by m, floored at the zero series."""
    if m < 0 or m != int(m):
        raise ValueError(f"derivative count must be a non-negative integer, got {m}")
    m = int(m)
    if m == 0:
        return f
    if m > f.order:
        return zero(exact=f.exact)
    # coefficient at degree k picks up (k+m)! / k! = perm(k+m, m), exactly
    out = [f.coeffs[k + m] * math.perm(k + m, m) for k in range(f.order - m + 1)]
    return TaylorSeries(out)


def evaluate(f, z):
    """Horner evaluation of the stored polynomial at z.

    Exact coefficients with an exact z give an exact result; any float or
    complex operand degrades the result to complex.
    """
    acc = f.coeffs[-1]
    for c in reversed(f.coeffs[:-1]):
        acc = acc * z + c
    return acc


def to_dict(f):
    """JSON-ready form: ``{"order": N, "coeffs": [[re, im], ...]}``."""
    return {
        "order": f.order,
        "coeffs": [[complex(c).real, complex(c).imag] for c in f.coeffs],
    }


def from_dict(data):
    """Inverse of :func:`to_dict`; malformed input raises ValueError."""
    if not isinstance(data, dict) or "order" not in data or "coeffs" not in data:
        raise ValueError("series object needs 'order' and 'coeffs' fields")
    pairs = data["coeffs"]
    if not isinstance(pairs, list) or not pairs:
        raise ValueError("'coeffs' must be a non-empty list of [re, im] pairs")
    if data["order"] != len(pairs) - 1:
        raise ValueError(
            f"order {data['order']} does not match {len(pairs)} coefficients"
        )
    coeffs = []
    for entry in pairs:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError("each coefficient must be a [re, im] pair")
        coeffs.append(complex(float(entry[0]), float(entry[1])))
    return TaylorSeries(coeffs)


def dumps(f):
    """Serialize to a JSON string; floats round-trip exactly via repr."""
    return json.dumps(to_dict(f))


def loads(text):
    """Parse a series from a JSON string."""
    return from_dict(json.loads(text))


def save_series(f, path):
    Path(path).write_text(dumps(f) + "\n", encoding="utf-8")


def load_series(path):
    return loads(Path(path).read_text(encoding="utf-8"))
