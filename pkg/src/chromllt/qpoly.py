"""Exact univariate polynomials in ``q``.

Coefficients are Python ints by default. :class:`fractions.Fraction`
coefficients are allowed (the power-sum pipeline needs them) and can be
narrowed back with :meth:`QPoly.to_integral`, which refuses to round.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import NonIntegral, NonzeroRemainder

__all__ = [
    "QPoly",
    "q_int",
    "q_factorial",
    "exact_div",
    "is_palindromic",
    "ZERO",
    "ONE",
    "Q",
]


def _normalize_scalar(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _normalize_scalar(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact or unsupported coefficient {c!r}")


class QPoly:
    """Dense polynomial ``c0 + c1 q + c2 q^2 + ...``; immutable.

    The zero polynomial has the empty coefficient tuple, otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_normalize_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # constructors
    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "QPoly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        return cls((x,))

    # accessors
    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    @property
    def low_degree(self) -> int:
        for i, c in enumerate(self._c):
            if c:
                return i
        return -1

    def __getitem__(self, i: int):
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def to_integral(self) -> "QPoly":
        if not self.is_integral():
            raise NonIntegral(f"non-integral coefficients in {self}")
        return self

    def to_fraction(self) -> "QPoly":
        out = QPoly()
        out._c = tuple(Fraction(c) for c in self._c)
        return out

    # ring operations
    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == QPoly.const(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        other = QPoly.coerce(other) if not isinstance(other, QPoly) else other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-x for x in self._c)

    def __sub__(self, other):
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                return QPoly(x * other for x in self._c)
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k`` (``k >= 0``)."""
        if not self._c:
            return self
        return QPoly([0] * k + list(self._c))

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def divmod(self, den: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._c)
        dc = den._c
        lead = dc[-1]
        dq = len(dc) - 1
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq]
            if c == 0:
                continue
            t = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
            t = _normalize_scalar(t)
            quot[k] = t
            for j, d in enumerate(dc):
                rem[k + j] -= t * d
        return QPoly(quot), QPoly(rem)

    def __repr__(self):
        return f"QPoly({list(self._c)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                cs = str(c)
                if isinstance(c, Fraction) and mono:
                    cs = f"({cs})"
                s = cs + mono
            terms.append(s)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    # serialization
    def to_json(self) -> list[str]:
        return [str(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QPoly":
        return cls(Fraction(s) if "/" in str(s) else int(s) for s in data)


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def q_int(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for i in range(2, n + 1):
        out = out * q_int(i)
    return out


def exact_div(num: QPoly, den: QPoly) -> QPoly:
    """Quotient of an exact polynomial division.

    Raises :class:`NonzeroRemainder` when ``den`` does not divide ``num``;
    for integral inputs the quotient must also be integral.
    """
    num, den = QPoly.coerce(num), QPoly.coerce(den)
    quot, rem = num.divmod(den)
    if rem:
        raise NonzeroRemainder(f"({num}) / ({den}) leaves remainder {rem}")
    if num.is_integral() and den.is_integral() and not quot.is_integral():
        raise NonzeroRemainder(f"({den}) does not divide ({num}) over the integers")
    return quot


def is_palindromic(p: QPoly, twice_center: int) -> bool:
    """True iff ``[q^i] p == [q^(twice_center - i)] p`` for every ``i``."""
    if twice_center < 0:
        raise ValueError("twice_center must be >= 0")
    p = QPoly.coerce(p)
    if p.degree > twice_center:
        return False
    return all(p[i] == p[twice_center - i] for i in range(twice_center + 1))
