"""Exact arithmetic: reduced rationals, integer square roots and the
quadratic extension Q(sqrt(m)).

Rationals are :class:`fractions.Fraction`; integers are plain Python ints.
:class:`QuadExt` holds numbers ``a + b*sqrt(m)`` with rational ``a, b`` and a
squarefree radicand ``m``.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Union

__all__ = [
    "QuadExt",
    "reduce",
    "isqrt",
    "is_perfect_square",
    "squarefree_decomposition",
    "quad_solve",
    "rational_to_str",
    "parse_rational",
]

RationalLike = Union[int, Fraction]


def reduce(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(int(num), int(den))


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> Optional[int]:
    """Return ``d >= 0`` with ``d*d == n``, or ``None`` if no such ``d`` exists."""
    if n < 0:
        return None
    d = math.isqrt(n)
    return d if d * d == n else None


_PRIMES: list[int] = [2, 3]


def _primes_up_to(limit: int) -> list[int]:
    """Cached ascending primes, the cache grows on demand."""
    if _PRIMES[-1] < limit:
        bound = max(limit, 2 * _PRIMES[-1])
        sieve = bytearray([1]) * (bound + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(bound) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
        _PRIMES[:] = [i for i, flag in enumerate(sieve) if flag]
    return _PRIMES


def _icbrt(n: int) -> int:
    r = int(round(n ** (1.0 / 3.0)))
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Split ``n >= 0`` as ``n = s**2 * m`` with ``m`` squarefree.

    Trial division runs up to the cube root of what is left; the remaining
    cofactor then has at most two prime factors, so it is either squarefree
    or a perfect square.
    """
    if n < 0:
        raise ValueError("squarefree decomposition of a negative number")
    if n == 0:
        return 0, 0
    root = is_perfect_square(n)
    if root is not None:
        return root, 1
    s, m, rest = 1, 1, n
    for p in _primes_up_to(_icbrt(n) + 1):
        if p * p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                m *= p
    root = is_perfect_square(rest)
    if root is not None:
        s *= root
    else:
        m *= rest
    return s, m


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _sign(a: Fraction, b: Fraction, m: int) -> int:
    """Sign of ``a + b*sqrt(m)`` computed exactly."""
    if b == 0 or m == 0:
        return (a > 0) - (a < 0)
    sb = 1 if b > 0 else -1
    if a == 0:
        return sb
    sa = 1 if a > 0 else -1
    if sa == sb:
        return sa
    # opposite signs: the larger magnitude wins
    lhs, rhs = a * a, b * b * m
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


class QuadExt:
    """An element ``a + b*sqrt(m)`` of a real quadratic field.

    Instances are immutable and canonical: ``m`` is squarefree, and
    ``b == 0`` forces ``m == 0``.  Binary operations require both operands to
    live in the same field unless one of them is rational.
    """

    __slots__ = ("_a", "_b", "_m")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, m: int = 0):
        a, b = _as_fraction(a), _as_fraction(b)
        m = int(m)
        if m < 0:
            raise ValueError("radicand must be non-negative")
        if b != 0 and m != 0:
            s, m = squarefree_decomposition(m)
            b *= s
            if m == 1:
                a, b, m = a + b, Fraction(0), 0
        if b == 0 or m == 0:
            b, m = Fraction(0), 0
        self._a, self._b, self._m = a, b, m

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, m: int) -> "QuadExt":
        # m already squarefree (or zero)
        obj = object.__new__(cls)
        if b == 0 or m == 0:
            b, m = Fraction(0), 0
        obj._a, obj._b, obj._m = a, b, m
        return obj

    @classmethod
    def sqrt(cls, r: RationalLike) -> "QuadExt":
        """Exact square root of a non-negative rational."""
        r = _as_fraction(r)
        if r < 0:
            raise ValueError("square root of a negative rational")
        # sqrt(n/d) = sqrt(n*d)/d; gcd(n, d) = 1 keeps m1*m2 squarefree
        s1, m1 = squarefree_decomposition(r.numerator)
        s2, m2 = squarefree_decomposition(r.denominator)
        coeff = Fraction(s1 * s2, r.denominator)
        if m1 * m2 == 1:
            return cls._raw(coeff if r else Fraction(0), Fraction(0), 0)
        return cls._raw(Fraction(0), coeff, m1 * m2)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def m(self) -> int:
        return self._m

    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} is irrational")
        return self._a

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self._a, -self._b, self._m)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - m*b**2``."""
        return self._a * self._a - self._m * self._b * self._b

    def sign(self) -> int:
        return _sign(self._a, self._b, self._m)

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> Optional["QuadExt"]:
        if isinstance(other, QuadExt):
            if self._m and other._m and self._m != other._m:
                raise ValueError(
                    f"cannot combine Q(sqrt({self._m})) with Q(sqrt({other._m}))"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt._raw(_as_fraction(other), Fraction(0), 0)
        return None

    def _field(self, other: "QuadExt") -> int:
        return self._m or other._m

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self._a + o._a, self._b + o._b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self._a, -self._b, self._m)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self._a - o._a, self._b - o._b, self._field(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self._field(o)
        a = self._a * o._a + self._b * o._b * m
        b = self._a * o._b + self._b * o._a
        return QuadExt._raw(a, b, m)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in QuadExt")
        return self * QuadExt._raw(o._a / n, -o._b / n, o._m)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return QuadExt._raw(Fraction(1), Fraction(0), 0) / (self ** (-e))
        result, base = QuadExt._raw(Fraction(1), Fraction(0), 0), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, float):
            return False
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._m == o._m

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._m))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadExt with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self._b != 0 or self._a != 0

    # -- conversion -------------------------------------------------------
    def to_decimal(self, digits: int = 40) -> decimal.Decimal:
        with decimal.localcontext() as ctx:
            ctx.prec = digits
            a = decimal.Decimal(self._a.numerator) / self._a.denominator
            if self._b == 0:
                return +a
            b = decimal.Decimal(self._b.numerator) / self._b.denominator
            return a + b * decimal.Decimal(self._m).sqrt()

    def __float__(self):
        if self._b == 0:
            return float(self._a)
        return float(self.to_decimal())

    def __repr__(self):
        if self._b == 0:
            return f"QuadExt({rational_to_str(self._a)})"
        return (
            f"QuadExt({rational_to_str(self._a)} + "
            f"{rational_to_str(self._b)}*sqrt({self._m}))"
        )

    def __str__(self):
        if self._b == 0:
            return rational_to_str(self._a)
        return f"{rational_to_str(self._a)}+{rational_to_str(self._b)}*sqrt({self._m})"

    def to_json(self) -> dict:
        return {
            "a": rational_to_str(self._a),
            "b": rational_to_str(self._b),
            "m": str(self._m),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuadExt":
        return cls(parse_rational(obj["a"]), parse_rational(obj["b"]), int(obj["m"]))


def quad_solve(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[QuadExt, QuadExt]:
    """Both real roots of ``a*x**2 + b*x + c = 0``, ascending."""
    a, b, c = _as_fraction(a), _as_fraction(b), _as_fraction(c)
    if a == 0:
        raise ValueError("leading coefficient is zero")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError(f"negative discriminant {disc}")
    root = QuadExt.sqrt(disc)
    r1 = (-b - root) / (2 * a)
    r2 = (-b + root) / (2 * a)
    return (r1, r2) if r1 <= r2 else (r2, r1)


def rational_to_str(r: RationalLike) -> str:
    """Serialize as ``"num/den"``; integers drop the ``/1``."""
    r = _as_fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string.  Decimals are rejected."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"not an exact rational: {text!r}") from None
        return reduce(n, d)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
