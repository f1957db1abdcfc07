"""Exact p-adic numbers with eventually periodic digit streams.

A nonzero element is stored as an order v (index of the first nonzero digit)
together with a preperiodic digit block and a repeating block, all digits in
{0, ..., p-1}.  Eventually periodic streams are exactly the rationals, so the
representation is lossless and equality is decidable: the constructor always
reduces to the unique minimal (preperiod, period) form.

Irrational p-adics are supported only as finite windows (TruncatedPAdic),
with every operation tracking the absolute precision it can honestly claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import PFrac, is_prime

ORD_INF = math.inf  # order sentinel for zero


class PrecisionError(ValueError):
    """A truncated digit window does not determine the requested quantity."""


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _min_period(per: tuple[int, ...]) -> tuple[int, ...]:
    L = len(per)
    for d in range(1, L + 1):
        if L % d == 0 and per == per[:d] * (L // d):
            return per[:d]
    return per


class PAdic:
    """Element of Q_p with an eventually periodic (hence rational) digit stream."""

    __slots__ = ("p", "_v", "pre", "per")

    def __init__(self, p: int, v: int, pre, per):
        _require_prime(p)
        pre = tuple(int(d) for d in pre)
        per = tuple(int(d) for d in per) or (0,)
        for d in pre + per:
            if not 0 <= d < p:
                raise ValueError(f"digit {d} out of range for p={p}")
        per = _min_period(per)
        # fold preperiod digits that already agree with the rolling period
        while pre and pre[-1] == per[-1]:
            per = (per[-1],) + per[:-1]
            pre = pre[:-1]
        # advance past leading zeros so the digit at index v is nonzero
        while pre and pre[0] == 0:
            pre = pre[1:]
            v += 1
        if not pre and any(per):
            while per[0] == 0:
                per = per[1:] + per[:1]
                v += 1
        if not pre and not any(per):
            v, pre, per = 0, (), (0,)
        self.p = p
        self._v = v
        self.pre = pre
        self.per = per

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "PAdic":
        return cls(p, 0, (), (0,))

    @classmethod
    def from_rational(cls, p: int, q) -> "PAdic":
        """Expand a rational exactly: digits are generated until the carry
        state repeats, which yields the minimal eventually periodic form."""
        _require_prime(p)
        q = Fraction(q)
        if q == 0:
            return cls.zero(p)
        num, den = q.numerator, q.denominator
        v = 0
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        inv_den = pow(den, -1, p)
        digits: list[int] = []
        seen: dict[int, int] = {}
        m = num
        while m not in seen:
            seen[m] = len(digits)
            d = (m * inv_den) % p
            digits.append(d)
            m = (m - d * den) // p
        start = seen[m]
        return cls(p, v, tuple(digits[:start]), tuple(digits[start:]))

    @classmethod
    def from_int(cls, p: int, n: int) -> "PAdic":
        return cls.from_rational(p, Fraction(n))

    @classmethod
    def from_json(cls, obj: dict) -> "PAdic":
        return cls(obj["p"], obj["ord"], tuple(obj["preperiod"]), tuple(obj["period"]))

    # -- basic views ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.pre and self.per == (0,)

    @property
    def ord(self):
        """Valuation: index of the first nonzero digit; ORD_INF for zero."""
        return ORD_INF if self.is_zero else self._v

    def digit(self, j: int) -> int:
        if self.is_zero:
            return 0
        i = j - self._v
        if i < 0:
            return 0
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def as_fraction(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        p = Fraction(self.p)
        total = Fraction(0)
        for i, d in enumerate(self.pre):
            total += d * p ** (self._v + i)
        L = len(self.per)
        block = sum(d * self.p**i for i, d in enumerate(self.per))
        total += Fraction(block, 1 - self.p**L) * p ** (self._v + len(self.pre))
        return total

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "ord": 0 if self.is_zero else self._v,
            "preperiod": list(self.pre),
            "period": list(self.per),
        }

    def truncate(self, n: int) -> "TruncatedPAdic":
        """Digit window up to (excluding) index n, i.e. the value mod p**n."""
        v = 0 if self.is_zero else self._v
        if n <= v:
            return TruncatedPAdic(self.p, n, ())
        return TruncatedPAdic(self.p, v, tuple(self.digit(j) for j in range(v, n)))

    # -- arithmetic (rational closure; exact) ---------------------------------

    def _coerce(self, other) -> "Fraction | None":
        if isinstance(other, PAdic):
            if other.p != self.p:
                raise ValueError(f"mixed primes {self.p} and {other.p}")
            return other.as_fraction()
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        if isinstance(other, PFrac):
            return other.as_fraction()
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return PAdic.from_rational(self.p, self.as_fraction() + q)

    __radd__ = __add__

    def __neg__(self):
        return self.negate()

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return PAdic.from_rational(self.p, self.as_fraction() - q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return PAdic.from_rational(self.p, q - self.as_fraction())

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return PAdic.from_rational(self.p, self.as_fraction() * q)

    __rmul__ = __mul__

    def invert(self) -> "PAdic":
        """Multiplicative inverse; ord flips sign, units stay units."""
        if self.is_zero:
            raise ZeroDivisionError("p-adic zero has no inverse")
        return PAdic.from_rational(self.p, 1 / self.as_fraction())

    def negate(self) -> "PAdic":
        """Digitwise negation: first digit p - a_v, every later digit p-1 - a_j."""
        if self.is_zero:
            return self
        if self.pre:
            first, rest, per = self.pre[0], self.pre[1:], self.per
        else:
            first, rest, per = self.per[0], (), self.per[1:] + self.per[:1]
        new_pre = (self.p - first,) + tuple(self.p - 1 - d for d in rest)
        new_per = tuple(self.p - 1 - d for d in per)
        return PAdic(self.p, self._v, new_pre, new_per)

    def frac_part(self) -> PFrac:
        """Fractional part: the digits at negative indices, a value in [0,1) of Z[1/p]."""
        if self.is_zero or self._v >= 0:
            return PFrac(self.p, 0)
        num = sum(self.digit(j) * self.p ** (j - self._v) for j in range(self._v, 0))
        return PFrac(self.p, num, -self._v)

    def truncate_sum(self, lo: int, hi: int) -> PFrac:
        """Exact window sum of digit(j) * p**j for lo <= j <= hi."""
        if lo > hi:
            return PFrac(self.p, 0)
        shift = min(lo, 0)
        num = sum(self.digit(j) * self.p ** (j - shift) for j in range(lo, hi + 1))
        return PFrac(self.p, num, -shift)

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PAdic):
            return (self.p, self._v, self.pre, self.per) == (
                other.p,
                other._v,
                other.pre,
                other.per,
            )
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self._v, self.pre, self.per))

    def __repr__(self):
        if self.is_zero:
            return f"PAdic(p={self.p}, 0)"
        return f"PAdic(p={self.p}, ord={self._v}, pre={list(self.pre)}, per={list(self.per)})"


@dataclass(frozen=True)
class TruncatedPAdic:
    """Finite digit window: digits for indices v <= j < v + len(digits).

    The value is known exactly mod p**precision where precision = v + len(digits);
    digits below v are zero by contract.
    """

    p: int
    v: int
    digits: tuple[int, ...]

    def __post_init__(self):
        _require_prime(self.p)
        for d in self.digits:
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} out of range for p={self.p}")

    @property
    def precision(self) -> int:
        return self.v + len(self.digits)

    def digit(self, j: int) -> int:
        if j >= self.precision:
            raise PrecisionError(f"digit at index {j} is beyond precision {self.precision}")
        if j < self.v:
            return 0
        return self.digits[j - self.v]

    def unit_int(self) -> int:
        """The stored window read as an integer sum(d_i * p**i)."""
        return sum(d * self.p**i for i, d in enumerate(self.digits))

    def mul(self, other: "TruncatedPAdic") -> "TruncatedPAdic":
        if self.p != other.p:
            raise ValueError(f"mixed primes {self.p} and {other.p}")
        n = min(len(self.digits), len(other.digits))
        if n == 0:
            raise PrecisionError("no digits to multiply")
        v = self.v + other.v
        prod = (self.unit_int() * other.unit_int()) % self.p**n
        digits = []
        for _ in range(n):
            digits.append(prod % self.p)
            prod //= self.p
        return TruncatedPAdic(self.p, v, tuple(digits))

    def invert(self) -> "TruncatedPAdic":
        """Inverse window by modular lifting; needs a visible nonzero digit."""
        z = 0
        while z < len(self.digits) and self.digits[z] == 0:
            z += 1
        if z == len(self.digits):
            raise PrecisionError("window is zero to full precision; order unknown")
        vv = self.v + z
        unit_digits = self.digits[z:]
        m = len(unit_digits)
        u = sum(d * self.p**i for i, d in enumerate(unit_digits))
        w = pow(u, -1, self.p**m)
        digits = []
        for _ in range(m):
            digits.append(w % self.p)
            w //= self.p
        return TruncatedPAdic(self.p, -vv, tuple(digits))

    def frac_part(self) -> PFrac:
        if self.v >= 0:
            return PFrac(self.p, 0)
        if self.precision < 0:
            raise PrecisionError(
                f"negative-index digits end at {self.precision}; fractional part undetermined"
            )
        num = sum(self.digit(j) * self.p ** (j - self.v) for j in range(self.v, 0))
        return PFrac(self.p, num, -self.v)

    def truncate_sum(self, lo: int, hi: int) -> PFrac:
        if lo > hi:
            return PFrac(self.p, 0)
        if hi >= self.precision:
            raise PrecisionError(f"window ends at {self.precision}, need digit {hi}")
        shift = min(lo, 0)
        num = sum(self.digit(j) * self.p ** (j - shift) for j in range(lo, hi + 1))
        return PFrac(self.p, num, -shift)


# -- module-level operation surface ------------------------------------------


def from_rational(p: int, q) -> PAdic:
    return PAdic.from_rational(p, q)


def invert(x):
    return x.invert()


def frac_part(x) -> PFrac:
    return x.frac_part()


def truncate_sum(x, lo: int, hi: int) -> PFrac:
    return x.truncate_sum(lo, hi)


def negate_digits(x: PAdic) -> PAdic:
    return x.negate()


def rational_frac_part(p: int, q) -> PFrac:
    """Fractional part of a rational inside Q_p, without periodic closure.

    Only the finitely many negative-index digits are extracted, so this stays
    cheap for products with large denominators prime to p.
    """
    _require_prime(p)
    q = Fraction(q)
    if q == 0:
        return PFrac(p, 0)
    num, den = q.numerator, q.denominator
    v = 0
    while den % p == 0:
        den //= p
        v -= 1
    if v >= 0:
        return PFrac(p, 0)
    inv_den = pow(den, -1, p)
    total = 0
    m = num
    for i in range(-v):
        d = (m * inv_den) % p
        total += d * p**i
        m = (m - d * den) // p
    return PFrac(p, total, -v)
