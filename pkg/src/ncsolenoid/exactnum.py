"""Exact arithmetic substrate: rationals, p-power fractions, quadratic irrationals.

Every value here is immutable and every operation is exact; no floating point
enters any arithmetic or comparison path.  Floats appear only on explicit
lowering (``float(x)``) for the numeric verification kernels.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

# Arbitrary-precision rationals, kept in canonical reduced form with positive
# denominator.  The stdlib type already satisfies that contract.
Rat = Fraction


class RadicandMismatchError(ValueError):
    """Arithmetic tried to combine surds over two different radicands."""


def ext_gcd(u: int, v: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, s, t) with g = gcd(u, v) >= 0 and s*u + t*v = g.

    Convention: gcd(a, 0) = |a|.  Undefined for u = v = 0.
    """
    if u == 0 and v == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = abs(u), abs(v)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, (old_s if u >= 0 else -old_s), (old_t if v >= 0 else -old_t)


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for the desk-scale primes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PFrac:
    """Element j / p**k of Z[1/p], stored in reduced form.

    Reduced means k is minimal: either k = 0 or p does not divide j.
    """

    __slots__ = ("p", "j", "k")

    def __init__(self, p: int, j: int, k: int = 0):
        if p < 2:
            raise ValueError(f"base must be at least 2, got {p}")
        if k < 0:
            raise ValueError(f"exponent must be nonnegative, got {k}")
        while k > 0 and j % p == 0:
            j //= p
            k -= 1
        if j == 0:
            k = 0
        self.p = p
        self.j = j
        self.k = k

    @classmethod
    def from_fraction(cls, p: int, q) -> "PFrac":
        q = Fraction(q)
        den = q.denominator
        k = 0
        while den % p == 0:
            den //= p
            k += 1
        if den != 1:
            raise ValueError(f"{q} is not a p-power fraction for p={p}")
        return cls(p, q.numerator, k)

    @classmethod
    def parse(cls, p: int, text: str) -> "PFrac":
        s = text.strip().replace(" ", "").replace("−", "-")
        m = re.fullmatch(r"(-?\d+)(?:/(\d+)(?:\^(\d+))?)?", s)
        if not m:
            raise ValueError(f"cannot parse p-power fraction {text!r}")
        j = int(m.group(1))
        if m.group(2) is None:
            return cls(p, j)
        base = int(m.group(2))
        k = int(m.group(3)) if m.group(3) else 1
        if base != p:
            raise ValueError(f"base {base} does not match p={p} in {text!r}")
        return cls(p, j, k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.j, self.p**self.k)

    def _check(self, other: "PFrac") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed bases {self.p} and {other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            other = PFrac(self.p, other)
        if not isinstance(other, PFrac):
            return NotImplemented
        self._check(other)
        k = max(self.k, other.k)
        j = self.j * self.p ** (k - self.k) + other.j * self.p ** (k - other.k)
        return PFrac(self.p, j, k)

    __radd__ = __add__

    def __neg__(self):
        return PFrac(self.p, -self.j, self.k)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PFrac) else -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PFrac(self.p, self.j * other, self.k)
        if not isinstance(other, PFrac):
            return NotImplemented
        self._check(other)
        return PFrac(self.p, self.j * other.j, self.k + other.k)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.j != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, PFrac):
            return (self.p, self.j, self.k) == (other.p, other.j, other.k)
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash(self.as_fraction())

    def __str__(self) -> str:
        if self.k == 0:
            return str(self.j)
        if self.k == 1:
            return f"{self.j}/{self.p}"
        return f"{self.j}/{self.p}^{self.k}"

    def __repr__(self) -> str:
        return f"PFrac(p={self.p}, {self})"


def _square_split(n: int) -> tuple[int, int]:
    """Write n = s*s * core with core squarefree; return (s, core)."""
    s, core = 1, 1
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        s *= f ** (e // 2)
        core *= f ** (e % 2)
        f += 1 if f == 2 else 2
    return s, core * n


class QuadReal:
    """Exact real a + b*sqrt(D) with rational a, b and squarefree radicand D >= 0.

    Rational values normalize to D = 0.  Operands with two different
    irrational radicands are rejected (RadicandMismatchError); the radicand is
    a per-context constant.  Order comparisons are decided exactly by signed
    squaring, never by floating point.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        D = int(D)
        if D < 0:
            raise ValueError(f"radicand must be nonnegative, got {D}")
        if b == 0:
            D = 0
        elif D in (0, 1):
            a += b * D
            b = Fraction(0)
            D = 0
        else:
            s, core = _square_split(D)
            b *= s
            if core == 1:
                a += b
                b = Fraction(0)
                core = 0
            D = core
        self.a = a
        self.b = b
        self.D = D

    @classmethod
    def sqrt_of(cls, D: int) -> "QuadReal":
        return cls(0, 1, D)

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def _lift(x) -> "QuadReal | None":
        if isinstance(x, QuadReal):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadReal(x)
        if isinstance(x, PFrac):
            return QuadReal(x.as_fraction())
        return None

    def _radicand_with(self, other: "QuadReal") -> int:
        if self.b and other.b and self.D != other.D:
            raise RadicandMismatchError(f"sqrt({self.D}) vs sqrt({other.D})")
        return self.D if self.b else other.D

    # -- ring / field operations -------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        D = self._radicand_with(o)
        return QuadReal(self.a + o.a, self.b + o.b, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadReal(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        D = self._radicand_with(o)
        return QuadReal(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def _inverse(self) -> "QuadReal":
        if self.b == 0:
            return QuadReal(1 / self.a)  # Fraction raises ZeroDivisionError on 0
        norm = self.a * self.a - self.b * self.b * self.D
        # norm = 0 with b != 0 would force D to be a rational square
        return QuadReal(self.a / norm, -self.b / norm, self.D)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self**(-n))._inverse()
        out = QuadReal(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- exact order --------------------------------------------------------

    def _sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        aa, bb = a * a, b * b * self.D
        if aa == bb:
            return 0
        big_is_a = aa > bb
        return 1 if (a > 0) == big_is_a else -1

    def _cmp(self, other) -> int:
        o = self._lift(other)
        if o is None:
            raise TypeError(f"cannot compare QuadReal with {type(other).__name__}")
        return (self - o)._sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.D == o.D

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a or self.b)

    def __floor__(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        # write self = (A + B*sqrt(D)) / M with integers A, B and M > 0
        qa, qb = self.a.denominator, self.b.denominator
        M = qa * qb // math.gcd(qa, qb)
        A = self.a.numerator * (M // qa)
        B = self.b.numerator * (M // qb)
        s = math.isqrt(B * B * self.D)
        # B*sqrt(D) lies in [s, s+1) for B >= 0 and in (-s-1, -s] for B < 0
        n = (A + (s if B >= 0 else -s)) // M
        while self._cmp(n) < 0:
            n -= 1
        while self._cmp(n + 1) >= 0:
            n += 1
        return n

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    # -- views ---------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        qa, qb = self.a.denominator, self.b.denominator
        M = qa * qb // math.gcd(qa, qb)
        A = self.a.numerator * (M // qa)
        B = self.b.numerator * (M // qb)
        sign = "+" if B >= 0 else "-"
        return f"({A} {sign} {abs(B)}*sqrt({self.D}))/{M}"

    def __repr__(self) -> str:
        return f"QuadReal({self})"

    _QUAD_RE = re.compile(
        r"\(?(-?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)?(?:/(-?\d+))?"
    )
    _SURD_RE = re.compile(r"(-?\d*)\*?sqrt\((\d+)\)(?:/(-?\d+))?")

    @classmethod
    def parse(cls, text: str) -> "QuadReal":
        """Accept "(a + b*sqrt(D))/c", bare surds like "sqrt(2)", and rationals."""
        s = text.strip().replace(" ", "").replace("−", "-")
        m = cls._QUAD_RE.fullmatch(s)
        if m:
            a, sign, b, D, c = m.groups()
            den = int(c) if c else 1
            bb = int(b) if sign == "+" else -int(b)
            return cls(Fraction(int(a), den), Fraction(bb, den), int(D))
        m = cls._SURD_RE.fullmatch(s)
        if m:
            b, D, c = m.groups()
            den = int(c) if c else 1
            bb = -1 if b == "-" else (1 if b in ("", "+") else int(b))
            return cls(0, Fraction(bb, den), int(D))
        return cls(Fraction(s))


def floor(x) -> int:
    """Exact floor of a QuadReal, Fraction, or int."""
    if isinstance(x, QuadReal):
        return x.__floor__()
    return math.floor(x)


def frac1(x) -> QuadReal:
    """Reduce an exact real mod 1 into [0, 1)."""
    q = QuadReal._lift(x)
    if q is None:
        raise TypeError(f"cannot reduce {type(x).__name__} mod 1")
    return q - floor(q)
