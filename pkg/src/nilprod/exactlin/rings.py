"""Coefficient rings: the integers, the rationals and prime fields.

Elements are plain Python objects with arithmetic operators: ``int`` for
ZZ, ``fractions.Fraction`` for QQ and :class:`FpElem` for GF(p).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@total_ordering
class FpElem:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElem(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.v, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElem(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return FpElem(self._coerce(other), self.p) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __lt__(self, other):
        return self.v < self._coerce(other) % self.p

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v}"


class Ring:
    """Common interface; concrete rings are ZZ, QQ and GF(p)."""

    name = "?"
    is_field = False
    characteristic = 0

    def convert(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.convert(Fraction(int(num), int(den)))
        return self.convert(int(text))

    def to_json(self, x):
        """Serialise an element as int or "p/q" string."""
        return int(x)

    def __repr__(self):
        return self.name


class _Integers(Ring):
    name = "Z"

    def convert(self, x):
        if type(x) is int:
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def divmod(self, a, b):
        return divmod(a, b)

    def norm(self, a):
        return abs(a)

    def normalize_unit(self, a):
        """Unit u with u*a canonical (nonnegative)."""
        return -1 if a < 0 else 1

    def __reduce__(self):
        return "ZZ"


class _Rationals(Ring):
    name = "Q"
    is_field = True

    def convert(self, x):
        if type(x) is Fraction:
            return x
        if isinstance(x, FpElem):
            raise ValueError("cannot lift GF(p) element to Q")
        return Fraction(x)

    def divmod(self, a, b):
        return a / b, self.zero

    def norm(self, a):
        return 0 if a == 0 else 1

    def normalize_unit(self, a):
        return 1 / a

    def to_json(self, x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __reduce__(self):
        return "QQ"


@dataclass(frozen=True)
class GF(Ring):
    p: int

    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"GF(p) requires a prime, got {self.p}")

    @property
    def name(self):
        return f"F{self.p}"

    @property
    def characteristic(self):
        return self.p

    def convert(self, x):
        if isinstance(x, FpElem):
            if x.p != self.p:
                raise ValueError("characteristic mismatch")
            return x
        if isinstance(x, Fraction):
            return FpElem(x.numerator, self.p) / x.denominator
        return FpElem(int(x), self.p)

    def divmod(self, a, b):
        return a / b, self.zero

    def norm(self, a):
        return 0 if a == 0 else 1

    def normalize_unit(self, a):
        return 1 / a

    def __repr__(self):
        return self.name


ZZ = _Integers()
QQ = _Rationals()


def ring_from_name(name: str) -> Ring:
    """Parse ``Z``, ``Q`` or ``Fp`` (``F5``, ``GF7``...)."""
    key = name.strip()
    if key in ("Z", "ZZ"):
        return ZZ
    if key in ("Q", "QQ"):
        return QQ
    for prefix in ("GF", "F"):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            return GF(int(key[len(prefix):]))
    raise ValueError(f"unknown ring {name!r}; expected Z, Q or Fp with p prime")
