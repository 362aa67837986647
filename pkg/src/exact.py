"""
WHQ Engine - Exact Arithmetic

Rational and prime-field scalars. Rationals are ``fractions.Fraction``
(always reduced, positive denominator); residues are ``Residue`` values kept
in [0, p).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, MixedFields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class Residue:
    """Element of GF(p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _peer(self, other) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise MixedFields(f"GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            raise MixedFields(f"GF({self.p}) and rationals")
        return NotImplemented

    def __add__(self, other):
        v = self._peer(other)
        return v if v is NotImplemented else Residue(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._peer(other)
        return v if v is NotImplemented else Residue(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._peer(other)
        return v if v is NotImplemented else Residue(v - self.value, self.p)

    def __mul__(self, other):
        v = self._peer(other)
        return v if v is NotImplemented else Residue(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._peer(other)
        if v is NotImplemented:
            return v
        if v % self.p == 0:
            raise DivisionByZero(f"division by 0 in GF({self.p})")
        return Residue(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._peer(other)
        if v is NotImplemented:
            return v
        return Residue(v, self.p) / self

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


Scalar = Union[Fraction, Residue]


@dataclass(frozen=True)
class RationalField:
    """The rationals, with ``Fraction`` elements."""

    kind: str = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Residue):
            raise MixedFields(f"cannot read GF({value.p}) element as a rational")
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational literal: {text!r}") from e

    def format(self, x: Scalar) -> str:
        x = self.coerce(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime p."""

    p: int
    kind: str = "prime"

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def zero(self) -> Residue:
        return Residue(0, self.p)

    @property
    def one(self) -> Residue:
        return Residue(1, self.p)

    def coerce(self, value) -> Residue:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise MixedFields(f"GF({value.p}) element used in GF({self.p})")
            return value
        if isinstance(value, str):
            return self.parse(value)
        value = Fraction(value)
        return Residue(value.numerator, self.p) / Residue(value.denominator, self.p)

    def parse(self, text: str) -> Residue:
        try:
            q = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a residue literal: {text!r}") from e
        return self.coerce(q)

    def format(self, x: Scalar) -> str:
        return str(self.coerce(x).value)

    def __str__(self):
        return f"GF({self.p})"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def parse_field(text: str) -> Field:
    """Field named by "rational" (or "Q"), or by a prime p for GF(p)."""
    text = str(text).strip()
    if text.lower() in ("rational", "q", "qq"):
        return QQ
    try:
        return PrimeField(int(text))
    except ValueError:
        raise ValueError(f"field must be 'rational' or a prime, got {text!r}") from None


def field_of(x) -> Field:
    """Field a scalar belongs to; plain ints count as rationals."""
    if isinstance(x, Residue):
        return PrimeField(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise TypeError(f"not an exact scalar: {x!r}")


def _same_field(a, b) -> None:
    if field_of(a) != field_of(b):
        raise MixedFields(f"{field_of(a)} and {field_of(b)}")


def add(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    _same_field(a, b)
    if not b:
        raise DivisionByZero(f"{a} / 0")
    return a / b
