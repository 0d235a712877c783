"""Exact scalar fields: the rationals and prime fields GF(p).

Scalars are plain Python values so that hot loops stay cheap:
``fractions.Fraction`` over Q and ``int`` in ``range(p)`` over GF(p).
A field object carries the arithmetic and the text encoding.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import InputError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


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


class Field:
    """Base class; see :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int = 0
    name: str = "?"

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __repr__(self) -> str:
        return f"Field({self.name})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)


class Rationals(Field):
    characteristic = 0
    name = "Q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL_RE.match(str(text))
        if not m:
            raise InputError(f"not a rational scalar: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise InputError(f"zero denominator in scalar {text!r}")
        return Fraction(num, den)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def elements(self):
        raise InputError("the rationals are not enumerable here")


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise InputError(f"GF({p}): modulus is not prime")
        self.characteristic = p
        self.name = f"GF:{p}"

    def __call__(self, x) -> int:
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.characteristic)) % self.characteristic
        return int(x) % self.characteristic

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return (a * b) % self.characteristic

    def neg(self, a):
        return (-a) % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return (a * self.inv(b)) % self.characteristic

    def parse(self, text: str) -> int:
        m = _RATIONAL_RE.match(str(text))
        if not m:
            raise InputError(f"not a GF({self.characteristic}) scalar: {text!r}")
        num = int(m.group(1))
        if m.group(2) is not None:
            den = int(m.group(2))
            if den % self.characteristic == 0:
                raise InputError(f"denominator divisible by p in {text!r}")
            return self(Fraction(num, den))
        return num % self.characteristic

    def format(self, x) -> str:
        return str(int(x) % self.characteristic)

    def elements(self):
        return range(self.characteristic)


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Parse ``"Q"`` or ``"GF:p"`` (``"GF(p)"`` and ``"GFp"`` are accepted too)."""
    text = str(name).strip()
    if text.upper() in ("Q", "QQ"):
        return QQ
    m = re.match(r"^GF\s*[:(]?\s*(\d+)\s*\)?$", text, re.IGNORECASE)
    if not m:
        raise InputError(f"unknown field {name!r}; expected 'Q' or 'GF:p'")
    return PrimeField(int(m.group(1)))
