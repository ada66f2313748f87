"""Exact scalar arithmetic over the rationals or a prime field GF(p), p odd.

Scalars are ``fractions.Fraction`` over Q and plain ints in ``range(p)`` over
GF(p); every operation goes through the owning :class:`Field` so the rest of
the library is field-agnostic.  Characteristic 2 is rejected because the
polarization identity used for Lie-ization needs 2 to be invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SemanticError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_Q_ZERO = Fraction(0)
_Q_ONE = Fraction(1)


@dataclass(frozen=True)
class Field:
    """The ground field: rationals when ``p`` is None, otherwise GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p < 3:
                raise ValueError("characteristic 2 is not supported")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def zero(self):
        return _Q_ZERO if self.p is None else 0

    def one(self):
        return _Q_ONE if self.p is None else 1

    def from_int(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def div(self, a, b):
        if self.p is None:
            if b == 0:
                raise ZeroDivisionError("division by zero")
            return a / b
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero")
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def inv(self, a):
        return self.div(self.one(), a)

    def parse(self, text):
        """Parse a scalar written as ``a`` or ``a/b``; ints are accepted too."""
        if isinstance(text, int) and not isinstance(text, bool):
            return self.from_int(text)
        if not isinstance(text, str):
            raise SemanticError(f"scalar must be a string or int, got {text!r}")
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return self.from_int(int(parts[0]))
            if len(parts) == 2:
                num, den = int(parts[0]), int(parts[1])
            else:
                raise ValueError
        except ValueError:
            raise SemanticError(f"cannot parse scalar {text!r}") from None
        if den == 0 or (self.p is not None and den % self.p == 0):
            raise SemanticError(f"zero denominator in scalar {text!r}")
        return self.div(self.from_int(num), self.from_int(den))

    def to_str(self, a) -> str:
        return str(a)

    def describe(self):
        return "Q" if self.p is None else {"Fp": self.p}


QQ = Field()
