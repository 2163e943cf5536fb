"""Base field value objects."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Self

import numpy as np
import sympy

FieldElement = int | Fraction

MAX_PRIME = 2**31


class FieldKind(str, Enum):
    """Kinds of exact base fields."""

    PRIME = "prime"
    RATIONAL = "rational"


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """An exact field: F_p for a prime p < 2^31, or the rationals.

    Elements of F_p are canonical representatives in [0, p); rational
    elements are normalized ``Fraction`` values.
    """

    kind: FieldKind
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if not 2 <= self.p < MAX_PRIME:
                raise ValueError(f"Prime must satisfy 2 <= p < 2^31, got {self.p}")
            if not sympy.isprime(self.p):
                raise ValueError(f"Field characteristic {self.p} is not prime")
        elif self.p != 0:
            raise ValueError("The rational field carries no prime")

    @classmethod
    def prime(cls, p: int) -> Self:
        """Create the prime field F_p."""
        return cls(kind=FieldKind.PRIME, p=p)

    @classmethod
    def rational(cls) -> Self:
        """Create the field of rationals."""
        return cls(kind=FieldKind.RATIONAL)

    @classmethod
    def from_characteristic(cls, characteristic: int) -> Self:
        """Create the prime field of the given characteristic (0 means the rationals)."""
        if characteristic == 0:
            return cls.rational()
        return cls.prime(characteristic)

    @classmethod
    def from_string(cls, value: str) -> Self:
        """Create from ``QQ``, ``0``, ``rational`` or a prime written in decimal."""
        text = value.strip()
        if text.lower() in {"qq", "q", "0", "rational"}:
            return cls.rational()
        try:
            return cls.prime(int(text))
        except ValueError as e:
            raise ValueError(f"Invalid field specification: {value!r}") from e

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime(self) -> bool:
        return self.kind is FieldKind.PRIME

    def element(self, value: int | Fraction | str) -> FieldElement:
        """Coerce an integer, fraction or decimal string into a canonical element."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind is FieldKind.RATIONAL:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.p:
            return (a + b) % self.p
        return a + b

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.p:
            return (a - b) % self.p
        return a - b

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.p:
            return a * b % self.p
        return a * b

    def neg(self, a: FieldElement) -> FieldElement:
        if self.p:
            return -a % self.p
        return -a

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse")
        if self.p:
            return pow(int(a), -1, self.p)
        return 1 / Fraction(a)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def power(self, a: FieldElement, e: int) -> FieldElement:
        if self.p:
            return pow(int(a), e, self.p)
        return Fraction(a) ** e

    @property
    def zero(self) -> FieldElement:
        return 0 if self.p else Fraction(0)

    @property
    def one(self) -> FieldElement:
        return 1 if self.p else Fraction(1)

    def signed(self, a: FieldElement) -> int | Fraction:
        """Balanced representative used for printing (``p - 1`` prints as ``-1``)."""
        if self.p and a > self.p // 2:
            return int(a) - self.p
        return a

    def random_element(self, rng: random.Random, *, nonzero: bool = False) -> FieldElement:
        """Draw a uniform element (small integers for the rationals)."""
        if self.p:
            low = 1 if nonzero else 0
            return rng.randrange(low, self.p)
        while True:
            value = Fraction(rng.randint(-50, 50))
            if value or not nonzero:
                return value

    @property
    def dtype(self) -> type:
        """numpy dtype used for dense matrices over this field."""
        return np.int64 if self.p else object

    def array(self, values: object) -> np.ndarray:
        """Build a dense numpy array of canonical elements."""
        if self.p:
            return np.asarray(values, dtype=np.int64) % self.p
        data = np.asarray(values, dtype=object)
        return np.vectorize(Fraction, otypes=[object])(data) if data.size else data

    def __str__(self) -> str:
        return f"F_{self.p}" if self.p else "QQ"
