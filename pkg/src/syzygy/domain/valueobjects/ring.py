"""Polynomial ring and monomial order value objects."""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Self

from syzygy.domain.valueobjects.field import FieldSpec

Monomial = tuple[int, ...]

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True, slots=True)
class RingSpec:
    """A graded polynomial ring k[x0, ..., xn] with positive variable weights."""

    field: FieldSpec
    var_names: tuple[str, ...]
    var_weights: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.var_names:
            raise ValueError("A ring needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("Variable names must be unique")
        for name in self.var_names:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"Invalid variable name: {name!r}")
        if not self.var_weights:
            object.__setattr__(self, "var_weights", (1,) * len(self.var_names))
        if len(self.var_weights) != len(self.var_names):
            raise ValueError("One weight per variable is required")
        if any(w <= 0 for w in self.var_weights):
            raise ValueError("Variable weights must be positive")

    @classmethod
    def standard(cls, field: FieldSpec, n_vars: int, prefix: str = "x") -> Self:
        """Create k[prefix0, ..., prefix{n_vars-1}] with standard grading."""
        return cls(field=field, var_names=tuple(f"{prefix}{i}" for i in range(n_vars)))

    @property
    def n_vars(self) -> int:
        return len(self.var_names)

    @property
    def is_standard_graded(self) -> bool:
        return all(w == 1 for w in self.var_weights)

    def degree(self, monomial: Monomial) -> int:
        """Weighted degree of a monomial."""
        return sum(w * e for w, e in zip(self.var_weights, monomial, strict=True))

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError as e:
            raise ValueError(f"Unknown variable {name!r}") from e

    def with_field(self, field: FieldSpec) -> RingSpec:
        return RingSpec(field=field, var_names=self.var_names, var_weights=self.var_weights)

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.var_names)}]"


class OrderKind(str, Enum):
    """Supported monomial orders."""

    GREVLEX = "grevlex"
    BLOCK_ELIM = "block_elim"


@dataclass(frozen=True, slots=True)
class MonomialOrder:
    """Weighted grevlex, or a two-block product order eliminating the first ``block`` variables."""

    kind: OrderKind = OrderKind.GREVLEX
    block: int = 0

    def __post_init__(self) -> None:
        if self.kind is OrderKind.BLOCK_ELIM and self.block < 1:
            raise ValueError("An elimination order needs a block of at least one variable")
        if self.kind is OrderKind.GREVLEX and self.block != 0:
            raise ValueError("grevlex takes no block size")

    @classmethod
    def grevlex(cls) -> Self:
        return cls(kind=OrderKind.GREVLEX)

    @classmethod
    def block_elim(cls, k: int) -> Self:
        return cls(kind=OrderKind.BLOCK_ELIM, block=k)

    @classmethod
    def from_string(cls, value: str) -> Self:
        """Create from ``grevlex`` or ``elim:<k>``."""
        text = value.strip().lower()
        if text == "grevlex":
            return cls.grevlex()
        if text.startswith("elim:"):
            return cls.block_elim(int(text.split(":", 1)[1]))
        raise ValueError(f"Unknown monomial order: {value!r}")

    def sort_key(self, weights: tuple[int, ...]) -> Callable[[Monomial], tuple[int, ...]]:
        """Key function: larger key means larger monomial."""
        if self.kind is OrderKind.GREVLEX:

            def grevlex_key(m: Monomial) -> tuple[int, ...]:
                return (sum(w * e for w, e in zip(weights, m)), *(-e for e in reversed(m)))

            return grevlex_key

        k = self.block
        head_weights, tail_weights = weights[:k], weights[k:]

        def block_key(m: Monomial) -> tuple[int, ...]:
            head, tail = m[:k], m[k:]
            return (
                sum(w * e for w, e in zip(head_weights, head)),
                *(-e for e in reversed(head)),
                sum(w * e for w, e in zip(tail_weights, tail)),
                *(-e for e in reversed(tail)),
            )

        return block_key

    def __str__(self) -> str:
        return "grevlex" if self.kind is OrderKind.GREVLEX else f"elim:{self.block}"
