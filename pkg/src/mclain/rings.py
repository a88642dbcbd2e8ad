"""Exact coefficient rings: integers, integers mod n, and 2x2 matrices mod n.

All arithmetic is exact; nothing here tolerates rounding. Values are
immutable, carry the ring they belong to, and refuse to mix with values
from any other ring. The matrix instance is noncommutative on purpose:
coefficient products inside commutator identities have a definite order,
and a commutative-only test diet cannot tell ab from ba.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterator


class RingError(ValueError):
    """Bad ring spec, malformed literal, or mixed-ring arithmetic."""


@dataclass(frozen=True)
class RingValue:
    """An element of a concrete ring, tagged with that ring."""

    ring: "Ring"
    payload: object

    def _mate(self, other: "RingValue") -> "RingValue":
        if not isinstance(other, RingValue):
            raise RingError(f"expected a ring value, got {other!r}")
        if other.ring != self.ring:
            raise RingError(f"mixed-ring operands: {self.ring} and {other.ring}")
        return other

    def __add__(self, other: "RingValue") -> "RingValue":
        other = self._mate(other)
        return RingValue(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other: "RingValue") -> "RingValue":
        return self + (-self._mate(other))

    def __neg__(self) -> "RingValue":
        return RingValue(self.ring, self.ring._neg(self.payload))

    def __mul__(self, other: "RingValue") -> "RingValue":
        other = self._mate(other)
        return RingValue(self.ring, self.ring._mul(self.payload, other.payload))

    def __bool__(self) -> bool:
        return not self.ring._is_zero(self.payload)

    def __str__(self) -> str:
        return self.ring._format(self.payload)

    def __repr__(self) -> str:
        return f"<{self.ring} value {self}>"


_SCALAR_LITERAL = re.compile(r"[+-]?\d+")
_MATRIX_LITERAL = re.compile(
    r"\[([+-]?\d+),([+-]?\d+);([+-]?\d+),([+-]?\d+)\]"
)


def _clean_literal(text: str) -> str:
    # U+2212 sometimes arrives from copy-pasted mathematics.
    return text.replace("−", "-").replace(" ", "").strip()


@dataclass(frozen=True)
class Ring:
    """Base for the concrete rings. Subclasses define payload arithmetic."""

    def value(self, payload: object) -> RingValue:
        return RingValue(self, self._normalize(payload))

    def from_int(self, k: int) -> RingValue:
        """The canonical image of the integer k, i.e. k times the unit."""
        raise NotImplementedError

    @property
    def zero(self) -> RingValue:
        return self.from_int(0)

    @property
    def one(self) -> RingValue:
        return self.from_int(1)

    def coerce(self, value: "RingValue | int") -> RingValue:
        """Accept a value of this ring, or an int through from_int."""
        if isinstance(value, bool):
            raise RingError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, RingValue):
            if value.ring != self:
                raise RingError(f"value of {value.ring} used where {self} expected")
            return value
        raise RingError(f"cannot coerce {value!r} into {self}")

    def parse(self, text: str) -> RingValue:
        raise NotImplementedError

    def sample(self, rng: random.Random) -> RingValue:
        raise NotImplementedError

    def elements(self) -> Iterator[RingValue]:
        raise RingError(f"{self} is not finite")

    # payload hooks
    def _normalize(self, payload: object) -> object:
        raise NotImplementedError

    def _add(self, a: object, b: object) -> object:
        raise NotImplementedError

    def _neg(self, a: object) -> object:
        raise NotImplementedError

    def _mul(self, a: object, b: object) -> object:
        raise NotImplementedError

    def _is_zero(self, a: object) -> bool:
        raise NotImplementedError

    def _format(self, a: object) -> str:
        raise NotImplementedError


def _parse_scalar(text: str, where: str) -> int:
    cleaned = _clean_literal(text)
    if _SCALAR_LITERAL.fullmatch(cleaned):
        return int(cleaned)
    if _MATRIX_LITERAL.fullmatch(cleaned):
        raise RingError(f"matrix literal {text!r} used with scalar ring {where}")
    raise RingError(f"malformed {where} literal: {text!r}")


@dataclass(frozen=True)
class Integers(Ring):
    """The ring of integers, at arbitrary precision."""

    def from_int(self, k: int) -> RingValue:
        return RingValue(self, int(k))

    def parse(self, text: str) -> RingValue:
        return self.from_int(_parse_scalar(text, str(self)))

    def sample(self, rng: random.Random) -> RingValue:
        return self.from_int(rng.randint(-9, 9))

    def _normalize(self, payload: object) -> int:
        if isinstance(payload, bool) or not isinstance(payload, int):
            raise RingError(f"{self} payload must be an int, got {payload!r}")
        return payload

    def _add(self, a: int, b: int) -> int:
        return a + b

    def _neg(self, a: int) -> int:
        return -a

    def _mul(self, a: int, b: int) -> int:
        return a * b

    def _is_zero(self, a: int) -> bool:
        return a == 0

    def _format(self, a: int) -> str:
        return str(a)

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class IntegersMod(Ring):
    """Integers modulo n, with residues kept in [0, n)."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise RingError(f"modulus must be an integer >= 2, got {self.n!r}")

    def from_int(self, k: int) -> RingValue:
        return RingValue(self, int(k) % self.n)

    def parse(self, text: str) -> RingValue:
        return self.from_int(_parse_scalar(text, str(self)))

    def sample(self, rng: random.Random) -> RingValue:
        return self.from_int(rng.randrange(self.n))

    def elements(self) -> Iterator[RingValue]:
        for k in range(self.n):
            yield self.from_int(k)

    def _normalize(self, payload: object) -> int:
        if isinstance(payload, bool) or not isinstance(payload, int):
            raise RingError(f"{self} payload must be an int, got {payload!r}")
        return payload % self.n

    def _add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def _neg(self, a: int) -> int:
        return (-a) % self.n

    def _mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def _is_zero(self, a: int) -> bool:
        return a == 0

    def _format(self, a: int) -> str:
        return str(a)

    def __str__(self) -> str:
        return f"Z/{self.n}"


@dataclass(frozen=True)
class Matrices2x2Mod(Ring):
    """2x2 matrices over the integers mod n, stored row major.

    Noncommutative for every n >= 2, which is the point: it separates
    coefficient products ab from ba wherever an order matters.
    """

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise RingError(f"modulus must be an integer >= 2, got {self.n!r}")

    def from_int(self, k: int) -> RingValue:
        r = int(k) % self.n
        return RingValue(self, (r, 0, 0, r))

    def parse(self, text: str) -> RingValue:
        cleaned = _clean_literal(text)
        m = _MATRIX_LITERAL.fullmatch(cleaned)
        if m is None:
            if _SCALAR_LITERAL.fullmatch(cleaned):
                raise RingError(f"scalar literal {text!r} used with matrix ring {self}")
            raise RingError(f"malformed {self} literal: {text!r}")
        return self.value(tuple(int(g) for g in m.groups()))

    def sample(self, rng: random.Random) -> RingValue:
        return self.value(tuple(rng.randrange(self.n) for _ in range(4)))

    def elements(self) -> Iterator[RingValue]:
        for quad in itertools.product(range(self.n), repeat=4):
            yield self.value(quad)

    def _normalize(self, payload: object) -> tuple[int, int, int, int]:
        if not (isinstance(payload, tuple) and len(payload) == 4):
            raise RingError(f"{self} payload must be a 4-tuple, got {payload!r}")
        if any(isinstance(x, bool) or not isinstance(x, int) for x in payload):
            raise RingError(f"{self} payload entries must be ints, got {payload!r}")
        return tuple(x % self.n for x in payload)

    def _add(self, a, b):
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.n for x in a)

    def _mul(self, a, b):
        a11, a12, a21, a22 = a
        b11, b12, b21, b22 = b
        return (
            (a11 * b11 + a12 * b21) % self.n,
            (a11 * b12 + a12 * b22) % self.n,
            (a21 * b11 + a22 * b21) % self.n,
            (a21 * b12 + a22 * b22) % self.n,
        )

    def _is_zero(self, a) -> bool:
        return a == (0, 0, 0, 0)

    def _format(self, a) -> str:
        return f"[{a[0]},{a[1]};{a[2]},{a[3]}]"

    def __str__(self) -> str:
        return f"M2(Z/{self.n})"


_SPEC_MOD = re.compile(r"Z/(\d+)")
_SPEC_MAT = re.compile(r"M2\(Z/(\d+)\)")


def parse_ring_spec(text: str) -> Ring:
    """Parse a ring spec string: Z, Z/n, or M2(Z/n)."""
    cleaned = text.replace(" ", "").strip()
    if cleaned == "Z":
        return Integers()
    m = _SPEC_MOD.fullmatch(cleaned)
    if m:
        return IntegersMod(int(m.group(1)))
    m = _SPEC_MAT.fullmatch(cleaned)
    if m:
        return Matrices2x2Mod(int(m.group(1)))
    raise RingError(f"unrecognized ring spec: {text!r}")
