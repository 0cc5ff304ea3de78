"""Prime-field scalars and base-p digit strings.

Everything downstream (series arithmetic, automaton synthesis, digit DP)
reduces to arithmetic mod a small prime p and to least-significant-digit-first
base-p expansions.  Digit strings are canonical when they carry no trailing
zero digit; the empty string represents 0.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_PRIME = 1 << 16  # products of two residues must fit comfortably in int64


class FieldError(ValueError):
    """Invalid prime-field operation (bad modulus, zero inversion, ...)."""


def is_prime(n: int) -> bool:
    """Trial division; moduli here are tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Prime:
    """A prime modulus p with 2 <= p < 2**16, validated at construction."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p < MAX_PRIME):
            raise FieldError(f"modulus must satisfy 2 <= p < 2^16, got {self.p}")
        if not is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"Prime({self.p})"


def as_prime(p) -> int:
    """Accept a Prime or a raw int; return the validated int value."""
    if isinstance(p, Prime):
        return p.p
    return Prime(int(p)).p


@dataclass(frozen=True)
class FieldElement:
    """An element of F_p, kept reduced into [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "p", as_prime(self.p))
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _check(self, other: "FieldElement"):
        if self.p != other.p:
            raise FieldError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        return FieldElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other):
        self._check(other)
        return FieldElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other):
        self._check(other)
        return FieldElement((self.value * other.value) % self.p, self.p)

    def __neg__(self):
        return FieldElement(-self.value % self.p, self.p)

    def inv(self) -> "FieldElement":
        if self.value == 0:
            raise FieldError("non-invertible: zero has no multiplicative inverse")
        return FieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return FieldElement(pow(self.value, e, self.p), self.p)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"F{self.p}({self.value})"


@dataclass(frozen=True)
class DigitString:
    """Base-p digits, least significant first, no trailing zero digit.

    The trailing position is the most significant digit of the number, so the
    canonical form of 11 in base 3 is (2, 0, 1) and of 0 the empty tuple.
    """

    digits: tuple
    p: int

    def __post_init__(self):
        object.__setattr__(self, "p", as_prime(self.p))
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        for d in self.digits:
            if not 0 <= d < self.p:
                raise FieldError(f"digit {d} out of range for base {self.p}")
        if self.digits and self.digits[-1] == 0:
            raise FieldError("digit string not canonical: trailing zero digit")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __repr__(self) -> str:
        return f"DigitString({list(self.digits)}, base={self.p})"


def digits_lsd(n: int, p) -> DigitString:
    """Base-p expansion of n, least significant digit first."""
    p = as_prime(p)
    if n < 0:
        raise FieldError(f"cannot expand negative value {n}")
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return DigitString(tuple(out), p)


def value_lsd(d: DigitString) -> int:
    """Inverse of digits_lsd: sum of digits[i] * p**i."""
    total = 0
    for digit in reversed(d.digits):
        total = total * d.p + digit
    return total


def digit_sum(n: int, p) -> FieldElement:
    """Sum of the base-p digits of n, reduced mod p."""
    p = as_prime(p)
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return FieldElement(s % p, p)
