"""Exact arithmetic on the circle group: roots of unity as integer angles.

A value is the point exp(i*pi*c/N) on the unit circle, stored as the
integer pair (c, N).  Angles are kept in units of pi rather than 2*pi so
that eigenvalue labels such as exp(i*pi*k/m) stay integral.  Products,
powers and conjugates never leave this representation, which means that
membership and coincidence questions about eigenvalues and attachment
coordinates are settled by integer arithmetic, not by comparing floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class RootOfUnity:
    """exp(i*pi*num/den), held in canonical form.

    Canonical means den >= 1, 0 <= num < 2*den and gcd(num, den) == 1, so
    two values are equal on the circle iff their fields are equal.  The
    constructor canonicalizes, hence RootOfUnity(25, 12) == RootOfUnity(1, 12)
    and RootOfUnity(12, 12) == RootOfUnity(1, 1) == -1.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise ValueError(f"denominator must be a positive integer, got {self.den}")
        c = self.num % (2 * self.den)
        g = math.gcd(c, self.den)
        object.__setattr__(self, "num", c // g)
        object.__setattr__(self, "den", self.den // g)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.num * other.den + other.num * self.den, self.den * other.den)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.num * k, self.den)

    def conj(self) -> "RootOfUnity":
        """Complex conjugate, i.e. the inverse on the unit circle."""
        return self ** -1

    @property
    def angle(self) -> float:
        """Angle in radians, in [0, 2*pi)."""
        return math.pi * self.num / self.den

    @property
    def is_real(self) -> bool:
        """True exactly for the two real roots +1 and -1."""
        return self.den == 1

    def to_complex(self) -> complex:
        a = self.angle
        return complex(math.cos(a), math.sin(a))

    def __complex__(self) -> complex:
        return self.to_complex()


ONE = RootOfUnity(0, 1)
MINUS_ONE = RootOfUnity(1, 1)


def root(c: int, n: int) -> RootOfUnity:
    """exp(i*pi*c/n) in canonical form."""
    return RootOfUnity(c, n)


def crt_attachment(k: int, m: int, k2: int, n: int) -> RootOfUnity:
    """The unique t on the circle with t**n == root(k, m) and t**m == root(k2, n).

    Requires gcd(m, n) == 1.  Writing t = exp(i*pi*c/(m*n)), the two power
    equations say c == k (mod 2m) and c == k2 (mod 2n); since gcd(2m, 2n) == 2
    a solution exists iff k and k2 have the same parity, and it is then
    unique mod 2mn.  Solved by the extended Euclidean algorithm (a brute
    force scan over [0, 2mn) is kept as an oracle in the test suite).

    k and k2 are taken mod 2m and 2n, so a caller wanting the equation
    t**m == root(k2, n)**-1 passes 2n - k2.
    """
    if m < 1 or n < 1:
        raise ValueError(f"orders must be positive, got m={m}, n={n}")
    if math.gcd(m, n) != 1:
        raise ValueError(f"m={m} and n={n} are not coprime; use the general circle coordinate")
    if (k - k2) % 2 != 0:
        raise ValueError(f"no solution: k={k} and k2={k2} have different parities")
    # c = k + 2m*s with m*s == (k2-k)/2 (mod n)
    s = ((k2 - k) // 2 * pow(m, -1, n)) % n if n > 1 else 0
    c = (k + 2 * m * s) % (2 * m * n)
    return RootOfUnity(c, m * n)
