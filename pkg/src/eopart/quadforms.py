"""Ternary form representation numbers, the coefficient families A(n),
a(n), b(n), and imaginary-quadratic class numbers by reduced-form count.

The lattice loops are the oracles; theta-product series give the same
families at scale (verify module cross-checks both).  All loop bounds come
from integer square roots, never floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import factorize, is_square, is_squarefree
from .series import Series, eta_factor, mul, power, theta


def r113(n: int) -> int:
    """Number of integer triples with x^2 + y^2 + 3 z^2 = n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for z in range(math.isqrt(n // 3) + 1):
        wz = 2 if z else 1
        rem = n - 3 * z * z
        for y in range(math.isqrt(rem) + 1):
            wy = 2 if y else 1
            ok, x = is_square(rem - y * y)
            if ok:
                total += wz * wy * (2 if x else 1)
    return total


def r133(n: int) -> int:
    """Number of integer triples with x^2 + 3 y^2 + 3 z^2 = n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for z in range(math.isqrt(n // 3) + 1):
        wz = 2 if z else 1
        rem = n - 3 * z * z
        for y in range(math.isqrt(rem // 3) + 1):
            wy = 2 if y else 1
            ok, x = is_square(rem - 3 * y * y)
            if ok:
                total += wz * wy * (2 if x else 1)
    return total


def A_direct(n: int) -> int:
    """Count of (x, y, z) with (6x+1)^2 + (6y+1)^2 + 12 z^2 = n.

    Direct lattice route to A(n); the r113/4 route must agree.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for z in range(math.isqrt(n // 12) + 1):
        wz = 2 if z else 1
        rem = n - 12 * z * z
        r = math.isqrt(rem)
        for u in range(-r + (1 + r) % 6, r + 1, 6):
            ok, w = is_square(rem - u * u)
            if ok:
                if w % 6 == 1:
                    total += wz
                if w and (-w) % 6 == 1:
                    total += wz
    return total


def A_coeff(n: int) -> int:
    """A(n) = r113(n)/4 for n = 2 mod 12, else 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 12 != 2:
        return 0
    r = r113(n)
    assert r % 4 == 0, f"r113({n}) = {r} not divisible by 4"
    return r // 4


def a_coeff(n: int) -> int:
    """a(n) = A(12n + 2)."""
    return A_coeff(12 * n + 2)


def f_series(order: int) -> Series:
    """sum a(n) q^n as the theta product (sum q^{n^2})(sum q^{3n^2-n})^2."""
    return mul(theta("square", order), power(theta("octic", order), 2))


def b_series(order: int) -> Series:
    """sum b(n) q^n = J_1^2 J_2."""
    j1 = eta_factor(1, order)
    return mul(power(j1, 2), eta_factor(2, order))


def b_series_theta(order: int) -> Series:
    """Same series through the alternating theta product (cross-check)."""
    return mul(theta("square_alt", order), power(theta("octic_alt", order), 2))


def b_coeff(n: int) -> int:
    return b_series(n).c(n)


# --- binary quadratic forms -------------------------------------------------


@dataclass(frozen=True)
class ReducedForm:
    """Reduced primitive positive form a x^2 + b xy + c y^2, discriminant < 0."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.discriminant >= 0:
            raise ValueError("form must be positive definite")
        if not (
            0 < self.a
            and abs(self.b) <= self.a <= self.c
            and (self.b >= 0 or (abs(self.b) < self.a and self.a < self.c))
            and math.gcd(self.a, math.gcd(self.b, self.c)) == 1
        ):
            raise ValueError(f"({self.a},{self.b},{self.c}) is not reduced primitive")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def reduced_forms(D: int) -> list[ReducedForm]:
    """All reduced primitive forms of discriminant D < 0."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant")
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if math.gcd(a, math.gcd(b, c)) == 1:
                forms.append(ReducedForm(a, b, c))
        a += 1
    return forms


def class_number(m: int) -> int:
    """h(-m): class number of the field of discriminant -m or -4m.

    m must be squarefree; the discriminant is -m when m = 3 mod 4 and -4m
    otherwise (field convention, which matches form classes because the
    discriminant is then fundamental).
    """
    if m < 1:
        raise ValueError("class_number needs m >= 1")
    if not is_squarefree(m):
        raise ValueError(f"{m} is not squarefree; field convention undefined")
    D = -m if m % 4 == 3 else -4 * m
    return len(reduced_forms(D))


# --- mod-4 classification ---------------------------------------------------


class Mod4Class(enum.Enum):
    ODD = "odd"
    TWO_MOD_FOUR = "two_mod_four"
    ZERO_MOD_FOUR = "zero_mod_four"


@dataclass(frozen=True)
class Mod4Certificate:
    """Residue class of A(n) mod 4 with its witnessing decomposition.

    odd: n = 2 m^2, witness m.  two_mod_four: n = 2 p^{4a+1} m^2 with
    p = 5,7 mod 8 and gcd(m, 6p) = 1, witness (p, a, m).  zero_mod_four:
    no witness.
    """

    n: int
    cls: Mod4Class
    witness: tuple[int, ...] | None

    def check(self) -> bool:
        """Does the witness reconstruct n with its side conditions?"""
        if self.cls is Mod4Class.ODD:
            (m,) = self.witness
            return self.n == 2 * m * m and math.gcd(m, 6) == 1
        if self.cls is Mod4Class.TWO_MOD_FOUR:
            p, alpha, m = self.witness
            return (
                self.n == 2 * p ** (4 * alpha + 1) * m * m
                and p % 8 in (5, 7)
                and math.gcd(m, 6 * p) == 1
            )
        return self.witness is None


def classify_mod4(n: int) -> Mod4Certificate:
    """Predict A(n) mod 4 from the factorization of n/2 (n = 2 mod 12)."""
    if n % 12 != 2 or n < 2:
        raise ValueError(f"classify_mod4 needs n = 2 mod 12, got {n}")
    odd_part = []  # primes of n/2 with odd exponent
    m = 1  # square root of the even-exponent part
    for p, e in factorize(n // 2).factors:
        if e % 2:
            odd_part.append((p, e))
        else:
            m *= p ** (e // 2)
    if not odd_part:
        return Mod4Certificate(n, Mod4Class.ODD, (m,))
    if len(odd_part) == 1:
        p, e = odd_part[0]
        if e % 4 == 1 and p % 8 in (5, 7):
            return Mod4Certificate(n, Mod4Class.TWO_MOD_FOUR, (p, (e - 1) // 4, m))
    return Mod4Certificate(n, Mod4Class.ZERO_MOD_FOUR, None)
