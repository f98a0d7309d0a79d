"""Exact arithmetic in the supported coefficient rings.

Three ring families are implemented: the integers, the rationals, and the
integers modulo n (n >= 2, composite moduli allowed).  Ring elements are
plain Python values -- int, or Fraction for the rationals -- and every
Ring object normalizes values to a canonical form: fractions in lowest
terms with positive denominator, residues in [0, n).  Unit detection is
exact (gcd criterion for modular rings), which is what elementary
automorphisms of the tensor algebra require of their leading scalar.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import NotAUnit


class Ring:
    """Shared behaviour; concrete rings fill in the arithmetic."""

    spec: str = ""

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def is_negative(self, a):
        # Printing hint only; residues mod n never count as negative.
        return False

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"{type(self).__name__}()"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


class Integers(Ring):
    spec = "int"

    def normalize(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return int(value)
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an integer value: {value!r}")
        return value

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a in (1, -1)

    def inverse(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit in the integers")
        return a

    def is_negative(self, a):
        return a < 0


class Rationals(Ring):
    spec = "rat"

    def normalize(self, value):
        # Fraction canonicalizes: lowest terms, positive denominator.
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a != 0

    def inverse(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit")
        return 1 / Fraction(a)

    def is_negative(self, a):
        return a < 0


class IntegersMod(Ring):
    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError("modulus must be an integer >= 2")
        self.n = n
        self.spec = f"zmod:{n}"

    def normalize(self, value):
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.n,
                            self.inverse(value.denominator % self.n))
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"not an integer value: {value!r}")
        return value % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def is_unit(self, a):
        return gcd(a % self.n, self.n) == 1

    def inverse(self, a):
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit mod {self.n}")
        return pow(a, -1, self.n)

    def __repr__(self):
        return f"IntegersMod({self.n})"


def ring_from_string(spec: str) -> Ring:
    """Decode a ring selection string: "int", "rat", or "zmod:<n>"."""
    if spec == "int":
        return Integers()
    if spec == "rat":
        return Rationals()
    if spec.startswith("zmod:"):
        try:
            n = int(spec[len("zmod:"):])
        except ValueError:
            raise ValueError(f"bad modulus in ring string {spec!r}") from None
        return IntegersMod(n)
    raise ValueError(f"unknown ring string {spec!r}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True
