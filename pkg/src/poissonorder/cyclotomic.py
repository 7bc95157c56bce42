"""Exact arithmetic with roots of unity and unit Laurent monomials.

A root of unity is stored by its exponent ``a/m`` in ``[0, 1)``, meaning
``exp(2*pi*i*a/m)``.  Multiplication is addition of exponents modulo 1, so
every operation stays inside ``Fraction`` arithmetic.

``Monomial`` represents ``p * nu**t`` with ``p`` a root of unity and ``nu`` a
formal parameter of infinite order.  It supports the same small protocol as
``RootOfUnity`` (``*``, ``**``, ``inverse``, ``is_one``, ``order``), so the
groupoid code runs unchanged on generic one-parameter matrices.

Convention: the empty q-integer ``(0)_q`` is zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import InvalidOrder, ParseError


@dataclass(frozen=True, order=True)
class RootOfUnity:
    exponent: Fraction

    def __post_init__(self):
        e = Fraction(self.exponent) % 1
        object.__setattr__(self, "exponent", e)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if isinstance(other, Monomial):
            return Monomial(self, 0) * other
        if not other.exponent:
            return self
        if not self.exponent:
            return other
        e = self.exponent + other.exponent
        return _root(e - 1 if e >= 1 else e)

    def __pow__(self, k: int) -> "RootOfUnity":
        if k == 1 or not self.exponent:
            return self
        e = self.exponent
        d = e.denominator
        return _root(Fraction((e.numerator * k) % d, d))

    def inverse(self) -> "RootOfUnity":
        return _root(1 - self.exponent) if self.exponent else self

    def order(self) -> int:
        return self.exponent.denominator

    def is_one(self) -> bool:
        return self.exponent == 0

    def scan_hint(self) -> int:
        return self.order()

    def __str__(self) -> str:
        return f"{self.exponent.numerator}/{self.exponent.denominator}"

    def __repr__(self) -> str:
        return f"RootOfUnity({self})"


def _root(e: Fraction) -> RootOfUnity:
    # e is already reduced into [0, 1)
    r = object.__new__(RootOfUnity)
    object.__setattr__(r, "exponent", e)
    return r


ONE = RootOfUnity(Fraction(0))
MINUS_ONE = RootOfUnity(Fraction(1, 2))


def make_root(a: int, m: int) -> RootOfUnity:
    """Normalized representative of ``exp(2*pi*i*a/m)``."""
    if m == 0:
        raise InvalidOrder("order must be positive")
    if m < 0:
        a, m = -a, -m
    return RootOfUnity(Fraction(a, m))


def primitive_root(n: int) -> RootOfUnity:
    return make_root(1, n)


def parse_root(text: str) -> RootOfUnity:
    """Parse the ``"a/m"`` serialization (a bare integer means ``a/1``)."""
    s = str(text).strip()
    try:
        if "/" in s:
            a, m = s.split("/")
            a, m = int(a), int(m)
        else:
            a, m = int(s), 1
    except ValueError as exc:
        raise ParseError(f"not a root of unity: {text!r}") from exc
    if m <= 0:
        raise InvalidOrder(f"bad order in {text!r}")
    return make_root(a, m)


def q_number_is_zero(n: int, q) -> bool:
    """True iff ``(n)_q = 1 + q + ... + q^(n-1)`` vanishes.

    Works for ``RootOfUnity`` and ``Monomial``: ``(n)_q = 0`` iff ``n = 0`` or
    ``q != 1`` and ``q^n = 1``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return True
    return (not q.is_one()) and (q ** n).is_one()


def q_factorial_is_zero(n: int, q) -> bool:
    return any(q_number_is_zero(k, q) for k in range(1, n + 1))


@dataclass(frozen=True, order=True)
class Monomial:
    """The unit ``coeff * nu**exp`` of the Laurent polynomial ring."""

    coeff: RootOfUnity
    exp: int

    def __mul__(self, other) -> "Monomial":
        if isinstance(other, RootOfUnity):
            other = Monomial(other, 0)
        return Monomial(self.coeff * other.coeff, self.exp + other.exp)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.coeff ** k, self.exp * k)

    def inverse(self) -> "Monomial":
        return Monomial(self.coeff.inverse(), -self.exp)

    def order(self) -> Optional[int]:
        return None if self.exp else self.coeff.order()

    def is_one(self) -> bool:
        return self.exp == 0 and self.coeff.is_one()

    def scan_hint(self) -> int:
        return self.coeff.order() * (abs(self.exp) + 1)

    def evaluate(self, xi: RootOfUnity) -> RootOfUnity:
        return self.coeff * xi ** self.exp

    def vanishes_minus_one_at(self, xi: RootOfUnity) -> bool:
        """Whether ``self - 1`` has a zero at ``nu = xi``."""
        return self.evaluate(xi).is_one()

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.coeff)
        c = "" if self.coeff.is_one() else f"({self.coeff})*"
        return f"{c}v^{self.exp}"


def order_of_power(x: RootOfUnity, k: int) -> int:
    m = x.order()
    return m // gcd(k, m)
