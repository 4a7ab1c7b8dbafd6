"""Exact scalar arithmetic for the two number domains used by the library.

``CycloElem`` represents elements of the cyclotomic field Q(zeta_m) in the
canonical reduced form modulo the m-th cyclotomic polynomial, so equality is
a decidable coefficient-vector comparison and every certification test is
tolerance-free.  ``QuadElem`` represents elements a + b*sqrt(t) of a real
quadratic field Q(sqrt(t)) with t square-free (t = 1 means the element is
rational).

All values are immutable; every operation returns a new value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are small)."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    if m == 1:
        return 1
    phi = 1
    for p, e in _factorize(m).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of monic integer polynomials; the division must be exact."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j, y in enumerate(den):
                num[i - dd + j] -= c * y
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low to high.

    Computed by exact division of x^m - 1 by the product of the d-th
    cyclotomic polynomials over the proper divisors d of m.
    """
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    return tuple(_poly_divmod_exact(num, den))


def _reduce_mod_cyclotomic(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    """Remainder of a coefficient list modulo Phi_m, padded to degree phi(m)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg + 1):
                rem[i - deg + j] -= c * phi[j]
    rem = rem[:deg]
    rem += [_ZERO] * (deg - len(rem))
    return tuple(rem)


@lru_cache(maxsize=None)
def _cached_int_elem(m: int, value: int) -> "CycloElem":
    coeffs = [Fraction(value)] + [_ZERO] * (euler_phi(m) - 1)
    return CycloElem(m, tuple(coeffs))


class CycloElem:
    """An element of Q(zeta_m), reduced modulo the m-th cyclotomic polynomial.

    ``coeffs`` has length phi(m) and gives the coordinates in the power basis
    1, zeta, ..., zeta^(phi(m)-1).  The zero element has all-zero coeffs.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple[Fraction, ...]):
        if order < 1:
            raise DomainError("cyclotomic order must be >= 1")
        if len(coeffs) != euler_phi(order):
            raise DomainError(
                f"expected {euler_phi(order)} coefficients at order {order}, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_terms(terms, order: int) -> "CycloElem":
        """Build from (exponent -> coefficient) terms; exponents reduced mod order."""
        acc = [_ZERO] * order
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            acc[e % order] += Fraction(c)
        return CycloElem(order, _reduce_mod_cyclotomic(acc, order))

    @staticmethod
    def from_rational(value, order: int = 1) -> "CycloElem":
        q = Fraction(value)
        if q.denominator == 1:
            return _cached_int_elem(order, q.numerator)
        return CycloElem.from_terms({0: q}, order)

    @staticmethod
    def zero(order: int = 1) -> "CycloElem":
        return _cached_int_elem(order, 0)

    @staticmethod
    def one(order: int = 1) -> "CycloElem":
        return _cached_int_elem(order, 1)

    @staticmethod
    def root(order: int, exponent: int = 1) -> "CycloElem":
        """The root of unity zeta_order ** exponent."""
        return CycloElem.from_terms({exponent: 1}, order)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def rational_value(self) -> Fraction | None:
        """The value as a Fraction if the element is rational, else None."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def is_real(self) -> bool:
        """Whether the element lies in the real subring (fixed by conjugation)."""
        return self == self.conjugate()

    def lift(self, order: int) -> "CycloElem":
        """Re-express at a multiple of the current order; the value is unchanged."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise DomainError(f"cannot lift order {self.order} to {order}")
        k = order // self.order
        return CycloElem.from_terms(
            {e * k: c for e, c in enumerate(self.coeffs) if c != 0}, order
        )

    def conjugate(self) -> "CycloElem":
        """Complex conjugate: the image of zeta under zeta -> zeta**(order-1)."""
        if self.order <= 2 or not any(self.coeffs[1:]):
            return self  # rational values are self-conjugate
        return CycloElem.from_terms(
            {(-e) % self.order: c for e, c in enumerate(self.coeffs) if c != 0},
            self.order,
        )

    def squared_modulus(self) -> "CycloElem":
        q = self.rational_value()
        if q is not None:
            return CycloElem.from_rational(q * q, self.order)
        return self * self.conjugate()

    # -- arithmetic ---------------------------------------------------

    def _pair(self, other: "CycloElem") -> tuple["CycloElem", "CycloElem"]:
        if self.order == other.order:
            return self, other
        m = self.order * other.order // gcd(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElem.from_rational(other, self.order)
        if not isinstance(other, CycloElem):
            return NotImplemented
        a, b = self._pair(other)
        return CycloElem(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElem.from_rational(other, self.order)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElem(self.order, tuple(c * q for c in self.coeffs))
        if not isinstance(other, CycloElem):
            return NotImplemented
        a, b = self._pair(other)
        m = a.order
        acc = [_ZERO] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        acc[(i + j) % m] += x * y
        return CycloElem(m, _reduce_mod_cyclotomic(acc, m))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElem.from_rational(other, self.order)
        if not isinstance(other, CycloElem):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-order equality makes a consistent hash impractical

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(str(c) if e == 0 else f"{c}*z{self.order}^{e}")
        return " + ".join(terms) if terms else "0"


def reduce_cyclotomic(terms, order: int) -> CycloElem:
    """Canonical residue of an exponent/coefficient list modulo Phi_order."""
    return CycloElem.from_terms(terms, order)


def lift_to_common_order(x: CycloElem, y: CycloElem) -> tuple[CycloElem, CycloElem]:
    """Re-express both elements at lcm of their orders; values are unchanged."""
    return x._pair(y)


def split_square(n: int) -> tuple[int, int]:
    """Return (s, t) with n = s*s*t and t square-free."""
    if n < 1:
        raise DomainError("expected a positive integer")
    s, t = 1, 1
    for p, e in _factorize(n).items():
        s *= p ** (e // 2)
        if e % 2:
            t *= p
    return s, t


class QuadElem:
    """An element a + b*sqrt(t) of the real quadratic field Q(sqrt(t)).

    t is square-free and positive; t = 1 means the element is rational and
    then b = 0.  The field is real, so conjugation is the identity here.
    """

    __slots__ = ("t", "a", "b")

    def __init__(self, t: int, a, b):
        a, b = Fraction(a), Fraction(b)
        if t < 1:
            raise DomainError("radicand must be positive")
        s, t = split_square(t)
        b = b * s
        if t == 1:
            a, b = a + b, _ZERO
        self.t = t
        self.a = a
        self.b = b

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(value, t: int = 1) -> "QuadElem":
        return QuadElem(t, Fraction(value), 0)

    @staticmethod
    def sqrt_of_rational(value) -> "QuadElem":
        """Exact square root of a nonnegative rational, as a + b*sqrt(t)."""
        q = Fraction(value)
        if q < 0:
            raise DomainError("cannot take a real square root of a negative rational")
        if q == 0:
            return QuadElem(1, 0, 0)
        s, t = split_square(q.numerator * q.denominator)
        return QuadElem(t, 0, Fraction(s, q.denominator))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def rational_value(self) -> Fraction | None:
        return self.a if self.b == 0 else None

    def conjugate(self) -> "QuadElem":
        return self

    def squared_modulus(self) -> "QuadElem":
        return self * self

    def _common_t(self, other: "QuadElem") -> int:
        if self.b == 0:
            return other.t if other.b != 0 else max(self.t, other.t, 1)
        if other.b == 0 or other.t == self.t:
            return self.t
        raise DomainError(f"incompatible radicands {self.t} and {other.t}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadElem.from_rational(other)
        if not isinstance(other, QuadElem):
            return NotImplemented
        t = self._common_t(other)
        return QuadElem(t, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.t, -self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadElem.from_rational(other)
        if not isinstance(other, QuadElem):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return QuadElem(self.t, self.a * q, self.b * q)
        if not isinstance(other, QuadElem):
            return NotImplemented
        t = self._common_t(other)
        return QuadElem(
            t,
            self.a * other.a + self.b * other.b * t,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return QuadElem(self.t, self.a / q, self.b / q)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadElem.from_rational(other)
        if not isinstance(other, QuadElem):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return self.t == other.t and self.a == other.a and self.b == other.b

    __hash__ = None

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.t})"
        return f"{self.a} + {self.b}*sqrt({self.t})"


def normalize_quadratic(t_raw: int, a, b) -> QuadElem:
    """Canonicalize a + b*sqrt(t_raw): pull square factors out of the radicand."""
    return QuadElem(t_raw, a, b)


def conjugate(z):
    """Entrywise conjugation building block; identity on the real quadratic field."""
    return z.conjugate()


def squared_modulus(z):
    """z times its conjugate, for exact comparison against rational targets."""
    return z.squared_modulus()


def rational_sqrt(value) -> Fraction | None:
    """Exact rational square root of a nonnegative rational, or None."""
    q = Fraction(value)
    if q < 0:
        return None
    sn = isqrt(q.numerator)
    sd = isqrt(q.denominator)
    if sn * sn == q.numerator and sd * sd == q.denominator:
        return Fraction(sn, sd)
    return None
