"""Exact scalar arithmetic for the whole engine.

Three interchangeable carriers share one operator surface, so module code
upstream never branches on the coefficient ring:

* rationals, represented by plain ``fractions.Fraction`` (lowest terms,
  positive denominator, arbitrary-precision integers),
* elements of a prime field F_p for an odd prime p (``Fp``),
* dense univariate polynomials in the formal highest weight h over either
  base field (``Poly``, no trailing zero coefficients).

A ``Ring`` value describes which carrier is in play.  Characteristic 2 is
rejected everywhere because 2 must stay invertible for the central term
(m^3 - m)/12 and for the fermionic normal ordering constants.

No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class CharacteristicTwoError(ValueError):
    """Characteristic 2 was requested; the construction needs 1/2 in the ring."""


class DenominatorDivisibleByP(ArithmeticError):
    """A rational has no image in F_p because p divides its denominator."""


class RingMismatchError(TypeError):
    """Scalars from incompatible rings were combined."""


def is_odd_prime(p: int) -> bool:
    """True when p is an odd prime (trial division; machine-word sizes)."""
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """Element of F_p, p an odd prime.  Residues are stored in [0, p)."""

    __slots__ = ("p", "v")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _lift(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise RingMismatchError(f"mixed primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Fp(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


class Poly:
    """Dense univariate polynomial in the formal weight h over a base field.

    ``coeffs`` is a tuple (c0, c1, ...) with no trailing zeros; the zero
    polynomial has an empty tuple.  ``char`` is 0 for rational coefficients
    or the odd prime p of the base field.
    """

    __slots__ = ("char", "coeffs")

    def __init__(self, coeffs, char: int = 0):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.char = char
        self.coeffs = tuple(cs)

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.char != self.char:
                raise RingMismatchError("mixed base fields in polynomial arithmetic")
            return other
        if isinstance(other, int) or isinstance(other, Fraction) or isinstance(other, Fp):
            return Poly((_base_coerce(other, self.char),), self.char)
        return NotImplemented

    def degree(self) -> int:
        """Degree in h, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        zero = _base_zero(self.char)
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        for i, cv in enumerate(o.coeffs):
            a[i] = a[i] + cv
        return Poly(a, self.char)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-cv for cv in self.coeffs), self.char)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly((), self.char)
        zero = _base_zero(self.char)
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.char)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Poly((_base_zero(self.char) + 1,), self.char)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.degree() > 0:
            raise ArithmeticError("polynomial division only by constants")
        if not o.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        inv = o.coeffs[0]
        return Poly(tuple(cv / inv for cv in self.coeffs), self.char)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.char == other.char and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Fp)):
            o = self._lift(other)
            return self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.char, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def eval(self, x):
        """Evaluate at x by Horner's rule; x must live in the base field."""
        acc = _base_zero(self.char)
        for cv in reversed(self.coeffs):
            acc = acc * x + cv
        return acc

    def __repr__(self):
        return f"Poly({self.coeffs!r}, char={self.char})"


Scalar = Union[Fraction, Fp, Poly]


def _base_zero(char: int):
    return Fraction(0) if char == 0 else Fp(0, char)


def _base_coerce(x, char: int):
    if isinstance(x, Poly):
        raise RingMismatchError("polynomial where a base scalar was expected")
    if char == 0:
        if isinstance(x, Fp):
            raise RingMismatchError("prime-field scalar in a rational ring")
        return Fraction(x)
    if isinstance(x, Fp):
        if x.p != char:
            raise RingMismatchError(f"scalar mod {x.p} in a ring mod {char}")
        return x
    if isinstance(x, int):
        return Fp(x, char)
    if isinstance(x, Fraction):
        return reduce_mod_p(x, char)
    raise RingMismatchError(f"cannot coerce {x!r} into characteristic {char}")


@dataclass(frozen=True)
class Ring:
    """Descriptor of a coefficient ring.

    char 0 means Q, an odd prime p means F_p.  With formal=True the elements
    are polynomials in the formal weight h over that base field.
    """

    char: int = 0
    formal: bool = False

    def __post_init__(self):
        if self.char == 2:
            raise CharacteristicTwoError("characteristic 2 is unsupported, 2 must be invertible")
        if self.char != 0 and not is_odd_prime(self.char):
            raise ValueError(f"characteristic must be 0 or an odd prime, got {self.char}")

    @property
    def base(self) -> "Ring":
        return Ring(self.char, False)

    def zero(self) -> Scalar:
        if self.formal:
            return Poly((), self.char)
        return _base_zero(self.char)

    def one(self) -> Scalar:
        return self.of_int(1)

    def of_int(self, n: int) -> Scalar:
        if self.formal:
            return Poly((_base_coerce(n, self.char),), self.char)
        return _base_coerce(n, self.char)

    def of_fraction(self, q: Fraction) -> Scalar:
        if self.formal:
            return Poly((_base_coerce(q, self.char),), self.char)
        return _base_coerce(q, self.char)

    def coerce(self, x) -> Scalar:
        """Canonicalize x (int, Fraction, Fp, or Poly) into this ring."""
        if self.formal:
            if isinstance(x, Poly):
                if x.char != self.char:
                    raise RingMismatchError("polynomial over the wrong base field")
                return x
            return Poly((_base_coerce(x, self.char),), self.char)
        return _base_coerce(x, self.char)

    def h(self) -> Scalar:
        """The formal weight generator; only available in formal rings."""
        if not self.formal:
            raise ValueError("h is only defined in a formal-weight ring")
        return Poly((_base_zero(self.char), _base_coerce(1, self.char)), self.char)

    def parse(self, s: str) -> Scalar:
        """Parse 'num', 'num/den', 'k mod p', or (formal rings only) 'h'."""
        s = s.strip()
        if s == "h":
            return self.h()
        return scalar_from_json(s, self)


QQ = Ring(0)


def GF(p: int) -> Ring:
    return Ring(p)


def formal_ring(char: int = 0) -> Ring:
    return Ring(char, True)


def reduce_mod_p(q: Union[int, Fraction], p: int) -> Fp:
    """Image of an integer or rational in F_p.

    Raises DenominatorDivisibleByP when the denominator is not a unit mod p.
    """
    if not is_odd_prime(p):
        if p == 2:
            raise CharacteristicTwoError("characteristic 2 is unsupported, 2 must be invertible")
        raise ValueError(f"modulus must be an odd prime, got {p}")
    if isinstance(q, int):
        return Fp(q, p)
    if q.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{q} has no image mod {p}")
    return Fp(q.numerator * pow(q.denominator % p, -1, p), p)


def central_coeff(m: int, ring: Ring) -> Scalar:
    """Central term coefficient (m^3 - m)/12 of [L(m), L(-m)].

    Computed as the exact integer (m^3 - m)/3 times the ring inverse of 4,
    which stays valid in characteristic 3.
    """
    t = (m * m * m - m) // 3
    return ring.of_int(t) / ring.of_int(4)


def poly_eval(f: Poly, x) -> Scalar:
    """Evaluate a polynomial scalar at a base-field point."""
    if not isinstance(f, Poly):
        raise TypeError("poly_eval expects a polynomial scalar")
    return f.eval(_base_coerce(x, f.char))


def binomial(s: int, i: int) -> int:
    """Generalized binomial coefficient C(s, i) for integer s (s may be negative)."""
    if i < 0:
        return 0
    if s >= 0:
        return math.comb(s, i)
    return (-1) ** i * math.comb(i - s - 1, i)


def scalar_to_str(x: Scalar) -> str:
    """Render a scalar: 'num/den' for rationals, 'k mod p' for prime fields,
    and an explicit polynomial in h for formal scalars."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Fp):
        return f"{x.v} mod {x.p}"
    if isinstance(x, Poly):
        if not x.coeffs:
            return "0"
        parts = []
        for i in range(len(x.coeffs) - 1, -1, -1):
            cv = x.coeffs[i]
            if not cv:
                continue
            cs = str(cv.v) if isinstance(cv, Fp) else str(cv)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*h")
            else:
                parts.append(f"{cs}*h^{i}")
        return " + ".join(parts)
    raise TypeError(f"not a scalar: {x!r}")


def scalar_to_json(x: Scalar):
    """JSON form: strings for base scalars, a coefficient array for polynomials."""
    if isinstance(x, Poly):
        return [scalar_to_json(cv) for cv in x.coeffs]
    return scalar_to_str(x)


def scalar_from_json(data, ring: Ring) -> Scalar:
    """Inverse of scalar_to_json for the given ring."""
    if isinstance(data, list):
        if not ring.formal:
            raise RingMismatchError("coefficient array given for a non-formal ring")
        base = ring.base
        return Poly(tuple(scalar_from_json(cv, base) for cv in data), ring.char)
    s = str(data).strip()
    if " mod " in s:
        vs, ps = s.split(" mod ")
        p = int(ps)
        if ring.char != p:
            raise RingMismatchError(f"scalar mod {p} in a ring of characteristic {ring.char}")
        return ring.coerce(int(vs))
    return ring.coerce(Fraction(s))
