"""Exact field scalars: rational numbers and prime fields GF(p).

Rationals are plain ``fractions.Fraction`` (already reduced, positive
denominator, exact arithmetic).  Prime-field elements are immutable
``GFElement`` objects.  Both kinds interoperate with Python ints, so
generic linear-algebra code can use literal 0, 1, -1 freely.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(TypeError):
    """Raised when scalars from different fields are combined."""


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GFElement:
    """An element of GF(p), stored as a residue in [0, p)."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.modulus != self.modulus:
                raise FieldMismatchError(
                    "mixed prime fields GF(%d) and GF(%d)" % (self.modulus, other.modulus)
                )
            return other
        if isinstance(other, int):
            return GFElement(other, self.modulus)
        if isinstance(other, Fraction):
            raise FieldMismatchError("cannot mix rational and prime-field scalars")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.residue - o.residue, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(o.residue - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.residue == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.modulus)
        return GFElement(self.residue * pow(o.residue, -1, self.modulus), self.modulus)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GFElement(-self.residue, self.modulus)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return "%d mod %d" % (self.residue, self.modulus)


class Rationals:
    """The field of rational numbers."""

    name = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def element_of(self, x):
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldMismatchError("not a rational scalar: %r" % (x,))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The finite field GF(p) for a prime p."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.name = "prime:%d" % p

    def zero(self):
        return GFElement(0, self.p)

    def one(self):
        return GFElement(1, self.p)

    def from_int(self, n):
        return GFElement(n, self.p)

    def element_of(self, x):
        if isinstance(x, GFElement):
            return x.modulus == self.p
        return isinstance(x, int) and not isinstance(x, bool)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.modulus != self.p:
                raise FieldMismatchError("element of GF(%d), expected GF(%d)" % (x.modulus, self.p))
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        raise FieldMismatchError("not a GF(%d) scalar: %r" % (self.p, x))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


def field_by_name(name):
    """Parse a field descriptor: "rational" or "prime:p"."""
    if name == "rational":
        return QQ
    if name.startswith("prime:"):
        return PrimeField(int(name[len("prime:"):]))
    raise ValueError("unknown field descriptor %r" % (name,))


def parse_scalar(text, field):
    """Parse an exact scalar literal: "p/q" over the rationals, "r mod p" over GF(p)."""
    text = text.strip() if isinstance(text, str) else text
    if isinstance(text, int):
        return field.from_int(text)
    if field == QQ:
        return Fraction(text)
    if " mod " in text:
        r, p = text.split(" mod ")
        elt = GFElement(int(r), int(p))
        return field.coerce(elt)
    return field.from_int(int(text))


def format_scalar(x):
    """Format an exact scalar as its literal syntax."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GFElement):
        return "%d mod %d" % (x.residue, x.modulus)
    if isinstance(x, int):
        return str(x)
    raise TypeError("not an exact scalar: %r" % (x,))
