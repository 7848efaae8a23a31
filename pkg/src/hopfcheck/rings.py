"""Exact arithmetic in commutative coefficient rings.

Supported rings: the integers ``Z``, the rationals ``Q``, the modular rings
``Z/m`` (m >= 2), and monic polynomial quotients ``R[q]/(f)`` with R in
{Z, Q}.  Elements are kept canonical at all times (reduced fractions,
residues in [0, m), polynomial residues of degree < deg f), so equality is
plain representation equality.

The string grammar accepted by :func:`ring_from_string` is the one used by
the CLI and by algebra spec files::

    Z
    Q
    Z/7
    Z[q]/(1,1,1)        # coefficient list of the monic modulus, low to high
    Q[q]/(1,0,1)
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import StructuralError, UnsupportedRingError


def binomial(k: int, r: int) -> int:
    """Binomial coefficient C(k, r), zero when r > k or r < 0."""
    if r < 0 or r > k:
        return 0
    return math.comb(k, r)


def is_prime(n: int) -> bool:
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


class RingElement:
    """A canonical element of a :class:`Ring`, with overloaded arithmetic."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: "Ring", value):
        self.ring = ring
        self.value = value

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise StructuralError(
                    f"mixed-ring operands: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.embed(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(
            self.ring, self.ring._add(self.value, self.ring._neg(other.value)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring._inv(self.value))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.embed(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return self.value != self.ring.zero.value

    def is_zero(self) -> bool:
        return not self

    def __repr__(self):
        return f"<{self.ring.format_value(self.value)} in {self.ring}>"

    def __str__(self):
        return self.ring.format_value(self.value)


class Ring:
    """Base class for coefficient rings.  Subclasses implement raw ops on
    canonical values; users go through :class:`RingElement`."""

    is_field = False

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise StructuralError(f"element of {value.ring}, expected {self}")
            return value
        if isinstance(value, int):
            return self.embed(value)
        return RingElement(self, self._canon(value))

    def embed(self, n: int) -> RingElement:
        """Image of the integer n under the unique ring map Z -> R."""
        return RingElement(self, self._embed_int(n))

    @property
    def zero(self) -> RingElement:
        return self.embed(0)

    @property
    def one(self) -> RingElement:
        return self.embed(1)

    # raw-value interface -------------------------------------------------
    def _canon(self, value):
        raise NotImplementedError

    def _embed_int(self, n: int):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise UnsupportedRingError(f"{self} is not a field; no inverses")

    # serialization -------------------------------------------------------
    def format_value(self, value) -> str:
        raise NotImplementedError

    def parse_value(self, text: str) -> RingElement:
        raise NotImplementedError


class IntegerRing(Ring):
    def _canon(self, value):
        if not isinstance(value, int):
            raise StructuralError(f"not an integer: {value!r}")
        return value

    def _embed_int(self, n):
        return n

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def format_value(self, value):
        return str(value)

    def parse_value(self, text):
        return RingElement(self, int(text))

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash(IntegerRing)

    def __repr__(self):
        return "Z"


class RationalRing(Ring):
    is_field = True

    def _canon(self, value):
        return Fraction(value)

    def _embed_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format_value(self, value):
        return str(value)

    def parse_value(self, text):
        return RingElement(self, Fraction(text))

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash(RationalRing)

    def __repr__(self):
        return "Q"


class ModRing(Ring):
    """Integers modulo m, residues canonical in [0, m)."""

    def __init__(self, m: int):
        if m < 2:
            raise StructuralError("modulus must be >= 2")
        self.m = m
        self.is_field = is_prime(m)

    def _canon(self, value):
        if not isinstance(value, int):
            raise StructuralError(f"not an integer: {value!r}")
        return value % self.m

    def _embed_int(self, n):
        return n % self.m

    def _add(self, a, b):
        return (a + b) % self.m

    def _mul(self, a, b):
        return (a * b) % self.m

    def _neg(self, a):
        return (-a) % self.m

    def _inv(self, a):
        if not self.is_field:
            raise UnsupportedRingError(f"{self} is not a field")
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.m)

    def format_value(self, value):
        return str(value)

    def parse_value(self, text):
        return self.embed(int(text))

    def __eq__(self, other):
        return isinstance(other, ModRing) and other.m == self.m

    def __hash__(self):
        return hash((ModRing, self.m))

    def __repr__(self):
        return f"Z/{self.m}"


class PolyQuotientRing(Ring):
    """R[q]/(f) for R in {Z, Q} and monic f, residues of degree < deg f.

    Values are fixed-length tuples of base-ring raw values, low degree
    first.  Irreducibility over Q is caller-asserted via ``irreducible``;
    the ring is a field exactly when the base is Q and that flag is set.
    """

    def __init__(self, base: Ring, modulus, irreducible: bool = False):
        if not isinstance(base, (IntegerRing, RationalRing)):
            raise StructuralError("quotient base must be Z or Q")
        mod = tuple(base._canon(c) if not isinstance(c, int) else base._embed_int(c)
                    for c in modulus)
        while len(mod) > 0 and mod[-1] == base.zero.value:
            mod = mod[:-1]
        if len(mod) < 2:
            raise StructuralError("modulus must have degree >= 1")
        if mod[-1] != base.one.value:
            raise StructuralError("modulus must be monic")
        self.base = base
        self.modulus = mod
        self.degree = len(mod) - 1
        self.irreducible = irreducible
        self.is_field = irreducible and isinstance(base, RationalRing)

    def _reduce(self, coeffs: list):
        mod, d = self.modulus, self.degree
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c != self.base.zero.value:
                for i in range(d + 1):
                    coeffs[k - d + i] = self.base._add(
                        coeffs[k - d + i], self.base._neg(self.base._mul(c, mod[i])))
        coeffs = coeffs[:d]
        coeffs += [self.base.zero.value] * (d - len(coeffs))
        return tuple(coeffs)

    def _canon(self, value):
        if isinstance(value, int):
            return self._embed_int(value)
        coeffs = [self.base.element(c).value for c in value]
        return self._reduce(coeffs)

    def _embed_int(self, n):
        return self._reduce([self.base._embed_int(n)])

    def _add(self, a, b):
        return tuple(self.base._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.base._neg(x) for x in a)

    def _mul(self, a, b):
        zero = self.base.zero.value
        out = [zero] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = self.base._add(out[i + j], self.base._mul(x, y))
        return self._reduce(out)

    def _inv(self, a):
        if not self.is_field:
            raise UnsupportedRingError(f"{self} is not (declared) a field")
        if all(c == 0 for c in a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[q] against the modulus
        r0, s0 = list(self.modulus), [Fraction(0)]
        r1, s1 = [Fraction(c) for c in a], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is the gcd; a unit since the modulus is irreducible
        lead = r0[_poly_deg(r0)]
        inv = [c / lead for c in s0]
        return self._reduce(inv)

    def format_value(self, value):
        return "(" + ",".join(self.base.format_value(c) for c in value) + ")"

    def parse_value(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise StructuralError(f"bad quotient-ring value: {text!r}")
        parts = text[1:-1].split(",")
        return self.element([self.base.parse_value(p).value for p in parts])

    def __eq__(self, other):
        return (isinstance(other, PolyQuotientRing)
                and other.base == self.base and other.modulus == self.modulus)

    def __hash__(self):
        return hash((PolyQuotientRing, self.base, self.modulus))

    def __repr__(self):
        coeffs = ",".join(self.base.format_value(c) for c in self.modulus)
        return f"{self.base}[q]/({coeffs})"


def _poly_deg(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i] != 0:
            return i
    return -1


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    db = _poly_deg(b)
    q = [Fraction(0)] * max(len(a) - db, 1)
    while _poly_deg(a) >= db:
        da = _poly_deg(a)
        c = a[da] / b[db]
        q[da - db] = c
        for i in range(db + 1):
            a[da - db + i] -= c * b[i]
    return q, a


ZZ = IntegerRing()
QQ = RationalRing()


def cyclotomic_ring(p: int) -> PolyQuotientRing:
    """Z[q]/(1 + q + ... + q^(p-1)) for prime p."""
    if not is_prime(p):
        raise UnsupportedRingError(f"{p} is not prime")
    return PolyQuotientRing(ZZ, [1] * p)


_RING_RE = re.compile(r"^(Z|Q)\[q\]/\(([^)]*)\)$")


def ring_from_string(text: str) -> Ring:
    text = text.strip()
    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    try:
        if text.startswith("Z/"):
            return ModRing(int(text[2:]))
        m = _RING_RE.match(text)
        if m:
            base = ZZ if m.group(1) == "Z" else QQ
            coeffs = [base.parse_value(c).value for c in m.group(2).split(",")]
            return PolyQuotientRing(base, coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise StructuralError(f"unrecognized ring: {text!r} ({exc})") from exc
    raise StructuralError(f"unrecognized ring: {text!r}")
