"""Arithmetic in GF(2^b) for 2 <= b <= 16 using log/antilog tables.

Elements are plain integers whose bits are polynomial coefficients over
GF(2) (bit i is the coefficient of x^i).  The primitive element alpha is
the polynomial ``x``, i.e. the integer 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

MIN_BITS = 2
MAX_BITS = 16

# Conventional minimal-weight primitive polynomials, x^b term included.
DEFAULT_POLYS = {
    2: 0b111,                  # x^2 + x + 1
    3: 0b1011,                 # x^3 + x + 1
    4: 0b10011,                # x^4 + x + 1
    5: 0b100101,               # x^5 + x^2 + 1
    6: 0b1000011,              # x^6 + x + 1
    7: 0b10000011,             # x^7 + x + 1
    8: 0x11D,                  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,                  # x^9 + x^4 + 1
    10: 0x409,                 # x^10 + x^3 + 1
    11: 0x805,                 # x^11 + x^2 + 1
    12: 0x1053,                # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,                # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,                # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,                # x^15 + x + 1
    16: 0x1100B,               # x^16 + x^12 + x^3 + x + 1
}


class FieldError(ValueError):
    """Raised for invalid field parameters or undefined operations."""


def clmul(x: int, y: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    out = 0
    while y:
        if y & 1:
            out ^= x
        x <<= 1
        y >>= 1
    return out


def poly_mod(x: int, mod: int) -> int:
    """Remainder of ``x`` divided by ``mod`` over GF(2)."""
    deg = mod.bit_length() - 1
    while x.bit_length() - 1 >= deg:
        x ^= mod << (x.bit_length() - 1 - deg)
    return x


def is_irreducible(poly: int) -> bool:
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    # trial division by every polynomial of degree 1..deg//2
    for d in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(poly, d) == 0:
            return False
    return True


def _poly_str(poly: int) -> str:
    terms = []
    for i in range(poly.bit_length() - 1, -1, -1):
        if poly >> i & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return " + ".join(terms) or "0"


@dataclass(frozen=True)
class FieldSpec:
    b: int
    primitive_poly: int

    @property
    def order(self) -> int:
        return 1 << self.b


@dataclass(frozen=True, eq=False)
class FieldTable:
    """GF(2^b) arithmetic context.  Immutable; safe to share."""

    spec: FieldSpec
    log: np.ndarray = dc_field(repr=False)
    antilog: np.ndarray = dc_field(repr=False)

    LOG_ZERO = -1  # sentinel stored at log[0]

    @property
    def b(self) -> int:
        return self.spec.b

    @property
    def q(self) -> int:
        return self.spec.order

    @property
    def poly(self) -> int:
        return self.spec.primitive_poly

    def __eq__(self, other):
        return isinstance(other, FieldTable) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"GF(2^{self.b}) mod {_poly_str(self.poly)}"

    # -- scalar arithmetic -------------------------------------------------

    def _check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element of GF(2^{self.b})")
        return x

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    sub = add

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.antilog[(int(self.log[x]) + int(self.log[y])) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldError("zero has no multiplicative inverse")
        return int(self.antilog[(-int(self.log[x])) % (self.q - 1)])

    def div(self, x: int, y: int) -> int:
        if y == 0:
            raise FieldError("division by zero")
        if x == 0:
            return 0
        return int(self.antilog[(int(self.log[x]) - int(self.log[y])) % (self.q - 1)])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("zero to a negative power")
            return 0
        return int(self.antilog[(int(self.log[x]) * e) % (self.q - 1)])

    def alpha_pow(self, e: int) -> int:
        return int(self.antilog[e % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self):
        """Nonzero elements in antilog order 1, alpha, alpha^2, ..."""
        return [int(v) for v in self.antilog]

    # -- vectorised helpers ------------------------------------------------

    def vmul(self, x, y) -> np.ndarray:
        """Elementwise product of integer arrays (broadcasting)."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        lx = self.log[x]
        ly = self.log[y]
        out = self.antilog[(lx + ly) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, out)

    def vinv(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise FieldError("zero has no multiplicative inverse")
        return self.antilog[(-self.log[x]) % (self.q - 1)]

    # -- matrix view -------------------------------------------------------

    def companion_matrix(self, x: int) -> np.ndarray:
        """Binary b x b matrix of the map y -> x*y in the polynomial basis.

        Column j holds the bits of x * alpha^j, least significant bit in
        row 0, so ``M @ bits(y) = bits(x*y)`` (mod 2).
        """
        self._check(x)
        m = np.zeros((self.b, self.b), dtype=np.uint8)
        for j in range(self.b):
            col = self.mul(x, 1 << j)
            for i in range(self.b):
                m[i, j] = col >> i & 1
        return m

    def to_bits(self, x: int) -> np.ndarray:
        return np.array([(x >> i) & 1 for i in range(self.b)], dtype=np.uint8)

    def from_bits(self, bits) -> int:
        return sum(int(v) << i for i, v in enumerate(bits))


@lru_cache(maxsize=None)
def _build(b: int, poly: int) -> FieldTable:
    q = 1 << b
    antilog = np.zeros(q - 1, dtype=np.int64)
    log = np.full(q, FieldTable.LOG_ZERO, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        if i > 0 and x == 1:
            raise FieldError(
                f"{_poly_str(poly)} is irreducible but not primitive: "
                f"x has order {i}, not {q - 1}")
        antilog[i] = x
        log[x] = i
        x <<= 1
        if x & q:
            x ^= poly
    if x != 1:
        raise FieldError(f"{_poly_str(poly)} is not primitive")
    antilog.flags.writeable = False
    log.flags.writeable = False
    return FieldTable(FieldSpec(b, poly), log, antilog)


def field_new(b: int, primitive_poly: int | None = None) -> FieldTable:
    """Build GF(2^b).

    ``primitive_poly`` is a bit mask including the x^b term; when omitted
    the built-in default for ``b`` is used.  Raises :class:`FieldError`
    naming whether a rejected polynomial is reducible or non-primitive.
    """
    if not isinstance(b, (int, np.integer)) or not MIN_BITS <= b <= MAX_BITS:
        raise FieldError(f"b must be in [{MIN_BITS}, {MAX_BITS}], got {b}")
    b = int(b)
    poly = DEFAULT_POLYS[b] if primitive_poly is None else int(primitive_poly)
    if poly.bit_length() - 1 != b:
        raise FieldError(f"polynomial {_poly_str(poly)} does not have degree {b}")
    if not is_irreducible(poly):
        raise FieldError(f"polynomial {_poly_str(poly)} is reducible")
    return _build(b, poly)
