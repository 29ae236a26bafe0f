"""Reed-Solomon codes over GF(2^b): generator, systematic encoder, decoder.

Polynomials are lists of field elements, index i holding the coefficient
of x^i.  Codewords are serialised in ascending symbol index, so the data
symbols occupy the high-order positions x^(n-k) .. x^(n-1).

Decoding runs syndromes -> Berlekamp-Massey locator -> exhaustive root
search -> error values.  Error values use the evaluator form

    z(x) = 1 + (s1 + sig1) x + (s2 + sig1 s1 + sig2) x^2 + ...
    e_l  = z(1/beta_l) / prod_{i != l} (1 + beta_i / beta_l)

where beta_l = alpha^(position) are the error locations.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import FieldTable


class RsError(ValueError):
    pass


class DecodeFailure(RsError):
    """No codeword lies within distance t of the received word."""


# -- polynomial helpers -------------------------------------------------------

def poly_trim(p: list[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_degree(p: list[int]) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(poly_trim(p)) - 1


def poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] ^= c
    for i, c in enumerate(b):
        out[i] ^= c
    return poly_trim(out)


def poly_mul(gf: FieldTable, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] ^= gf.mul(x, y)
    return poly_trim(out)


def poly_scale(gf: FieldTable, p: list[int], c: int) -> list[int]:
    return poly_trim([gf.mul(x, c) for x in p])


def poly_divmod(gf: FieldTable, num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [], rem
    lead_inv = gf.inv(den[-1])
    quot = [0] * (len(rem) - dd)
    rem = list(rem)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = gf.mul(c, lead_inv)
        quot[i - dd] = f
        for j, d in enumerate(den):
            rem[i - dd + j] ^= gf.mul(f, d)
    return poly_trim(quot), poly_trim(rem[:dd])


def poly_eval(gf: FieldTable, p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = gf.mul(acc, x) ^ c
    return acc


# -- code ---------------------------------------------------------------------

def rs_params(b: int, t: int) -> tuple[int, int, int]:
    """(n, k, d_min) of the t-error-correcting RS code over GF(2^b)."""
    n = (1 << b) - 1
    if t < 1 or 2 * t > n - 2:
        raise RsError(f"t={t} is out of range for GF(2^{b}) (need 1 <= t and 2t <= {n - 2})")
    return n, n - 2 * t, 2 * t + 1


def rs_generator(gf: FieldTable, t: int) -> list[int]:
    """g(x) = (x + alpha)(x + alpha^2) ... (x + alpha^2t)."""
    g = [1]
    for i in range(1, 2 * t + 1):
        g = poly_mul(gf, g, [gf.alpha_pow(i), 1])
    return g


@dataclass(frozen=True)
class RsCode:
    """RS code, optionally shortened by ``shorten`` leading data symbols.

    A shortened code pads its high-order data symbols with zeros that are
    never transmitted, so ``n`` and ``k`` both drop by ``shorten``.
    """

    field: FieldTable
    t: int
    shorten: int = 0
    g: list[int] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        full_n = self.field.q - 1
        if self.t < 0 or 2 * self.t > full_n - 2:
            raise RsError(f"t={self.t} is out of range for GF(2^{self.field.b})")
        if not 0 <= self.shorten < full_n - 2 * self.t:
            raise RsError(f"cannot shorten by {self.shorten}")
        object.__setattr__(self, "g", rs_generator(self.field, self.t))

    @property
    def n(self) -> int:
        return self.field.q - 1 - self.shorten

    @property
    def k(self) -> int:
        return self.n - 2 * self.t

    @property
    def d_min(self) -> int:
        return 2 * self.t + 1


@dataclass
class RsDecodeState:
    syndromes: list[int]
    locator: list[int] = dc_field(default_factory=list)
    evaluator: list[int] = dc_field(default_factory=list)
    positions: list[int] = dc_field(default_factory=list)
    values: list[int] = dc_field(default_factory=list)


@dataclass
class RsDecodeResult:
    codeword: list[int]
    data: list[int]
    state: RsDecodeState


def rs_encode(code: RsCode, data) -> list[int]:
    data = [int(v) for v in data]
    if len(data) != code.k:
        raise RsError(f"expected {code.k} data symbols, got {len(data)}")
    nk = 2 * code.t
    shifted = [0] * nk + data          # d(x) on x^(n-k) .. x^(n-1)
    _, rem = poly_divmod(code.field, shifted, code.g)
    # -y(x) == y(x) in characteristic 2
    return rem + [0] * (nk - len(rem)) + data


def rs_syndromes(code: RsCode, received) -> list[int]:
    gf = code.field
    return [poly_eval(gf, list(received), gf.alpha_pow(j)) for j in range(1, 2 * code.t + 1)]


def berlekamp_massey(gf: FieldTable, s: list[int]) -> list[int]:
    """Shortest LFSR sigma(x) = 1 + sig1 x + ... generating ``s``."""
    sigma = [1]
    prev = [1]
    L = 0
    m = 1
    bb = 1
    for i in range(len(s)):
        d = s[i]
        for j in range(1, L + 1):
            if j < len(sigma):
                d ^= gf.mul(sigma[j], s[i - j])
        if d == 0:
            m += 1
            continue
        coef = gf.div(d, bb)
        adj = [0] * m + poly_scale(gf, prev, coef)
        if 2 * L <= i:
            old = sigma
            sigma = poly_add(sigma, adj)
            L = i + 1 - L
            prev = old
            bb = d
            m = 1
        else:
            sigma = poly_add(sigma, adj)
            m += 1
    return sigma


def error_evaluator(gf: FieldTable, s: list[int], sigma: list[int]) -> list[int]:
    """z(x) with z_i = s_i + sig1 s_(i-1) + ... + sig_(i-1) s_1 + sig_i."""
    nu = poly_degree(sigma)
    z = [1]
    for i in range(1, nu + 1):
        acc = sigma[i] if i < len(sigma) else 0
        for j in range(0, i):
            sj = sigma[j] if j < len(sigma) else 0
            acc ^= gf.mul(sj, s[i - j - 1])
        z.append(acc)
    return poly_trim(z)


def rs_decode(code: RsCode, received) -> RsDecodeResult:
    """Bounded-distance decode; raises :class:`DecodeFailure` beyond t errors."""
    gf = code.field
    r = [int(v) for v in received]
    if len(r) != code.n:
        raise RsError(f"expected {code.n} symbols, got {len(r)}")
    s = rs_syndromes(code, r)
    state = RsDecodeState(syndromes=s)
    if not any(s):
        return RsDecodeResult(r, r[2 * code.t:], state)

    sigma = berlekamp_massey(gf, s)
    state.locator = sigma
    nu = poly_degree(sigma)
    if nu > code.t:
        raise DecodeFailure(f"locator degree {nu} exceeds t={code.t}")

    positions = [i for i in range(code.n) if poly_eval(gf, sigma, gf.alpha_pow(-i)) == 0]
    if len(positions) != nu:
        raise DecodeFailure(f"found {len(positions)} locator roots, expected {nu}")

    z = error_evaluator(gf, s, sigma)
    state.evaluator = z
    betas = [gf.alpha_pow(p) for p in positions]
    values = []
    for l, bl in enumerate(betas):
        bl_inv = gf.inv(bl)
        den = 1
        for i, bi in enumerate(betas):
            if i != l:
                den = gf.mul(den, 1 ^ gf.mul(bi, bl_inv))
        values.append(gf.div(poly_eval(gf, z, bl_inv), den))
    state.positions = positions
    state.values = values

    c = list(r)
    for p, v in zip(positions, values):
        c[p] ^= v
    if any(rs_syndromes(code, c)) or 0 in values:
        raise DecodeFailure("correction does not yield a codeword")
    return RsDecodeResult(c, c[2 * code.t:], state)


def generator_matrix(code: RsCode) -> np.ndarray:
    """k x n systematic generator matrix (row i = encoding of unit vector i)."""
    rows = []
    for i in range(code.k):
        d = [0] * code.k
        d[i] = 1
        rows.append(rs_encode(code, d))
    return np.array(rows, dtype=np.int64).reshape(code.k, code.n)


def all_codewords(code: RsCode, budget: int = 1 << 22) -> np.ndarray:
    """Every codeword as a (q^k, n) array.  Raises if q^k exceeds ``budget``."""
    q = code.field.q
    count = q ** code.k
    if count > budget:
        raise RsError(f"{count} codewords exceed the enumeration budget {budget}")
    gen = generator_matrix(code)
    words = np.zeros((count, code.n), dtype=np.int64)
    idx = np.arange(count, dtype=np.int64)
    for i in range(code.k):
        digit = (idx // q ** i) % q
        words ^= code.field.vmul(digit[:, None], gen[i][None, :])
    return words


def min_distance_bruteforce(code: RsCode, budget: int = 1 << 22) -> int:
    words = all_codewords(code, budget)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())
