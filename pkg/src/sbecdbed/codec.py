"""Byte-oriented encoder/decoder built from a :class:`CheckMatrix`.

Bit layout: codeword bit j*b + i is bit i of byte j (byte j is stored in
chip j).  Internally codewords are Python ints over the full n_sym*b
layout; the public bit-vector API drops frozen (shortened) bits.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

import numpy as np

from .construct import CheckMatrix, CodeSpec, single_syndromes


class CodecError(ValueError):
    pass


class RankDeficient(CodecError):
    def __init__(self, rank: int, rows: int):
        super().__init__(f"binary check matrix has rank {rank} < {rows} rows; "
                         f"the code carries {rows - rank} more information bits than specified")
        self.rank = rank
        self.rows = rows


class Outcome(enum.Enum):
    NO_ERROR = "NoError"
    CORRECTED = "Corrected"
    DETECTED = "DetectedUncorrectable"


@dataclass(frozen=True)
class DecodeOutcome:
    kind: Outcome
    byte_pos: int | None = None
    pattern: int | None = None

    def __post_init__(self):
        if self.kind is Outcome.CORRECTED and not self.pattern:
            raise CodecError("a correction needs a nonzero pattern")

    def __str__(self):
        if self.kind is Outcome.CORRECTED:
            return f"Corrected(byte={self.byte_pos}, pattern={self.pattern:#x})"
        return self.kind.value


NO_ERROR = DecodeOutcome(Outcome.NO_ERROR)
DETECTED = DecodeOutcome(Outcome.DETECTED)


class ErrorDirection(enum.Enum):
    NONE = "None"
    UP_ONLY = "UpOnly"
    DOWN_ONLY = "DownOnly"
    MIXED = "Mixed"


def classify_byte_error(sent: int, received: int) -> ErrorDirection:
    up = received & ~sent
    down = sent & ~received
    if not up and not down:
        return ErrorDirection.NONE
    if up and not down:
        return ErrorDirection.UP_ONLY
    if down and not up:
        return ErrorDirection.DOWN_ONLY
    return ErrorDirection.MIXED


def _row_ints(Hb: np.ndarray) -> list[int]:
    rows = []
    for row in Hb:
        packed = np.packbits(row[::-1].astype(np.uint8))
        rows.append(int.from_bytes(packed.tobytes(), "big") >> ((-len(row)) % 8))
    return rows


def _reduce(rows: list[int]) -> tuple[list[int], list[int]]:
    """Gauss-Jordan over GF(2) with the highest available bit as pivot."""
    red: list[int] = []
    piv: list[int] = []
    for row in rows:
        for r, p in zip(red, piv):
            if row >> p & 1:
                row ^= r
        if not row:
            continue
        p = row.bit_length() - 1
        for i, r in enumerate(red):
            if r >> p & 1:
                red[i] = r ^ row
        red.append(row)
        piv.append(p)
    return red, piv


def systematic_pivots(H: CheckMatrix, frozen_bits=()) -> list[int]:
    """Check-bit positions chosen by elimination, preferring high indices."""
    mask = 0
    for f in frozen_bits:
        mask |= 1 << f
    rows = [r & ~mask for r in _row_ints(H.binary())]
    _, piv = _reduce(rows)
    return piv


class ByteCode:
    """Systematic binary encoder/decoder for a symbol check matrix."""

    def __init__(self, H: CheckMatrix, spec: CodeSpec | None = None, map_budget: int = 1 << 21):
        spec = spec if spec is not None else CodeSpec.of(H)
        if (spec.b, spec.r_sym, spec.n_sym, spec.extra_parity_bits) != (
                H.b, H.r_sym, H.n_sym, H.extra_parity_bits):
            raise CodecError("code spec does not describe this matrix")
        self.H = H
        self.spec = spec
        self.b = H.b
        self.n_sym = H.n_sym
        self.width = H.n_sym * H.b
        self.frozen = tuple(spec.frozen_bits)
        frozen_mask = 0
        for f in self.frozen:
            frozen_mask |= 1 << f
        self._frozen_mask = frozen_mask

        self._rows = _row_ints(H.binary())
        red, piv = _reduce([r & ~frozen_mask for r in self._rows])
        if len(piv) < len(self._rows):
            raise RankDeficient(len(piv), len(self._rows))
        self._red = red
        self.check_positions = tuple(piv)
        pivset = set(piv)
        self.info_positions = tuple(p for p in range(self.width)
                                    if p not in pivset and not frozen_mask >> p & 1)
        if len(self.info_positions) != spec.k_bits:
            raise CodecError(f"matrix yields {len(self.info_positions)} information bits, "
                             f"spec claims {spec.k_bits}")
        self.stored_positions = tuple(p for p in range(self.width) if not frozen_mask >> p & 1)

        self._byte_mask = (1 << self.b) - 1
        self._map: dict[int, tuple[int, int] | None] | None = None
        if self.n_sym * (H.field.q - 1) <= map_budget:
            self._map = self._build_map()
        else:
            ent = H.entries
            self._lead_row = np.argmax(ent != 0, axis=0)
            self._lead_val = ent[self._lead_row, np.arange(self.n_sym)]
            if H.parity_row is not None:
                pr = H.parity_row.reshape(self.n_sym, self.b).astype(np.int64)
                self._parity_mask = (pr << np.arange(self.b)).sum(axis=1)

    # -- construction helpers ----------------------------------------------

    def _pattern_allowed(self, j: int, e: int) -> bool:
        return not (self._frozen_mask >> (j * self.b)) & self._byte_mask & e

    def _build_map(self) -> dict[int, tuple[int, int] | None]:
        single = single_syndromes(self.H)
        table: dict[int, tuple[int, int] | None] = {}
        for j in range(self.n_sym):
            for e in range(1, self.H.field.q):
                if not self._pattern_allowed(j, e):
                    continue
                s = int(single[j, e])
                table[s] = None if s in table else (j, e)   # None marks ambiguity
        return table

    @property
    def k_bits(self) -> int:
        return self.spec.k_bits

    @property
    def n_bits(self) -> int:
        return self.spec.n_bits

    # -- int-level API -----------------------------------------------------

    def encode_int(self, data: int) -> int:
        """Codeword (full layout) for the k_bits-bit integer ``data``."""
        word = 0
        for i, p in enumerate(self.info_positions):
            if data >> i & 1:
                word |= 1 << p
        for r, p in zip(self._red, self.check_positions):
            if (r & word).bit_count() & 1:
                word |= 1 << p
        return word

    def extract_int(self, word: int) -> int:
        data = 0
        for i, p in enumerate(self.info_positions):
            if word >> p & 1:
                data |= 1 << i
        return data

    def syndrome(self, word: int) -> int:
        s = 0
        for i, r in enumerate(self._rows):
            if (r & word).bit_count() & 1:
                s |= 1 << i
        return s

    def _locate(self, s: int) -> tuple[int, int] | None:
        if self._map is not None:
            return self._map.get(s)
        # scan: solve e from each column's first nonzero entry, then verify
        H, gf, b = self.H, self.H.field, self.b
        sym = np.array([s >> (i * b) & self._byte_mask for i in range(H.r_sym)], dtype=np.int64)
        e = gf.vmul(sym[self._lead_row], gf.vinv(np.maximum(self._lead_val, 1)))
        e = np.where(self._lead_val == 0, 0, e)
        match = (e != 0) & np.all(gf.vmul(H.entries, e[None, :]) == sym[:, None], axis=0)
        if H.parity_row is not None:
            par = np.array([bin(int(v)).count("1") & 1 for v in (self._parity_mask & e)])
            match &= par == (s >> (H.r_sym * b) & 1)
        hits = [(int(j), int(e[j])) for j in np.flatnonzero(match)
                if self._pattern_allowed(int(j), int(e[j]))]
        return hits[0] if len(hits) == 1 else None

    def decode_int(self, word: int) -> tuple[DecodeOutcome, int | None]:
        word &= ~self._frozen_mask
        s = self.syndrome(word)
        if s == 0:
            return NO_ERROR, self.extract_int(word)
        hit = self._locate(s)
        if hit is None:
            return DETECTED, None
        j, e = hit
        fixed = word ^ (e << (j * self.b))
        return DecodeOutcome(Outcome.CORRECTED, j, e), self.extract_int(fixed)

    def byte(self, word: int, j: int) -> int:
        return word >> (j * self.b) & self._byte_mask

    # -- bit-vector API ----------------------------------------------------

    def _from_stored_bits(self, bits) -> int:
        bits = np.asarray(bits, dtype=np.uint8).ravel()
        if bits.shape[0] != self.n_bits:
            raise CodecError(f"expected {self.n_bits} bits, got {bits.shape[0]}")
        word = 0
        for p, v in zip(self.stored_positions, bits):
            if v:
                word |= 1 << p
        return word

    def _to_stored_bits(self, word: int) -> np.ndarray:
        return np.array([word >> p & 1 for p in self.stored_positions], dtype=np.uint8)

    def encode(self, data) -> np.ndarray:
        data = np.asarray(data, dtype=np.uint8).ravel()
        if data.shape[0] != self.k_bits:
            raise CodecError(f"expected {self.k_bits} data bits, got {data.shape[0]}")
        value = sum(int(v) << i for i, v in enumerate(data))
        return self._to_stored_bits(self.encode_int(value))

    def decode(self, received) -> tuple[DecodeOutcome, np.ndarray | None]:
        outcome, data = self.decode_int(self._from_stored_bits(received))
        if data is None:
            return outcome, None
        return outcome, np.array([data >> i & 1 for i in range(self.k_bits)], dtype=np.uint8)

    def check(self, codeword) -> bool:
        """True iff every parity equation holds."""
        return self.syndrome(self._from_stored_bits(codeword)) == 0


def systematize(H: CheckMatrix, spec: CodeSpec | None = None) -> ByteCode:
    return ByteCode(H, spec)


def encode(code: ByteCode, data) -> np.ndarray:
    return code.encode(data)


def decode(code: ByteCode, received) -> tuple[DecodeOutcome, np.ndarray | None]:
    return code.decode(received)


def build_code(b: int, r_sym: int, double: bool = False, k_bits: int | None = None) -> ByteCode:
    """ByteCode for the r_sym-byte construction, optionally doubled and shortened."""
    from .construct import build_sbec_dbed, double_code, shorten
    from .field import field_new

    spec, H = build_sbec_dbed(field_new(b), r_sym)
    if double:
        H = double_code(H)
        spec = CodeSpec.of(H)
    if k_bits is not None:
        spec, H = shorten((spec, H), k_bits)
    return ByteCode(H, spec)


# -- codeword stream ----------------------------------------------------------
#
# header: b"SBEC" | version u8 | b u8 | n_sym u32 | k_bits u32 | payload bytes u64
# then one record per codeword: n_sym b-bit symbols packed MSB-first, padded
# to an octet boundary.  Payload bits are taken MSB-first from each input
# byte, k_bits per codeword, the last codeword zero-padded.

STREAM_MAGIC = b"SBEC"
STREAM_VERSION = 1
_HEADER = struct.Struct(">4sBBIIQ")


class StreamError(CodecError):
    pass


def _payload_bits(payload: bytes) -> list[int]:
    return [byte >> (7 - i) & 1 for byte in payload for i in range(8)]


def _record_len(code: ByteCode) -> int:
    return (code.n_sym * code.b + 7) // 8


def pack_word(code: ByteCode, word: int) -> bytes:
    acc = 0
    for j in range(code.n_sym):
        acc = (acc << code.b) | code.byte(word, j)
    total = code.n_sym * code.b
    pad = (-total) % 8
    return (acc << pad).to_bytes((total + pad) // 8, "big")


def unpack_word(code: ByteCode, record: bytes) -> int:
    total = code.n_sym * code.b
    acc = int.from_bytes(record, "big") >> ((-total) % 8)
    word = 0
    for j in range(code.n_sym - 1, -1, -1):
        word |= (acc & ((1 << code.b) - 1)) << (j * code.b)
        acc >>= code.b
    return word


def encode_stream(code: ByteCode, payload: bytes, corrupt=None) -> bytes:
    """Encode ``payload``; ``corrupt(word) -> word`` may damage each codeword."""
    if code.k_bits == 0:
        raise StreamError("code has no information bits")
    out = [_HEADER.pack(STREAM_MAGIC, STREAM_VERSION, code.b, code.n_sym, code.k_bits, len(payload))]
    bits = _payload_bits(payload)
    k = code.k_bits
    for start in range(0, len(bits), k):
        chunk = bits[start:start + k]
        value = sum(v << i for i, v in enumerate(chunk))
        word = code.encode_int(value)
        if corrupt is not None:
            word = corrupt(word)
        out.append(pack_word(code, word))
    return b"".join(out)


def decode_stream(code: ByteCode, blob: bytes) -> tuple[bytes, list[DecodeOutcome]]:
    """Decode a stream; uncorrectable words contribute zero bits to the payload."""
    if len(blob) < _HEADER.size:
        raise StreamError("truncated stream header")
    magic, version, b, n_sym, k_bits, length = _HEADER.unpack_from(blob)
    if magic != STREAM_MAGIC or version != STREAM_VERSION:
        raise StreamError("not a codeword stream")
    if (b, n_sym, k_bits) != (code.b, code.n_sym, code.k_bits):
        raise StreamError(f"stream was written with b={b} n_sym={n_sym} k_bits={k_bits}")
    rec = _record_len(code)
    body = blob[_HEADER.size:]
    n_words = -(-length * 8 // k_bits) if length else 0
    if len(body) != n_words * rec:
        raise StreamError(f"expected {n_words} codewords, found {len(body) / rec:g}")
    bits: list[int] = []
    outcomes = []
    for w in range(n_words):
        word = unpack_word(code, body[w * rec:(w + 1) * rec])
        outcome, data = code.decode_int(word)
        outcomes.append(outcome)
        data = data or 0
        bits.extend(data >> i & 1 for i in range(k_bits))
    bits = bits[:length * 8]
    payload = bytes(sum(bits[8 * i + j] << (7 - j) for j in range(8)) for i in range(length))
    return payload, outcomes
