import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sbecdbed.codec import (ByteCode, CodecError, DecodeOutcome, ErrorDirection, Outcome,
                            RankDeficient, StreamError, build_code, classify_byte_error, decode,
                            decode_stream, encode, encode_stream, pack_word, systematize,
                            unpack_word)
from sbecdbed.construct import CheckMatrix, base_matrix, build_sbec_dbed, double_code
from sbecdbed.field import field_new


def _bits(rnd, k):
    return np.array([rnd.randrange(2) for _ in range(k)], dtype=np.uint8)


def test_systematize_base_b2(gf4):
    code = systematize(base_matrix(gf4))
    assert code.k_bits == 6
    assert code.n_bits == 12
    assert len(code.check_positions) == 6


def test_encode_satisfies_checks(gf4, rnd):
    code = systematize(base_matrix(gf4))
    H = base_matrix(gf4).binary().astype(int)
    for _ in range(20):
        c = encode(code, _bits(rnd, 6))
        assert not (H @ c % 2).any()
        assert code.check(c)
    assert not encode(code, np.zeros(6)).any()


def test_linearity(code_b2r5, rnd):
    k = code_b2r5.k_bits
    for _ in range(20):
        a, b = _bits(rnd, k), _bits(rnd, k)
        assert np.array_equal(encode(code_b2r5, a) ^ encode(code_b2r5, b), encode(code_b2r5, a ^ b))


def test_doubled_rank(gf4):
    D = double_code(base_matrix(gf4))
    code = ByteCode(D)
    assert len(code.check_positions) == 3 * 2 + 1
    assert code.k_bits == 24 - 7


def test_rank_deficient(gf4):
    H = CheckMatrix(gf4, np.array([[1, 1, 1], [1, 1, 1]]))
    with pytest.raises(RankDeficient):
        ByteCode(H)


def test_roundtrip_and_clean_decode(code_b2r5, rnd):
    for _ in range(20):
        d = _bits(rnd, code_b2r5.k_bits)
        outcome, got = decode(code_b2r5, encode(code_b2r5, d))
        assert outcome.kind is Outcome.NO_ERROR
        assert np.array_equal(got, d)


def _flip(code, c, j, e):
    c = c.copy()
    for i in range(code.b):
        if e >> i & 1:
            c[j * code.b + i] ^= 1
    return c


def test_single_byte_exhaustive_b2r5(code_b2r5, rnd):
    code = code_b2r5
    for _ in range(3):
        d = _bits(rnd, code.k_bits)
        c = encode(code, d)
        for j in range(code.n_sym):
            for e in range(1, 4):
                outcome, got = decode(code, _flip(code, c, j, e))
                assert (outcome.kind, outcome.byte_pos, outcome.pattern) == (Outcome.CORRECTED, j, e)
                assert np.array_equal(got, d)


def test_double_byte_exhaustive_b2r4(gf4, rnd):
    spec, H = build_sbec_dbed(gf4, 4)
    code = ByteCode(H, spec)
    c = encode(code, _bits(rnd, code.k_bits))
    for j1 in range(code.n_sym):
        for j2 in range(j1 + 1, code.n_sym):
            for e1 in range(1, 4):
                for e2 in range(1, 4):
                    outcome, got = decode(code, _flip(code, _flip(code, c, j1, e1), j2, e2))
                    assert outcome.kind is Outcome.DETECTED and got is None


def test_map_and_scan_agree(gf8, rnd):
    spec, H = build_sbec_dbed(gf8, 4)
    fast = ByteCode(H, spec)
    slow = ByteCode(H, spec, map_budget=0)
    assert fast._map is not None and slow._map is None
    for _ in range(300):
        w = fast.encode_int(rnd.getrandbits(fast.k_bits))
        j1, j2 = rnd.sample(range(fast.n_sym), 2)
        w ^= rnd.randrange(1, 8) << (3 * j1)
        if rnd.random() < 0.5:
            w ^= rnd.randrange(1, 8) << (3 * j2)
        assert fast.decode_int(w) == slow.decode_int(w)


def test_shortened_code_decodes():
    code = build_code(5, 3, k_bits=32)
    assert (code.n_bits, code.k_bits) == (47, 32)
    data = (1 << 32) - 1
    w = code.encode_int(data)
    for j in range(code.n_sym):
        outcome, got = code.decode_int(w ^ (0b10101 << (5 * j)))
        assert got == data
        assert outcome.kind is Outcome.CORRECTED
    bits = code.encode(np.ones(32))
    assert bits.shape == (47,)


def test_doubled_decoder_never_miscorrects_aliases(gf4):
    code = ByteCode(double_code(base_matrix(gf4)))
    w = code.encode_int(0)
    # 0b11 has even weight: the same error in byte j and byte j+6 looks identical
    assert code.decode_int(w ^ (0b11 << 0))[0].kind is Outcome.DETECTED
    out, got = code.decode_int(w ^ (0b01 << 0))
    assert out.kind is Outcome.CORRECTED and got == 0


def test_bad_lengths(code_b2r5):
    with pytest.raises(CodecError):
        encode(code_b2r5, np.zeros(3))
    with pytest.raises(CodecError):
        decode(code_b2r5, np.zeros(3))


def test_outcome_validation():
    with pytest.raises(CodecError):
        DecodeOutcome(Outcome.CORRECTED, 1, 0)
    assert str(DecodeOutcome(Outcome.CORRECTED, 2, 5)) == "Corrected(byte=2, pattern=0x5)"


def test_classify_examples():
    assert classify_byte_error(0b1010, 0b1000) is ErrorDirection.DOWN_ONLY
    assert classify_byte_error(0b1010, 0b0110) is ErrorDirection.MIXED
    assert classify_byte_error(0b1010, 0b1010) is ErrorDirection.NONE
    assert classify_byte_error(0b0000, 0b0011) is ErrorDirection.UP_ONLY


@given(st.integers(0, 255), st.integers(0, 255))
def test_classify_definition(s, r):
    up, down = r & ~s, s & ~r
    assert (classify_byte_error(s, r) is ErrorDirection.UP_ONLY) == (up != 0 and down == 0)
    assert (classify_byte_error(s, r) is ErrorDirection.DOWN_ONLY) == (down != 0 and up == 0)


@settings(max_examples=30, deadline=None)
@given(payload=st.binary(max_size=200))
def test_stream_roundtrip(payload):
    code = build_code(3, 3)
    out, outcomes = decode_stream(code, encode_stream(code, payload))
    assert out == payload
    assert all(o.kind is Outcome.NO_ERROR for o in outcomes)


def test_stream_corrects_single_bytes(rnd):
    code = build_code(4, 3)
    payload = bytes(rnd.randrange(256) for _ in range(500))

    def corrupt(w):
        return w ^ (rnd.randrange(1, 16) << (4 * rnd.randrange(code.n_sym)))

    out, outcomes = decode_stream(code, encode_stream(code, payload, corrupt))
    assert out == payload
    assert all(o.kind is Outcome.CORRECTED for o in outcomes)


def test_stream_errors():
    code = build_code(3, 3)
    blob = encode_stream(code, b"hello")
    with pytest.raises(StreamError):
        decode_stream(code, blob[:5])
    with pytest.raises(StreamError):
        decode_stream(code, b"XXXX" + blob[4:])
    with pytest.raises(StreamError):
        decode_stream(code, blob[:-1])
    with pytest.raises(StreamError):
        decode_stream(build_code(4, 3), blob)


def test_pack_unpack(rnd):
    code = build_code(5, 3)
    for _ in range(20):
        w = code.encode_int(rnd.getrandbits(code.k_bits))
        assert unpack_word(code, pack_word(code, w)) == w


def test_scan_path_large_field():
    code = build_code(12, 3)
    assert code._map is None
    w = code.encode_int(12345)
    out, got = code.decode_int(w ^ (0xABC << (12 * 100)))
    assert (out.kind, out.byte_pos, out.pattern, got) == (Outcome.CORRECTED, 100, 0xABC, 12345)
    out, _ = code.decode_int(w ^ (0x1 << (12 * 3)) ^ (0x2 << (12 * 50)))
    assert out.kind is Outcome.DETECTED
