"""Acceptance criteria 1-10.  Each test records one PASS/FAIL line, printed
in the terminal summary and to stdout."""

import time
from contextlib import contextmanager

import numpy as np
import pytest

from sbecdbed import params, printed
from sbecdbed.codec import Outcome, build_code
from sbecdbed.construct import base_matrix, build_sbec_dbed, normalizing_scalars, validate_sbec_dbed
from sbecdbed.field import field_new
from sbecdbed.memsim import FaultModel, MemoryConfig, run_campaign
from sbecdbed.rscodec import RsCode, all_codewords, min_distance_bruteforce, rs_decode, rs_encode

from conftest import ACCEPTANCE_LINES, clmul_mod


@contextmanager
def criterion(num, title, limit=None):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        detail = f"{elapsed:.2f}s"
        if limit is not None and elapsed >= limit:
            detail += f" exceeds {limit}s"
            raise AssertionError(f"criterion {num} took {elapsed:.2f}s, limit {limit}s")
        status = "PASS"
    except BaseException as exc:
        detail = detail or type(exc).__name__
        raise
    finally:
        line = f"criterion {num} {status} {title} ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)


def _pair(e):
    return (e.n_bits, e.k_bits)


def test_1_table2_regeneration():
    with criterion(1, "Table 2 pinned cells and allowlisted diff", limit=1.0):
        got = {(e.b, e.r_bits // e.b): _pair(e) for e in params.gen_table2()}
        pinned = {(5, 3): (170, 155), (5, 6): (11560, 11530), (8, 3): (2064, 2040),
                  (10, 4): (20520, 20480), (12, 3): (49176, 49140), (15, 3): (491550, 491505)}
        for key, want in pinned.items():
            assert got[key] == want, key
        rows = params.diff_tables((2,))
        assert params.diff_ok(rows)
        assert all((r.table, r.b, r.row) in params.ALLOWLIST for r in rows)


def test_2_table3_columns():
    with criterion(2, "Table 3 full b=5 and b=8 columns", limit=1.0):
        for b in (5, 8):
            assert [_pair(e) for e in params.gen_table3([b])] == printed.TABLE3[b]
        b5 = [_pair(e) for e in params.gen_table3([5])]
        b8 = [_pair(e) for e in params.gen_table3([8])]
        for cell in [(47, 32), (276, 256), (4121, 4096), (524333, 524288)]:
            assert cell in b5
        for cell in [(280, 256), (2080, 2048), (524328, 524288)]:
            assert cell in b8


def test_3_doubled_tables():
    with criterion(3, "Table 4 pinned cells and Table 5 (5,32)"):
        t4 = {(e.b, e.r_bits, e.n_bits, e.k_bits) for e in params.gen_table4([5, 8])}
        for cell in [(5, 16, 340, 324), (5, 21, 680, 659), (5, 26, 11560, 11534),
                     (8, 25, 4128, 4103), (8, 33, 8256, 8223)]:
            assert cell in t4
        e = params.gen_table5([5], [32])[0]
        assert (e.r_bits, e.n_bits, e.k_bits) == (16, 48, 32)


def test_4_best_code():
    with criterion(4, "best-code pinned cells and Table 6 misprints flagged"):
        for (b, k), n in {(5, 256): 272, (5, 512): 533, (8, 1024): 1048,
                          (11, 16384): 16417, (15, 524288): 524334}.items():
            assert params.best_code(b, k)[0].n_bits == n, (b, k)
        rows = {(r.table, r.b, r.row): r.status for r in params.diff_tables((6,))}
        assert rows[("T6", 7, 16384)] == "misprint"
        assert rows[("T6", 7, 524288)] == "misprint"
        assert rows[("T6", 5, 128)] == "attribution"


def test_5_sbec_dbed_property():
    with criterion(5, "validate_sbec_dbed on base b=2,3,4 and b=2 r=4,5", limit=10.0):
        for b in (2, 3, 4):
            report = validate_sbec_dbed(base_matrix(field_new(b)))
            assert report.passed, (b, sorted(report.offending_columns()))
        gf = field_new(2)
        for r in (4, 5):
            report = validate_sbec_dbed(build_sbec_dbed(gf, r)[1])
            assert report.passed, (r, sorted(report.offending_columns()))
        assert (report.singles, report.doubles) == (108, 5670)


def test_6_codec_exhaustive():
    with criterion(6, "b=2 r=5 codec: all singles corrected, all doubles detected", limit=30.0):
        code = build_code(2, 5)
        rng = np.random.Generator(np.random.PCG64(6))
        n, b = code.n_sym, code.b
        bad = 0
        for _ in range(20):
            data = int(rng.integers(0, 1 << 62)) & ((1 << code.k_bits) - 1)
            c = code.encode_int(data)
            for j in range(n):
                for e in range(1, 4):
                    out, got = code.decode_int(c ^ (e << (j * b)))
                    bad += (out.kind, out.byte_pos, out.pattern, got) != (Outcome.CORRECTED, j, e, data)
            for j1 in range(n):
                for j2 in range(j1 + 1, n):
                    for e1 in range(1, 4):
                        for e2 in range(1, 4):
                            out, _ = code.decode_int(c ^ (e1 << (j1 * b)) ^ (e2 << (j2 * b)))
                            bad += out.kind is not Outcome.DETECTED
        assert bad == 0


def test_7_rs_codec():
    with criterion(7, "RS(7,5) single-symbol correction vs oracle; d_min 3 and 5", limit=30.0):
        gf = field_new(3)
        code = RsCode(gf, 1)
        words = all_codewords(code)
        rng = np.random.Generator(np.random.PCG64(7))
        for _ in range(50):
            data = [int(v) for v in rng.integers(0, 8, size=5)]
            c = rs_encode(code, data)
            for pos in range(7):
                for val in range(1, 8):
                    r = list(c)
                    r[pos] ^= val
                    dist = np.count_nonzero(words != np.array(r)[None, :], axis=1)
                    nearest = words[dist == dist.min()]
                    assert len(nearest) == 1 and nearest[0].tolist() == c
                    assert rs_decode(code, r).codeword == c
        assert min_distance_bruteforce(RsCode(gf, 1)) == 3
        assert min_distance_bruteforce(RsCode(gf, 2)) == 5


def test_8_field_arithmetic():
    with criterion(8, "field mul vs oracle (b<=8); companion homomorphism (b<=4)"):
        for b in range(2, 9):
            gf = field_new(b)
            x, y = np.meshgrid(np.arange(gf.q), np.arange(gf.q), indexing="ij")
            table = gf.vmul(x, y)
            oracle = np.array([[clmul_mod(a, c, gf.poly, b) for c in range(gf.q)]
                               for a in range(gf.q)])
            assert np.array_equal(table, oracle), b
        for b in range(2, 5):
            gf = field_new(b)
            C = [gf.companion_matrix(v).astype(int) for v in range(gf.q)]
            for a in range(gf.q):
                for c in range(gf.q):
                    assert np.array_equal(C[gf.mul(a, c)], C[a] @ C[c] % 2)


def test_9_scalar_count():
    with criterion(9, "normalization scalar count 2^(b-1) for b=2..5"):
        for b in range(2, 6):
            H = base_matrix(field_new(b))
            assert len(normalizing_scalars(H, range((1 << b) - 1))) == 1 << (b - 1), b


def test_10_simulation():
    with criterion(10, "10^4-trial single/double-byte campaigns, deterministic", limit=10.0):
        code = build_code(2, 5)
        single = run_campaign(MemoryConfig(code, 16, 10, [FaultModel("SingleByte")]), 10_000)
        assert single.miscorrected == 0 and single.silent == 0
        assert single.corrected + single.no_error == 10_000
        double = run_campaign(MemoryConfig(code, 16, 10, [FaultModel("DoubleByte")]), 10_000)
        assert double.corrupted_reads > 0 and double.detected == double.corrupted_reads
        again = run_campaign(MemoryConfig(code, 16, 10, [FaultModel("SingleByte")]), 10_000)
        assert again == single
