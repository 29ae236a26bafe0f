"""Parity-check matrices for SbEC-DbED codes over GF(2^b).

The construction starts from a 3-row distance-4 matrix whose columns are
(1, x, x^2) for every nonzero x plus the three unit columns (2^b + 2
columns, a hyperoval).  Longer codes are products: every column of a
distance-4 matrix V stacked on top of every column of a second matrix W
whose all-ones row has been removed.  W is obtained from an existing code
by a row operation that makes every top-row entry nonzero, followed by a
per-column scaling to 1.  Columns are ordered V-major: column i*n(W) + j
is (V_i ; W_j).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import FieldTable, field_new


class ConstructionError(ValueError):
    pass


class BudgetExceeded(ConstructionError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class CheckMatrix:
    """Symbol parity-check matrix, plus an optional binary parity row.

    ``unnormalized`` lists columns an all-ones transform could not scale;
    ``zero_columns`` flags all-zero columns (never produced by the
    constructions here, recorded for loaded matrices).
    """

    field: FieldTable
    entries: np.ndarray
    parity_row: np.ndarray | None = None
    unnormalized: tuple[int, ...] = ()

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2:
            raise ConstructionError("entries must be a 2-D array")
        if e.size and (e.min() < 0 or e.max() >= self.field.q):
            raise ConstructionError("entries outside the field")
        object.__setattr__(self, "entries", _frozen(e))
        if self.parity_row is not None:
            p = np.asarray(self.parity_row, dtype=np.uint8)
            if p.shape != (e.shape[1] * self.field.b,):
                raise ConstructionError("parity row must have n_sym*b bits")
            object.__setattr__(self, "parity_row", _frozen(p))

    @property
    def b(self) -> int:
        return self.field.b

    @property
    def r_sym(self) -> int:
        return self.entries.shape[0]

    @property
    def n_sym(self) -> int:
        return self.entries.shape[1]

    @property
    def extra_parity_bits(self) -> int:
        return 0 if self.parity_row is None else 1

    @property
    def check_bits(self) -> int:
        return self.r_sym * self.b + self.extra_parity_bits

    @property
    def zero_columns(self) -> tuple[int, ...]:
        return tuple(int(j) for j in np.flatnonzero(~self.entries.any(axis=0)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.entries[:, j])

    def __eq__(self, other):
        if not isinstance(other, CheckMatrix):
            return NotImplemented
        if self.field != other.field or self.entries.shape != other.entries.shape:
            return False
        if (self.parity_row is None) != (other.parity_row is None):
            return False
        same_parity = self.parity_row is None or np.array_equal(self.parity_row, other.parity_row)
        return bool(np.array_equal(self.entries, other.entries) and same_parity)

    def binary(self) -> np.ndarray:
        """Binary expansion: (r_sym*b [+1]) x (n_sym*b) matrix over GF(2).

        Row s*b + i, column j*b + k holds bit i of entries[s, j] * alpha^k.
        """
        b = self.b
        comp = np.stack([self.field.companion_matrix(x) for x in range(self.field.q)])
        blocks = comp[self.entries]                       # (r, n, b, b)
        out = blocks.transpose(0, 2, 1, 3).reshape(self.r_sym * b, self.n_sym * b)
        if self.parity_row is not None:
            out = np.vstack([out, self.parity_row[None, :]])
        return out.astype(np.uint8)

    def select_columns(self, cols) -> "CheckMatrix":
        cols = np.asarray(list(cols), dtype=np.int64)
        parity = None
        if self.parity_row is not None:
            bits = (cols[:, None] * self.b + np.arange(self.b)[None, :]).ravel()
            parity = self.parity_row[bits]
        return CheckMatrix(self.field, self.entries[:, cols], parity)

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        width = (self.b + 3) // 4
        lines = [f"{self.b} {self.r_sym} {self.n_sym} {self.extra_parity_bits}"]
        for row in self.entries:
            lines.append(" ".join(f"{int(v):0{width}x}" for v in row))
        if self.parity_row is not None:
            lines.append("".join(str(int(v)) for v in self.parity_row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, field: FieldTable | None = None) -> "CheckMatrix":
        """Parse the text format.  Symbols are read in the default field for b
        unless ``field`` is given."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ConstructionError("empty matrix file")
        try:
            b, r, n, parity = (int(tok) for tok in lines[0].split())
        except ValueError as exc:
            raise ConstructionError(f"bad header {lines[0]!r}") from exc
        if parity not in (0, 1):
            raise ConstructionError("parity flag must be 0 or 1")
        gf = field if field is not None else field_new(b)
        if gf.b != b:
            raise ConstructionError(f"field has b={gf.b}, file has b={b}")
        if len(lines) != 1 + r + parity:
            raise ConstructionError(f"expected {r + parity} body lines, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:1 + r]:
            toks = ln.split()
            if len(toks) != n:
                raise ConstructionError(f"row has {len(toks)} symbols, expected {n}")
            rows.append([int(tok, 16) for tok in toks])
        entries = np.array(rows, dtype=np.int64).reshape(r, n)
        prow = None
        if parity:
            bits = lines[-1]
            if len(bits) != n * b or set(bits) - {"0", "1"}:
                raise ConstructionError("malformed parity row")
            prow = np.array([int(c) for c in bits], dtype=np.uint8)
        return cls(gf, entries, prow)


@dataclass(frozen=True)
class CodeSpec:
    """Code parameters in bits.

    ``frozen_bits`` are information bit positions (in the n_sym*b layout)
    fixed at zero by bit-level shortening; they are not stored, so
    n_bits = n_sym*b - len(frozen_bits).
    """

    b: int
    r_sym: int
    extra_parity_bits: int
    n_sym: int
    n_bits: int
    k_bits: int
    frozen_bits: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        if self.k_bits < 0:
            raise ConstructionError("k_bits must be non-negative")
        if self.n_bits != self.k_bits + self.r_bits:
            raise ConstructionError("n_bits != k_bits + r_bits")
        if self.n_bits != self.n_sym * self.b - len(self.frozen_bits):
            raise ConstructionError("n_bits inconsistent with n_sym and frozen bits")

    @property
    def r_bits(self) -> int:
        return self.r_sym * self.b + self.extra_parity_bits

    @classmethod
    def of(cls, H: CheckMatrix) -> "CodeSpec":
        n_bits = H.n_sym * H.b
        return cls(H.b, H.r_sym, H.extra_parity_bits, H.n_sym, n_bits, n_bits - H.check_bits)


# -- building blocks ----------------------------------------------------------

def base_matrix(field: FieldTable) -> CheckMatrix:
    """3 x (2^b + 2) matrix: columns (1, x, x^2) for nonzero x, then I_3."""
    xs = np.array(field.nonzero(), dtype=np.int64)
    curve = np.vstack([np.ones_like(xs), xs, field.vmul(xs, xs)])
    return CheckMatrix(field, np.hstack([curve, np.eye(3, dtype=np.int64)]))


def even_pair_matrix(field: FieldTable) -> CheckMatrix:
    return CheckMatrix(field, np.array([[1, 1], [0, 1]], dtype=np.int64))


def _top_row_functional(H: CheckMatrix, a: int) -> np.ndarray:
    gf = H.field
    e = H.entries
    return e[0] ^ gf.vmul(a, e[1]) ^ e[2]


def to_all_ones_row(H: CheckMatrix, a: int) -> CheckMatrix:
    """Replace row 0 by row0 + a*row1 + row2, then scale each column whose
    new top entry is nonzero so that entry becomes 1.

    Columns left with a zero top entry are kept unscaled and listed in
    ``unnormalized`` of the result.
    """
    if H.r_sym < 3:
        raise ConstructionError("need at least 3 rows")
    if a == 0:
        raise ConstructionError("scalar must be nonzero")
    gf = H.field
    e = np.array(H.entries)
    e[0] = _top_row_functional(H, a)
    top = e[0]
    ok = top != 0
    scale = np.ones_like(top)
    scale[ok] = gf.vinv(top[ok])
    e = gf.vmul(e, scale[None, :])
    bad = tuple(int(j) for j in np.flatnonzero(~ok))
    return CheckMatrix(gf, e, H.parity_row, unnormalized=bad)


def normalizing_scalars(H: CheckMatrix, columns=None) -> list[int]:
    """Scalars a (antilog order) for which row0 + a*row1 + row2 is nonzero on
    every selected column (all columns by default)."""
    gf = H.field
    cols = slice(None) if columns is None else np.asarray(list(columns), dtype=np.int64)
    found = []
    for a in gf.nonzero():
        if np.all(_top_row_functional(H, a)[cols] != 0):
            found.append(a)
    return found


def strip_top_row(H: CheckMatrix) -> CheckMatrix:
    if H.r_sym == 0:
        raise ConstructionError("matrix has no rows")
    return CheckMatrix(H.field, H.entries[1:], H.parity_row, H.unnormalized)


def product_construct(Hv: CheckMatrix, Hw: CheckMatrix) -> CheckMatrix:
    """Columns (V_i ; W_j) for all i, j, ordered i-major."""
    if Hv.field != Hw.field:
        raise ConstructionError("matrices are over different fields")
    if Hv.parity_row is not None or Hw.parity_row is not None:
        raise ConstructionError("product of matrices with parity rows is undefined")
    nv, nw = Hv.n_sym, Hw.n_sym
    top = np.repeat(Hv.entries, nw, axis=1)
    bottom = np.tile(Hw.entries, (1, nv))
    return CheckMatrix(Hv.field, np.vstack([top, bottom]))


def code_length_bound(b: int, r_sym: int) -> int:
    """Code length in symbols: (2^b+2)^((r-1)/2) for odd r, 2(2^b+2)^((r-2)/2) for even r."""
    if r_sym < 3:
        raise ConstructionError("r_sym must be >= 3")
    q2 = (1 << b) + 2
    if r_sym % 2:
        return q2 ** ((r_sym - 1) // 2)
    return 2 * q2 ** ((r_sym - 2) // 2)


def build_sbec_dbed(field: FieldTable, r_sym: int) -> tuple[CodeSpec, CheckMatrix]:
    if r_sym < 3:
        raise ConstructionError("r_sym must be >= 3")
    base = base_matrix(field)
    if r_sym == 3:
        H = base
    elif r_sym == 4:
        H = product_construct(base, strip_top_row(even_pair_matrix(field)))
    else:
        _, inner = build_sbec_dbed(field, r_sym - 2)
        scalars = normalizing_scalars(inner)
        if not scalars:
            raise ConstructionError(f"no normalization scalar for r_sym={r_sym - 2}")
        w = to_all_ones_row(inner, scalars[0])
        H = product_construct(base, strip_top_row(w))
    return CodeSpec.of(H), H


def double_code(H: CheckMatrix) -> CheckMatrix:
    """[H | H] plus one binary check bit over the bits of the second half."""
    if H.parity_row is not None:
        raise ConstructionError("matrix already carries a parity row")
    if H.n_sym == 0 or H.r_sym == 0:
        raise ConstructionError("cannot double an empty matrix")
    nb = H.n_sym * H.b
    parity = np.concatenate([np.zeros(nb, dtype=np.uint8), np.ones(nb, dtype=np.uint8)])
    return CheckMatrix(H.field, np.hstack([H.entries, H.entries]), parity)


# -- shortening ---------------------------------------------------------------

def check_columns(H: CheckMatrix) -> list[int]:
    """Symbol columns holding at least one check bit after systematization."""
    from .codec import systematic_pivots

    return sorted({p // H.b for p in systematic_pivots(H)})


def shorten(code: tuple[CodeSpec, CheckMatrix], target_k_bits: int) -> tuple[CodeSpec, CheckMatrix]:
    """Reduce information capacity to ``target_k_bits``.

    Information bits are removed from the highest-index pure information
    column downwards, top bit first.  Fully removed columns are deleted;
    a partly removed column keeps its remaining bits and records the rest
    as frozen.
    """
    spec, H = code
    if target_k_bits < 0 or target_k_bits > spec.k_bits:
        raise ConstructionError(f"cannot shorten k={spec.k_bits} to {target_k_bits}")
    if target_k_bits == spec.k_bits:
        return spec, H
    b = H.b
    frozen = set(spec.frozen_bits)
    pivots = set(check_columns(H))
    live = [j * b + i
            for j in range(H.n_sym - 1, -1, -1) if j not in pivots
            for i in range(b - 1, -1, -1) if j * b + i not in frozen]
    excess = spec.k_bits - target_k_bits
    if excess > len(live):
        raise ConstructionError("not enough information columns to shorten")
    frozen.update(live[:excess])
    keep = [j for j in range(H.n_sym) if not all(j * b + i in frozen for i in range(b))]
    remap = {old: new for new, old in enumerate(keep)}
    frozen_new = tuple(sorted(remap[f // b] * b + f % b for f in frozen if f // b in remap))
    H2 = H.select_columns(keep)
    n_bits = H2.n_sym * b - len(frozen_new)
    spec2 = CodeSpec(b, H.r_sym, H.extra_parity_bits, H2.n_sym, n_bits, target_k_bits, frozen_new)
    return spec2, H2


# -- validation ---------------------------------------------------------------

@dataclass
class ValidationReport:
    singles: int
    doubles: int
    zero_singles: list[tuple[int, int]] = dc_field(default_factory=list)
    single_collisions: list[tuple[tuple[int, int], tuple[int, int]]] = dc_field(default_factory=list)
    double_violations: list[tuple[tuple[int, int, int, int], str]] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.zero_singles or self.single_collisions or self.double_violations)

    def offending_columns(self) -> set[int]:
        cols: set[int] = set()
        for j, _ in self.zero_singles:
            cols.add(j)
        for (j1, _), (j2, _) in self.single_collisions:
            cols.update((j1, j2))
        for (j1, _, j2, _), _ in self.double_violations:
            cols.update((j1, j2))
        return cols

    def summary(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        out = f"{head} singles={self.singles} doubles={self.doubles}"
        if not self.passed:
            out += (f" zero_singles={len(self.zero_singles)}"
                    f" single_collisions={len(self.single_collisions)}"
                    f" double_violations={len(self.double_violations)}")
        return out


def single_syndromes(H: CheckMatrix, exclude_bits=()) -> np.ndarray:
    """Syndrome of pattern e at column j packed into an int: array [n_sym, q].

    Symbol row s occupies bits s*b .. s*b+b-1; the parity bit (if any) sits
    above them.  Entry [j, 0] is 0.  Patterns touching ``exclude_bits`` are
    still computed; callers filter them.
    """
    gf, b = H.field, H.b
    e = np.arange(gf.q, dtype=np.int64)
    syn = np.zeros((H.n_sym, gf.q), dtype=np.int64)
    for s in range(H.r_sym):
        syn ^= gf.vmul(H.entries[s][:, None], e[None, :]) << (s * b)
    if H.parity_row is not None:
        mask = np.zeros(H.n_sym, dtype=np.int64)
        pr = H.parity_row.reshape(H.n_sym, b)
        for i in range(b):
            mask |= pr[:, i].astype(np.int64) << i
        par = np.zeros((H.n_sym, gf.q), dtype=np.int64)
        masked = mask[:, None] & e[None, :]
        for i in range(b):
            par ^= (masked >> i) & 1
        syn ^= par << (H.r_sym * b)
    return syn


def validate_sbec_dbed(H: CheckMatrix, max_singles: int = 1 << 20,
                       max_doubles: int = 1 << 26, max_violations: int = 1000) -> ValidationReport:
    """Check single-byte syndromes are nonzero and distinct, and that no
    double-byte syndrome is zero or equals a single-byte syndrome."""
    q1 = H.field.q - 1
    n = H.n_sym
    singles = n * q1
    doubles = n * (n - 1) // 2 * q1 * q1
    if singles > max_singles or doubles > max_doubles:
        raise BudgetExceeded(f"enumeration of {singles} singles / {doubles} doubles exceeds budget")
    syn = single_syndromes(H)[:, 1:]                  # [n, q-1], pattern = index+1
    report = ValidationReport(singles=singles, doubles=doubles)

    flat = syn.ravel()
    for idx in np.flatnonzero(flat == 0):
        report.zero_singles.append((int(idx // q1), int(idx % q1) + 1))
    order = np.argsort(flat, kind="stable")
    sorted_syn = flat[order]
    dup = np.flatnonzero(sorted_syn[1:] == sorted_syn[:-1])
    for d in dup[:max_violations]:
        a, c = int(order[d]), int(order[d + 1])
        if sorted_syn[d] == 0:
            continue
        report.single_collisions.append(((a // q1, a % q1 + 1), (c // q1, c % q1 + 1)))

    single_set = np.unique(flat)
    for j1 in range(n - 1):
        pair = syn[j1][:, None, None] ^ syn[j1 + 1:][None, :, :]    # [q1, n-j1-1, q1]
        zero = pair == 0
        hits = np.isin(pair, single_set) | zero
        if hits.any():
            for e1, jj, e2 in np.argwhere(hits):
                if len(report.double_violations) >= max_violations:
                    break
                kind = "zero" if zero[e1, jj, e2] else "aliases-single"
                report.double_violations.append(
                    ((j1, int(e1) + 1, j1 + 1 + int(jj), int(e2) + 1), kind))
    return report


def printed_b2_matrix(field: FieldTable) -> CheckMatrix:
    """The printed b=2 matrix (T = alpha): rows [1 1 1 1 0 0], [1 T T^2 0 1 0],
    [1 T^2 T 0 0 1]."""
    if field.b != 2:
        raise ConstructionError("the printed example is over GF(4)")
    T, T2 = field.alpha_pow(1), field.alpha_pow(2)
    return CheckMatrix(field, np.array([[1, 1, 1, 1, 0, 0],
                                        [1, T, T2, 0, 1, 0],
                                        [1, T2, T, 0, 0, 1]], dtype=np.int64))


def pair_count(n_sym: int, q: int) -> tuple[int, int]:
    """(single, double) error-pattern counts for n_sym columns over GF(q)."""
    return n_sym * (q - 1), n_sym * (n_sym - 1) // 2 * (q - 1) ** 2


__all__ = [
    "BudgetExceeded", "CheckMatrix", "CodeSpec", "ConstructionError", "ValidationReport",
    "base_matrix", "build_sbec_dbed", "check_columns", "code_length_bound", "double_code",
    "printed_b2_matrix", "even_pair_matrix", "normalizing_scalars", "pair_count", "product_construct",
    "shorten", "single_syndromes", "strip_top_row", "to_all_ones_row", "validate_sbec_dbed",
]
