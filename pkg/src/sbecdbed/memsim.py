"""Byte-per-chip memory with fault injection and campaign statistics.

Each memory word holds one codeword; chip j stores byte j.  Stored images
stay pristine: configured fault models are applied to a copy at read time,
except events pushed through :meth:`Memory.inject`, which corrupt the
stored image until the word is rewritten.  PermanentChipStuck models are
active on every read; the other models fire with their per-read
probability.

Randomness comes from numpy's PCG64 generator seeded from the config.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field as dc_field

import numpy as np

from .codec import ByteCode, DecodeOutcome, ErrorDirection, Outcome, classify_byte_error

RNG_NAME = "numpy.random.PCG64"


class SimError(ValueError):
    pass


class FaultKind(str, enum.Enum):
    TRANSIENT_BIT = "TransientBit"
    INTERMITTENT_BIT = "IntermittentBit"
    PERMANENT_CHIP_STUCK = "PermanentChipStuck"
    UNIDIRECTIONAL_BYTE = "UnidirectionalByte"
    SINGLE_BYTE = "SingleByte"
    DOUBLE_BYTE = "DoubleByte"
    MULTI_UNIDIRECTIONAL_BYTE = "MultiUnidirectionalByte"


class Direction(str, enum.Enum):
    DOWN = "down"      # 1 -> 0 only
    UP = "up"          # 0 -> 1 only
    RANDOM = "random"  # one of the two, drawn per event


@dataclass(frozen=True)
class FaultModel:
    """A fault source.

    ``chips`` pins the affected chip(s); an empty tuple means "draw at
    random".  ``bit`` pins the bit inside the chip for IntermittentBit.
    ``count`` is the byte count of MultiUnidirectionalByte.
    """

    kind: FaultKind
    probability: float = 1.0
    chips: tuple[int, ...] = ()
    bit: int | None = None
    direction: Direction = Direction.RANDOM
    stuck_value: int = 0
    count: int = 3

    def __post_init__(self):
        object.__setattr__(self, "kind", FaultKind(self.kind))
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "chips", tuple(int(c) for c in self.chips))
        if not 0.0 <= self.probability <= 1.0:
            raise SimError(f"probability {self.probability} outside [0, 1]")
        if self.stuck_value not in (0, 1):
            raise SimError("stuck_value must be 0 or 1")
        if self.kind is FaultKind.PERMANENT_CHIP_STUCK and not self.chips:
            raise SimError("PermanentChipStuck needs explicit chips")
        if self.kind is FaultKind.DOUBLE_BYTE and self.chips and len(set(self.chips)) != 2:
            raise SimError("DoubleByte takes exactly two distinct chips")
        if self.count < 1:
            raise SimError("count must be >= 1")

    @classmethod
    def from_dict(cls, d: dict) -> "FaultModel":
        d = dict(d)
        if "chips" in d:
            d["chips"] = tuple(d["chips"])
        return cls(**d)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["direction"] = self.direction.value
        d["chips"] = list(self.chips)
        return d

    def check(self, n_sym: int, b: int) -> None:
        for c in self.chips:
            if not 0 <= c < n_sym:
                raise SimError(f"chip {c} out of range (word has {n_sym} chips)")
        if self.bit is not None and not 0 <= self.bit < b:
            raise SimError(f"bit {self.bit} out of range for b={b}")
        if self.kind is FaultKind.MULTI_UNIDIRECTIONAL_BYTE and self.count > n_sym:
            raise SimError("more faulty bytes than chips")


@dataclass(frozen=True)
class FaultEvent:
    """A concrete corruption: XOR ``masks[i]`` into chip ``chips[i]``."""

    chips: tuple[int, ...]
    masks: tuple[int, ...]


@dataclass
class MemoryConfig:
    code: ByteCode
    words: int = 16
    seed: int = 0
    fault_models: list[FaultModel] = dc_field(default_factory=list)

    def __post_init__(self):
        if self.words < 1:
            raise SimError("memory needs at least one word")
        for m in self.fault_models:
            m.check(self.code.n_sym, self.code.b)


@dataclass
class CampaignStats:
    trials: int = 0
    no_error: int = 0
    corrected: int = 0
    detected: int = 0
    miscorrected: int = 0
    silent: int = 0
    corrupted_reads: int = 0
    rng: str = RNG_NAME
    seed: int | None = None

    def record(self, outcome: DecodeOutcome, ok: bool, corrupted: bool) -> None:
        self.trials += 1
        self.corrupted_reads += corrupted
        if outcome.kind is Outcome.DETECTED:
            self.detected += 1
        elif outcome.kind is Outcome.CORRECTED:
            if ok:
                self.corrected += 1
            else:
                self.miscorrected += 1
        elif ok:
            self.no_error += 1
        else:
            self.silent += 1

    def merge(self, other: "CampaignStats") -> "CampaignStats":
        out = CampaignStats(rng=self.rng, seed=self.seed)
        for name in ("trials", "no_error", "corrected", "detected", "miscorrected", "silent",
                     "corrupted_reads"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        return out

    @property
    def detection_rate(self) -> float:
        """Detected fraction of reads whose stored image was corrupted."""
        return self.detected / self.corrupted_reads if self.corrupted_reads else float("nan")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def summary(self) -> str:
        return (f"trials={self.trials} no_error={self.no_error} corrected={self.corrected} "
                f"detected={self.detected} miscorrected={self.miscorrected} silent={self.silent}")


def _random_subset(rng: np.random.Generator, mask: int, b: int) -> int:
    """Random nonempty subset of the set bits of ``mask`` (0 if mask is 0)."""
    bits = [i for i in range(b) if mask >> i & 1]
    if not bits:
        return 0
    while True:
        pick = rng.integers(0, 2, size=len(bits))
        if pick.any():
            return sum(1 << bits[i] for i in range(len(bits)) if pick[i])


class Memory:
    def __init__(self, config: MemoryConfig):
        self.config = config
        self.code = config.code
        self.rng = np.random.Generator(np.random.PCG64(config.seed))
        self._image = [0] * config.words
        self._truth: list[int] = [0] * config.words
        self._byte_mask = (1 << self.code.b) - 1
        for a in range(config.words):
            self._image[a] = self.code.encode_int(0)

    @property
    def n_sym(self) -> int:
        return self.code.n_sym

    def _check_addr(self, addr: int) -> None:
        if not 0 <= addr < self.config.words:
            raise SimError(f"address {addr} out of range")

    def _data_int(self, data) -> int:
        if isinstance(data, (int, np.integer)):
            value = int(data)
            if value >> self.code.k_bits:
                raise SimError("data wider than k_bits")
            return value
        bits = np.asarray(data, dtype=np.uint8).ravel()
        if bits.shape[0] != self.code.k_bits:
            raise SimError(f"expected {self.code.k_bits} data bits, got {bits.shape[0]}")
        return sum(int(v) << i for i, v in enumerate(bits))

    def write_word(self, addr: int, data) -> None:
        self._check_addr(addr)
        value = self._data_int(data)
        self._truth[addr] = value
        self._image[addr] = self.code.encode_int(value)

    def stored(self, addr: int) -> int:
        self._check_addr(addr)
        return self._image[addr]

    def truth(self, addr: int) -> int:
        return self._truth[addr]

    def byte(self, word: int, chip: int) -> int:
        return word >> (chip * self.code.b) & self._byte_mask

    def apply_event(self, word: int, event: FaultEvent) -> int:
        for c, m in zip(event.chips, event.masks):
            if not 0 <= c < self.n_sym:
                raise SimError(f"chip {c} out of range")
            word ^= (m & self._byte_mask) << (c * self.code.b)
        return word

    def inject(self, addr: int, event: FaultEvent) -> None:
        """Corrupt the stored image of ``addr`` until it is rewritten."""
        self._check_addr(addr)
        self._image[addr] = self.apply_event(self._image[addr], event)

    # -- fault models ------------------------------------------------------

    def _direction(self, d: Direction) -> Direction:
        if d is Direction.RANDOM:
            return Direction.DOWN if self.rng.integers(0, 2) == 0 else Direction.UP
        return d

    def _unidirectional_mask(self, byte: int, d: Direction) -> int:
        eligible = byte if d is Direction.DOWN else (~byte & self._byte_mask)
        return _random_subset(self.rng, eligible, self.code.b)

    def _pick_chips(self, model: FaultModel, count: int) -> list[int]:
        if model.chips:
            return list(model.chips)
        return [int(c) for c in self.rng.choice(self.n_sym, size=count, replace=False)]

    def _nonzero_pattern(self) -> int:
        return int(self.rng.integers(1, 1 << self.code.b))

    def event_for(self, model: FaultModel, word: int) -> FaultEvent | None:
        """Draw the event ``model`` produces on ``word`` for one read."""
        kind = model.kind
        if kind is not FaultKind.PERMANENT_CHIP_STUCK and self.rng.random() >= model.probability:
            return None
        b = self.code.b
        if kind is FaultKind.TRANSIENT_BIT:
            chip = self._pick_chips(model, 1)[0]
            return FaultEvent((chip,), (1 << int(self.rng.integers(0, b)),))
        if kind is FaultKind.INTERMITTENT_BIT:
            chip = model.chips[0] if model.chips else 0
            bit = model.bit if model.bit is not None else 0
            return FaultEvent((chip,), (1 << bit,))
        if kind is FaultKind.PERMANENT_CHIP_STUCK:
            masks = []
            for c in model.chips:
                cur = self.byte(word, c)
                target = self._byte_mask if model.stuck_value else 0
                masks.append(cur ^ target)
            return FaultEvent(model.chips, tuple(masks))
        if kind is FaultKind.UNIDIRECTIONAL_BYTE:
            chip = self._pick_chips(model, 1)[0]
            d = self._direction(model.direction)
            return FaultEvent((chip,), (self._unidirectional_mask(self.byte(word, chip), d),))
        if kind is FaultKind.SINGLE_BYTE:
            chip = self._pick_chips(model, 1)[0]
            return FaultEvent((chip,), (self._nonzero_pattern(),))
        if kind is FaultKind.DOUBLE_BYTE:
            chips = self._pick_chips(model, 2)
            return FaultEvent(tuple(chips), (self._nonzero_pattern(), self._nonzero_pattern()))
        if kind is FaultKind.MULTI_UNIDIRECTIONAL_BYTE:
            chips = self._pick_chips(model, model.count)
            d = self._direction(model.direction)
            return FaultEvent(tuple(chips),
                              tuple(self._unidirectional_mask(self.byte(word, c), d) for c in chips))
        raise SimError(f"unhandled fault kind {kind}")

    def corrupt(self, word: int) -> int:
        for model in self.config.fault_models:
            event = self.event_for(model, word)
            if event is not None:
                word = self.apply_event(word, event)
        return word

    def read_word(self, addr: int) -> tuple[DecodeOutcome, int | None]:
        self._check_addr(addr)
        return self.code.decode_int(self.corrupt(self._image[addr]))


def sim_new(config: MemoryConfig) -> Memory:
    return Memory(config)


def byte_directions(code: ByteCode, sent: int, received: int) -> list[ErrorDirection]:
    """Per-chip error direction between two codeword images."""
    m = (1 << code.b) - 1
    return [classify_byte_error(sent >> (j * code.b) & m, received >> (j * code.b) & m)
            for j in range(code.n_sym)]


def run_campaign(config: MemoryConfig, trials: int) -> CampaignStats:
    """Write random data, read it back through the fault models, classify.

    Deterministic for a given config (the seed drives data, addresses and
    fault draws).
    """
    if trials < 1:
        raise SimError("trials must be >= 1")
    mem = Memory(config)
    stats = CampaignStats(seed=config.seed)
    code = config.code
    stored_mask = 0
    for p in code.stored_positions:
        stored_mask |= 1 << p
    for _ in range(trials):
        addr = int(mem.rng.integers(0, config.words))
        data = int.from_bytes(mem.rng.bytes((code.k_bits + 7) // 8), "little") & ((1 << code.k_bits) - 1)
        mem.write_word(addr, data)
        clean = mem.stored(addr)
        seen = mem.corrupt(clean)
        outcome, got = code.decode_int(seen)
        corrupted = bool((seen ^ clean) & stored_mask)
        stats.record(outcome, got == data, corrupted)
    return stats


# -- config files -------------------------------------------------------------

def load_config(text: str):
    """Parse a JSON campaign config.

    Returns (params dict, fault model list).  Recognised keys: b, r,
    double, k, matrix, words, trials, seed, fault_models.
    """
    raw = json.loads(text)
    if not isinstance(raw, dict):
        raise SimError("config must be a JSON object")
    models = [FaultModel.from_dict(m) for m in raw.get("fault_models", [])]
    return raw, models
